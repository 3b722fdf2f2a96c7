#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"
#include "laguerre/symmetry.hpp"

namespace laguerre {

/// Incidence structure read off a fixed-point-free S_{K,L}. Points are the
/// fixed circles of phi plus one extra point at infinity; blocks are
///   type A: the fixed members of <M, phi(M)> for every circle M with
///           M != phi(M) and M, phi(M) not tangent
///   type B: the fixed circles through x and phi(x), plus infinity, for
///           every point x not parallel to phi(x)
/// Blocks with equal point sets are kept once.
struct MoebiusCandidate {
  /// Candidate point i < fixed.size() is the circle fixed[i].
  std::vector<CircleId> fixed;
  /// Sorted candidate point indexes.
  std::vector<std::vector<std::uint32_t>> blocksA, blocksB;
  /// Check "moebius-axioms" with properties
  ///   three-points  three distinct points lie in exactly one block
  ///   touching      for P in B and Q outside B, exactly one block through
  ///                 P and Q meets B only in P
  /// Witness circles are {K, L} followed by the fixed circles involved;
  /// infinity shows up in the detail.
  CheckReport axiomReport;

  std::uint32_t infinity() const noexcept { return static_cast<std::uint32_t>(fixed.size()); }
  std::size_t point_count() const noexcept { return fixed.size() + 1; }
  /// Block size -> number of blocks.
  std::map<std::size_t, std::size_t> size_census(const std::vector<std::vector<std::uint32_t>>& blocks) const;
};

/// Throws NotFixedPointFree when phi fixes a point.
MoebiusCandidate moebius_extract(const LaguerrePlane& plane, const Automorphism& phi);

/// Rebuilds the candidate of S_{K,L} from a "moebius-axioms" witness and
/// confirms the violation. For "touching" the offending block is not
/// recorded; any block through the first point that breaks the claim
/// confirms it.
bool replay_moebius_witness(const LaguerrePlane& plane, const Witness& w);

struct DisjointPair {
  CircleId k, l;
  Automorphism phi;
};

/// First disjoint pair K < L with a fixed-point-free S_{K,L}, scanning K
/// from `seed mod circle count` and wrapping around. Pairs whose symmetry
/// cannot be built are passed over. Throws NoDisjointPair.
DisjointPair find_disjoint_pair(const LaguerrePlane& plane, std::uint64_t seed);

}  // namespace laguerre
