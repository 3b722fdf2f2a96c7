#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"

namespace laguerre {

/// The member of <p,K> tangent to L, and its point of contact with L.
struct TangentToSecond {
  /// Absent when p lies on L; then point == p.
  std::optional<CircleId> circle;
  PointId point;
};

/// (p,K,L)° and pKL. For p in K n L the contact point is p itself and no
/// circle is returned. Throws PointNotOnCircle, SameCircle, and NotUnique
/// when zero or several pencil members touch L.
TangentToSecond tangent_to_second(const LaguerrePlane& plane, PointId p, CircleId k, CircleId l);

/// x -> xKL on the points of K, indexed by generator.
struct TangencyMap {
  CircleId from, to;
  std::vector<PointId> image;

  PointId operator()(const LaguerrePlane& plane, PointId x) const {
    return image[plane.generator_of(x).value];
  }
};

/// Throws TangentPair when K and L are tangent, SameCircle when equal.
TangencyMap tangency_map(const LaguerrePlane& plane, CircleId k, CircleId l);

/// All circles tangent to both K and L (a circle counts as tangent to
/// itself). Throws SameCircle.
Pencil double_tangency_pencil(const LaguerrePlane& plane, CircleId k, CircleId l);

/// A point permutation. Construction does not certify anything; use
/// is_automorphism.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(std::vector<PointId> image, std::string provenance,
               std::optional<std::array<CircleId, 2>> pair = std::nullopt)
      : image_(std::move(image)), provenance_(std::move(provenance)), pair_(pair) {}

  PointId operator()(PointId x) const { return image_[x.value]; }
  std::span<const PointId> image() const noexcept { return image_; }
  const std::string& provenance() const noexcept { return provenance_; }
  /// The defining circles {K, L} of a double tangency symmetry.
  const std::optional<std::array<CircleId, 2>>& pair() const noexcept { return pair_; }
  bool is_identity() const;
  /// The circle carrying the images of K's points, if they form one.
  std::optional<CircleId> image_circle(const LaguerrePlane& plane, CircleId k) const;

  /// Compares point maps only.
  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.image_ == b.image_; }

 private:
  std::vector<PointId> image_;
  std::string provenance_;
  std::optional<std::array<CircleId, 2>> pair_;
};

Automorphism identity_automorphism(const LaguerrePlane& plane);

/// Bijective, preserves parallelity both ways, maps every circle onto a
/// circle.
bool is_automorphism(const LaguerrePlane& plane, const Automorphism& phi);

/// S_{K,L}: xKL on K, xLK on L, and elsewhere
///   phi(x) = the point of (x, y, yKL)° parallel to (xK)KL
/// for every admissible y in K \ L (y and yKL not parallel to x); all
/// choices must agree, and on K and L the formula must reproduce the
/// tangency maps. A point with no admissible y is resolved through any
/// circle C on it that carries three resolved points: phi(x) is the point
/// of phi(C) on the target generator. This repeats until every point is
/// resolved. Throws TangentPair, NotUnique, and
/// WellDefinednessFailure when auxiliary choices disagree, when a point
/// stays unresolved, or when the result is not an automorphism.
Automorphism build_dts(const LaguerrePlane& plane, CircleId k, CircleId l);

/// Properties of phi = S_{K,L}, as check "dts":
///   involution     phi(phi(x)) = x
///   automorphism   bijective, generators onto generators, circles onto circles
///   tangency-map   phi(x) = xKL for x in K
///   fixed-pencil   every N in <K,L> is fixed and phi(N n K) = N n L
///   vertex-pencils phi(M) = M for M in <x, phi(x)>, phi(x) != x; skipped
///                  when x || phi(x)
///   contact-points phi(x) = x M phi(M) for M != phi(M), x in M; a tangent
///                  pair M, phi(M) is itself a violation
/// Witnesses list circles {K, L, ...} first.
CheckReport verify_dts(const LaguerrePlane& plane, const Automorphism& phi, CircleId k, CircleId l);

struct SymmetryClassification {
  enum class Kind { LaguerreSymmetry, FixedPointFree, Other };
  Kind kind = Kind::Other;
  /// Pointwise fixed generators.
  std::vector<GeneratorId> generators;
  /// First setwise fixed circle in id order.
  std::optional<CircleId> fixedCircle;
  std::size_t fixedPoints = 0;
  /// Points with x || phi(x) and x != phi(x).
  std::size_t movedWithinGenerator = 0;
  std::string details;
};

const char* to_string(SymmetryClassification::Kind kind);

/// |K n L| = 2: LaguerreSymmetry when exactly the two generators through
/// K n L are pointwise fixed and some circle is fixed. |K n L| = 0:
/// FixedPointFree when no point is fixed. Anything else is Other.
/// Throws TangentPair.
SymmetryClassification classify_symmetry(const LaguerrePlane& plane, const Automorphism& phi, CircleId k,
                                         CircleId l);
SymmetryClassification classify_symmetry(const LaguerrePlane& plane, CircleId k, CircleId l);

/// Circles mapped onto themselves, in id order.
std::vector<CircleId> fixed_circles(const LaguerrePlane& plane, const Automorphism& phi);

/// S_{K,L} for every unordered non-tangent pair K < L.
class DtsCatalog {
 public:
  struct Entry {
    CircleId k, l;
    Automorphism phi;
    std::vector<bool> fixedGenerator;
    std::vector<bool> fixedCircle;
  };

  explicit DtsCatalog(const LaguerrePlane& plane, unsigned workers = 1);
  std::span<const Entry> entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Every S_{K,L} fixing P and Q pointwise and M setwise must be the same
/// map. Check "dts-uniqueness"; Inconclusive when no pair qualifies.
/// Witness points {point of P, point of Q, x}, circles {M, K1, L1, K2, L2}
/// where the two symmetries differ at x.
CheckReport symmetry_uniqueness(const LaguerrePlane& plane, const DtsCatalog& catalog, GeneratorId p,
                                GeneratorId q, CircleId m);

/// symmetry_uniqueness over all (P < Q, M), or sampled triples.
/// NotApplicable for even order.
CheckReport check_dts_uniqueness(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

/// Sweep over non-tangent pairs, check "dts": build_dts and verify_dts on
/// every unordered pair (exhaustive) or on sampled ordered pairs, plus
///   well-defined   build_dts succeeds
///   unordered      S_{K,L} = S_{L,K}
///   classification secant pairs give a Laguerre symmetry
/// Disjoint pairs are only measured (fixed-point-free count, points moved
/// within their generator). NotApplicable for even order.
CheckReport check_dts(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

/// For (Pi) configurations with (abc)° and (pqx)° non-tangent: S_{K,L} with
/// K = (abc)°, L = (pqx)° fixes the circle tangent to K at a through x and
/// maps a to x = aKL. Check "pi-symmetry", same witness layout as "Pi".
/// NotApplicable for even order.
CheckReport verify_pi_symmetry(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);
bool replay_pi_symmetry(const LaguerrePlane& plane, const Witness& w);

/// Replays witnesses of "dts", "dts-uniqueness".
bool replay_dts_witness(const LaguerrePlane& plane, std::string_view id, const Witness& w);

/// Text form: a header `dts q=<q> K=<a,b,c> L=<a,b,c>` (circle ids as #n
/// on planes without coordinates), then the images in point order on one
/// line.
void write_automorphism(std::ostream& out, const LaguerrePlane& plane, const Automorphism& phi);
/// Parses the text form; checks q, the pair and that the list is a
/// permutation. Throws FormatError.
Automorphism read_automorphism(std::istream& in, const LaguerrePlane& plane);

/// Circle id from "a,b,c" coefficients or "#n".
CircleId parse_circle(const LaguerrePlane& plane, std::string_view text);
std::string format_circle(const LaguerrePlane& plane, CircleId k);

}  // namespace laguerre
