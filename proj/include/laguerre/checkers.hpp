#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"

namespace laguerre {

// Configuration checkers. Each one generates the hypothesis of a statement
// constructively, tests its conclusion, and records violating
// configurations as witnesses. All run in exhaustive or seeded sample mode;
// exhaustive mode is refused (ExhaustiveTooLarge) when the checker's
// a-priori configuration count exceeds 1e8. No symmetry reduction is
// applied anywhere: every configuration is generated from every first
// circle or first point.
//
// Check ids and witness layouts:
//   "C"               circles {K, L}, points {p}; detail = number of
//                     members of <p,K> meeting L once
//   "S"               circles {K, L, M, N}, points {a, b, c, d}
//   "chain-parallel"  same layout as "S"
//   "chain-concyclic" same layout as "S"
//   "mutual-tangency" circles {K, L, M}, points {KnL, KnM, LnM}
//   "char2-tangency"  circles {M, K, L}, points {p, second common point}
//   "Pi"              points {a, b, c, x, p, q}, circles {(abc), K, (pqx)}
//   "PiPrime"         points {a, b, c, x, q}, circles {(abc), K, L, (abx)}
//   "pi-closure"      points {a, b, c, x, p, q}, circles {(abc), (pqx), N}
//   "miquel"          points {a, b, c, d, e, f, g, h}
//   "bundle"          points {a, b, c, d, e, f, g, h}

/// (C): for K, L and p in K \ L exactly one member of <p,K> meets L in a
/// single point.
CheckReport check_C(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

/// Tangency chains K, L, M, N with K n L = {a}, L n M = {b}, M n N = {c},
/// N n K = {d}, built as L in <a,K>, M in <b,L>, N in <c,M>.
/// (S): a not parallel to c implies a, b, c, d lie on one circle.
CheckReport check_S(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);
/// Chains with a || c have b || d.
CheckReport check_chain_parallel(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);
/// Every chain satisfies the ordered concyclicity (a, c, b, d).
CheckReport check_chain_concyclic(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

/// Three distinct, pairwise tangent circles touch in one common point.
CheckReport check_mutual_tangency(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

/// Even order only: two circles through p, both tangent to a third circle,
/// are tangent at p (or equal). NotApplicable for odd q.
CheckReport check_char2_tangency(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

/// The (Pi) configuration: a, b, c, x mutually non-parallel, x off (abc),
/// p = c(abx), q = b(acx), K = (a,(abc),x). Conclusion K n (pqx) = {x}.
CheckReport check_pi(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);
/// Reformulated configuration: L through q tangent to K at x meets (abx)
/// exactly in x and a point parallel to c. Configurations with q on K are
/// counted as degenerate.
CheckReport check_pi_prime(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);
/// In a (Pi) configuration the circle through b tangent to (pqx) at p is
/// tangent to (abc) at b.
CheckReport check_pi_closure(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

/// Miquel: eight distinct points with (a,c,b,d), (a,e,b,h), (a,g,d,h),
/// (b,f,c,e), (c,g,d,f) concyclic force (e,g,f,h). The first quadruple is
/// drawn from one circle; (e,h) covers both the circle and the generator
/// case; g and f range over every point satisfying their hypotheses.
/// A sample fixes (circle, a, c, b, d, e, h).
CheckReport check_miquel(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);
/// Bundle: (a,c,b,d), (c,e,d,f), (e,g,f,h), (g,a,h,b), (a,e,b,f) force
/// (c,g,d,h). The hypotheses are read as the five faces of a cube: each
/// quadruple lies on a circle or a generator pair, the five supports are
/// pairwise distinct, and at most two are generator pairs; other
/// configurations are skipped. The conclusion also accepts the points on
/// two generators as c || h, g || d: in the quadric model this is a plane
/// section through the vertex, and miquelian planes realize it. Such
/// configurations are counted as degenerate as well as tested. A sample
/// fixes (circle, a, c, b, d, circle-or-generator through a and b, e);
/// f, g, h are enumerated.
CheckReport check_bundle(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers = 1);

struct PiConfiguration {
  PointId a, b, c, x, p, q;
  CircleId abc, abx, acx;
  /// The circle through x tangent to (abc) at a.
  CircleId tangentAtA;
  /// (pqx), absent when p, q, x are not mutually non-parallel.
  std::optional<CircleId> pqx;
};

/// Nullopt when a, b, c, x are not mutually non-parallel or x lies on (abc).
std::optional<PiConfiguration> pi_configuration(const LaguerrePlane& plane, PointId a, PointId b,
                                                PointId c, PointId x);

/// Every registered check id, in a fixed order ("all" expands to this).
std::vector<std::string> check_ids();
bool is_check_id(std::string_view id);
/// Upper bound on the configurations an exhaustive run visits.
double apriori_count(const LaguerrePlane& plane, std::string_view id);
CheckReport run_check(const LaguerrePlane& plane, std::string_view id, const CheckMode& mode,
                      unsigned workers = 1);

/// Re-derives a reported violation from its witness alone. True iff the
/// witness still satisfies the hypothesis and still violates the claim.
bool replay_witness(const LaguerrePlane& plane, std::string_view id, const Witness& w);

}  // namespace laguerre
