#pragma once

#include <vector>

#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"

namespace laguerre {

/// Checks a raw structure against the Laguerre plane axioms:
///   "partition"         generators partition the points into classes of
///                       equal size
///   "joining"           three mutually non-parallel points lie on exactly
///                       one circle
///   "touching"          for p in K and x off K, x not parallel to p,
///                       exactly one circle through x meets K in exactly {p}
///   "meets-generators"  every circle meets every generator exactly once
///   "nontrivial"        some circle has at least three but not all points
/// The later axioms are only evaluated when the structural ones pass, since
/// their checks index by generator. Witness layouts:
///   joining           points {a, b, c}, circles = the circles through them
///                     (0 or >= 2)
///   touching          points {p, x}, circles {K, candidates...}
///   meets-generators  circles {K}, detail names the generator
CheckReport validate_laguerre_axioms(const IncidenceStructure& s);

/// Affine plane derived at a point p: points not parallel to p, lines are
/// the traces K \ {p} of circles through p and the generators missing p.
struct AffinePlane {
  std::vector<PointId> points;
  std::vector<std::vector<PointId>> lines;
};

AffinePlane derived_affine_plane(const LaguerrePlane& plane, PointId p);

/// Two points on exactly one line, Playfair's parallel axiom, and three
/// non-collinear points.
CheckReport validate_affine_axioms(const AffinePlane& affine);

}  // namespace laguerre
