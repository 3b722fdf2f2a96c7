#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "laguerre/plane.hpp"

namespace laguerre {

/// Orders accepted by the plane constructors.
inline constexpr unsigned kSupportedOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
bool supported_order(unsigned q);

struct ModelSpec {
  enum class Kind { Miquelian, Oval };
  Kind kind = Kind::Miquelian;
  unsigned q = 0;
  /// Oval function values by element index; only for Kind::Oval.
  std::vector<FieldElement> oval;
};

/// Points (GF(q) u {inf}) x GF(q), circles {(x, a*o(x)+b*x+c)} u {(inf, a)}
/// for every (a,b,c). Not validated.
IncidenceStructure oval_structure(const FiniteField& field, std::span<const FieldElement> o);

/// The classical plane, o(x) = x^2. Throws UnsupportedField.
LaguerrePlane miquelian_plane(unsigned q);

/// Throws NotALaguerrePlane when the construction fails an axiom.
LaguerrePlane oval_plane(unsigned q, std::span<const FieldElement> o);

LaguerrePlane build_model(const ModelSpec& spec);

/// Oval table text: one line `x o(x)` per element, in index order.
/// Throws FormatError.
std::vector<FieldElement> read_oval_table(std::istream& in, const FiniteField& field);
/// Inverse of PlaneModel::name() for coordinate models ("miquelian" or
/// "oval:v0,v1,..."). Throws FormatError.
ModelSpec model_from_name(unsigned q, std::string_view name);

/// o(x) = x^e as a value table.
std::vector<FieldElement> power_table(const FiniteField& field, unsigned e);

/// Tangency of two miquelian circles in odd characteristic from their
/// coefficients alone: the sign of (b-b')^2 - 4(a-a')(c-c') when a != a',
/// and the common point (inf, a) otherwise.
Tangency discriminant_tangency(const LaguerrePlane& plane, CircleId k, CircleId l);

/// Text format: `laguerre q=<q> points=<n> circles=<m>`, then one line per
/// generator (its point indexes), then one line per circle (sorted point
/// indexes, optionally followed by `coef a b c`).
void write_plane(std::ostream& out, const LaguerrePlane& plane);
/// Parses and validates; the result has an abstract model. Throws
/// FormatError or NotALaguerrePlane.
LaguerrePlane read_plane(std::istream& in);

}  // namespace laguerre
