#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laguerre/finite_field.hpp"

namespace laguerre {

struct PointId {
  std::uint32_t value = 0;
  friend auto operator<=>(PointId, PointId) = default;
};

struct CircleId {
  std::uint32_t value = 0;
  friend auto operator<=>(CircleId, CircleId) = default;
};

struct GeneratorId {
  std::uint32_t value = 0;
  friend auto operator<=>(GeneratorId, GeneratorId) = default;
};

/// Coefficients of a model circle {(x, a*o(x) + b*x + c)} u {(inf, a)}.
struct CircleCoef {
  FieldElement a, b, c;
  friend bool operator==(const CircleCoef&, const CircleCoef&) = default;
};

/// Raw candidate structure: a point count, a partition into generators and
/// a list of blocks. Nothing is assumed; see validate_laguerre_axioms.
struct IncidenceStructure {
  std::size_t pointCount = 0;
  std::vector<std::vector<PointId>> generators;
  std::vector<std::vector<PointId>> circles;
  /// Either empty or one entry per circle.
  std::vector<std::optional<CircleCoef>> coefficients;
};

/// Where a plane came from. Coordinate models index points x-major:
/// (x, y) -> x*q + y, and (inf, y) -> q*q + y; circle (a,b,c) has id
/// a*q*q + b*q + c.
struct PlaneModel {
  enum class Kind { Abstract, Miquelian, Oval };
  Kind kind = Kind::Abstract;
  std::shared_ptr<const FiniteField> field;
  /// o(x) by element index; only for Kind::Oval.
  std::vector<FieldElement> ovalTable;

  bool has_coordinates() const noexcept { return field != nullptr; }
  /// "miquelian", "oval:v0,v1,...", or "abstract".
  std::string name() const;
};

struct Tangency {
  enum class Kind { Equal, Tangent, Secant, Disjoint };
  Kind kind = Kind::Disjoint;
  /// Tangent fills points[0]; Secant fills both, ascending.
  std::array<PointId, 2> points{};

  bool tangent() const noexcept { return kind == Kind::Equal || kind == Kind::Tangent; }
  friend bool operator==(const Tangency&, const Tangency&) = default;
};

const char* to_string(Tangency::Kind kind);

struct Pencil {
  enum class Kind { Tangent, Vertex, DoubleTangency };
  Kind kind = Kind::Tangent;
  /// Tangent: {p, -}; Vertex: {x, y}.
  std::array<PointId, 2> points{};
  /// Tangent: {K, -}; DoubleTangency: {K, L}.
  std::array<CircleId, 2> circles{};
  std::vector<CircleId> members;

  bool contains(CircleId c) const;
};

/// A validated finite Laguerre plane with lookup indexes. Immutable.
class LaguerrePlane {
 public:
  /// Validates the Laguerre plane axioms; throws NotALaguerrePlane naming
  /// the failed axiom and its witness.
  static LaguerrePlane from_structure(IncidenceStructure s, PlaneModel model = {});

  std::size_t order() const noexcept { return q_; }
  std::size_t point_count() const noexcept { return n_; }
  std::size_t circle_count() const noexcept { return m_; }
  std::size_t generator_count() const noexcept { return g_; }
  const PlaneModel& model() const noexcept { return model_; }
  const IncidenceStructure& structure() const noexcept { return s_; }

  GeneratorId generator_of(PointId p) const { return {genOf_[p.value]}; }
  /// Position of p within its generator's member list.
  std::uint32_t position_in_generator(PointId p) const { return posInGen_[p.value]; }
  std::span<const PointId> generator_points(GeneratorId g) const {
    return s_.generators[g.value];
  }
  bool parallel(PointId a, PointId b) const { return genOf_[a.value] == genOf_[b.value]; }

  /// Points of K indexed by generator.
  std::span<const PointId> circle_points(CircleId k) const {
    return {circlePts_.data() + std::size_t{k.value} * g_, g_};
  }
  PointId point_on(CircleId k, GeneratorId g) const {
    return circlePts_[std::size_t{k.value} * g_ + g.value];
  }
  bool contains(CircleId k, PointId p) const {
    return point_on(k, generator_of(p)) == p;
  }
  std::span<const CircleId> circles_through(PointId p) const;

  std::size_t intersection_size(CircleId k, CircleId l) const;
  /// Points of K n L in ascending order.
  std::vector<PointId> intersection(CircleId k, CircleId l) const;
  Tangency tangency(CircleId k, CircleId l) const;
  bool tangent(CircleId k, CircleId l) const { return k == l || intersection_size(k, l) == 1; }

  /// (a,b,c)°; throws ParallelPoints.
  CircleId circle_through(PointId a, PointId b, PointId c) const;
  /// (a,b,c)° or nullopt when two of the points are parallel or equal.
  std::optional<CircleId> find_circle(PointId a, PointId b, PointId c) const;
  /// pK.
  PointId parallel_point(PointId p, CircleId k) const { return point_on(k, generator_of(p)); }
  /// (p,K,x)°; throws PointNotOnCircle, PointOnCircle, ParallelPoints.
  CircleId tangent_circle(PointId p, CircleId k, PointId x) const;
  /// Members of <p,K> (K included), ordered by their point on a reference
  /// generator. Unchecked hot path: p must lie on K.
  std::span<const CircleId> tangent_members(PointId p, CircleId k) const {
    return {pencils_.data() + (std::size_t{k.value} * g_ + genOf_[p.value]) * q_, q_};
  }
  Pencil tangent_pencil(PointId p, CircleId k) const;
  Pencil vertex_pencil(PointId x, PointId y) const;

  /// Ordered generalized concyclicity (a,b,c,d): all on one circle, or
  /// a||b, c||d and a not parallel to c.
  bool concyclic(PointId a, PointId b, PointId c, PointId d) const;
  /// Unordered variant: on one circle, or two parallel pairs on distinct
  /// generators in any pairing.
  bool concyclic_any_pairing(PointId a, PointId b, PointId c, PointId d) const;
  /// True iff some circle contains every given point (repeats allowed).
  bool on_common_circle(std::span<const PointId> pts) const;

  std::optional<CircleCoef> coefficients(CircleId k) const;
  /// Coordinate model only: x is nullopt for the generator at infinity.
  std::optional<FieldElement> point_x(PointId p) const;
  FieldElement point_y(PointId p) const;
  PointId point_at(std::optional<FieldElement> x, FieldElement y) const;
  CircleId circle_with(const CircleCoef& coef) const;

  std::string describe_point(PointId p) const;
  std::string describe_circle(CircleId k) const;

  std::size_t words_per_circle() const noexcept { return w_; }
  std::span<const std::uint64_t> circle_bits(CircleId k) const {
    return {bits_.data() + std::size_t{k.value} * w_, w_};
  }

 private:
  LaguerrePlane() = default;
  void build_indexes();
  std::size_t triple_slot(PointId a, PointId b, PointId c) const;

  IncidenceStructure s_;
  PlaneModel model_;
  std::size_t q_ = 0;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t g_ = 0;
  std::size_t w_ = 0;
  std::vector<std::uint32_t> genOf_;
  std::vector<std::uint32_t> posInGen_;
  std::vector<PointId> circlePts_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> throughOffsets_;
  std::vector<CircleId> through_;
  std::vector<std::uint32_t> genTripleRank_;
  std::vector<std::uint32_t> tripleIndex_;
  std::vector<CircleId> pencils_;
};

}  // namespace laguerre
