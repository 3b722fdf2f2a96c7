#include "laguerre/plane.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "laguerre/axioms.hpp"
#include "laguerre/errors.hpp"

namespace laguerre {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::string point_list(std::span<const PointId> pts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i].value;
  return out.str();
}

}  // namespace

std::string PlaneModel::name() const {
  switch (kind) {
    case Kind::Miquelian:
      return "miquelian";
    case Kind::Oval: {
      std::ostringstream out;
      out << "oval:";
      for (std::size_t i = 0; i < ovalTable.size(); ++i) out << (i ? "," : "") << ovalTable[i].index;
      return out.str();
    }
    case Kind::Abstract:
      break;
  }
  return "abstract";
}

const char* to_string(Tangency::Kind kind) {
  switch (kind) {
    case Tangency::Kind::Equal:
      return "Equal";
    case Tangency::Kind::Tangent:
      return "Tangent";
    case Tangency::Kind::Secant:
      return "Secant";
    case Tangency::Kind::Disjoint:
      return "Disjoint";
  }
  return "?";
}

bool Pencil::contains(CircleId c) const {
  return std::find(members.begin(), members.end(), c) != members.end();
}

LaguerrePlane LaguerrePlane::from_structure(IncidenceStructure s, PlaneModel model) {
  CheckReport report = validate_laguerre_axioms(s);
  if (report.verdict != Verdict::Holds) {
    std::string what = "not a Laguerre plane";
    if (!report.violations.empty()) {
      const Witness& w = report.violations.front();
      what += ": " + w.label + " fails";
      if (!w.points.empty()) what += " at points [" + point_list(w.points) + "]";
      if (!w.detail.empty()) what += " (" + w.detail + ")";
    }
    throw NotALaguerrePlane(what);
  }
  LaguerrePlane plane;
  plane.s_ = std::move(s);
  plane.model_ = std::move(model);
  plane.build_indexes();
  return plane;
}

void LaguerrePlane::build_indexes() {
  n_ = s_.pointCount;
  m_ = s_.circles.size();
  g_ = s_.generators.size();
  q_ = s_.generators.front().size();
  w_ = (n_ + 63) / 64;

  genOf_.assign(n_, 0);
  posInGen_.assign(n_, 0);
  for (std::uint32_t g = 0; g < g_; ++g)
    for (std::uint32_t j = 0; j < s_.generators[g].size(); ++j) {
      genOf_[s_.generators[g][j].value] = g;
      posInGen_[s_.generators[g][j].value] = j;
    }

  circlePts_.assign(m_ * g_, PointId{});
  bits_.assign(m_ * w_, 0);
  std::vector<std::uint32_t> degree(n_, 0);
  for (std::uint32_t k = 0; k < m_; ++k) {
    for (PointId p : s_.circles[k]) {
      circlePts_[std::size_t{k} * g_ + genOf_[p.value]] = p;
      bits_[std::size_t{k} * w_ + p.value / 64] |= std::uint64_t{1} << (p.value % 64);
      ++degree[p.value];
    }
  }

  throughOffsets_.assign(n_ + 1, 0);
  for (std::size_t p = 0; p < n_; ++p) throughOffsets_[p + 1] = throughOffsets_[p] + degree[p];
  through_.assign(throughOffsets_.back(), CircleId{});
  std::vector<std::uint32_t> fill(throughOffsets_.begin(), throughOffsets_.end() - 1);
  for (std::uint32_t k = 0; k < m_; ++k)
    for (PointId p : s_.circles[k]) through_[fill[p.value]++] = CircleId{k};

  genTripleRank_.assign(g_ * g_ * g_, kNone);
  std::uint32_t rank = 0;
  for (std::size_t a = 0; a < g_; ++a)
    for (std::size_t b = a + 1; b < g_; ++b)
      for (std::size_t c = b + 1; c < g_; ++c) genTripleRank_[(a * g_ + b) * g_ + c] = rank++;
  tripleIndex_.assign(std::size_t{rank} * q_ * q_ * q_, kNone);
  for (std::uint32_t k = 0; k < m_; ++k) {
    auto pts = circle_points(CircleId{k});
    for (std::size_t a = 0; a < g_; ++a)
      for (std::size_t b = a + 1; b < g_; ++b)
        for (std::size_t c = b + 1; c < g_; ++c) tripleIndex_[triple_slot(pts[a], pts[b], pts[c])] = k;
  }

  // Tangent pencils, one per (K, generator of the contact point). Member j
  // passes through point j of the reference generator r.
  pencils_.assign(m_ * g_ * q_, CircleId{});
  for (std::uint32_t k = 0; k < m_; ++k) {
    CircleId kc{k};
    for (std::uint32_t g = 0; g < g_; ++g) {
      PointId p = point_on(kc, GeneratorId{g});
      std::uint32_t r = g == 0 ? 1 : 0;
      std::uint32_t t = 0;
      while (t == g || t == r) ++t;
      CircleId* out = pencils_.data() + (std::size_t{k} * g_ + g) * q_;
      for (std::size_t j = 0; j < q_; ++j) {
        PointId z = s_.generators[r][j];
        if (contains(kc, z)) {
          out[j] = kc;
          continue;
        }
        bool found = false;
        for (PointId w : s_.generators[t]) {
          CircleId cand{tripleIndex_[triple_slot(p, z, w)]};
          if (intersection_size(cand, kc) == 1) {
            out[j] = cand;
            found = true;
            break;
          }
        }
        if (!found) throw NotALaguerrePlane("tangent pencil incomplete");
      }
    }
  }
}

std::size_t LaguerrePlane::triple_slot(PointId a, PointId b, PointId c) const {
  std::array<std::pair<std::uint32_t, std::uint32_t>, 3> gp{{
      {genOf_[a.value], posInGen_[a.value]},
      {genOf_[b.value], posInGen_[b.value]},
      {genOf_[c.value], posInGen_[c.value]},
  }};
  std::sort(gp.begin(), gp.end());
  std::size_t rank = genTripleRank_[(gp[0].first * g_ + gp[1].first) * g_ + gp[2].first];
  return ((rank * q_ + gp[0].second) * q_ + gp[1].second) * q_ + gp[2].second;
}

std::span<const CircleId> LaguerrePlane::circles_through(PointId p) const {
  return {through_.data() + throughOffsets_[p.value],
          throughOffsets_[p.value + 1] - throughOffsets_[p.value]};
}

std::size_t LaguerrePlane::intersection_size(CircleId k, CircleId l) const {
  const std::uint64_t* a = bits_.data() + std::size_t{k.value} * w_;
  const std::uint64_t* b = bits_.data() + std::size_t{l.value} * w_;
  std::size_t count = 0;
  for (std::size_t i = 0; i < w_; ++i) count += std::popcount(a[i] & b[i]);
  return count;
}

std::vector<PointId> LaguerrePlane::intersection(CircleId k, CircleId l) const {
  std::vector<PointId> out;
  const std::uint64_t* a = bits_.data() + std::size_t{k.value} * w_;
  const std::uint64_t* b = bits_.data() + std::size_t{l.value} * w_;
  for (std::size_t i = 0; i < w_; ++i) {
    std::uint64_t word = a[i] & b[i];
    while (word) {
      out.push_back(PointId{static_cast<std::uint32_t>(i * 64 + std::countr_zero(word))});
      word &= word - 1;
    }
  }
  return out;
}

Tangency LaguerrePlane::tangency(CircleId k, CircleId l) const {
  if (k == l) return {Tangency::Kind::Equal, {}};
  auto common = intersection(k, l);
  switch (common.size()) {
    case 0:
      return {Tangency::Kind::Disjoint, {}};
    case 1:
      return {Tangency::Kind::Tangent, {common[0], PointId{}}};
    default:
      return {Tangency::Kind::Secant, {common[0], common[1]}};
  }
}

std::optional<CircleId> LaguerrePlane::find_circle(PointId a, PointId b, PointId c) const {
  if (parallel(a, b) || parallel(a, c) || parallel(b, c)) return std::nullopt;
  return CircleId{tripleIndex_[triple_slot(a, b, c)]};
}

CircleId LaguerrePlane::circle_through(PointId a, PointId b, PointId c) const {
  auto k = find_circle(a, b, c);
  if (!k) throw ParallelPoints("points " + describe_point(a) + ", " + describe_point(b) + ", " +
                               describe_point(c) + " are not mutually non-parallel");
  return *k;
}

CircleId LaguerrePlane::tangent_circle(PointId p, CircleId k, PointId x) const {
  if (!contains(k, p)) throw PointNotOnCircle(describe_point(p) + " is not on " + describe_circle(k));
  if (contains(k, x)) throw PointOnCircle(describe_point(x) + " lies on " + describe_circle(k));
  if (parallel(p, x)) throw ParallelPoints(describe_point(p) + " and " + describe_point(x) + " are parallel");
  for (CircleId m : tangent_members(p, k))
    if (contains(m, x)) return m;
  throw NotALaguerrePlane("tangent pencil misses a point");
}

Pencil LaguerrePlane::tangent_pencil(PointId p, CircleId k) const {
  if (!contains(k, p)) throw PointNotOnCircle(describe_point(p) + " is not on " + describe_circle(k));
  Pencil pencil;
  pencil.kind = Pencil::Kind::Tangent;
  pencil.points = {p, PointId{}};
  pencil.circles = {k, CircleId{}};
  auto members = tangent_members(p, k);
  pencil.members.assign(members.begin(), members.end());
  std::sort(pencil.members.begin(), pencil.members.end());
  return pencil;
}

Pencil LaguerrePlane::vertex_pencil(PointId x, PointId y) const {
  if (parallel(x, y)) throw ParallelPoints(describe_point(x) + " and " + describe_point(y) + " are parallel");
  Pencil pencil;
  pencil.kind = Pencil::Kind::Vertex;
  pencil.points = {x, y};
  std::uint32_t t = 0;
  while (t == genOf_[x.value] || t == genOf_[y.value]) ++t;
  for (PointId z : s_.generators[t]) pencil.members.push_back(circle_through(x, y, z));
  std::sort(pencil.members.begin(), pencil.members.end());
  return pencil;
}

bool LaguerrePlane::on_common_circle(std::span<const PointId> pts) const {
  std::array<PointId, 8> distinct{};
  std::size_t count = 0;
  for (PointId p : pts) {
    bool seen = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (distinct[i] == p) {
        seen = true;
        break;
      }
      if (parallel(distinct[i], p)) return false;
    }
    if (!seen) {
      if (count == distinct.size()) {
        std::vector<PointId> many(pts.begin(), pts.end());
        std::sort(many.begin(), many.end());
        many.erase(std::unique(many.begin(), many.end()), many.end());
        for (std::size_t i = 0; i < many.size(); ++i)
          for (std::size_t j = i + 1; j < many.size(); ++j)
            if (parallel(many[i], many[j])) return false;
        CircleId k = circle_through(many[0], many[1], many[2]);
        return std::all_of(many.begin(), many.end(), [&](PointId p) { return contains(k, p); });
      }
      distinct[count++] = p;
    }
  }
  if (count < 3) return true;
  CircleId k{tripleIndex_[triple_slot(distinct[0], distinct[1], distinct[2])]};
  for (std::size_t i = 3; i < count; ++i)
    if (!contains(k, distinct[i])) return false;
  return true;
}

bool LaguerrePlane::concyclic(PointId a, PointId b, PointId c, PointId d) const {
  if (parallel(a, b) && parallel(c, d) && !parallel(a, c)) return true;
  std::array<PointId, 4> pts{a, b, c, d};
  return on_common_circle(pts);
}

bool LaguerrePlane::concyclic_any_pairing(PointId a, PointId b, PointId c, PointId d) const {
  return concyclic(a, b, c, d) || concyclic(a, c, b, d) || concyclic(a, d, b, c);
}

std::optional<CircleCoef> LaguerrePlane::coefficients(CircleId k) const {
  if (s_.coefficients.empty()) return std::nullopt;
  return s_.coefficients[k.value];
}

std::optional<FieldElement> LaguerrePlane::point_x(PointId p) const {
  if (!model_.has_coordinates()) throw Error("plane has no coordinates");
  if (p.value >= q_ * q_) return std::nullopt;
  return FieldElement{static_cast<std::uint32_t>(p.value / q_)};
}

FieldElement LaguerrePlane::point_y(PointId p) const {
  if (!model_.has_coordinates()) throw Error("plane has no coordinates");
  return FieldElement{static_cast<std::uint32_t>(p.value % q_)};
}

PointId LaguerrePlane::point_at(std::optional<FieldElement> x, FieldElement y) const {
  if (!model_.has_coordinates()) throw Error("plane has no coordinates");
  if (y.index >= q_ || (x && x->index >= q_)) throw std::out_of_range("coordinate out of range");
  std::size_t base = x ? std::size_t{x->index} * q_ : q_ * q_;
  return PointId{static_cast<std::uint32_t>(base + y.index)};
}

CircleId LaguerrePlane::circle_with(const CircleCoef& coef) const {
  if (!model_.has_coordinates()) throw Error("plane has no coordinates");
  if (coef.a.index >= q_ || coef.b.index >= q_ || coef.c.index >= q_)
    throw std::out_of_range("coefficient out of range");
  return CircleId{static_cast<std::uint32_t>((coef.a.index * q_ + coef.b.index) * q_ + coef.c.index)};
}

std::string LaguerrePlane::describe_point(PointId p) const {
  if (!model_.has_coordinates()) return "#" + std::to_string(p.value);
  auto x = point_x(p);
  return "(" + (x ? std::to_string(x->index) : std::string("inf")) + "," +
         std::to_string(point_y(p).index) + ")";
}

std::string LaguerrePlane::describe_circle(CircleId k) const {
  if (auto coef = coefficients(k))
    return "(" + std::to_string(coef->a.index) + "," + std::to_string(coef->b.index) + "," +
           std::to_string(coef->c.index) + ")";
  return "#" + std::to_string(k.value);
}

}  // namespace laguerre
