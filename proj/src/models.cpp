#include "laguerre/models.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "laguerre/errors.hpp"

namespace laguerre {

bool supported_order(unsigned q) {
  return std::find(std::begin(kSupportedOrders), std::end(kSupportedOrders), q) != std::end(kSupportedOrders);
}

IncidenceStructure oval_structure(const FiniteField& f, std::span<const FieldElement> o) {
  const std::uint32_t q = f.order();
  if (o.size() != q) throw Error("oval table needs one value per field element");
  IncidenceStructure s;
  s.pointCount = std::size_t{q} * q + q;
  for (std::uint32_t g = 0; g <= q; ++g) {
    std::vector<PointId> gen;
    for (std::uint32_t y = 0; y < q; ++y) gen.push_back(PointId{g * q + y});
    s.generators.push_back(std::move(gen));
  }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        std::vector<PointId> pts;
        for (std::uint32_t x = 0; x < q; ++x) {
          FieldElement fx{x};
          FieldElement y = f.add(f.add(f.mul({a}, o[x]), f.mul({b}, fx)), {c});
          pts.push_back(PointId{x * q + y.index});
        }
        pts.push_back(PointId{q * q + a});
        s.circles.push_back(std::move(pts));
        s.coefficients.push_back(CircleCoef{{a}, {b}, {c}});
      }
  return s;
}

std::vector<FieldElement> power_table(const FiniteField& f, unsigned e) {
  std::vector<FieldElement> table;
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    FieldElement v = f.one();
    for (unsigned i = 0; i < e; ++i) v = f.mul(v, {x});
    table.push_back(v);
  }
  return table;
}

namespace {

std::shared_ptr<const FiniteField> field_for(unsigned q) {
  if (!supported_order(q)) throw UnsupportedField("unsupported plane order " + std::to_string(q));
  return std::make_shared<const FiniteField>(make_field_of_order(q));
}

}  // namespace

LaguerrePlane miquelian_plane(unsigned q) {
  auto field = field_for(q);
  auto squares = power_table(*field, 2);
  PlaneModel model{PlaneModel::Kind::Miquelian, field, {}};
  return LaguerrePlane::from_structure(oval_structure(*field, squares), std::move(model));
}

LaguerrePlane oval_plane(unsigned q, std::span<const FieldElement> o) {
  auto field = field_for(q);
  PlaneModel model{PlaneModel::Kind::Oval, field, {o.begin(), o.end()}};
  for (FieldElement v : o)
    if (v.index >= q) throw Error("oval table value out of range");
  return LaguerrePlane::from_structure(oval_structure(*field, o), std::move(model));
}

LaguerrePlane build_model(const ModelSpec& spec) {
  if (spec.kind == ModelSpec::Kind::Miquelian) return miquelian_plane(spec.q);
  return oval_plane(spec.q, spec.oval);
}

std::vector<FieldElement> read_oval_table(std::istream& in, const FiniteField& field) {
  std::vector<FieldElement> table;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    long long x = 0, y = 0;
    if (!(ls >> x)) continue;
    std::string extra;
    if (!(ls >> y) || (ls >> extra))
      throw FormatError("oval table line " + std::to_string(lineNo) + ": expected 'x o(x)'");
    if (x != static_cast<long long>(table.size()))
      throw FormatError("oval table line " + std::to_string(lineNo) + ": entries must be in index order");
    if (y < 0 || y >= static_cast<long long>(field.order()))
      throw FormatError("oval table line " + std::to_string(lineNo) + ": value out of range");
    table.push_back(field.element(static_cast<unsigned>(y)));
  }
  if (table.size() != field.order())
    throw FormatError("oval table has " + std::to_string(table.size()) + " entries, expected " +
                      std::to_string(field.order()));
  return table;
}

ModelSpec model_from_name(unsigned q, std::string_view name) {
  ModelSpec spec;
  spec.q = q;
  if (name == "miquelian") return spec;
  if (name.rfind("oval:", 0) != 0) throw FormatError("unknown model '" + std::string(name) + "'");
  FiniteField field = make_field_of_order(q);
  spec.kind = ModelSpec::Kind::Oval;
  std::istringstream values(std::string(name.substr(5)));
  std::string item;
  while (std::getline(values, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v >= q) throw FormatError("bad oval value '" + item + "'");
    spec.oval.push_back(field.element(static_cast<unsigned>(v)));
  }
  if (spec.oval.size() != q) throw FormatError("oval model needs " + std::to_string(q) + " values");
  return spec;
}

Tangency discriminant_tangency(const LaguerrePlane& plane, CircleId k, CircleId l) {
  if (plane.model().kind != PlaneModel::Kind::Miquelian) throw Error("discriminant needs the miquelian model");
  const FiniteField& f = *plane.model().field;
  if (f.characteristic() == 2) throw Error("discriminant needs odd characteristic");
  if (k == l) return {Tangency::Kind::Equal, {}};
  CircleCoef ck = *plane.coefficients(k);
  CircleCoef cl = *plane.coefficients(l);
  FieldElement da = f.sub(ck.a, cl.a);
  FieldElement db = f.sub(ck.b, cl.b);
  FieldElement dc = f.sub(ck.c, cl.c);
  auto on_k = [&](FieldElement x) {
    FieldElement y = f.add(f.add(f.mul(ck.a, f.mul(x, x)), f.mul(ck.b, x)), ck.c);
    return plane.point_at(x, y);
  };
  PointId inf = plane.point_at(std::nullopt, ck.a);

  if (da == f.zero()) {
    if (db == f.zero()) return {Tangency::Kind::Tangent, {inf, PointId{}}};
    FieldElement x = f.div(f.neg(dc), db);
    std::array<PointId, 2> pts{on_k(x), inf};
    std::sort(pts.begin(), pts.end());
    return {Tangency::Kind::Secant, pts};
  }
  FieldElement two = f.add(f.one(), f.one());
  FieldElement four = f.add(two, two);
  FieldElement disc = f.sub(f.mul(db, db), f.mul(four, f.mul(da, dc)));
  auto roots = f.square_roots(disc);
  if (roots.empty()) return {Tangency::Kind::Disjoint, {}};
  FieldElement denom = f.mul(two, da);
  if (disc == f.zero()) return {Tangency::Kind::Tangent, {on_k(f.div(f.neg(db), denom)), PointId{}}};
  std::array<PointId, 2> pts{on_k(f.div(f.add(f.neg(db), roots[0]), denom)),
                             on_k(f.div(f.add(f.neg(db), roots[1]), denom))};
  std::sort(pts.begin(), pts.end());
  return {Tangency::Kind::Secant, pts};
}

void write_plane(std::ostream& out, const LaguerrePlane& plane) {
  const auto& s = plane.structure();
  out << "laguerre q=" << plane.order() << " points=" << plane.point_count()
      << " circles=" << plane.circle_count() << '\n';
  auto line = [&out](const std::vector<PointId>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i].value;
  };
  for (const auto& g : s.generators) {
    line(g);
    out << '\n';
  }
  for (std::size_t k = 0; k < s.circles.size(); ++k) {
    line(s.circles[k]);
    if (!s.coefficients.empty() && s.coefficients[k]) {
      const CircleCoef& c = *s.coefficients[k];
      out << " coef " << c.a.index << ' ' << c.b.index << ' ' << c.c.index;
    }
    out << '\n';
  }
}

namespace {

std::size_t header_value(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw FormatError("expected " + key + "=<n> in plane header");
  try {
    return std::stoul(token.substr(key.size() + 1));
  } catch (const std::exception&) {
    throw FormatError("bad value for " + key);
  }
}

std::vector<std::uint32_t> numbers(std::istringstream& in) {
  std::vector<std::uint32_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok == "coef") {
      out.push_back(UINT32_MAX);
      continue;
    }
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw FormatError("bad token '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

LaguerrePlane read_plane(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("missing plane header");
  std::istringstream header(line);
  std::string magic, tq, tn, tm;
  header >> magic >> tq >> tn >> tm;
  if (magic != "laguerre") throw FormatError("plane header must start with 'laguerre'");
  std::size_t q = header_value(tq, "q");
  std::size_t n = header_value(tn, "points");
  std::size_t m = header_value(tm, "circles");
  if (q < 2 || n % q != 0) throw FormatError("point count is not a multiple of q");

  IncidenceStructure s;
  s.pointCount = n;
  for (std::size_t g = 0; g < n / q; ++g) {
    if (!std::getline(in, line)) throw FormatError("missing generator line");
    std::istringstream row(line);
    std::vector<PointId> gen;
    for (std::uint32_t v : numbers(row)) {
      if (v == UINT32_MAX) throw FormatError("coef on a generator line");
      gen.push_back(PointId{v});
    }
    s.generators.push_back(std::move(gen));
  }
  bool anyCoef = false;
  std::vector<std::optional<CircleCoef>> coefs;
  for (std::size_t k = 0; k < m; ++k) {
    if (!std::getline(in, line)) throw FormatError("missing circle line");
    std::istringstream row(line);
    auto vals = numbers(row);
    auto marker = std::find(vals.begin(), vals.end(), UINT32_MAX);
    std::vector<PointId> pts;
    for (auto it = vals.begin(); it != marker; ++it) pts.push_back(PointId{*it});
    if (marker != vals.end()) {
      if (vals.end() - marker != 4) throw FormatError("coef needs three values");
      coefs.push_back(CircleCoef{{marker[1]}, {marker[2]}, {marker[3]}});
      anyCoef = true;
    } else {
      coefs.emplace_back();
    }
    s.circles.push_back(std::move(pts));
  }
  if (anyCoef) s.coefficients = std::move(coefs);
  return LaguerrePlane::from_structure(std::move(s));
}

}  // namespace laguerre
