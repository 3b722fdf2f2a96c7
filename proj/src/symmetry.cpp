#include "laguerre/symmetry.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "driver.hpp"
#include "laguerre/errors.hpp"

namespace laguerre {

using detail::Chooser;

namespace {

// Like detail::drive, but each unit fills a whole CheckReport so that
// per-property counts survive the merge.
template <class Body>
CheckReport drive_reports(const LaguerrePlane& plane, std::string check, const CheckMode& mode, unsigned workers,
                          std::size_t outerCount, double apriori, Body&& body) {
  if (!mode.sampled() && apriori > detail::kExhaustiveLimit)
    throw ExhaustiveTooLarge(check + ": a-priori configuration count " + std::to_string(apriori) +
                             " exceeds the exhaustive limit; use sample mode");
  auto start = std::chrono::steady_clock::now();
  const std::size_t units = mode.sampled()
                                ? static_cast<std::size_t>((mode.count + detail::kSampleBlock - 1) / detail::kSampleBlock)
                                : outerCount;
  std::vector<CheckReport> parts(units);
  detail::run_units(units, workers, [&](std::size_t u) {
    if (!mode.sampled()) {
      Chooser ch = Chooser::exhaustive(u);
      body(ch, parts[u]);
      return;
    }
    std::uint64_t end = std::min<std::uint64_t>(mode.count, (u + 1) * detail::kSampleBlock);
    for (std::uint64_t i = u * detail::kSampleBlock; i < end; ++i) {
      SplitMix64 rng = SplitMix64::for_sample(mode.seed, i);
      Chooser ch = Chooser::sampled(rng);
      body(ch, parts[u]);
    }
  });
  CheckReport report;
  report.check = std::move(check);
  report.q = plane.order();
  report.model = plane.model().name();
  report.mode = mode;
  for (const CheckReport& part : parts) report.merge(part);
  report.finish_verdict();
  report.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckReport not_applicable(const LaguerrePlane& plane, std::string check, const CheckMode& mode) {
  CheckReport report;
  report.check = std::move(check);
  report.q = plane.order();
  report.model = plane.model().name();
  report.mode = mode;
  report.verdict = Verdict::NotApplicable;
  report.elapsedSeconds = 0.0;
  return report;
}

void require_pair(const LaguerrePlane& plane, CircleId k, CircleId l) {
  if (k == l) throw SameCircle("the circles coincide: " + plane.describe_circle(k));
  if (plane.intersection_size(k, l) == 1)
    throw TangentPair(plane.describe_circle(k) + " and " + plane.describe_circle(l) + " are tangent");
}

std::string pair_name(const LaguerrePlane& plane, CircleId k, CircleId l) {
  return "K=" + format_circle(plane, k) + " L=" + format_circle(plane, l);
}

// The defining formula for one auxiliary point y on `k` (with its image `hy` on the
// other circle); nullopt when y is not admissible for x.
std::optional<PointId> eq1_value(const LaguerrePlane& plane, PointId x, PointId y, PointId hy, GeneratorId target) {
  if (plane.parallel(x, y) || plane.parallel(x, hy)) return std::nullopt;
  auto c = plane.find_circle(x, y, hy);
  if (!c) return std::nullopt;
  return plane.point_on(*c, target);
}

}  // namespace

TangentToSecond tangent_to_second(const LaguerrePlane& plane, PointId p, CircleId k, CircleId l) {
  if (!plane.contains(k, p))
    throw PointNotOnCircle(plane.describe_point(p) + " is not on " + plane.describe_circle(k));
  if (k == l) throw SameCircle("the circles coincide: " + plane.describe_circle(k));
  if (plane.contains(l, p)) return {std::nullopt, p};
  std::optional<CircleId> found;
  std::size_t count = 0;
  for (CircleId m : plane.tangent_members(p, k)) {
    if (plane.intersection_size(m, l) != 1) continue;
    ++count;
    if (!found) found = m;
  }
  if (count != 1)
    throw NotUnique(count, std::to_string(count) + " members of <" + plane.describe_point(p) + "," +
                               plane.describe_circle(k) + "> touch " + plane.describe_circle(l));
  return {found, plane.intersection(*found, l).front()};
}

TangencyMap tangency_map(const LaguerrePlane& plane, CircleId k, CircleId l) {
  require_pair(plane, k, l);
  TangencyMap h{k, l, {}};
  h.image.reserve(plane.generator_count());
  for (PointId x : plane.circle_points(k)) h.image.push_back(tangent_to_second(plane, x, k, l).point);
  return h;
}

Pencil double_tangency_pencil(const LaguerrePlane& plane, CircleId k, CircleId l) {
  if (k == l) throw SameCircle("the circles coincide: " + plane.describe_circle(k));
  Pencil pencil;
  pencil.kind = Pencil::Kind::DoubleTangency;
  pencil.circles = {k, l};
  for (std::uint32_t c = 0; c < plane.circle_count(); ++c)
    if (plane.tangent(CircleId{c}, k) && plane.tangent(CircleId{c}, l)) pencil.members.push_back(CircleId{c});
  return pencil;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i].value != i) return false;
  return true;
}

std::optional<CircleId> Automorphism::image_circle(const LaguerrePlane& plane, CircleId k) const {
  auto pts = plane.circle_points(k);
  auto c = plane.find_circle((*this)(pts[0]), (*this)(pts[1]), (*this)(pts[2]));
  if (!c) return std::nullopt;
  for (PointId x : pts)
    if (!plane.contains(*c, (*this)(x))) return std::nullopt;
  return c;
}

Automorphism identity_automorphism(const LaguerrePlane& plane) {
  std::vector<PointId> image(plane.point_count());
  for (std::uint32_t i = 0; i < image.size(); ++i) image[i] = PointId{i};
  return Automorphism(std::move(image), "identity");
}

bool is_automorphism(const LaguerrePlane& plane, const Automorphism& phi) {
  const std::size_t n = plane.point_count();
  if (phi.image().size() != n) return false;
  std::vector<bool> seen(n, false);
  for (PointId y : phi.image()) {
    if (y.value >= n || seen[y.value]) return false;
    seen[y.value] = true;
  }
  std::vector<bool> hit(plane.generator_count(), false);
  for (std::uint32_t g = 0; g < plane.generator_count(); ++g) {
    auto pts = plane.generator_points(GeneratorId{g});
    GeneratorId h = plane.generator_of(phi(pts[0]));
    if (hit[h.value]) return false;
    hit[h.value] = true;
    for (PointId x : pts)
      if (plane.generator_of(phi(x)) != h) return false;
  }
  for (std::uint32_t c = 0; c < plane.circle_count(); ++c)
    if (!phi.image_circle(plane, CircleId{c})) return false;
  return true;
}

Automorphism build_dts(const LaguerrePlane& plane, CircleId k, CircleId l) {
  require_pair(plane, k, l);
  const TangencyMap hk = tangency_map(plane, k, l);
  const TangencyMap hl = tangency_map(plane, l, k);
  const std::size_t n = plane.point_count();
  const std::string name = pair_name(plane, k, l);

  // Evaluates the formula with every admissible y on `from`, requiring one
  // common answer; nullopt when nothing is admissible.
  auto evaluate = [&](PointId x, CircleId from, CircleId to, const TangencyMap& h) -> std::optional<PointId> {
    GeneratorId target = plane.generator_of(h(plane, plane.parallel_point(x, from)));
    std::optional<PointId> value;
    PointId firstY{};
    for (PointId y : plane.circle_points(from)) {
      if (plane.contains(to, y)) continue;
      auto v = eq1_value(plane, x, y, h(plane, y), target);
      if (!v) continue;
      if (!value) {
        value = v;
        firstY = y;
      } else if (*v != *value) {
        throw WellDefinednessFailure(name + ": x=" + plane.describe_point(x) + " gets " +
                                     plane.describe_point(*value) + " from y=" + plane.describe_point(firstY) +
                                     " but " + plane.describe_point(*v) + " from y=" + plane.describe_point(y));
      }
    }
    return value;
  };

  // First pass: xKL on K, xLK on L, the formula with y on K elsewhere; on K
  // and L the formula is evaluated too and must match the direct value.
  std::vector<std::optional<PointId>> image(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    PointId x{i};
    const bool onK = plane.contains(k, x), onL = plane.contains(l, x);
    std::optional<PointId> direct;
    if (onK) direct = hk(plane, x);
    if (onL) {
      PointId other = hl(plane, x);
      if (direct && *direct != other)
        throw WellDefinednessFailure(name + ": xKL and xLK disagree at " + plane.describe_point(x));
      direct = other;
    }
    std::optional<PointId> value = evaluate(x, k, l, hk);
    if (direct && value && *direct != *value)
      throw WellDefinednessFailure(name + ": the formula gives " + plane.describe_point(*value) + " at " +
                                   plane.describe_point(x) + " but the tangency map gives " +
                                   plane.describe_point(*direct));
    image[i] = direct ? direct : value;
  }

  // Points where no y on K is admissible: phi maps circles onto circles,
  // so a circle C through x carrying three resolved points determines
  // phi(C), and phi(x) is its point on the target generator. Repeat until
  // nothing changes; all usable circles must agree.
  for (bool progress = true; progress;) {
    progress = false;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (image[i]) continue;
      PointId x{i};
      GeneratorId target = plane.generator_of(hk(plane, plane.parallel_point(x, k)));
      std::optional<PointId> value;
      CircleId firstC{};
      for (CircleId c : plane.circles_through(x)) {
        std::vector<PointId> known;
        for (PointId z : plane.circle_points(c))
          if (z != x && image[z.value]) known.push_back(*image[z.value]);
        if (known.size() < 3) continue;
        auto pc = plane.find_circle(known[0], known[1], known[2]);
        if (!pc) continue;
        PointId v = plane.point_on(*pc, target);
        if (!value) {
          value = v;
          firstC = c;
        } else if (v != *value) {
          throw WellDefinednessFailure(name + ": x=" + plane.describe_point(x) + " gets " +
                                       plane.describe_point(*value) + " via " + plane.describe_circle(firstC) +
                                       " but " + plane.describe_point(v) + " via " + plane.describe_circle(c));
        }
      }
      if (value) {
        image[i] = value;
        progress = true;
      }
    }
  }

  std::vector<PointId> points(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!image[i])
      throw WellDefinednessFailure(name + ": no admissible auxiliary point for " + plane.describe_point(PointId{i}));
    points[i] = *image[i];
  }
  Automorphism phi(std::move(points), "dts " + name, std::array<CircleId, 2>{k, l});
  if (!is_automorphism(plane, phi)) throw WellDefinednessFailure(name + ": the result is not an automorphism");
  return phi;
}

CheckReport verify_dts(const LaguerrePlane& plane, const Automorphism& phi, CircleId k, CircleId l) {
  CheckReport report;
  report.check = "dts";
  report.q = plane.order();
  report.model = plane.model().name();
  const std::uint32_t n = static_cast<std::uint32_t>(plane.point_count());
  const std::uint32_t m = static_cast<std::uint32_t>(plane.circle_count());

  Tally involution;
  for (std::uint32_t i = 0; i < n; ++i) {
    PointId x{i};
    ++involution.configurations;
    if (phi(phi(x)) != x) involution.violation({"involution", {x, phi(x), phi(phi(x))}, {k, l}, ""});
  }

  Tally automorphism;
  std::vector<std::optional<CircleId>> imageOf(m);
  ++automorphism.configurations;
  {
    std::vector<bool> seen(n, false);
    bool bijective = phi.image().size() == n;
    for (PointId y : phi.image()) {
      if (!bijective) break;
      if (y.value >= n || seen[y.value]) bijective = false;
      else seen[y.value] = true;
    }
    if (!bijective) {
      automorphism.violation({"automorphism", {}, {k, l}, "not a bijection"});
      report.add_property("involution", involution);
      report.add_property("automorphism", automorphism);
      report.finish_verdict();
      return report;
    }
  }
  for (std::uint32_t g = 0; g < plane.generator_count(); ++g) {
    ++automorphism.configurations;
    auto pts = plane.generator_points(GeneratorId{g});
    for (PointId x : pts)
      if (!plane.parallel(phi(x), phi(pts[0]))) {
        automorphism.violation({"automorphism", {pts[0], x}, {k, l}, "parallel points with non-parallel images"});
        break;
      }
  }
  for (std::uint32_t c = 0; c < m; ++c) {
    ++automorphism.configurations;
    imageOf[c] = phi.image_circle(plane, CircleId{c});
    if (!imageOf[c]) automorphism.violation({"automorphism", {}, {k, l, CircleId{c}}, "image is not a circle"});
  }

  Tally tangencyMap;
  for (PointId x : plane.circle_points(k)) {
    ++tangencyMap.configurations;
    PointId t = tangent_to_second(plane, x, k, l).point;
    if (phi(x) != t) tangencyMap.violation({"tangency-map", {x, phi(x), t}, {k, l}, ""});
  }

  Tally pencil;
  for (CircleId c : double_tangency_pencil(plane, k, l).members) {
    ++pencil.configurations;
    PointId s = plane.intersection(c, k).front();
    PointId t = plane.intersection(c, l).front();
    if (imageOf[c.value] != c)
      pencil.violation({"fixed-pencil", {s, t}, {k, l, c}, "member not fixed"});
    else if (phi(s) != t)
      pencil.violation({"fixed-pencil", {s, t}, {k, l, c}, "contact points not exchanged"});
  }

  Tally vertexPencils;
  for (std::uint32_t i = 0; i < n; ++i) {
    PointId x{i};
    if (phi(x) == x) continue;
    if (plane.parallel(x, phi(x))) {
      ++vertexPencils.skipped;
      continue;
    }
    for (CircleId c : plane.vertex_pencil(x, phi(x)).members) {
      ++vertexPencils.configurations;
      if (imageOf[c.value] != c) vertexPencils.violation({"vertex-pencils", {x, phi(x)}, {k, l, c}, ""});
    }
  }

  Tally contact;
  for (std::uint32_t c = 0; c < m; ++c) {
    CircleId mc{c};
    if (!imageOf[c] || *imageOf[c] == mc) continue;
    CircleId pm = *imageOf[c];
    if (plane.intersection_size(mc, pm) == 1) {
      ++contact.configurations;
      contact.violation({"contact-points", {}, {k, l, mc, pm}, "circle tangent to its image"});
      continue;
    }
    for (PointId x : plane.circle_points(mc)) {
      ++contact.configurations;
      try {
        PointId t = tangent_to_second(plane, x, mc, pm).point;
        if (phi(x) != t) contact.violation({"contact-points", {x, phi(x), t}, {k, l, mc, pm}, ""});
      } catch (const NotUnique& e) {
        contact.violation({"contact-points", {x, phi(x)}, {k, l, mc, pm}, e.what()});
      }
    }
  }

  report.add_property("involution", involution);
  report.add_property("automorphism", automorphism);
  report.add_property("tangency-map", tangencyMap);
  report.add_property("fixed-pencil", pencil);
  report.add_property("vertex-pencils", vertexPencils);
  report.add_property("contact-points", contact);
  report.finish_verdict();
  return report;
}

const char* to_string(SymmetryClassification::Kind kind) {
  switch (kind) {
    case SymmetryClassification::Kind::LaguerreSymmetry:
      return "LaguerreSymmetry";
    case SymmetryClassification::Kind::FixedPointFree:
      return "FixedPointFree";
    case SymmetryClassification::Kind::Other:
      return "Other";
  }
  return "?";
}

std::vector<CircleId> fixed_circles(const LaguerrePlane& plane, const Automorphism& phi) {
  std::vector<CircleId> out;
  for (std::uint32_t c = 0; c < plane.circle_count(); ++c)
    if (phi.image_circle(plane, CircleId{c}) == CircleId{c}) out.push_back(CircleId{c});
  return out;
}

SymmetryClassification classify_symmetry(const LaguerrePlane& plane, const Automorphism& phi, CircleId k,
                                         CircleId l) {
  require_pair(plane, k, l);
  SymmetryClassification out;
  for (std::uint32_t i = 0; i < plane.point_count(); ++i) {
    PointId x{i};
    if (phi(x) == x)
      ++out.fixedPoints;
    else if (plane.parallel(x, phi(x)))
      ++out.movedWithinGenerator;
  }
  for (std::uint32_t g = 0; g < plane.generator_count(); ++g) {
    auto pts = plane.generator_points(GeneratorId{g});
    if (std::all_of(pts.begin(), pts.end(), [&](PointId x) { return phi(x) == x; }))
      out.generators.push_back(GeneratorId{g});
  }
  for (std::uint32_t c = 0; c < plane.circle_count() && !out.fixedCircle; ++c)
    if (phi.image_circle(plane, CircleId{c}) == CircleId{c}) out.fixedCircle = CircleId{c};

  auto common = plane.intersection(k, l);
  if (common.size() == 2) {
    std::vector<GeneratorId> expected{plane.generator_of(common[0]), plane.generator_of(common[1])};
    std::sort(expected.begin(), expected.end());
    if (out.generators == expected && out.fixedCircle && is_automorphism(plane, phi)) {
      out.kind = SymmetryClassification::Kind::LaguerreSymmetry;
    } else {
      out.details = std::to_string(out.generators.size()) + " pointwise fixed generators, " +
                    (out.fixedCircle ? "a fixed circle" : "no fixed circle");
    }
  } else if (out.fixedPoints == 0) {
    out.kind = SymmetryClassification::Kind::FixedPointFree;
  } else {
    out.details = std::to_string(out.fixedPoints) + " fixed points";
  }
  return out;
}

SymmetryClassification classify_symmetry(const LaguerrePlane& plane, CircleId k, CircleId l) {
  return classify_symmetry(plane, build_dts(plane, k, l), k, l);
}

DtsCatalog::DtsCatalog(const LaguerrePlane& plane, unsigned workers) {
  const std::uint32_t m = static_cast<std::uint32_t>(plane.circle_count());
  std::vector<std::vector<Entry>> byK(m);
  detail::run_units(m, workers, [&](std::size_t ki) {
    CircleId k{static_cast<std::uint32_t>(ki)};
    for (std::uint32_t li = k.value + 1; li < m; ++li) {
      CircleId l{li};
      if (plane.intersection_size(k, l) == 1) continue;
      Entry e{k, l, build_dts(plane, k, l), std::vector<bool>(plane.generator_count()), std::vector<bool>(m)};
      for (std::uint32_t g = 0; g < plane.generator_count(); ++g) {
        auto pts = plane.generator_points(GeneratorId{g});
        e.fixedGenerator[g] = std::all_of(pts.begin(), pts.end(), [&](PointId x) { return e.phi(x) == x; });
      }
      for (std::uint32_t c = 0; c < m; ++c) e.fixedCircle[c] = e.phi.image_circle(plane, CircleId{c}) == CircleId{c};
      byK[ki].push_back(std::move(e));
    }
  });
  for (auto& list : byK)
    for (Entry& e : list) entries_.push_back(std::move(e));
}

CheckReport symmetry_uniqueness(const LaguerrePlane& plane, const DtsCatalog& catalog, GeneratorId p,
                                GeneratorId q, CircleId m) {
  CheckReport report;
  report.check = "dts-uniqueness";
  report.q = plane.order();
  report.model = plane.model().name();
  Tally t;
  const DtsCatalog::Entry* first = nullptr;
  for (const auto& e : catalog.entries()) {
    if (!e.fixedGenerator[p.value] || !e.fixedGenerator[q.value] || !e.fixedCircle[m.value]) continue;
    ++t.configurations;
    if (!first) {
      first = &e;
      continue;
    }
    if (e.phi == first->phi) continue;
    PointId x{};
    for (std::uint32_t i = 0; i < plane.point_count(); ++i)
      if (e.phi(PointId{i}) != first->phi(PointId{i})) {
        x = PointId{i};
        break;
      }
    t.violation({"dts-uniqueness",
                 {plane.generator_points(p)[0], plane.generator_points(q)[0], x},
                 {m, first->k, first->l, e.k, e.l},
                 ""});
  }
  report.add_property("coincide", t);
  if (!first) report.measure("no-qualifying-pair", 1);
  report.finish_verdict();
  return report;
}

CheckReport check_dts_uniqueness(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  if (plane.order() % 2 == 0) return not_applicable(plane, "dts-uniqueness", mode);
  const std::size_t G = plane.generator_count(), m = plane.circle_count();
  std::vector<std::pair<GeneratorId, GeneratorId>> gens;
  for (std::uint32_t a = 0; a < G; ++a)
    for (std::uint32_t b = a + 1; b < G; ++b) gens.emplace_back(GeneratorId{a}, GeneratorId{b});
  const double bound = static_cast<double>(gens.size()) * static_cast<double>(m);
  if (!mode.sampled() && bound > detail::kExhaustiveLimit)
    throw ExhaustiveTooLarge("dts-uniqueness: a-priori configuration count exceeds the exhaustive limit");
  const DtsCatalog catalog(plane, workers);
  auto body = [&](Chooser& ch, CheckReport& part) {
    ch.outer(gens.size(), [&](std::size_t gi) {
      ch.each(m, [&](std::size_t mi) {
        CheckReport one = symmetry_uniqueness(plane, catalog, gens[gi].first, gens[gi].second,
                                              CircleId{static_cast<std::uint32_t>(mi)});
        part.merge(one);
        part.measure("triples", 1);
      });
    });
  };
  return drive_reports(plane, "dts-uniqueness", mode, workers, gens.size(), bound, body);
}

namespace {

// Non-tangent partners of every circle, in id order.
std::vector<std::vector<CircleId>> non_tangent_partners(const LaguerrePlane& plane) {
  const std::uint32_t m = static_cast<std::uint32_t>(plane.circle_count());
  std::vector<std::vector<CircleId>> out(m);
  for (std::uint32_t k = 0; k < m; ++k)
    for (std::uint32_t l = 0; l < m; ++l)
      if (l != k && plane.intersection_size(CircleId{k}, CircleId{l}) != 1) out[k].push_back(CircleId{l});
  return out;
}

void sweep_pair(const LaguerrePlane& plane, CircleId k, CircleId l, CheckReport& part) {
  Tally built, unordered, classification;
  ++built.configurations;
  std::optional<Automorphism> phi;
  try {
    phi = build_dts(plane, k, l);
  } catch (const Error& e) {
    built.violation({"well-defined", {}, {k, l}, e.what()});
  }
  part.add_property("well-defined", built);
  if (!phi) return;

  ++unordered.configurations;
  try {
    Automorphism psi = build_dts(plane, l, k);
    if (psi != *phi) {
      PointId x{};
      for (std::uint32_t i = 0; i < plane.point_count(); ++i)
        if ((*phi)(PointId{i}) != psi(PointId{i})) {
          x = PointId{i};
          break;
        }
      unordered.violation({"unordered", {x, (*phi)(x), psi(x)}, {k, l}, ""});
    }
  } catch (const Error& e) {
    unordered.violation({"unordered", {}, {k, l}, e.what()});
  }
  part.add_property("unordered", unordered);

  part.merge(verify_dts(plane, *phi, k, l));

  SymmetryClassification c = classify_symmetry(plane, *phi, k, l);
  if (plane.intersection_size(k, l) == 2) {
    ++classification.configurations;
    if (c.kind != SymmetryClassification::Kind::LaguerreSymmetry)
      classification.violation({"classification", {}, {k, l}, c.details});
    part.measure("secant-pairs", 1);
  } else {
    part.measure("disjoint-pairs", 1);
    part.measure("disjoint-fixed-point-free", c.kind == SymmetryClassification::Kind::FixedPointFree ? 1 : 0);
    part.measure("disjoint-moving-within-generator", c.movedWithinGenerator > 0 ? 1 : 0);
  }
  part.add_property("classification", classification);
}

}  // namespace

CheckReport check_dts(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  if (plane.order() % 2 == 0) return not_applicable(plane, "dts", mode);
  const auto partners = non_tangent_partners(plane);
  const std::size_t m = plane.circle_count();
  const double bound = static_cast<double>(m) * static_cast<double>(m - 1) / 2;
  auto body = [&](Chooser& ch, CheckReport& part) {
    ch.outer(m, [&](std::size_t ki) {
      CircleId k{static_cast<std::uint32_t>(ki)};
      ch.each(partners[ki].size(), [&](std::size_t li) {
        CircleId l = partners[ki][li];
        if (ch.is_exhaustive() && l < k) return;
        sweep_pair(plane, k, l, part);
      });
    });
  };
  CheckReport report = drive_reports(plane, "dts", mode, workers, m, bound, body);
  // Each pair contributes to several properties; count pairs instead.
  report.configurations = report.properties.empty() ? 0 : report.properties.front().tested;
  report.finish_verdict();
  return report;
}

namespace {

struct PiSymmetryOutcome {
  bool tangentPair = false;
  bool holds = true;
  std::string detail;
};

PiSymmetryOutcome pi_symmetry_outcome(const LaguerrePlane& plane, const PiConfiguration& cfg,
                                      const Automorphism* cached) {
  PiSymmetryOutcome out;
  CircleId k = cfg.abc, l = *cfg.pqx;
  if (plane.tangent(k, l)) {
    out.tangentPair = true;
    return out;
  }
  std::optional<Automorphism> built;
  if (!cached) {
    built = build_dts(plane, k, l);
    cached = &*built;
  }
  const Automorphism& phi = *cached;
  if (tangent_to_second(plane, cfg.a, k, l).point != cfg.x) {
    out.holds = false;
    out.detail = "aKL differs from x";
  } else if (phi(cfg.a) != cfg.x) {
    out.holds = false;
    out.detail = "a is not mapped to x";
  } else if (phi.image_circle(plane, cfg.tangentAtA) != cfg.tangentAtA) {
    out.holds = false;
    out.detail = "the circle tangent at a through x is not fixed";
  }
  return out;
}

}  // namespace

CheckReport verify_pi_symmetry(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  if (plane.order() % 2 == 0) return not_applicable(plane, "pi-symmetry", mode);
  std::mutex lock;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Automorphism>> cache;
  auto symmetry = [&](CircleId k, CircleId l) {
    {
      std::lock_guard guard(lock);
      auto it = cache.find({k.value, l.value});
      if (it != cache.end()) return it->second;
    }
    auto phi = std::make_shared<const Automorphism>(build_dts(plane, k, l));
    std::lock_guard guard(lock);
    return cache.emplace(std::pair{k.value, l.value}, phi).first->second;
  };
  auto body = [&](Chooser& ch, Tally& t) {
    detail::each_pi_quadruple(plane, ch, t, [&](const PiConfiguration& cfg) {
      if (plane.tangent(cfg.abc, *cfg.pqx)) {
        ++t.skipped;
        return;
      }
      ++t.configurations;
      auto phi = symmetry(cfg.abc, *cfg.pqx);
      PiSymmetryOutcome out = pi_symmetry_outcome(plane, cfg, phi.get());
      if (!out.holds)
        t.violation({"pi-symmetry", {cfg.a, cfg.b, cfg.c, cfg.x, cfg.p, cfg.q}, {cfg.abc, cfg.tangentAtA, *cfg.pqx},
                     out.detail});
    });
  };
  const double n = static_cast<double>(plane.point_count()), q = static_cast<double>(plane.order());
  return detail::drive(plane, "pi-symmetry", mode, workers, plane.point_count(),
                       n * (n - q) * (n - 2 * q) * (n - 3 * q), body);
}

bool replay_pi_symmetry(const LaguerrePlane& plane, const Witness& w) {
  if (plane.order() % 2 == 0 || w.points.size() < 4) return false;
  auto cfg = pi_configuration(plane, w.points[0], w.points[1], w.points[2], w.points[3]);
  if (!cfg || !cfg->pqx) return false;
  PiSymmetryOutcome out = pi_symmetry_outcome(plane, *cfg, nullptr);
  return !out.tangentPair && !out.holds;
}

bool replay_dts_witness(const LaguerrePlane& plane, std::string_view id, const Witness& w) {
  if (id == "dts-uniqueness") {
    if (w.points.size() != 3 || w.circles.size() != 5) return false;
    GeneratorId p = plane.generator_of(w.points[0]), q = plane.generator_of(w.points[1]);
    CircleId m = w.circles[0];
    auto qualifies = [&](const Automorphism& phi) {
      for (GeneratorId g : {p, q})
        for (PointId x : plane.generator_points(g))
          if (phi(x) != x) return false;
      return phi.image_circle(plane, m) == m;
    };
    try {
      Automorphism a = build_dts(plane, w.circles[1], w.circles[2]);
      Automorphism b = build_dts(plane, w.circles[3], w.circles[4]);
      return p != q && qualifies(a) && qualifies(b) && a(w.points[2]) != b(w.points[2]);
    } catch (const Error&) {
      return false;
    }
  }
  if (id != "dts" || w.circles.size() < 2) return false;
  CircleId k = w.circles[0], l = w.circles[1];
  if (k == l || plane.tangent(k, l)) return false;
  if (w.label == "well-defined") {
    try {
      build_dts(plane, k, l);
      return false;
    } catch (const Error&) {
      return true;
    }
  }
  std::optional<Automorphism> built;
  try {
    built = build_dts(plane, k, l);
  } catch (const Error&) {
    return false;
  }
  const Automorphism& phi = *built;
  const auto& pts = w.points;
  const auto& cs = w.circles;
  try {
    if (w.label == "unordered") return build_dts(plane, l, k) != phi;
    if (w.label == "involution") return !pts.empty() && phi(phi(pts[0])) != pts[0];
    if (w.label == "automorphism") {
      if (cs.size() >= 3) return !phi.image_circle(plane, cs[2]);
      return !is_automorphism(plane, phi);
    }
    if (w.label == "tangency-map")
      return !pts.empty() && plane.contains(k, pts[0]) && phi(pts[0]) != tangent_to_second(plane, pts[0], k, l).point;
    if (w.label == "fixed-pencil") {
      if (cs.size() < 3) return false;
      CircleId c = cs[2];
      if (c == k || c == l || plane.intersection_size(c, k) != 1 || plane.intersection_size(c, l) != 1) return false;
      return phi.image_circle(plane, c) != c ||
             phi(plane.intersection(c, k).front()) != plane.intersection(c, l).front();
    }
    if (w.label == "vertex-pencils") {
      if (pts.empty() || cs.size() < 3) return false;
      PointId x = pts[0];
      if (phi(x) == x || plane.parallel(x, phi(x))) return false;
      if (!plane.contains(cs[2], x) || !plane.contains(cs[2], phi(x))) return false;
      return phi.image_circle(plane, cs[2]) != cs[2];
    }
    if (w.label == "contact-points") {
      if (cs.size() < 3) return false;
      auto pm = phi.image_circle(plane, cs[2]);
      if (!pm || *pm == cs[2]) return false;
      if (plane.intersection_size(cs[2], *pm) == 1) return pts.empty();
      if (pts.empty() || !plane.contains(cs[2], pts[0])) return false;
      return phi(pts[0]) != tangent_to_second(plane, pts[0], cs[2], *pm).point;
    }
    if (w.label == "classification")
      return plane.intersection_size(k, l) == 2 &&
             classify_symmetry(plane, phi, k, l).kind != SymmetryClassification::Kind::LaguerreSymmetry;
  } catch (const NotUnique&) {
    return true;
  } catch (const Error&) {
    return false;
  }
  return false;
}

CircleId parse_circle(const LaguerrePlane& plane, std::string_view text) {
  auto number = [&](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw FormatError("bad number '" + std::string(s) + "' in circle '" + std::string(text) + "'");
    return v;
  };
  if (!text.empty() && text.front() == '#') {
    unsigned id = number(text.substr(1));
    if (id >= plane.circle_count()) throw FormatError("circle id out of range: " + std::string(text));
    return CircleId{id};
  }
  if (!plane.model().has_coordinates())
    throw FormatError("plane has no coordinates; give circles as #id, not '" + std::string(text) + "'");
  std::array<unsigned, 3> v{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t end = i < 2 ? text.find(',', start) : text.size();
    if (end == std::string_view::npos) throw FormatError("circle '" + std::string(text) + "' needs a,b,c");
    v[i] = number(text.substr(start, end - start));
    if (v[i] >= plane.order()) throw FormatError("coefficient out of range in '" + std::string(text) + "'");
    start = end + 1;
  }
  const FiniteField& f = *plane.model().field;
  return plane.circle_with({f.element(v[0]), f.element(v[1]), f.element(v[2])});
}

std::string format_circle(const LaguerrePlane& plane, CircleId k) {
  if (auto coef = plane.coefficients(k))
    return std::to_string(coef->a.index) + "," + std::to_string(coef->b.index) + "," + std::to_string(coef->c.index);
  return "#" + std::to_string(k.value);
}

void write_automorphism(std::ostream& out, const LaguerrePlane& plane, const Automorphism& phi) {
  out << "dts q=" << plane.order();
  if (phi.pair())
    out << " K=" << format_circle(plane, (*phi.pair())[0]) << " L=" << format_circle(plane, (*phi.pair())[1]);
  out << '\n';
  bool first = true;
  for (PointId y : phi.image()) {
    out << (first ? "" : " ") << y.value;
    first = false;
  }
  out << '\n';
}

Automorphism read_automorphism(std::istream& in, const LaguerrePlane& plane) {
  std::string header, body;
  if (!std::getline(in, header) || !std::getline(in, body)) throw FormatError("automorphism: expected two lines");
  std::istringstream hs(header);
  std::string word;
  if (!(hs >> word) || word != "dts") throw FormatError("automorphism: header must start with 'dts'");
  std::optional<CircleId> k, l;
  bool sawQ = false;
  while (hs >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw FormatError("automorphism: bad header field '" + word + "'");
    std::string key = word.substr(0, eq), value = word.substr(eq + 1);
    if (key == "q") {
      if (value != std::to_string(plane.order()))
        throw FormatError("automorphism: order " + value + " does not match the plane");
      sawQ = true;
    } else if (key == "K") {
      k = parse_circle(plane, value);
    } else if (key == "L") {
      l = parse_circle(plane, value);
    } else {
      throw FormatError("automorphism: unknown header field '" + key + "'");
    }
  }
  if (!sawQ) throw FormatError("automorphism: header lacks q=");
  if (k.has_value() != l.has_value()) throw FormatError("automorphism: K and L must be given together");

  std::istringstream bs(body);
  std::vector<PointId> image;
  std::vector<bool> seen(plane.point_count(), false);
  long long v = 0;
  while (bs >> v) {
    if (v < 0 || static_cast<std::size_t>(v) >= plane.point_count() || seen[v])
      throw FormatError("automorphism: image list is not a permutation");
    seen[v] = true;
    image.push_back(PointId{static_cast<std::uint32_t>(v)});
  }
  if (!bs.eof()) throw FormatError("automorphism: non-numeric entry in the image list");
  if (image.size() != plane.point_count())
    throw FormatError("automorphism: expected " + std::to_string(plane.point_count()) + " images, got " +
                      std::to_string(image.size()));
  std::optional<std::array<CircleId, 2>> pair;
  if (k) pair = std::array<CircleId, 2>{*k, *l};
  return Automorphism(std::move(image), header, pair);
}

}  // namespace laguerre
