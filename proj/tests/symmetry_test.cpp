#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "laguerre/checkers.hpp"
#include "laguerre/errors.hpp"
#include "laguerre/models.hpp"
#include "laguerre/symmetry.hpp"
#include "support.hpp"

using namespace laguerre;
using laguerre::test::at_inf;
using laguerre::test::circ;
using laguerre::test::on_parabola;
using laguerre::test::pt;

namespace {

const LaguerrePlane& plane5() {
  static const LaguerrePlane p = miquelian_plane(5);
  return p;
}

// Number of common points of two parabolas over Z/q, by direct evaluation.
std::size_t meet(std::uint32_t q, std::array<std::uint32_t, 3> k, std::array<std::uint32_t, 3> l) {
  std::size_t n = 0;
  for (std::uint32_t i = 0; i < q * q + q; ++i)
    if (on_parabola(q, k[0], k[1], k[2], {i}) && on_parabola(q, l[0], l[1], l[2], {i})) ++n;
  return n;
}

}  // namespace

TEST(Tangency, TangentToSecondExample) {
  TangentToSecond t = tangent_to_second(plane5(), pt(5, 0, 0), circ(5, 1, 0, 0), circ(5, 4, 0, 2));
  ASSERT_TRUE(t.circle);
  EXPECT_EQ(*t.circle, circ(5, 4, 0, 0));
  EXPECT_EQ(t.point, at_inf(5, 4));
}

TEST(Tangency, CommonPointMapsToItself) {
  TangentToSecond t = tangent_to_second(plane5(), pt(5, 1, 1), circ(5, 1, 0, 0), circ(5, 4, 0, 2));
  EXPECT_FALSE(t.circle);
  EXPECT_EQ(t.point, pt(5, 1, 1));
}

TEST(Tangency, Preconditions) {
  EXPECT_THROW(tangent_to_second(plane5(), pt(5, 0, 1), circ(5, 1, 0, 0), circ(5, 4, 0, 2)), PointNotOnCircle);
  EXPECT_THROW(tangent_to_second(plane5(), pt(5, 0, 0), circ(5, 1, 0, 0), circ(5, 1, 0, 0)), SameCircle);
  EXPECT_THROW(tangency_map(plane5(), circ(5, 1, 0, 0), circ(5, 1, 0, 1)), TangentPair);
  EXPECT_THROW(tangency_map(plane5(), circ(5, 1, 0, 0), circ(5, 1, 0, 0)), SameCircle);
}

TEST(Tangency, EvenOrderIsNotUnique) {
  LaguerrePlane p = miquelian_plane(4);
  try {
    tangent_to_second(p, pt(4, 1, 0), circ(4, 0, 0, 0), circ(4, 0, 1, 0));
    FAIL() << "expected NotUnique";
  } catch (const NotUnique& e) {
    EXPECT_EQ(e.count(), 0u);
  }
}

TEST(Tangency, MapRoundTrip) {
  const LaguerrePlane& p = plane5();
  TangencyMap h = tangency_map(p, circ(5, 1, 0, 0), circ(5, 4, 0, 2));
  TangencyMap back = tangency_map(p, circ(5, 4, 0, 2), circ(5, 1, 0, 0));
  EXPECT_EQ(h(p, pt(5, 0, 0)), at_inf(5, 4));
  EXPECT_EQ(h(p, pt(5, 1, 1)), pt(5, 1, 1));
  for (PointId x : p.circle_points(circ(5, 1, 0, 0))) {
    EXPECT_TRUE(p.contains(circ(5, 4, 0, 2), h(p, x)));
    EXPECT_EQ(back(p, h(p, x)), x);
  }
}

TEST(Tangency, MapRoundTripEveryPairOrderThree) {
  LaguerrePlane p = miquelian_plane(3);
  for (std::uint32_t k = 0; k < p.circle_count(); ++k)
    for (std::uint32_t l = 0; l < p.circle_count(); ++l) {
      if (p.tangent({k}, {l})) continue;
      TangencyMap h = tangency_map(p, {k}, {l}), back = tangency_map(p, {l}, {k});
      for (PointId x : p.circle_points({k})) ASSERT_EQ(back(p, h(p, x)), x);
    }
}

TEST(DoubleTangencyPencil, SecantGolden) {
  const std::uint32_t q = 5;
  Pencil pen = double_tangency_pencil(plane5(), circ(q, 1, 0, 0), circ(q, 4, 0, 2));
  std::set<CircleId> got(pen.members.begin(), pen.members.end());
  EXPECT_EQ(got, (std::set<CircleId>{circ(q, 0, 1, 1), circ(q, 0, 4, 1), circ(q, 1, 0, 2), circ(q, 4, 0, 0)}));
  std::set<CircleId> oracle;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        if (meet(q, {a, b, c}, {1, 0, 0}) == 1 && meet(q, {a, b, c}, {4, 0, 2}) == 1) oracle.insert(circ(q, a, b, c));
  EXPECT_EQ(got, oracle);
}

TEST(DoubleTangencyPencil, DisjointGolden) {
  const std::uint32_t q = 5;
  Pencil pen = double_tangency_pencil(plane5(), circ(q, 1, 0, 0), circ(q, 4, 0, 1));
  std::set<CircleId> got(pen.members.begin(), pen.members.end());
  EXPECT_EQ(got, (std::set<CircleId>{circ(q, 1, 0, 1), circ(q, 2, 1, 4), circ(q, 2, 4, 4), circ(q, 3, 1, 2),
                                     circ(q, 3, 4, 2), circ(q, 4, 0, 0)}));
}

TEST(DoubleTangencyPencil, TangentPairGivesTangentPencil) {
  const LaguerrePlane& p = plane5();
  CircleId k = circ(5, 1, 0, 0), l = circ(5, 1, 0, 1);
  Pencil pen = double_tangency_pencil(p, k, l);
  Pencil expected = p.tangent_pencil(at_inf(5, 1), k);
  EXPECT_EQ(std::set<CircleId>(pen.members.begin(), pen.members.end()),
            std::set<CircleId>(expected.members.begin(), expected.members.end()));
  EXPECT_THROW(double_tangency_pencil(p, k, k), SameCircle);
}

TEST(DoubleTangencyPencil, SizesByIntersection) {
  LaguerrePlane p = miquelian_plane(7);
  for (std::uint32_t l = 1; l < p.circle_count(); l += 5) {
    std::size_t meetCount = p.intersection_size({0}, {l});
    if (meetCount == 1) continue;
    std::size_t size = double_tangency_pencil(p, {0}, {l}).members.size();
    EXPECT_EQ(size, meetCount == 2 ? 6u : 8u) << l;
  }
}

TEST(Dts, SecantExample) {
  const LaguerrePlane& p = plane5();
  CircleId k = circ(5, 1, 0, 0), l = circ(5, 4, 0, 2);
  Automorphism phi = build_dts(p, k, l);
  EXPECT_TRUE(is_automorphism(p, phi));
  for (std::uint32_t y = 0; y < 5; ++y) {
    EXPECT_EQ(phi(pt(5, 1, y)), pt(5, 1, y));
    EXPECT_EQ(phi(pt(5, 4, y)), pt(5, 4, y));
  }
  TangencyMap h = tangency_map(p, k, l);
  for (PointId x : p.circle_points(k)) EXPECT_EQ(phi(x), h(p, x));
  for (std::uint32_t i = 0; i < p.point_count(); ++i) EXPECT_EQ(phi(phi(PointId{i})), PointId{i});
  EXPECT_EQ(phi.pair(), (std::array<CircleId, 2>{k, l}));
  EXPECT_EQ(phi.provenance(), "dts K=1,0,0 L=4,0,2");

  CheckReport r = verify_dts(p, phi, k, l);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  std::set<std::string> names;
  for (const PropertyTally& t : r.properties) names.insert(t.name);
  EXPECT_EQ(names, (std::set<std::string>{"involution", "automorphism", "tangency-map", "fixed-pencil",
                                          "vertex-pencils", "contact-points"}));
}

TEST(Dts, UnorderedPair) {
  const LaguerrePlane& p = plane5();
  EXPECT_EQ(build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 2)), build_dts(p, circ(5, 4, 0, 2), circ(5, 1, 0, 0)));
  EXPECT_EQ(build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 1)), build_dts(p, circ(5, 4, 0, 1), circ(5, 1, 0, 0)));
}

TEST(Dts, RejectsTangentPair) {
  EXPECT_THROW(build_dts(plane5(), circ(5, 1, 0, 0), circ(5, 1, 0, 1)), TangentPair);
}

TEST(Dts, VerifyCatchesWrongMap) {
  const LaguerrePlane& p = plane5();
  CircleId k = circ(5, 1, 0, 0), l = circ(5, 4, 0, 2);
  CheckReport r = verify_dts(p, identity_automorphism(p), k, l);
  EXPECT_EQ(r.verdict, Verdict::Fails);
  auto tally = std::find_if(r.properties.begin(), r.properties.end(),
                            [](const PropertyTally& t) { return t.name == "tangency-map"; });
  ASSERT_NE(tally, r.properties.end());
  EXPECT_GT(tally->violations, 0u);
}

TEST(Dts, Classification) {
  const LaguerrePlane& p = plane5();
  SymmetryClassification c = classify_symmetry(p, circ(5, 1, 0, 0), circ(5, 4, 0, 2));
  EXPECT_EQ(c.kind, SymmetryClassification::Kind::LaguerreSymmetry);
  ASSERT_EQ(c.generators.size(), 2u);
  EXPECT_EQ(c.generators[0], p.generator_of(pt(5, 1, 0)));
  EXPECT_EQ(c.generators[1], p.generator_of(pt(5, 4, 0)));
  EXPECT_EQ(c.fixedPoints, 10u);
  EXPECT_EQ(c.fixedCircle, circ(5, 0, 0, 1));

  SymmetryClassification d = classify_symmetry(p, circ(5, 1, 0, 0), circ(5, 4, 0, 1));
  EXPECT_EQ(d.kind, SymmetryClassification::Kind::FixedPointFree);
  EXPECT_EQ(d.fixedPoints, 0u);
  EXPECT_EQ(d.movedWithinGenerator, 0u);
  EXPECT_THROW(classify_symmetry(p, circ(5, 1, 0, 0), circ(5, 1, 0, 1)), TangentPair);
}

TEST(Dts, FixedCircles) {
  const LaguerrePlane& p = plane5();
  EXPECT_EQ(fixed_circles(p, identity_automorphism(p)).size(), p.circle_count());
  std::vector<CircleId> secant = fixed_circles(p, build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 2)));
  EXPECT_EQ(secant.size(), 25u);
  EXPECT_TRUE(std::binary_search(secant.begin(), secant.end(), circ(5, 0, 0, 1)));
  EXPECT_EQ(fixed_circles(p, build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 1))).size(), 25u);
}

TEST(Dts, TextRoundTrip) {
  const LaguerrePlane& p = plane5();
  Automorphism phi = build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 2));
  std::stringstream text;
  write_automorphism(text, p, phi);
  EXPECT_EQ(text.str().rfind("dts q=5 K=1,0,0 L=4,0,2\n", 0), 0u);
  Automorphism back = read_automorphism(text, p);
  EXPECT_EQ(back, phi);
  EXPECT_EQ(back.pair(), phi.pair());
  std::stringstream again;
  write_automorphism(again, p, back);
  std::stringstream first;
  write_automorphism(first, p, phi);
  EXPECT_EQ(again.str(), first.str());

  std::istringstream wrongOrder("dts q=3 K=1,0,0 L=4,0,2\n0 1 2\n");
  EXPECT_THROW(read_automorphism(wrongOrder, p), FormatError);
  std::string notPermutation = "dts q=5 K=1,0,0 L=4,0,2\n";
  for (int i = 0; i < 30; ++i) notPermutation += "0 ";
  std::istringstream bad(notPermutation);
  EXPECT_THROW(read_automorphism(bad, p), FormatError);
}

TEST(Dts, ParseCircle) {
  const LaguerrePlane& p = plane5();
  EXPECT_EQ(parse_circle(p, "4,0,2"), circ(5, 4, 0, 2));
  EXPECT_EQ(parse_circle(p, "#17"), CircleId{17});
  EXPECT_EQ(format_circle(p, circ(5, 3, 1, 4)), "3,1,4");
  EXPECT_THROW(parse_circle(p, "5,0,0"), FormatError);
  EXPECT_THROW(parse_circle(p, "#125"), FormatError);
  EXPECT_THROW(parse_circle(p, "1,2"), FormatError);
}

TEST(Dts, EveryPairOrderThree) {
  CheckReport r = check_dts(miquelian_plane(3), CheckMode::exhaustive());
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.configurations, 243u);
  auto get = [&](const std::string& name) {
    for (const Measurement& m : r.measurements)
      if (m.name == name) return m.value;
    return std::uint64_t{~0ull};
  };
  EXPECT_EQ(get("secant-pairs"), 162u);
  EXPECT_EQ(get("disjoint-pairs"), 81u);
  EXPECT_EQ(get("disjoint-fixed-point-free"), 81u);
  EXPECT_EQ(get("disjoint-moving-within-generator"), 0u);
}

TEST(Dts, EvenOrderNotApplicable) {
  EXPECT_EQ(check_dts(miquelian_plane(4), CheckMode::exhaustive()).verdict, Verdict::NotApplicable);
  EXPECT_EQ(check_dts_uniqueness(miquelian_plane(4), CheckMode::exhaustive()).verdict, Verdict::NotApplicable);
  EXPECT_EQ(verify_pi_symmetry(miquelian_plane(4), CheckMode::exhaustive()).verdict, Verdict::NotApplicable);
}

TEST(Dts, UniquenessOrderThree) {
  CheckReport r = check_dts_uniqueness(miquelian_plane(3), CheckMode::exhaustive());
  EXPECT_EQ(r.verdict, Verdict::Holds);
}

TEST(Dts, UniquenessIncludesOwnPair) {
  const LaguerrePlane& p = plane5();
  DtsCatalog catalog(p);
  CircleId k = circ(5, 1, 0, 0), l = circ(5, 4, 0, 2);
  CheckReport r = symmetry_uniqueness(p, catalog, p.generator_of(pt(5, 1, 0)), p.generator_of(pt(5, 4, 0)),
                                      circ(5, 0, 0, 1));
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_GE(r.configurations, 1u);
  bool listed = false;
  for (const auto& e : catalog.entries()) listed |= e.k == k && e.l == l;
  EXPECT_TRUE(listed);
}

TEST(Dts, PiSymmetryOrderThree) {
  CheckReport r = verify_pi_symmetry(miquelian_plane(3), CheckMode::exhaustive());
  EXPECT_EQ(r.verdict, Verdict::Holds);
}
