#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "laguerre/axioms.hpp"
#include "laguerre/errors.hpp"
#include "laguerre/models.hpp"
#include "support.hpp"

using namespace laguerre;
using laguerre::test::at_inf;
using laguerre::test::circ;
using laguerre::test::on_parabola;
using laguerre::test::pt;

TEST(Models, Counts) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    LaguerrePlane p = miquelian_plane(q);
    EXPECT_EQ(p.point_count(), q * q + q);
    EXPECT_EQ(p.circle_count(), q * q * q);
    EXPECT_EQ(p.generator_count(), q + 1);
    for (std::uint32_t k = 0; k < p.circle_count(); ++k) ASSERT_EQ(p.circle_points({k}).size(), q + 1);
    for (std::uint32_t g = 0; g < p.generator_count(); ++g) ASSERT_EQ(p.generator_points({g}).size(), q);
  }
}

TEST(Models, OrderTwoHasEightTriangles) {
  LaguerrePlane p = miquelian_plane(2);
  EXPECT_EQ(p.point_count(), 6u);
  EXPECT_EQ(p.circle_count(), 8u);
  EXPECT_EQ(p.circle_points({0}).size(), 3u);
}

TEST(Models, IncidenceMatchesParabolas) {
  const std::uint32_t q = 5;
  LaguerrePlane p = miquelian_plane(q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t i = 0; i < p.point_count(); ++i)
          ASSERT_EQ(p.contains(circ(q, a, b, c), {i}), on_parabola(q, a, b, c, {i}));
  EXPECT_EQ(p.point_at(p.model().field->element(2), p.model().field->element(3)), pt(q, 2, 3));
  EXPECT_EQ(p.point_at(std::nullopt, p.model().field->element(4)), at_inf(q, 4));
}

TEST(Models, ValidateExhaustively) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    CheckReport r = validate_laguerre_axioms(miquelian_plane(q).structure());
    EXPECT_EQ(r.verdict, Verdict::Holds) << q;
    EXPECT_EQ(r.violationCount, 0u);
  }
}

TEST(Models, TranslationOvalOfOrderEight) {
  FiniteField f = make_field_of_order(8);
  LaguerrePlane p = oval_plane(8, power_table(f, 4));
  EXPECT_EQ(validate_laguerre_axioms(p.structure()).verdict, Verdict::Holds);
  EXPECT_EQ(p.model().name().rfind("oval:", 0), 0u);
}

TEST(Models, SquareOvalIsMiquelian) {
  for (unsigned q : {3u, 4u, 5u}) {
    FiniteField f = make_field_of_order(q);
    LaguerrePlane a = oval_plane(q, power_table(f, 2)), b = miquelian_plane(q);
    EXPECT_EQ(a.structure().circles, b.structure().circles);
  }
}

TEST(Models, CubeOverGF5IsRejected) {
  FiniteField f = make_field_of_order(5);
  EXPECT_THROW(oval_plane(5, power_table(f, 3)), NotALaguerrePlane);
  CheckReport r = validate_laguerre_axioms(oval_structure(f, power_table(f, 3)));
  EXPECT_EQ(r.verdict, Verdict::Fails);
}

TEST(Models, DeletedCircleBreaksJoinability) {
  IncidenceStructure s = miquelian_plane(5).structure();
  s.circles.erase(s.circles.begin() + 31);
  s.coefficients.clear();
  CheckReport r = validate_laguerre_axioms(s);
  EXPECT_EQ(r.verdict, Verdict::Fails);
  bool sawAxiom1 = false;
  for (const Witness& w : r.violations)
    if (w.label == "joining") {
      sawAxiom1 = true;
      EXPECT_EQ(w.points.size(), 3u);
      EXPECT_TRUE(w.circles.empty());
    }
  EXPECT_TRUE(sawAxiom1);
  EXPECT_THROW(LaguerrePlane::from_structure(s), NotALaguerrePlane);
}

TEST(Models, NameRoundTrip) {
  FiniteField f = make_field_of_order(8);
  LaguerrePlane p = oval_plane(8, power_table(f, 4));
  LaguerrePlane again = build_model(model_from_name(8, p.model().name()));
  EXPECT_EQ(again.structure().circles, p.structure().circles);
  EXPECT_EQ(build_model(model_from_name(3, "miquelian")).model().name(), "miquelian");
  EXPECT_THROW(model_from_name(5, "hyperbolic"), FormatError);
  EXPECT_THROW(model_from_name(5, "oval:1,2"), FormatError);
}

TEST(Models, OvalTableText) {
  FiniteField f = make_field_of_order(5);
  std::istringstream good("0 0\n1 1\n2 4\n3 4\n4 1\n");
  EXPECT_EQ(read_oval_table(good, f), power_table(f, 2));
  std::istringstream shuffled("1 1\n0 0\n2 4\n3 4\n4 1\n");
  EXPECT_THROW(read_oval_table(shuffled, f), FormatError);
  std::istringstream shortTable("0 0\n1 1\n");
  EXPECT_THROW(read_oval_table(shortTable, f), FormatError);
  std::istringstream junk("0 zero\n");
  EXPECT_THROW(read_oval_table(junk, f), FormatError);
}

TEST(Models, PlaneTextRoundTrip) {
  LaguerrePlane p = miquelian_plane(4);
  std::stringstream text;
  write_plane(text, p);
  LaguerrePlane back = read_plane(text);
  EXPECT_EQ(back.point_count(), p.point_count());
  EXPECT_EQ(back.structure().generators, p.structure().generators);
  EXPECT_EQ(back.structure().circles, p.structure().circles);
  EXPECT_EQ(back.coefficients({7}), p.coefficients({7}));
  std::stringstream again;
  write_plane(again, back);
  std::stringstream original;
  write_plane(original, p);
  EXPECT_EQ(again.str(), original.str());

  std::istringstream broken("laguerre q=2 points=6 circles=8\n0 1\n");
  EXPECT_THROW(read_plane(broken), FormatError);
}

TEST(Plane, CircleThroughThreePoints) {
  LaguerrePlane p5 = miquelian_plane(5), p3 = miquelian_plane(3);
  EXPECT_EQ(p5.circle_through(pt(5, 0, 0), pt(5, 1, 1), pt(5, 2, 4)), circ(5, 1, 0, 0));
  EXPECT_EQ(p3.circle_through(pt(3, 0, 0), pt(3, 1, 0), pt(3, 2, 0)), circ(3, 0, 0, 0));
  EXPECT_THROW(p5.circle_through(pt(5, 0, 0), pt(5, 0, 1), pt(5, 1, 1)), ParallelPoints);
  EXPECT_FALSE(p5.find_circle(pt(5, 0, 0), pt(5, 0, 1), pt(5, 1, 1)));
}

TEST(Plane, CircleThroughAgreesWithIncidence) {
  LaguerrePlane p = miquelian_plane(4);
  std::size_t triples = 0;
  for (std::uint32_t a = 0; a < p.point_count(); ++a)
    for (std::uint32_t b = a + 1; b < p.point_count(); ++b)
      for (std::uint32_t c = b + 1; c < p.point_count(); ++c) {
        PointId x{a}, y{b}, z{c};
        if (p.parallel(x, y) || p.parallel(x, z) || p.parallel(y, z)) continue;
        CircleId k = p.circle_through(x, y, z);
        ASSERT_TRUE(p.contains(k, x) && p.contains(k, y) && p.contains(k, z));
        ++triples;
      }
  EXPECT_EQ(triples, 20u * 16 * 12 / 6);
}

TEST(Plane, ParallelProjection) {
  LaguerrePlane p = miquelian_plane(5);
  EXPECT_EQ(p.parallel_point(pt(5, 2, 3), circ(5, 1, 0, 0)), pt(5, 2, 4));
  EXPECT_EQ(p.parallel_point(pt(5, 2, 4), circ(5, 1, 0, 0)), pt(5, 2, 4));
  EXPECT_EQ(p.parallel_point(at_inf(5, 0), circ(5, 1, 0, 0)), at_inf(5, 1));
}

TEST(Plane, TangentCircle) {
  LaguerrePlane p5 = miquelian_plane(5), p3 = miquelian_plane(3);
  EXPECT_EQ(p5.tangent_circle(pt(5, 0, 0), circ(5, 1, 0, 0), pt(5, 1, 2)), circ(5, 2, 0, 0));
  EXPECT_THROW(p5.tangent_circle(pt(5, 0, 0), circ(5, 1, 0, 0), pt(5, 1, 1)), PointOnCircle);
  EXPECT_THROW(p3.tangent_circle(pt(3, 0, 0), circ(3, 1, 0, 0), pt(3, 0, 1)), ParallelPoints);
  EXPECT_THROW(p5.tangent_circle(pt(5, 0, 1), circ(5, 1, 0, 0), pt(5, 1, 2)), PointNotOnCircle);
}

TEST(Plane, TangencyExamples) {
  LaguerrePlane p = miquelian_plane(5);
  Tangency secant = p.tangency(circ(5, 1, 0, 0), circ(5, 4, 0, 2));
  EXPECT_EQ(secant.kind, Tangency::Kind::Secant);
  EXPECT_EQ(secant.points[0], pt(5, 1, 1));
  EXPECT_EQ(secant.points[1], pt(5, 4, 1));
  Tangency touch = p.tangency(circ(5, 1, 0, 0), circ(5, 1, 0, 1));
  EXPECT_EQ(touch.kind, Tangency::Kind::Tangent);
  EXPECT_EQ(touch.points[0], at_inf(5, 1));
  EXPECT_EQ(p.tangency(circ(5, 1, 0, 0), circ(5, 4, 0, 1)).kind, Tangency::Kind::Disjoint);
  EXPECT_EQ(p.tangency(circ(5, 1, 0, 0), circ(5, 1, 0, 0)).kind, Tangency::Kind::Equal);
}

TEST(Plane, DiscriminantAgreesWithScan) {
  for (unsigned q : {3u, 5u, 7u}) {
    LaguerrePlane p = miquelian_plane(q);
    for (std::uint32_t k = 0; k < p.circle_count(); ++k)
      for (std::uint32_t l = 0; l < p.circle_count(); ++l)
        ASSERT_EQ(discriminant_tangency(p, {k}, {l}), p.tangency({k}, {l})) << q << ": " << k << " " << l;
  }
}

TEST(Plane, TangentPencil) {
  const std::uint32_t q = 5;
  LaguerrePlane p = miquelian_plane(q);
  Pencil pen = p.tangent_pencil(pt(q, 0, 0), circ(q, 1, 0, 0));
  std::set<CircleId> expected;
  for (std::uint32_t a = 0; a < q; ++a) expected.insert(circ(q, a, 0, 0));
  EXPECT_EQ(std::set<CircleId>(pen.members.begin(), pen.members.end()), expected);
  EXPECT_TRUE(pen.contains(circ(q, 1, 0, 0)));
}

TEST(Plane, PencilSizes) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    LaguerrePlane p = miquelian_plane(q);
    for (std::uint32_t k = 0; k < p.circle_count(); k += 3)
      for (PointId x : p.circle_points({k})) {
        Pencil pen = p.tangent_pencil(x, {k});
        ASSERT_EQ(pen.members.size(), q);
        for (CircleId m : pen.members) ASSERT_TRUE(p.tangent(m, {k}) && p.contains(m, x));
      }
    for (std::uint32_t a = 0; a < p.point_count(); ++a)
      for (std::uint32_t b = 0; b < p.point_count(); ++b) {
        if (p.parallel({a}, {b})) continue;
        ASSERT_EQ(p.vertex_pencil({a}, {b}).members.size(), q);
      }
  }
  LaguerrePlane p5 = miquelian_plane(5);
  EXPECT_EQ(p5.vertex_pencil(pt(5, 0, 0), pt(5, 1, 1)).members.size(), 5u);
  EXPECT_THROW(p5.vertex_pencil(pt(5, 0, 0), pt(5, 0, 1)), ParallelPoints);
}

TEST(Plane, Concyclic) {
  LaguerrePlane p = miquelian_plane(5);
  EXPECT_TRUE(p.concyclic(pt(5, 0, 0), pt(5, 1, 1), pt(5, 2, 4), pt(5, 3, 4)));
  EXPECT_TRUE(p.concyclic(pt(5, 0, 0), pt(5, 0, 1), pt(5, 1, 1), pt(5, 1, 2)));
  EXPECT_FALSE(p.concyclic(pt(5, 0, 0), pt(5, 1, 1), pt(5, 2, 4), pt(5, 3, 0)));
  // The generator-pair case depends on the order of the arguments.
  EXPECT_FALSE(p.concyclic(pt(5, 0, 0), pt(5, 1, 1), pt(5, 0, 1), pt(5, 1, 2)));
  EXPECT_TRUE(p.concyclic_any_pairing(pt(5, 0, 0), pt(5, 1, 1), pt(5, 0, 1), pt(5, 1, 2)));
  // Both pairs on one generator is not concyclic.
  EXPECT_FALSE(p.concyclic(pt(5, 0, 0), pt(5, 0, 1), pt(5, 0, 2), pt(5, 0, 3)));
}

TEST(Affine, DerivedPlaneCounts) {
  LaguerrePlane p3 = miquelian_plane(3);
  AffinePlane a3 = derived_affine_plane(p3, pt(3, 0, 0));
  EXPECT_EQ(a3.points.size(), 9u);
  EXPECT_EQ(a3.lines.size(), 12u);
  for (const auto& line : a3.lines) EXPECT_EQ(line.size(), 3u);
  AffinePlane a5 = derived_affine_plane(miquelian_plane(5), at_inf(5, 2));
  EXPECT_EQ(a5.points.size(), 25u);
  EXPECT_EQ(a5.lines.size(), 30u);
}

TEST(Affine, AxiomsHold) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    LaguerrePlane p = miquelian_plane(q);
    for (std::uint32_t i = 0; i < p.point_count(); i += q + 1)
      EXPECT_EQ(validate_affine_axioms(derived_affine_plane(p, {i})).verdict, Verdict::Holds) << q;
  }
}
