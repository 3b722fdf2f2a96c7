#include <gtest/gtest.h>

#include "laguerre/errors.hpp"
#include "laguerre/models.hpp"
#include "laguerre/moebius.hpp"
#include "laguerre/report_io.hpp"
#include "support.hpp"

using namespace laguerre;
using laguerre::test::circ;

TEST(Moebius, RejectsMapWithFixedPoints) {
  LaguerrePlane p = miquelian_plane(5);
  EXPECT_THROW(moebius_extract(p, identity_automorphism(p)), NotFixedPointFree);
  EXPECT_THROW(moebius_extract(p, build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 2))), NotFixedPointFree);
}

TEST(Moebius, CandidateCensusOrderFive) {
  LaguerrePlane p = miquelian_plane(5);
  MoebiusCandidate c = moebius_extract(p, build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 1)));
  EXPECT_EQ(c.point_count(), 26u);
  EXPECT_EQ(c.fixed.size(), 25u);
  EXPECT_EQ(c.blocksA.size(), 50u);
  EXPECT_EQ(c.blocksB.size(), 15u);
  EXPECT_EQ(c.size_census(c.blocksA), (std::map<std::size_t, std::size_t>{{6, 50}}));
  EXPECT_EQ(c.size_census(c.blocksB), (std::map<std::size_t, std::size_t>{{6, 15}}));
  for (const auto& b : c.blocksB) EXPECT_EQ(b.back(), c.infinity());
  // Recorded outcome over GF(5): some triples of candidate points lie in no block.
  EXPECT_EQ(c.axiomReport.check, "moebius-axioms");
  EXPECT_EQ(c.axiomReport.verdict, Verdict::Fails);
  EXPECT_EQ(c.axiomReport.violationCount, 1300u);
}

TEST(Moebius, PairSearch) {
  LaguerrePlane p = miquelian_plane(5);
  DisjointPair pair = find_disjoint_pair(p, 0);
  EXPECT_EQ(pair.k, circ(5, 0, 0, 0));
  EXPECT_EQ(pair.l, circ(5, 1, 0, 2));
  EXPECT_EQ(p.intersection_size(pair.k, pair.l), 0u);
  DisjointPair later = find_disjoint_pair(p, 1000);
  EXPECT_EQ(p.intersection_size(later.k, later.l), 0u);
  EXPECT_GE(later.k.value, 1000u % p.circle_count());
}

TEST(Moebius, OrderTwoHasNoUsablePair) {
  EXPECT_THROW(find_disjoint_pair(miquelian_plane(2), 0), NoDisjointPair);
}

TEST(Moebius, JsonIsDeterministic) {
  LaguerrePlane p = miquelian_plane(5);
  auto render = [&] {
    DisjointPair pair = find_disjoint_pair(p, 42);
    return candidate_to_json(p, pair, moebius_extract(p, pair.phi)).dump();
  };
  EXPECT_EQ(render(), render());
}

TEST(Moebius, WitnessesReplay) {
  LaguerrePlane p = miquelian_plane(5);
  MoebiusCandidate c = moebius_extract(p, build_dts(p, circ(5, 1, 0, 0), circ(5, 4, 0, 1)));
  ASSERT_FALSE(c.axiomReport.violations.empty());
  for (const Witness& w : c.axiomReport.violations) {
    EXPECT_EQ(w.circles[0], circ(5, 1, 0, 0));
    EXPECT_EQ(w.circles[1], circ(5, 4, 0, 1));
    EXPECT_TRUE(replay_moebius_witness(p, w)) << w.label;
  }
  Witness moved = c.axiomReport.violations.front();
  moved.circles[1] = circ(5, 4, 0, 2);
  EXPECT_FALSE(replay_moebius_witness(p, moved));
}
