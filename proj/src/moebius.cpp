#include "laguerre/moebius.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "laguerre/errors.hpp"

namespace laguerre {

namespace {

using Block = std::vector<std::uint32_t>;

bool has(const Block& b, std::uint32_t p) { return std::binary_search(b.begin(), b.end(), p); }

std::size_t common(const Block& a, const Block& b) {
  std::size_t n = 0;
  for (std::uint32_t p : a)
    if (has(b, p)) ++n;
  return n;
}

Witness candidate_witness(const MoebiusCandidate& c, const std::array<CircleId, 2>& pair, const std::string& label,
                          std::initializer_list<std::uint32_t> pts, std::string detail) {
  Witness w{label, {}, {pair[0], pair[1]}, std::move(detail)};
  bool inf = false;
  for (std::uint32_t p : pts) {
    if (p == c.infinity())
      inf = true;
    else
      w.circles.push_back(c.fixed[p]);
  }
  if (inf) w.detail += w.detail.empty() ? "with infinity" : ", with infinity";
  return w;
}

std::vector<std::vector<std::uint32_t>> blocks_through(const std::vector<Block>& blocks, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> through(n);
  for (std::uint32_t i = 0; i < blocks.size(); ++i)
    for (std::uint32_t p : blocks[i]) through[p].push_back(i);
  return through;
}

std::size_t blocks_on_three(const std::vector<Block>& blocks, const std::vector<std::uint32_t>& throughX,
                            std::uint32_t y, std::uint32_t z) {
  std::size_t count = 0;
  for (std::uint32_t b : throughX)
    if (has(blocks[b], y) && has(blocks[b], z)) ++count;
  return count;
}

std::size_t touching_blocks(const std::vector<Block>& blocks, const std::vector<std::uint32_t>& throughP,
                            const Block& b, std::uint32_t q) {
  std::size_t count = 0;
  for (std::uint32_t other : throughP)
    if (has(blocks[other], q) && common(blocks[other], b) == 1) ++count;
  return count;
}

std::vector<Block> all_blocks(const MoebiusCandidate& c) {
  std::vector<Block> blocks = c.blocksA;
  blocks.insert(blocks.end(), c.blocksB.begin(), c.blocksB.end());
  return blocks;
}

CheckReport candidate_axioms(const LaguerrePlane& plane, const MoebiusCandidate& c,
                             const std::array<CircleId, 2>& pair) {
  CheckReport report;
  report.check = "moebius-axioms";
  report.q = plane.order();
  report.model = plane.model().name();
  const std::vector<Block> blocks = all_blocks(c);
  const std::uint32_t n = static_cast<std::uint32_t>(c.point_count());
  const auto through = blocks_through(blocks, n);

  Tally three;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x + 1; y < n; ++y)
      for (std::uint32_t z = y + 1; z < n; ++z) {
        ++three.configurations;
        std::size_t count = blocks_on_three(blocks, through[x], y, z);
        if (count != 1)
          three.violation(candidate_witness(c, pair, "three-points", {x, y, z}, std::to_string(count) + " blocks"));
      }

  Tally touching;
  for (const Block& b : blocks)
    for (std::uint32_t p : b)
      for (std::uint32_t q = 0; q < n; ++q) {
        if (has(b, q)) continue;
        ++touching.configurations;
        std::size_t count = touching_blocks(blocks, through[p], b, q);
        if (count != 1)
          touching.violation(
              candidate_witness(c, pair, "touching", {p, q}, std::to_string(count) + " touching blocks"));
      }

  report.add_property("three-points", three);
  report.add_property("touching", touching);
  report.finish_verdict();
  return report;
}

}  // namespace

std::map<std::size_t, std::size_t> MoebiusCandidate::size_census(
    const std::vector<std::vector<std::uint32_t>>& blocks) const {
  std::map<std::size_t, std::size_t> census;
  for (const auto& b : blocks) ++census[b.size()];
  return census;
}

MoebiusCandidate moebius_extract(const LaguerrePlane& plane, const Automorphism& phi) {
  for (std::uint32_t i = 0; i < plane.point_count(); ++i)
    if (phi(PointId{i}) == PointId{i})
      throw NotFixedPointFree("the automorphism fixes " + plane.describe_point(PointId{i}));

  MoebiusCandidate c;
  const std::uint32_t m = static_cast<std::uint32_t>(plane.circle_count());
  std::vector<std::optional<CircleId>> imageOf(m);
  std::vector<std::int64_t> index(m, -1);
  for (std::uint32_t k = 0; k < m; ++k) {
    imageOf[k] = phi.image_circle(plane, CircleId{k});
    if (imageOf[k] == CircleId{k}) {
      index[k] = static_cast<std::int64_t>(c.fixed.size());
      c.fixed.push_back(CircleId{k});
    }
  }

  std::set<Block> seenA;
  for (std::uint32_t k = 0; k < m; ++k) {
    if (!imageOf[k] || *imageOf[k] == CircleId{k}) continue;
    CircleId image = *imageOf[k];
    if (plane.tangent(CircleId{k}, image)) continue;
    Block block;
    for (CircleId f : double_tangency_pencil(plane, CircleId{k}, image).members)
      if (index[f.value] >= 0) block.push_back(static_cast<std::uint32_t>(index[f.value]));
    std::sort(block.begin(), block.end());
    if (seenA.insert(block).second) c.blocksA.push_back(std::move(block));
  }

  std::set<Block> seenB;
  for (std::uint32_t i = 0; i < plane.point_count(); ++i) {
    PointId x{i};
    if (plane.parallel(x, phi(x))) continue;
    Block block;
    for (CircleId f : plane.vertex_pencil(x, phi(x)).members)
      if (index[f.value] >= 0) block.push_back(static_cast<std::uint32_t>(index[f.value]));
    block.push_back(c.infinity());
    std::sort(block.begin(), block.end());
    if (seenB.insert(block).second) c.blocksB.push_back(std::move(block));
  }

  c.axiomReport = candidate_axioms(plane, c, phi.pair().value_or(std::array<CircleId, 2>{}));
  return c;
}

DisjointPair find_disjoint_pair(const LaguerrePlane& plane, std::uint64_t seed) {
  const std::uint32_t m = static_cast<std::uint32_t>(plane.circle_count());
  std::size_t disjoint = 0, failed = 0;
  for (std::uint32_t step = 0; step < m; ++step) {
    CircleId k{static_cast<std::uint32_t>((seed % m + step) % m)};
    for (std::uint32_t li = k.value + 1; li < m; ++li) {
      CircleId l{li};
      if (plane.intersection_size(k, l) != 0) continue;
      ++disjoint;
      try {
        Automorphism phi = build_dts(plane, k, l);
        if (classify_symmetry(plane, phi, k, l).kind == SymmetryClassification::Kind::FixedPointFree)
          return {k, l, std::move(phi)};
      } catch (const Error&) {
        ++failed;
      }
    }
  }
  throw NoDisjointPair("no disjoint pair with a fixed-point-free symmetry (" + std::to_string(disjoint) +
                       " disjoint pairs, " + std::to_string(failed) + " without a well-defined symmetry)");
}

bool replay_moebius_witness(const LaguerrePlane& plane, const Witness& w) {
  if (w.circles.size() < 2) return false;
  for (CircleId k : w.circles)
    if (k.value >= plane.circle_count()) return false;
  const bool inf = w.detail.find("with infinity") != std::string::npos;
  const std::size_t expected = (w.label == "three-points" ? 3 : w.label == "touching" ? 2 : 0);
  if (expected == 0 || w.circles.size() - 2 + (inf ? 1 : 0) != expected) return false;

  MoebiusCandidate c;
  try {
    c = moebius_extract(plane, build_dts(plane, w.circles[0], w.circles[1]));
  } catch (const Error&) {
    return false;
  }
  std::vector<std::uint32_t> pts;
  for (std::size_t i = 2; i < w.circles.size(); ++i) {
    auto it = std::find(c.fixed.begin(), c.fixed.end(), w.circles[i]);
    if (it == c.fixed.end()) return false;
    pts.push_back(static_cast<std::uint32_t>(it - c.fixed.begin()));
  }
  if (inf) pts.push_back(c.infinity());

  const std::vector<Block> blocks = all_blocks(c);
  const auto through = blocks_through(blocks, c.point_count());
  if (expected == 3) {
    std::sort(pts.begin(), pts.end());
    if (pts[0] == pts[1] || pts[1] == pts[2]) return false;
    return blocks_on_three(blocks, through[pts[0]], pts[1], pts[2]) != 1;
  }
  // touching: the witness does not name B, so the claim fails if some block
  // through the first point and missing the second breaks it. With infinity
  // involved its position is unknown; try both orders.
  auto fails_for = [&](std::uint32_t p, std::uint32_t q) {
    for (std::uint32_t b : through[p])
      if (!has(blocks[b], q) && touching_blocks(blocks, through[p], blocks[b], q) != 1) return true;
    return false;
  };
  if (pts[0] == pts[1]) return false;
  return fails_for(pts[0], pts[1]) || (inf && fails_for(pts[1], pts[0]));
}

}  // namespace laguerre
