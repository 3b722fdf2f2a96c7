#include "laguerre/checkers.hpp"

#include <array>
#include <cmath>
#include <functional>

#include "driver.hpp"
#include "laguerre/axioms.hpp"
#include "laguerre/moebius.hpp"
#include "laguerre/symmetry.hpp"

namespace laguerre {

using detail::Chooser;
using detail::drive;
using detail::nth_other;
using detail::each_pi_quadruple;
using detail::point_avoiding;

namespace {

double dq(const LaguerrePlane& plane) { return static_cast<double>(plane.order()); }

bool touch_at(const LaguerrePlane& plane, CircleId k, CircleId l, PointId p) {
  return k != l && plane.intersection_size(k, l) == 1 && plane.contains(k, p) && plane.contains(l, p);
}

// Chain statements ---------------------------------------------------------

enum class ChainClaim { S, Parallel, Concyclic };

struct Chain {
  CircleId k, l, m, n;
  PointId a, b, c, d;
};

// Returns nullopt when the chain is outside the claim's hypothesis, else
// whether the conclusion holds.
std::optional<bool> chain_claim(const LaguerrePlane& plane, ChainClaim claim, const Chain& ch) {
  switch (claim) {
    case ChainClaim::S: {
      if (plane.parallel(ch.a, ch.c)) return std::nullopt;
      std::array<PointId, 4> pts{ch.a, ch.b, ch.c, ch.d};
      return plane.on_common_circle(pts);
    }
    case ChainClaim::Parallel:
      if (!plane.parallel(ch.a, ch.c)) return std::nullopt;
      return plane.parallel(ch.b, ch.d);
    case ChainClaim::Concyclic:
      return plane.concyclic(ch.a, ch.c, ch.b, ch.d);
  }
  return std::nullopt;
}

const char* chain_id(ChainClaim claim) {
  switch (claim) {
    case ChainClaim::S:
      return "S";
    case ChainClaim::Parallel:
      return "chain-parallel";
    case ChainClaim::Concyclic:
      return "chain-concyclic";
  }
  return "?";
}

double chain_bound(const LaguerrePlane& plane) {
  double q = dq(plane);
  return q * q * q * std::pow((q + 1) * (q - 1), 3);
}

CheckReport check_chain(const LaguerrePlane& plane, ChainClaim claim, const CheckMode& mode, unsigned workers) {
  const std::size_t G = plane.generator_count();
  const std::size_t q = plane.order();
  auto body = [&](Chooser& ch, Tally& t) {
    ch.outer(plane.circle_count(), [&](std::size_t ki) {
      CircleId k{static_cast<std::uint32_t>(ki)};
      ch.each(G, [&](std::size_t ia) {
        PointId a = plane.circle_points(k)[ia];
        auto pa = plane.tangent_members(a, k);
        ch.each(q - 1, [&](std::size_t il) {
          CircleId l = nth_other(pa, k, il);
          ch.each(G, [&](std::size_t ib) {
            PointId b = plane.circle_points(l)[ib];
            auto pb = plane.tangent_members(b, l);
            ch.each(q - 1, [&](std::size_t im) {
              CircleId m = nth_other(pb, l, im);
              ch.each(G, [&](std::size_t ic) {
                PointId c = plane.circle_points(m)[ic];
                auto pc = plane.tangent_members(c, m);
                ch.each(q - 1, [&](std::size_t in) {
                  CircleId n = nth_other(pc, m, in);
                  if (plane.intersection_size(n, k) != 1) {
                    ++t.skipped;
                    return;
                  }
                  PointId d = plane.intersection(n, k).front();
                  Chain chain{k, l, m, n, a, b, c, d};
                  auto holds = chain_claim(plane, claim, chain);
                  if (!holds) {
                    ++t.skipped;
                    return;
                  }
                  ++t.configurations;
                  if (!*holds) t.violation({chain_id(claim), {a, b, c, d}, {k, l, m, n}, {}});
                });
              });
            });
          });
        });
      });
    });
  };
  return drive(plane, chain_id(claim), mode, workers, plane.circle_count(), chain_bound(plane), body);
}

bool replay_chain(const LaguerrePlane& plane, ChainClaim claim, const Witness& w) {
  if (w.points.size() != 4 || w.circles.size() != 4) return false;
  Chain ch{w.circles[0], w.circles[1], w.circles[2], w.circles[3], w.points[0], w.points[1], w.points[2], w.points[3]};
  if (!touch_at(plane, ch.k, ch.l, ch.a) || !touch_at(plane, ch.l, ch.m, ch.b) ||
      !touch_at(plane, ch.m, ch.n, ch.c) || !touch_at(plane, ch.n, ch.k, ch.d))
    return false;
  auto holds = chain_claim(plane, claim, ch);
  return holds && !*holds;
}

// (C) ----------------------------------------------------------------------

std::size_t tangent_count(const LaguerrePlane& plane, PointId p, CircleId k, CircleId l) {
  std::size_t count = 0;
  for (CircleId m : plane.tangent_members(p, k))
    if (plane.intersection_size(m, l) == 1) ++count;
  return count;
}

// Mutual tangency ------------------------------------------------------------

// Member i of the circles tangent to K other than K itself.
std::pair<CircleId, PointId> tangent_to(const LaguerrePlane& plane, CircleId k, std::size_t i) {
  const std::size_t q = plane.order();
  PointId p = plane.circle_points(k)[i / (q - 1)];
  return {nth_other(plane.tangent_members(p, k), k, i % (q - 1)), p};
}

// Pi family ------------------------------------------------------------------

double pi_bound(const LaguerrePlane& plane) {
  double n = static_cast<double>(plane.point_count());
  double q = dq(plane);
  return n * (n - q) * (n - 2 * q) * (n - 3 * q);
}

bool pi_fails(const LaguerrePlane& plane, const PiConfiguration& cfg) {
  return !touch_at(plane, cfg.tangentAtA, *cfg.pqx, cfg.x);
}

enum class PrimeOutcome { Degenerate, Holds, Fails };

PrimeOutcome pi_prime_outcome(const LaguerrePlane& plane, const PiConfiguration& cfg, CircleId* lOut) {
  if (plane.contains(cfg.tangentAtA, cfg.q)) return PrimeOutcome::Degenerate;
  CircleId l = plane.tangent_circle(cfg.x, cfg.tangentAtA, cfg.q);
  if (lOut) *lOut = l;
  auto common = plane.intersection(l, cfg.abx);
  bool ok = common.size() == 2 && (common[0] == cfg.x || common[1] == cfg.x);
  if (ok) {
    PointId other = common[0] == cfg.x ? common[1] : common[0];
    ok = plane.parallel(other, cfg.c);
  }
  return ok ? PrimeOutcome::Holds : PrimeOutcome::Fails;
}

CircleId closure_circle(const LaguerrePlane& plane, const PiConfiguration& cfg) {
  return plane.tangent_circle(cfg.p, *cfg.pqx, cfg.b);
}

bool closure_holds(const LaguerrePlane& plane, const PiConfiguration& cfg, CircleId n) {
  return n == cfg.abc || touch_at(plane, n, cfg.abc, cfg.b);
}

// Miquel / bundle --------------------------------------------------------

// Pairs (u, v) with (x, u, y, v) concyclic for non-parallel x, y: points of
// a circle through x and y, or u || x and v || y.
struct QuadCompletions {
  std::size_t q;
  std::size_t onCircles() const { return q * (q - 1) * (q - 2); }
  std::size_t total() const { return onCircles() + (q - 1) * (q - 1); }
};

std::pair<PointId, PointId> completion(const LaguerrePlane& plane, PointId x, PointId y, std::size_t i,
                                       const std::vector<CircleId>& pencil) {
  const std::size_t q = plane.order();
  QuadCompletions qc{q};
  if (i < qc.onCircles()) {
    CircleId c = pencil[i / ((q - 1) * (q - 2))];
    std::size_t r = i % ((q - 1) * (q - 2));
    std::vector<PointId> rest;
    for (PointId p : plane.circle_points(c))
      if (p != x && p != y) rest.push_back(p);
    PointId u = rest[r / (q - 2)];
    PointId v = nth_other(std::span<const PointId>(rest), u, r % (q - 2));
    return {u, v};
  }
  i -= qc.onCircles();
  PointId u = nth_other(plane.generator_points(plane.generator_of(x)), x, i / (q - 1));
  PointId v = nth_other(plane.generator_points(plane.generator_of(y)), y, i % (q - 1));
  return {u, v};
}

// Ordered distinct points a, c, b, d of one circle, in the order the
// statements name them.
template <class Visit>
void each_first_quadruple(const LaguerrePlane& plane, Chooser& ch, Visit&& visit) {
  const std::size_t G = plane.generator_count();
  if (G < 4) return;
  ch.outer(plane.circle_count(), [&](std::size_t ki) {
    CircleId k{static_cast<std::uint32_t>(ki)};
    std::vector<PointId> pts(plane.circle_points(k).begin(), plane.circle_points(k).end());
    ch.each(G, [&](std::size_t ia) {
      PointId a = pts[ia];
      std::vector<PointId> r1 = pts;
      r1.erase(r1.begin() + ia);
      ch.each(G - 1, [&](std::size_t ic) {
        PointId c = r1[ic];
        std::vector<PointId> r2 = r1;
        r2.erase(r2.begin() + ic);
        ch.each(G - 2, [&](std::size_t ib) {
          PointId b = r2[ib];
          std::vector<PointId> r3 = r2;
          r3.erase(r3.begin() + ib);
          ch.each(G - 3, [&](std::size_t id) { visit(a, c, b, r3[id]); });
        });
      });
    });
  });
}

bool miquel_hypothesis(const LaguerrePlane& P, const std::array<PointId, 8>& v) {
  auto [a, b, c, d, e, f, g, h] = v;
  return detail::all_distinct(v) && P.concyclic(a, c, b, d) && P.concyclic(a, e, b, h) &&
         P.concyclic(a, g, d, h) && P.concyclic(b, f, c, e) && P.concyclic(c, g, d, f);
}

// The five hypothesis quadruples of the bundle statement are read as the
// faces of a cube: each lies on a circle or on a pair of generators, these
// supports are pairwise distinct, and at most two are generator pairs.
bool bundle_nondegenerate(const LaguerrePlane& P, const std::array<PointId, 8>& v) {
  auto [a, b, c, d, e, f, g, h] = v;
  std::array<std::uint64_t, 5> support{};
  int improper = 0;
  std::size_t i = 0;
  const std::uint64_t m = P.circle_count();
  for (std::array<PointId, 4> quad : {std::array{a, c, b, d}, std::array{c, e, d, f}, std::array{e, g, f, h},
                                      std::array{g, a, h, b}, std::array{a, e, b, f}}) {
    if (auto k = P.find_circle(quad[0], quad[1], quad[2]); k && P.contains(*k, quad[3])) {
      support[i++] = k->value;
      continue;
    }
    ++improper;
    std::uint64_t g0 = P.generator_of(quad[0]).value, g1 = P.generator_of(quad[2]).value;
    support[i++] = m + std::min(g0, g1) * P.generator_count() + std::max(g0, g1);
  }
  std::sort(support.begin(), support.end());
  return improper <= 2 && std::adjacent_find(support.begin(), support.end()) == support.end();
}

bool bundle_hypothesis(const LaguerrePlane& P, const std::array<PointId, 8>& v) {
  auto [a, b, c, d, e, f, g, h] = v;
  return detail::all_distinct(v) && P.concyclic(a, c, b, d) && P.concyclic(c, e, d, f) &&
         P.concyclic(e, g, f, h) && P.concyclic(g, a, h, b) && P.concyclic(a, e, b, f) &&
         bundle_nondegenerate(P, v);
}

std::vector<PointId> as_points(const std::array<PointId, 8>& v) { return {v.begin(), v.end()}; }

double first_quadruple_bound(const LaguerrePlane& plane) {
  double q = dq(plane);
  return q * q * q * (q + 1) * q * (q - 1) * (q - 2);
}

}  // namespace

std::optional<PiConfiguration> pi_configuration(const LaguerrePlane& plane, PointId a, PointId b, PointId c,
                                                PointId x) {
  std::array<PointId, 4> pts{a, b, c, x};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (plane.parallel(pts[i], pts[j])) return std::nullopt;
  PiConfiguration cfg{};
  cfg.a = a;
  cfg.b = b;
  cfg.c = c;
  cfg.x = x;
  cfg.abc = plane.circle_through(a, b, c);
  if (plane.contains(cfg.abc, x)) return std::nullopt;
  cfg.abx = plane.circle_through(a, b, x);
  cfg.acx = plane.circle_through(a, c, x);
  cfg.p = plane.parallel_point(c, cfg.abx);
  cfg.q = plane.parallel_point(b, cfg.acx);
  cfg.tangentAtA = plane.tangent_circle(a, cfg.abc, x);
  cfg.pqx = plane.find_circle(cfg.p, cfg.q, x);
  return cfg;
}

CheckReport check_C(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  const std::size_t G = plane.generator_count();
  auto body = [&](Chooser& ch, Tally& t) {
    ch.outer(plane.circle_count(), [&](std::size_t ki) {
      CircleId k{static_cast<std::uint32_t>(ki)};
      ch.each(G, [&](std::size_t ip) {
        PointId p = plane.circle_points(k)[ip];
        ch.each(plane.circle_count(), [&](std::size_t li) {
          CircleId l{static_cast<std::uint32_t>(li)};
          if (plane.contains(l, p)) {
            ++t.skipped;
            return;
          }
          ++t.configurations;
          std::size_t count = tangent_count(plane, p, k, l);
          if (count != 1) t.violation({"C", {p}, {k, l}, std::to_string(count) + " tangent members"});
        });
      });
    });
  };
  double q = dq(plane);
  double bound = q * q * q * (q + 1) * q * q * q;
  return drive(plane, "C", mode, workers, plane.circle_count(), bound, body);
}

CheckReport check_S(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  return check_chain(plane, ChainClaim::S, mode, workers);
}

CheckReport check_chain_parallel(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  return check_chain(plane, ChainClaim::Parallel, mode, workers);
}

CheckReport check_chain_concyclic(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  return check_chain(plane, ChainClaim::Concyclic, mode, workers);
}

CheckReport check_mutual_tangency(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  const std::size_t T = plane.generator_count() * (plane.order() - 1);
  auto body = [&](Chooser& ch, Tally& t) {
    ch.outer(plane.circle_count(), [&](std::size_t ki) {
      CircleId k{static_cast<std::uint32_t>(ki)};
      ch.each(T, [&](std::size_t il) {
        auto [l, pkl] = tangent_to(plane, k, il);
        if (ch.is_exhaustive() && l < k) return;
        ch.each(T, [&](std::size_t im) {
          auto [m, pkm] = tangent_to(plane, k, im);
          if (ch.is_exhaustive() ? m <= l : m == l) {
            if (!ch.is_exhaustive()) ++t.skipped;
            return;
          }
          if (plane.intersection_size(l, m) != 1) {
            ++t.skipped;
            return;
          }
          ++t.configurations;
          PointId plm = plane.intersection(l, m).front();
          if (pkl != pkm || pkl != plm) t.violation({"mutual-tangency", {pkl, pkm, plm}, {k, l, m}, {}});
        });
      });
    });
  };
  double q = dq(plane);
  double bound = q * q * q * std::pow((q + 1) * (q - 1), 2);
  return drive(plane, "mutual-tangency", mode, workers, plane.circle_count(), bound, body);
}

CheckReport check_char2_tangency(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  if (plane.order() % 2 != 0) {
    CheckReport report;
    report.check = "char2-tangency";
    report.q = plane.order();
    report.model = plane.model().name();
    report.mode = mode;
    report.verdict = Verdict::NotApplicable;
    report.elapsedSeconds = 0.0;
    return report;
  }
  // Index 0 is M itself, then the circles tangent to M.
  const std::size_t T = plane.generator_count() * (plane.order() - 1) + 1;
  auto body = [&](Chooser& ch, Tally& t) {
    ch.outer(plane.circle_count(), [&](std::size_t mi) {
      CircleId m{static_cast<std::uint32_t>(mi)};
      auto pick = [&](std::size_t i) { return i == 0 ? m : tangent_to(plane, m, i - 1).first; };
      ch.each(T, [&](std::size_t ik) {
        CircleId k = pick(ik);
        ch.each(T, [&](std::size_t il) {
          CircleId l = pick(il);
          if (ch.is_exhaustive() ? l <= k : l == k) {
            if (!ch.is_exhaustive()) ++t.skipped;
            return;
          }
          auto common = plane.intersection(k, l);
          if (common.empty()) ++t.skipped;
          for (PointId p : common) {
            ++t.configurations;
            if (common.size() >= 2) {
              PointId other = p == common[0] ? common[1] : common[0];
              t.violation({"char2-tangency", {p, other}, {m, k, l}, {}});
            }
          }
        });
      });
    });
  };
  double q = dq(plane);
  double bound = q * q * q * std::pow(q * q, 2);
  return drive(plane, "char2-tangency", mode, workers, plane.circle_count(), bound, body);
}

CheckReport check_pi(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  auto body = [&](Chooser& ch, Tally& t) {
    each_pi_quadruple(plane, ch, t, [&](const PiConfiguration& cfg) {
      ++t.configurations;
      if (pi_fails(plane, cfg))
        t.violation({"Pi", {cfg.a, cfg.b, cfg.c, cfg.x, cfg.p, cfg.q}, {cfg.abc, cfg.tangentAtA, *cfg.pqx}, {}});
    });
  };
  return drive(plane, "Pi", mode, workers, plane.point_count(), pi_bound(plane), body);
}

CheckReport check_pi_prime(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  auto body = [&](Chooser& ch, Tally& t) {
    each_pi_quadruple(plane, ch, t, [&](const PiConfiguration& cfg) {
      CircleId l{};
      PrimeOutcome outcome = pi_prime_outcome(plane, cfg, &l);
      if (outcome == PrimeOutcome::Degenerate) {
        ++t.degenerate;
        return;
      }
      ++t.configurations;
      if (outcome == PrimeOutcome::Fails)
        t.violation({"PiPrime", {cfg.a, cfg.b, cfg.c, cfg.x, cfg.q}, {cfg.abc, cfg.tangentAtA, l, cfg.abx}, {}});
    });
  };
  return drive(plane, "PiPrime", mode, workers, plane.point_count(), pi_bound(plane), body);
}

CheckReport check_pi_closure(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  auto body = [&](Chooser& ch, Tally& t) {
    each_pi_quadruple(plane, ch, t, [&](const PiConfiguration& cfg) {
      ++t.configurations;
      CircleId n = closure_circle(plane, cfg);
      if (!closure_holds(plane, cfg, n))
        t.violation({"pi-closure", {cfg.a, cfg.b, cfg.c, cfg.x, cfg.p, cfg.q}, {cfg.abc, *cfg.pqx, n}, {}});
    });
  };
  return drive(plane, "pi-closure", mode, workers, plane.point_count(), pi_bound(plane), body);
}

CheckReport check_miquel(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  const std::size_t q = plane.order();
  const std::size_t n = plane.point_count();
  auto body = [&](Chooser& ch, Tally& t) {
    each_first_quadruple(plane, ch, [&](PointId a, PointId c, PointId b, PointId d) {
      auto pencil = plane.vertex_pencil(a, b).members;
      ch.each(QuadCompletions{q}.total(), [&](std::size_t ie) {
        auto [e, h] = completion(plane, a, b, ie, pencil);
        std::array<PointId, 6> six{a, b, c, d, e, h};
        if (!detail::all_distinct(six)) {
          ++t.skipped;
          return;
        }
        auto fresh = [&](PointId p) { return std::find(six.begin(), six.end(), p) == six.end(); };
        std::vector<PointId> gs, fs;
        for (std::uint32_t i = 0; i < n; ++i) {
          PointId p{i};
          if (!fresh(p)) continue;
          if (plane.concyclic(a, p, d, h)) gs.push_back(p);
          if (plane.concyclic(b, p, c, e)) fs.push_back(p);
        }
        for (PointId g : gs)
          for (PointId f : fs) {
            if (f == g || !plane.concyclic(c, g, d, f)) continue;
            ++t.configurations;
            if (!plane.concyclic(e, g, f, h)) t.violation({"miquel", {a, b, c, d, e, f, g, h}, {}, {}});
          }
      });
    });
  };
  double dqv = dq(plane);
  double bound = first_quadruple_bound(plane) * static_cast<double>(QuadCompletions{q}.total()) * (dqv + 1) * (dqv + 1);
  return drive(plane, "miquel", mode, workers, plane.circle_count(), bound, body);
}

CheckReport check_bundle(const LaguerrePlane& plane, const CheckMode& mode, unsigned workers) {
  const std::size_t q = plane.order();
  auto body = [&](Chooser& ch, Tally& t) {
    each_first_quadruple(plane, ch, [&](PointId a, PointId c, PointId b, PointId d) {
      auto pencil = plane.vertex_pencil(a, b).members;
      // Choice q selects the generator case e || a, f || b.
      ch.each(q + 1, [&](std::size_t ic) {
        std::vector<PointId> eSide, fSide;
        if (ic < q) {
          for (PointId p : plane.circle_points(pencil[ic]))
            if (p != a && p != b) eSide.push_back(p);
          fSide = eSide;
        } else {
          for (PointId p : plane.generator_points(plane.generator_of(a)))
            if (p != a) eSide.push_back(p);
          for (PointId p : plane.generator_points(plane.generator_of(b)))
            if (p != b) fSide.push_back(p);
        }
        ch.each(eSide.size(), [&](std::size_t ie) {
          PointId e = eSide[ie];
          for (PointId f : fSide) {
            std::array<PointId, 6> six{a, b, c, d, e, f};
            if (!detail::all_distinct(six)) {
              ++t.skipped;
              continue;
            }
            if (!plane.concyclic(c, e, d, f)) continue;
            auto efPencil = plane.vertex_pencil(e, f).members;
            const std::size_t total = QuadCompletions{q}.total();
            for (std::size_t ig = 0; ig < total; ++ig) {
              auto [g, h] = completion(plane, e, f, ig, efPencil);
              std::array<PointId, 8> all{a, b, c, d, e, f, g, h};
              if (!detail::all_distinct(all) || !plane.concyclic(g, a, h, b)) continue;
              if (!bundle_nondegenerate(plane, all)) {
                ++t.skipped;
                continue;
              }
              ++t.configurations;
              if (plane.concyclic(c, g, d, h)) continue;
              if (plane.concyclic_any_pairing(c, g, d, h))
                ++t.degenerate;
              else
                t.violation({"bundle", as_points(all), {}, {}});
            }
          }
        });
      });
    });
  };
  double dqv = dq(plane);
  double bound = first_quadruple_bound(plane) * (dqv + 1) * (dqv - 1) * (dqv - 2) *
                 static_cast<double>(QuadCompletions{q}.total());
  return drive(plane, "bundle", mode, workers, plane.circle_count(), bound, body);
}

// Registry -------------------------------------------------------------------

namespace {

struct Entry {
  const char* id;
  std::function<CheckReport(const LaguerrePlane&, const CheckMode&, unsigned)> run;
  std::function<double(const LaguerrePlane&)> bound;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"C", check_C, [](const LaguerrePlane& p) { double q = dq(p); return q * q * q * (q + 1) * q * q * q; }},
      {"S", check_S, chain_bound},
      {"chain-parallel", check_chain_parallel, chain_bound},
      {"chain-concyclic", check_chain_concyclic, chain_bound},
      {"mutual-tangency", check_mutual_tangency,
       [](const LaguerrePlane& p) { double q = dq(p); return q * q * q * std::pow((q + 1) * (q - 1), 2); }},
      {"char2-tangency", check_char2_tangency,
       [](const LaguerrePlane& p) { double q = dq(p); return q * q * q * std::pow(q * q, 2); }},
      {"Pi", check_pi, pi_bound},
      {"PiPrime", check_pi_prime, pi_bound},
      {"pi-closure", check_pi_closure, pi_bound},
      {"miquel", check_miquel,
       [](const LaguerrePlane& p) {
         double q = dq(p);
         return first_quadruple_bound(p) * static_cast<double>(QuadCompletions{p.order()}.total()) * (q + 1) * (q + 1);
       }},
      {"bundle", check_bundle,
       [](const LaguerrePlane& p) {
         double q = dq(p);
         return first_quadruple_bound(p) * (q + 1) * (q - 1) * (q - 2) *
                static_cast<double>(QuadCompletions{p.order()}.total());
       }},
      {"pi-symmetry", verify_pi_symmetry, pi_bound},
      {"dts", check_dts,
       [](const LaguerrePlane& p) { double m = static_cast<double>(p.circle_count()); return m * (m - 1) / 2; }},
      {"dts-uniqueness", check_dts_uniqueness,
       [](const LaguerrePlane& p) { double g = dq(p) + 1; return g * (g - 1) / 2 * static_cast<double>(p.circle_count()); }},
  };
  return entries;
}

const Entry& entry(std::string_view id) {
  for (const Entry& e : registry())
    if (id == e.id) return e;
  throw Error("unknown check id '" + std::string(id) + "'");
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const Entry& e : registry()) ids.emplace_back(e.id);
  return ids;
}

bool is_check_id(std::string_view id) {
  for (const Entry& e : registry())
    if (id == e.id) return true;
  return false;
}

double apriori_count(const LaguerrePlane& plane, std::string_view id) { return entry(id).bound(plane); }

CheckReport run_check(const LaguerrePlane& plane, std::string_view id, const CheckMode& mode, unsigned workers) {
  return entry(id).run(plane, mode, workers);
}

bool replay_witness(const LaguerrePlane& plane, std::string_view id, const Witness& w) {
  auto point_ok = [&](PointId p) { return p.value < plane.point_count(); };
  auto circle_ok = [&](CircleId k) { return k.value < plane.circle_count(); };
  if (!std::all_of(w.points.begin(), w.points.end(), point_ok) ||
      !std::all_of(w.circles.begin(), w.circles.end(), circle_ok))
    return false;

  if (id == "C") {
    if (w.points.size() != 1 || w.circles.size() != 2) return false;
    PointId p = w.points[0];
    CircleId k = w.circles[0], l = w.circles[1];
    if (!plane.contains(k, p) || plane.contains(l, p)) return false;
    return tangent_count(plane, p, k, l) != 1;
  }
  if (id == "S") return replay_chain(plane, ChainClaim::S, w);
  if (id == "chain-parallel") return replay_chain(plane, ChainClaim::Parallel, w);
  if (id == "chain-concyclic") return replay_chain(plane, ChainClaim::Concyclic, w);
  if (id == "mutual-tangency") {
    if (w.circles.size() != 3) return false;
    CircleId k = w.circles[0], l = w.circles[1], m = w.circles[2];
    if (k == l || l == m || k == m) return false;
    if (plane.intersection_size(k, l) != 1 || plane.intersection_size(k, m) != 1 ||
        plane.intersection_size(l, m) != 1)
      return false;
    PointId a = plane.intersection(k, l)[0], b = plane.intersection(k, m)[0], c = plane.intersection(l, m)[0];
    return !(a == b && b == c);
  }
  if (id == "char2-tangency") {
    if (plane.order() % 2 != 0 || w.circles.size() != 3 || w.points.size() < 1) return false;
    CircleId m = w.circles[0], k = w.circles[1], l = w.circles[2];
    if (k == l || !plane.tangent(k, m) || !plane.tangent(l, m)) return false;
    if (!plane.contains(k, w.points[0]) || !plane.contains(l, w.points[0])) return false;
    return plane.intersection_size(k, l) >= 2;
  }
  if (id == "Pi" || id == "PiPrime" || id == "pi-closure" || id == "pi-symmetry") {
    if (w.points.size() < 4) return false;
    auto cfg = pi_configuration(plane, w.points[0], w.points[1], w.points[2], w.points[3]);
    if (!cfg || !cfg->pqx) return false;
    if (id == "Pi") return pi_fails(plane, *cfg);
    if (id == "PiPrime") return pi_prime_outcome(plane, *cfg, nullptr) == PrimeOutcome::Fails;
    if (id == "pi-closure") return !closure_holds(plane, *cfg, closure_circle(plane, *cfg));
    return replay_pi_symmetry(plane, w);
  }
  if (id == "miquel" || id == "bundle") {
    if (w.points.size() != 8) return false;
    std::array<PointId, 8> v{};
    std::copy(w.points.begin(), w.points.end(), v.begin());
    auto [a, b, c, d, e, f, g, h] = v;
    if (id == "miquel") return miquel_hypothesis(plane, v) && !plane.concyclic(e, g, f, h);
    return bundle_hypothesis(plane, v) && !plane.concyclic_any_pairing(c, g, d, h);
  }
  if (id == "axioms") {
    CheckReport again = validate_laguerre_axioms(plane.structure());
    return std::find(again.violations.begin(), again.violations.end(), w) != again.violations.end();
  }
  if (id.rfind("dts", 0) == 0) return replay_dts_witness(plane, id, w);
  if (id == "moebius-axioms") return replay_moebius_witness(plane, w);
  return false;
}

}  // namespace laguerre
