#pragma once

// Shared machinery for configuration sweeps. A checker body is written once
// as nested choices; in exhaustive mode every choice is enumerated, in
// sample mode each choice is drawn uniformly from its range.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "laguerre/checkers.hpp"
#include "laguerre/errors.hpp"
#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"

namespace laguerre::detail {

inline constexpr double kExhaustiveLimit = 1e8;
inline constexpr std::uint64_t kSampleBlock = 1024;

class Chooser {
 public:
  static Chooser exhaustive(std::size_t outerIndex) { return Chooser(nullptr, outerIndex); }
  static Chooser sampled(SplitMix64& rng) { return Chooser(&rng, 0); }

  bool is_exhaustive() const noexcept { return rng_ == nullptr; }

  /// Outermost level: one index per work unit when exhaustive.
  template <class F>
  void outer(std::size_t n, F&& f) {
    if (is_exhaustive()) {
      if (outerIndex_ < n) f(outerIndex_);
    } else if (n > 0) {
      f(static_cast<std::size_t>(rng_->below(n)));
    }
  }

  template <class F>
  void each(std::size_t n, F&& f) {
    if (is_exhaustive()) {
      for (std::size_t i = 0; i < n; ++i) f(i);
    } else if (n > 0) {
      f(static_cast<std::size_t>(rng_->below(n)));
    }
  }

 private:
  Chooser(SplitMix64* rng, std::size_t outerIndex) : rng_(rng), outerIndex_(outerIndex) {}
  SplitMix64* rng_;
  std::size_t outerIndex_;
};

/// Calls work(u) for u in [0, units) on up to `workers` threads.
template <class Work>
void run_units(std::size_t units, unsigned workers, Work&& work) {
  workers = std::max(1u, workers);
  if (workers == 1 || units < 2) {
    for (std::size_t u = 0; u < units; ++u) work(u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t u = next++; u < units; u = next++) work(u);
    });
}

/// Runs `body(chooser, tally)` over all units and merges tallies in unit
/// order, so results do not depend on the worker count.
template <class Body>
CheckReport drive(const LaguerrePlane& plane, std::string check, const CheckMode& mode,
                  unsigned workers, std::size_t outerCount, double apriori, Body&& body) {
  if (!mode.sampled() && apriori > kExhaustiveLimit)
    throw ExhaustiveTooLarge(check + ": a-priori configuration count " + std::to_string(apriori) +
                             " exceeds the exhaustive limit; use sample mode");
  auto start = std::chrono::steady_clock::now();
  const std::size_t units =
      mode.sampled() ? static_cast<std::size_t>((mode.count + kSampleBlock - 1) / kSampleBlock) : outerCount;
  std::vector<Tally> tallies(units);

  auto work = [&](std::size_t u) {
    Tally& t = tallies[u];
    if (!mode.sampled()) {
      Chooser ch = Chooser::exhaustive(u);
      body(ch, t);
      return;
    }
    std::uint64_t end = std::min<std::uint64_t>(mode.count, (u + 1) * kSampleBlock);
    for (std::uint64_t i = u * kSampleBlock; i < end; ++i) {
      SplitMix64 rng = SplitMix64::for_sample(mode.seed, i);
      Chooser ch = Chooser::sampled(rng);
      body(ch, t);
    }
  };

  run_units(units, workers, work);

  Tally total;
  for (const Tally& t : tallies) total.merge(t);

  CheckReport report;
  report.check = std::move(check);
  report.q = plane.order();
  report.model = plane.model().name();
  report.mode = mode;
  report.absorb(total);
  report.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// i-th element of `items` after removing `skip` (which must be present).
template <class T>
T nth_other(std::span<const T> items, T skip, std::size_t i) {
  for (const T& v : items) {
    if (v == skip) continue;
    if (i-- == 0) return v;
  }
  return skip;
}

/// i-th point (in generator order) avoiding the given generators.
inline PointId point_avoiding(const LaguerrePlane& plane, std::size_t i,
                              std::span<const GeneratorId> excluded) {
  const std::size_t q = plane.order();
  std::size_t block = i / q;
  for (std::uint32_t g = 0; g < plane.generator_count(); ++g) {
    if (std::find(excluded.begin(), excluded.end(), GeneratorId{g}) != excluded.end()) continue;
    if (block-- == 0) return plane.generator_points(GeneratorId{g})[i % q];
  }
  return PointId{};
}

inline bool all_distinct(std::span<const PointId> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  return true;
}

/// Ordered mutually non-parallel (a, b, c, x) with x off (abc); quadruples
/// outside the hypothesis count as skipped, a missing (pqx) as degenerate.
template <class Visit>
void each_pi_quadruple(const LaguerrePlane& plane, Chooser& ch, Tally& t, Visit&& visit) {
  const std::size_t n = plane.point_count();
  const std::size_t q = plane.order();
  if (plane.generator_count() < 4) return;
  ch.outer(n, [&](std::size_t ia) {
    PointId a{static_cast<std::uint32_t>(ia)};
    std::array<GeneratorId, 3> ex{plane.generator_of(a)};
    ch.each(n - q, [&](std::size_t ib) {
      PointId b = point_avoiding(plane, ib, std::span(ex.data(), 1));
      ex[1] = plane.generator_of(b);
      ch.each(n - 2 * q, [&](std::size_t ic) {
        PointId c = point_avoiding(plane, ic, std::span(ex.data(), 2));
        ex[2] = plane.generator_of(c);
        ch.each(n - 3 * q, [&](std::size_t ix) {
          PointId x = point_avoiding(plane, ix, ex);
          auto cfg = pi_configuration(plane, a, b, c, x);
          if (!cfg) {
            ++t.skipped;
            return;
          }
          if (!cfg->pqx) {
            ++t.degenerate;
            return;
          }
          visit(*cfg);
        });
      });
    });
  });
}

}  // namespace laguerre::detail
