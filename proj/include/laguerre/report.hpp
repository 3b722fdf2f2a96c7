#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laguerre/plane.hpp"

namespace laguerre {

/// SplitMix64. state += 0x9E3779B97F4A7C15, then the output is the state
/// mixed by xor-shift-multiply rounds (30, 0xBF58476D1CE4E5B9),
/// (27, 0x94D049BB133111EB) and a final xor-shift by 31.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n): the high 64 bits of next() * n.
  std::uint64_t below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// Stream for sample number `index` under master seed `seed`: the first
  /// output of SplitMix64(seed + index * 0x9E3779B97F4A7C15) as a new seed.
  static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 mixer(seed + index * 0x9E3779B97F4A7C15ULL);
    return SplitMix64(mixer.next());
  }

 private:
  std::uint64_t state_;
};

struct CheckMode {
  enum class Kind { Exhaustive, Sample };
  Kind kind = Kind::Exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static CheckMode exhaustive() { return {}; }
  static CheckMode sample(std::uint64_t count, std::uint64_t seed) {
    return {Kind::Sample, count, seed};
  }
  bool sampled() const noexcept { return kind == Kind::Sample; }
  friend bool operator==(const CheckMode&, const CheckMode&) = default;
};

enum class Verdict { Holds, Fails, Inconclusive, NotApplicable };
const char* to_string(Verdict v);

/// A configuration that violates the checked statement. Points and circles
/// are listed in the checker-specific order documented next to each checker.
struct Witness {
  std::string label;
  std::vector<PointId> points;
  std::vector<CircleId> circles;
  std::string detail;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Per-property counters, used by suites that check several statements.
struct PropertyTally {
  std::string name;
  std::uint64_t tested = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  friend bool operator==(const PropertyTally&, const PropertyTally&) = default;
};

/// Counters accumulated by one worker; merged associatively in a fixed order.
struct Tally {
  static constexpr std::size_t kWitnessCap = 16;

  std::uint64_t configurations = 0;
  std::uint64_t skipped = 0;
  /// Hypothesis met but an object the statement refers to does not exist.
  std::uint64_t degenerate = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;

  void violation(Witness w) {
    ++violations;
    if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(w));
  }
  void merge(const Tally& other);
};

/// A measured count that is reported but never affects the verdict.
struct Measurement {
  std::string name;
  std::uint64_t value = 0;
  friend bool operator==(const Measurement&, const Measurement&) = default;
};

struct CheckReport {
  std::string check;
  std::size_t q = 0;
  std::string model;
  CheckMode mode;
  std::uint64_t configurations = 0;
  std::uint64_t skipped = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t violationCount = 0;
  std::vector<Witness> violations;
  std::vector<PropertyTally> properties;
  std::vector<Measurement> measurements;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<double> elapsedSeconds;

  /// Fills counters from a tally and derives the verdict: Fails iff any
  /// violation, Holds when configurations were tested, else Inconclusive.
  void absorb(const Tally& t);
  void finish_verdict();

  /// Adds a named property and folds its counts into the totals.
  void add_property(const std::string& name, const Tally& t);
  /// Adds to a measurement, creating it at zero first.
  void measure(const std::string& name, std::uint64_t value);
  /// Folds another report's counters, properties (by name), measurements
  /// and witnesses into this one. Does not touch the verdict.
  void merge(const CheckReport& other);
};

}  // namespace laguerre
