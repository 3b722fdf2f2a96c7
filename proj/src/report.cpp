#include "laguerre/report.hpp"

#include <algorithm>

namespace laguerre {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "Holds";
    case Verdict::Fails:
      return "Fails";
    case Verdict::Inconclusive:
      return "Inconclusive";
    case Verdict::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

void Tally::merge(const Tally& other) {
  configurations += other.configurations;
  skipped += other.skipped;
  degenerate += other.degenerate;
  violations += other.violations;
  for (const Witness& w : other.witnesses) {
    if (witnesses.size() >= kWitnessCap) break;
    witnesses.push_back(w);
  }
}

void CheckReport::absorb(const Tally& t) {
  configurations = t.configurations;
  skipped = t.skipped;
  degenerate = t.degenerate;
  violationCount = t.violations;
  violations = t.witnesses;
  finish_verdict();
}

void CheckReport::finish_verdict() {
  if (violationCount > 0)
    verdict = Verdict::Fails;
  else if (configurations > 0)
    verdict = Verdict::Holds;
  else
    verdict = Verdict::Inconclusive;
}

void CheckReport::add_property(const std::string& name, const Tally& t) {
  properties.push_back({name, t.configurations, t.skipped, t.violations});
  configurations += t.configurations;
  skipped += t.skipped;
  degenerate += t.degenerate;
  violationCount += t.violations;
  for (const Witness& w : t.witnesses)
    if (violations.size() < Tally::kWitnessCap) violations.push_back(w);
}

void CheckReport::measure(const std::string& name, std::uint64_t value) {
  auto it = std::find_if(measurements.begin(), measurements.end(),
                         [&](const Measurement& m) { return m.name == name; });
  if (it == measurements.end())
    measurements.push_back({name, value});
  else
    it->value += value;
}

void CheckReport::merge(const CheckReport& other) {
  configurations += other.configurations;
  skipped += other.skipped;
  degenerate += other.degenerate;
  violationCount += other.violationCount;
  for (const Witness& w : other.violations)
    if (violations.size() < Tally::kWitnessCap) violations.push_back(w);
  for (const PropertyTally& p : other.properties) {
    auto it = std::find_if(properties.begin(), properties.end(),
                           [&](const PropertyTally& mine) { return mine.name == p.name; });
    if (it == properties.end()) {
      properties.push_back(p);
    } else {
      it->tested += p.tested;
      it->skipped += p.skipped;
      it->violations += p.violations;
    }
  }
  for (const Measurement& m : other.measurements) measure(m.name, m.value);
}

}  // namespace laguerre
