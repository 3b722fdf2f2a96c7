#include "laguerre/report_io.hpp"

#include <ostream>
#include <sstream>

#include "laguerre/errors.hpp"

namespace laguerre {

namespace {

Json circle_json(const LaguerrePlane& plane, CircleId k) {
  Json c;
  c["id"] = k.value;
  if (auto coef = plane.coefficients(k))
    c["coef"] = Json::array({coef->a.index, coef->b.index, coef->c.index});
  else
    c["coef"] = nullptr;
  return c;
}

std::uint64_t get_count(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) throw FormatError(std::string("report lacks '") + key + "'");
  return j[key].get<std::uint64_t>();
}

std::string get_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw FormatError(std::string("report lacks '") + key + "'");
  return j[key].get<std::string>();
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::Holds, Verdict::Fails, Verdict::Inconclusive, Verdict::NotApplicable})
    if (s == to_string(v)) return v;
  throw FormatError("unknown verdict '" + s + "'");
}

}  // namespace

Json report_to_json(const LaguerrePlane& plane, const CheckReport& report, bool timing) {
  Json j;
  j["check"] = report.check;
  j["q"] = report.q;
  j["model"] = report.model;
  j["mode"] = report.mode.sampled() ? "sample" : "exhaustive";
  if (report.mode.sampled()) {
    j["samples"] = report.mode.count;
    j["seed"] = report.mode.seed;
  } else {
    j["samples"] = nullptr;
    j["seed"] = nullptr;
  }
  j["configurations"] = report.configurations;
  j["skipped"] = report.skipped;
  j["degenerate"] = report.degenerate;
  j["violationCount"] = report.violationCount;
  Json violations = Json::array();
  for (const Witness& w : report.violations) {
    Json v;
    v["label"] = w.label;
    Json pts = Json::array();
    for (PointId p : w.points) pts.push_back(p.value);
    v["points"] = pts;
    Json cs = Json::array();
    for (CircleId k : w.circles) cs.push_back(circle_json(plane, k));
    v["circles"] = cs;
    v["detail"] = w.detail;
    violations.push_back(v);
  }
  j["violations"] = violations;
  Json props = Json::array();
  for (const PropertyTally& p : report.properties)
    props.push_back({{"name", p.name}, {"tested", p.tested}, {"skipped", p.skipped}, {"violations", p.violations}});
  j["properties"] = props;
  Json meas = Json::object();
  for (const Measurement& m : report.measurements) meas[m.name] = m.value;
  j["measurements"] = meas;
  j["verdict"] = to_string(report.verdict);
  if (timing && report.elapsedSeconds)
    j["elapsedSeconds"] = *report.elapsedSeconds;
  else
    j["elapsedSeconds"] = nullptr;
  return j;
}

CheckReport report_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("report must be a JSON object");
  CheckReport r;
  r.check = get_string(j, "check");
  r.q = get_count(j, "q");
  r.model = get_string(j, "model");
  std::string mode = get_string(j, "mode");
  if (mode == "sample")
    r.mode = CheckMode::sample(get_count(j, "samples"), get_count(j, "seed"));
  else if (mode != "exhaustive")
    throw FormatError("unknown mode '" + mode + "'");
  r.configurations = get_count(j, "configurations");
  r.skipped = get_count(j, "skipped");
  r.degenerate = get_count(j, "degenerate");
  r.violationCount = get_count(j, "violationCount");
  if (!j.contains("violations") || !j["violations"].is_array()) throw FormatError("report lacks 'violations'");
  for (const Json& v : j["violations"]) {
    Witness w;
    w.label = get_string(v, "label");
    w.detail = v.value("detail", "");
    if (!v.contains("points") || !v["points"].is_array() || !v.contains("circles") || !v["circles"].is_array())
      throw FormatError("witness lacks points or circles");
    for (const Json& p : v["points"]) {
      if (!p.is_number_unsigned()) throw FormatError("point ids must be non-negative integers");
      w.points.push_back(PointId{p.get<std::uint32_t>()});
    }
    for (const Json& c : v["circles"]) w.circles.push_back(CircleId{static_cast<std::uint32_t>(get_count(c, "id"))});
    r.violations.push_back(std::move(w));
  }
  if (j.contains("properties"))
    for (const Json& p : j["properties"])
      r.properties.push_back(
          {get_string(p, "name"), get_count(p, "tested"), get_count(p, "skipped"), get_count(p, "violations")});
  if (j.contains("measurements"))
    for (const auto& [name, value] : j["measurements"].items()) r.measurements.push_back({name, value.get<std::uint64_t>()});
  r.verdict = verdict_from(get_string(j, "verdict"));
  return r;
}

std::string csv_header() {
  return "check,q,model,mode,samples,seed,configurations,skipped,degenerate,violations,verdict";
}

std::string csv_row(const CheckReport& r) {
  std::ostringstream out;
  // Oval model names contain commas.
  out << r.check << ',' << r.q << ",\"" << r.model << "\"," << (r.mode.sampled() ? "sample" : "exhaustive") << ',';
  if (r.mode.sampled()) out << r.mode.count << ',' << r.mode.seed;
  else out << ',';
  out << ',' << r.configurations << ',' << r.skipped << ',' << r.degenerate << ',' << r.violationCount << ','
      << to_string(r.verdict);
  return out.str();
}

void write_text(std::ostream& out, const LaguerrePlane& plane, const CheckReport& r) {
  out << r.check << " on " << r.model << " q=" << r.q << ": " << to_string(r.verdict) << '\n';
  out << "  mode " << (r.mode.sampled() ? "sample" : "exhaustive");
  if (r.mode.sampled()) out << " (" << r.mode.count << " samples, seed " << r.mode.seed << ")";
  out << ", " << r.configurations << " tested, " << r.skipped << " skipped, " << r.degenerate << " degenerate, "
      << r.violationCount << " violations\n";
  for (const PropertyTally& p : r.properties)
    out << "  " << p.name << ": " << p.tested << " tested, " << p.skipped << " skipped, " << p.violations
        << " violations\n";
  for (const Measurement& m : r.measurements) out << "  " << m.name << " = " << m.value << '\n';
  for (const Witness& w : r.violations) {
    out << "  witness " << w.label << ':';
    for (PointId p : w.points) out << ' ' << plane.describe_point(p);
    for (CircleId k : w.circles) out << ' ' << plane.describe_circle(k);
    if (!w.detail.empty()) out << " (" << w.detail << ')';
    out << '\n';
  }
}

Json candidate_to_json(const LaguerrePlane& plane, const DisjointPair& pair, const MoebiusCandidate& c) {
  Json j;
  j["check"] = "moebius";
  j["q"] = plane.order();
  j["model"] = plane.model().name();
  j["K"] = circle_json(plane, pair.k);
  j["L"] = circle_json(plane, pair.l);
  j["points"] = c.point_count();
  Json fixed = Json::array();
  for (CircleId k : c.fixed) fixed.push_back(k.value);
  j["fixedCircles"] = fixed;
  auto census = [&](const std::vector<std::vector<std::uint32_t>>& blocks) {
    Json out = Json::object();
    for (auto [size, count] : c.size_census(blocks)) out[std::to_string(size)] = count;
    return out;
  };
  auto list = [](const std::vector<std::vector<std::uint32_t>>& blocks) {
    Json out = Json::array();
    for (const auto& b : blocks) out.push_back(b);
    return out;
  };
  j["blocksA"] = list(c.blocksA);
  j["blocksB"] = list(c.blocksB);
  j["blockSizes"] = {{"A", census(c.blocksA)}, {"B", census(c.blocksB)}};
  j["axiomReport"] = report_to_json(plane, c.axiomReport);
  return j;
}

}  // namespace laguerre
