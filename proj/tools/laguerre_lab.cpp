// laguerre-lab: build finite Laguerre planes and run configuration checks.
//
// Exit codes: 0 nothing fails, 1 some check fails (or a witness does not
// replay), 2 usage error, 3 internal invariant breach.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "laguerre/axioms.hpp"
#include "laguerre/checkers.hpp"
#include "laguerre/errors.hpp"
#include "laguerre/models.hpp"
#include "laguerre/moebius.hpp"
#include "laguerre/report_io.hpp"
#include "laguerre/symmetry.hpp"

using namespace laguerre;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct PlaneOptions {
  unsigned q = 0;
  std::string model = "miquelian";
  std::string ovalTable;
  std::string planeFile;

  void add_to(CLI::App* app) {
    app->add_option("--q", q, "plane order");
    app->add_option("--model", model, "miquelian, oval (with --oval-table) or oval:v0,v1,...");
    app->add_option("--oval-table", ovalTable, "file with one 'x o(x)' line per field element");
    app->add_option("--plane", planeFile, "plane file written by export-plane");
  }

  LaguerrePlane build() const {
    if (!planeFile.empty()) {
      std::ifstream in(planeFile);
      if (!in) throw UsageError("cannot open " + planeFile);
      return read_plane(in);
    }
    if (q == 0) throw UsageError("--q is required");
    if (!supported_order(q)) throw UsageError("unsupported order " + std::to_string(q));
    if (model == "oval") {
      if (ovalTable.empty()) throw UsageError("--model oval needs --oval-table");
      std::ifstream in(ovalTable);
      if (!in) throw UsageError("cannot open " + ovalTable);
      FiniteField field = make_field_of_order(q);
      return oval_plane(q, read_oval_table(in, field));
    }
    return build_model(model_from_name(q, model));
  }
};

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("LAGUERRE_LAB_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("LAGUERRE_LAB_SEED is not a number");
}

CheckMode make_mode(const std::string& mode, std::uint64_t samples, std::optional<std::uint64_t> seed) {
  if (mode == "exhaustive") return CheckMode::exhaustive();
  if (mode != "sample") throw UsageError("--mode must be exhaustive or sample");
  if (!seed) seed = env_seed();
  if (!seed) throw UsageError("sample mode needs --seed or LAGUERRE_LAB_SEED");
  if (samples == 0) throw UsageError("--samples must be positive");
  return CheckMode::sample(samples, *seed);
}

std::vector<std::string> split_checks(const std::string& list) {
  if (list == "all") return check_ids();
  std::vector<std::string> ids;
  std::stringstream in(list);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (!is_check_id(id)) throw UsageError("unknown check '" + id + "'");
    ids.push_back(id);
  }
  if (ids.empty()) throw UsageError("no checks given");
  return ids;
}

// Writes to --output when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit(std::ostream& out, const std::string& format, const LaguerrePlane& plane,
          const std::vector<CheckReport>& reports, bool timing) {
  if (format == "json") {
    Json doc;
    doc["reports"] = Json::array();
    for (const CheckReport& r : reports) doc["reports"].push_back(report_to_json(plane, r, timing));
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << csv_header() << '\n';
    for (const CheckReport& r : reports) out << csv_row(r) << '\n';
  } else {
    for (const CheckReport& r : reports) write_text(out, plane, r);
  }
}

bool any_fails(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (r.verdict == Verdict::Fails) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Laguerre plane verification"};
  app.require_subcommand(1);

  PlaneOptions planeOpts;
  std::string format = "json", output, mode = "exhaustive";
  std::uint64_t samples = 100000;
  std::optional<std::uint64_t> seed;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool timing = false;

  auto add_common = [&](CLI::App* sub) {
    planeOpts.add_to(sub);
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", output, "write the report here instead of stdout");
  };

  std::string checks = "all";
  CLI::App* check = app.add_subcommand("check", "run configuration checks");
  add_common(check);
  check->add_option("--checks", checks, "comma-separated check ids, or all");
  check->add_option("--mode", mode, "exhaustive or sample");
  check->add_option("--samples", samples, "sample count");
  check->add_option("--seed", seed, "master seed (default LAGUERRE_LAB_SEED)");
  check->add_option("--workers", workers, "worker threads; results do not depend on this");
  check->add_flag("--timing", timing, "fill elapsedSeconds");

  std::string kText, lText, exportPath;
  bool verify = false;
  CLI::App* dts = app.add_subcommand("dts", "build the double tangency symmetry of two circles");
  add_common(dts);
  dts->add_option("--k", kText, "circle as a,b,c or #id")->required();
  dts->add_option("--l", lText, "circle as a,b,c or #id")->required();
  dts->add_flag("--verify", verify, "verify its properties");
  dts->add_option("--export", exportPath, "write the permutation to this file");

  CLI::App* moebius = app.add_subcommand("moebius", "extract the incidence structure of fixed circles");
  add_common(moebius);
  moebius->add_option("--k", kText, "circle as a,b,c or #id (default: search)");
  moebius->add_option("--l", lText, "circle as a,b,c or #id (default: search)");
  moebius->add_option("--seed", seed, "start offset of the pair search (default LAGUERRE_LAB_SEED, else 0)");

  std::string reportPath;
  CLI::App* replay = app.add_subcommand("replay", "re-validate the witnesses of a JSON report");
  replay->add_option("--report", reportPath, "report file")->required();
  replay->add_option("--plane", planeOpts.planeFile, "plane file for reports on abstract planes");

  CLI::App* exportPlane = app.add_subcommand("export-plane", "write a plane in the text format");
  planeOpts.add_to(exportPlane);
  exportPlane->add_option("--output", output, "destination (default stdout)");

  CLI::App* validate = app.add_subcommand("validate", "check the Laguerre plane axioms on a plane file");
  validate->add_option("--plane", planeOpts.planeFile, "plane file")->required();
  validate->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) {
      LaguerrePlane plane = planeOpts.build();
      CheckMode m = make_mode(mode, samples, seed);
      std::vector<CheckReport> reports;
      for (const std::string& id : split_checks(checks)) reports.push_back(run_check(plane, id, m, workers));
      Output out(output);
      emit(out.stream(), format, plane, reports, timing);
      return any_fails(reports) ? 1 : 0;
    }

    if (*dts) {
      LaguerrePlane plane = planeOpts.build();
      CircleId k = parse_circle(plane, kText), l = parse_circle(plane, lText);
      Automorphism phi = build_dts(plane, k, l);
      SymmetryClassification c = classify_symmetry(plane, phi, k, l);
      std::vector<CheckReport> reports;
      if (verify) reports.push_back(verify_dts(plane, phi, k, l));
      if (!exportPath.empty()) {
        std::ofstream file(exportPath);
        if (!file) throw UsageError("cannot write " + exportPath);
        write_automorphism(file, plane, phi);
      }
      Output out(output);
      if (format == "json") {
        Json doc;
        doc["K"] = format_circle(plane, k);
        doc["L"] = format_circle(plane, l);
        doc["classification"] = to_string(c.kind);
        Json gens = Json::array();
        for (GeneratorId g : c.generators) gens.push_back(g.value);
        doc["fixedGenerators"] = gens;
        doc["fixedCircle"] = c.fixedCircle ? Json(format_circle(plane, *c.fixedCircle)) : Json(nullptr);
        doc["fixedPoints"] = c.fixedPoints;
        doc["movedWithinGenerator"] = c.movedWithinGenerator;
        doc["details"] = c.details;
        Json img = Json::array();
        for (PointId y : phi.image()) img.push_back(y.value);
        doc["image"] = img;
        doc["reports"] = Json::array();
        for (const CheckReport& r : reports) doc["reports"].push_back(report_to_json(plane, r));
        out.stream() << doc.dump(2) << '\n';
      } else {
        out.stream() << "S_{K,L} for K=" << format_circle(plane, k) << " L=" << format_circle(plane, l) << ": "
                     << to_string(c.kind) << ", " << c.fixedPoints << " fixed points, " << c.generators.size()
                     << " pointwise fixed generators\n";
        if (!c.details.empty()) out.stream() << "  " << c.details << '\n';
        emit(out.stream(), format, plane, reports, false);
      }
      return any_fails(reports) ? 1 : 0;
    }

    if (*moebius) {
      LaguerrePlane plane = planeOpts.build();
      if (!seed) seed = env_seed();
      DisjointPair pair;
      if (!kText.empty() || !lText.empty()) {
        if (kText.empty() || lText.empty()) throw UsageError("give both --k and --l, or neither");
        pair.k = parse_circle(plane, kText);
        pair.l = parse_circle(plane, lText);
        pair.phi = build_dts(plane, pair.k, pair.l);
      } else {
        pair = find_disjoint_pair(plane, seed.value_or(0));
      }
      MoebiusCandidate candidate = moebius_extract(plane, pair.phi);
      Output out(output);
      if (format == "json") {
        out.stream() << candidate_to_json(plane, pair, candidate).dump(2) << '\n';
      } else {
        out.stream() << "pair K=" << format_circle(plane, pair.k) << " L=" << format_circle(plane, pair.l) << ": "
                     << candidate.point_count() << " points, " << candidate.blocksA.size() << " type A blocks, "
                     << candidate.blocksB.size() << " type B blocks\n";
        for (auto [size, count] : candidate.size_census(candidate.blocksA))
          out.stream() << "  type A size " << size << ": " << count << '\n';
        for (auto [size, count] : candidate.size_census(candidate.blocksB))
          out.stream() << "  type B size " << size << ": " << count << '\n';
        write_text(out.stream(), plane, candidate.axiomReport);
      }
      // The axiom report is exploratory; its verdict does not set the exit code.
      return 0;
    }

    if (*replay) {
      std::ifstream in(reportPath);
      if (!in) throw UsageError("cannot open " + reportPath);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw FormatError(std::string("report is not JSON: ") + e.what());
      }
      std::vector<Json> items;
      if (doc.contains("reports"))
        items.assign(doc["reports"].begin(), doc["reports"].end());
      else if (doc.contains("axiomReport"))
        items.push_back(doc["axiomReport"]);
      else
        items.push_back(doc);
      std::size_t total = 0, confirmed = 0;
      for (const Json& item : items) {
        CheckReport r = report_from_json(item);
        if (r.violations.empty()) continue;
        std::optional<LaguerrePlane> plane;
        if (!planeOpts.planeFile.empty())
          plane.emplace(planeOpts.build());
        else if (r.model == "abstract")
          throw UsageError("report on an abstract plane; pass --plane");
        else
          plane.emplace(build_model(model_from_name(static_cast<unsigned>(r.q), r.model)));
        for (const Witness& w : r.violations) {
          ++total;
          bool ok = replay_witness(*plane, r.check, w);
          if (ok) ++confirmed;
          std::cout << (ok ? "confirmed " : "NOT confirmed ") << r.check << ' ' << w.label << '\n';
        }
      }
      std::cout << confirmed << " of " << total << " witnesses confirmed\n";
      return confirmed == total ? 0 : 1;
    }

    if (*exportPlane) {
      LaguerrePlane plane = planeOpts.build();
      Output out(output);
      write_plane(out.stream(), plane);
      return 0;
    }

    if (*validate) {
      std::ifstream in(planeOpts.planeFile);
      if (!in) throw UsageError("cannot open " + planeOpts.planeFile);
      LaguerrePlane plane = read_plane(in);
      CheckReport r = validate_laguerre_axioms(plane.structure());
      r.model = plane.model().name();
      emit(std::cout, format, plane, {r}, false);
      return r.verdict == Verdict::Holds ? 0 : 1;
    }
  } catch (const WellDefinednessFailure& e) {
    std::cerr << "internal invariant breach: " << e.what() << '\n';
    return 3;
  } catch (const NoDisjointPair& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const NotALaguerrePlane& e) {
    std::cerr << "not a Laguerre plane: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
