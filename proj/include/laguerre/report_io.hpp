#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "laguerre/moebius.hpp"
#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"

namespace laguerre {

using Json = nlohmann::ordered_json;

/// Report as JSON with a fixed key order:
///   check, q, model, mode, samples, seed, configurations, skipped,
///   degenerate, violationCount,
///   violations: [{label, points, circles: [{id, coef}], detail}],
///   properties: [{name, tested, skipped, violations}],
///   measurements: {name: value}, verdict, elapsedSeconds
/// samples and seed are null in exhaustive mode; coef is null on planes
/// without coordinates; elapsedSeconds is null unless timing is requested.
Json report_to_json(const LaguerrePlane& plane, const CheckReport& report, bool timing = false);

/// Reads back what report_to_json wrote (elapsedSeconds and coefficients
/// are ignored). Throws FormatError.
CheckReport report_from_json(const Json& j);

/// One row per report: check,q,model,mode,samples,seed,configurations,
/// skipped,degenerate,violations,verdict.
std::string csv_header();
std::string csv_row(const CheckReport& report);

/// Human-oriented summary; not a stable format.
void write_text(std::ostream& out, const LaguerrePlane& plane, const CheckReport& report);

Json candidate_to_json(const LaguerrePlane& plane, const DisjointPair& pair, const MoebiusCandidate& candidate);

}  // namespace laguerre
