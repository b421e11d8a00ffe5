#pragma once

// Machine-readable verification report (JSON, schema 1). The layout is
// documented in docs/report-schema.md.

#include <string>

#include <json.hpp>

#include "hermu/prover.hpp"

namespace hermu {

inline constexpr int kReportSchema = 1;

nlohmann::json claim_json(const Claim& c);
nlohmann::json case_json(const HardCaseReport& r);
nlohmann::json lattice_json(const CaseReport& r);

/// The whole report. Timing lives under the top-level "timing" key only, so
/// dropping it leaves a document that depends on the inputs alone.
nlohmann::json report_json(const Summary& s, bool with_timing = true);

/// Pretty-printed report followed by a newline.
std::string render_report(const Summary& s, bool with_timing = true);

/// Writes render_report(s) to `path`; throws Error(ParseError) if the file
/// cannot be opened.
void write_report(const Summary& s, const std::string& path);

}  // namespace hermu
