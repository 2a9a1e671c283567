// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "opiallab/emdenfowler.hpp"
#include "opiallab/inequalities.hpp"
#include "opiallab/variational.hpp"

// Machine-readable forms of the reports. Object keys are emitted in the
// documented order. Report objects carry exactly their own fields; the
// document-level `schema_version` lives in the envelope.
namespace opiallab::report_io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {schema_version, kind} followed by the members of `body`.
Json envelope(std::string_view kind, const Json& body = Json::object());

/// Flat object with keys name, lhs, rhs, constant, ratio, holds, margin.
Json to_json(const inequalities::CheckReport& report);

/// p, L, c_maximized, c_closed_form, c_paper_printed, rel_diff_max_closed,
/// rel_diff_max_printed, iterations, converged, maximizer {length, values}.
Json to_json(const variational::ConstantReport& report);

/// Sidecar for an exported profile: p, L, mu, A, E, F and the three residuals.
Json extremal_sidecar(const emdenfowler::ExtremalProfile& profile);

std::string check_csv_header();
std::string check_csv_row(const inequalities::CheckReport& report);

std::string constant_csv_header();
std::string constant_csv_row(const variational::ConstantReport& report);

/// Shortest round-trip decimal form of a double (what the JSON writer uses).
std::string format_number(double value);

/// Document text: two-space indentation, trailing newline.
std::string dump(const Json& document);

}  // namespace opiallab::report_io
