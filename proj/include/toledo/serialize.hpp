#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toledo/report.hpp"

namespace toledo {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

/// floor(x * 10^digits) / 10^digits written in positional notation.
std::string decimal_string(const Rational& x, unsigned digits);

Json scalar_json(const FieldScalar& x);
Json matrix_json(const MatrixF& m);
Json group_json(const GroupSpec& spec);
/// Basis matrices with labels and the nonzero structure constants
/// [i, j, k, c] for i < j.
Json algebra_json(const RealLieAlgebra& g);
Json certificate_json(const AdmissibilityCertificate& cert);
/// (check name, "pass" | "fail" | "skipped") in evaluation order; checks
/// after the first failure are skipped.
std::vector<std::pair<std::string, std::string>> embedding_statuses(const EmbeddingCheck& check);
Json embedding_check_json(const EmbeddingCheck& check);
Json identity_check_json(const IdentityCheck& check);
Json identity_report_json(const IdentityReport& report);
Json degree_row_json(const DegreeRow& row);
Json report_json(const MWReport& report);

/// Two-space indented dump with a trailing newline; keys are sorted.
std::string dump(const Json& j);

/// "degree,coeff,gate,margin" header plus one line per row.
std::string degree_csv(const std::vector<DegreeRow>& rows);
/// Fixed-width text table of the same rows.
std::string degree_text_table(const std::vector<DegreeRow>& rows);
/// Human-readable summary of a report.
std::string report_text(const MWReport& report);
/// Summary row of a report in CSV form.
std::string report_csv(const MWReport& report);

}  // namespace toledo
