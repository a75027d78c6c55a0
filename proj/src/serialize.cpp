#include "toledo/serialize.hpp"

#include <sstream>

namespace toledo {

namespace {

Json rational_json(const Rational& r) { return rational_to_short_string(r); }

Json degree_json(const Integer& d) {
  if (!d.fits_slong_p()) throw ParameterOutOfRange("degree " + d.get_str() + " does not fit in 64 bits");
  return d.get_si();
}

std::string cell(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string decimal_string(const Rational& x, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Integer scaled = floor(x * Rational(scale));
  const bool negative = sgn(scaled) < 0;
  std::string body = Integer(abs(scaled)).get_str();
  if (digits == 0) return (negative ? "-" : "") + body;
  if (body.size() <= digits) body = std::string(digits + 1 - body.size(), '0') + body;
  body.insert(body.size() - digits, ".");
  return (negative ? "-" : "") + body;
}

Json scalar_json(const FieldScalar& x) { return x.to_string(); }

Json matrix_json(const MatrixF& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json group_json(const GroupSpec& spec) {
  Json j{{"family", family_tag(spec.family)}, {"name", spec.name()}};
  if (spec.family == Family::SuPQ) {
    j["p"] = spec.p;
    j["q"] = spec.q;
  } else {
    j["n"] = spec.n;
  }
  return j;
}

Json algebra_json(const RealLieAlgebra& g) {
  Json basis = Json::array();
  for (std::size_t k = 0; k < g.dim(); ++k) basis.push_back({{"label", g.label(k)}, {"matrix", matrix_json(g.element(k))}});
  Json constants = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      for (const auto& [k, c] : g.bracket(i, j)) constants.push_back({i, j, k, rational_to_short_string(c)});
    }
  }
  return {{"group", group_json(g.spec())}, {"dim", g.dim()}, {"basis", basis}, {"structure_constants", constants}};
}

Json certificate_json(const AdmissibilityCertificate& cert) {
  Json j{{"admissible", cert.admissible()},
         {"faithful", cert.faithful},
         {"central_blocks", cert.central_blocks},
         {"off_diagonal", cert.off_diagonal},
         {"homomorphism", cert.homomorphism},
         {"dim_v", cert.dim_v},
         {"dim_w", cert.dim_w}};
  if (!cert.admissible()) {
    j["failed"] = condition_name(cert.failed);
    j["failure"] = cert.failure;
    if (cert.witness) j["witness"] = matrix_json(*cert.witness);
  }
  return j;
}

std::vector<std::pair<std::string, std::string>> embedding_statuses(const EmbeddingCheck& check) {
  const std::pair<const char*, bool> steps[] = {{"s_involution", check.s_involution},
                                                {"t_unitary", check.t_unitary},
                                                {"block_formula", check.block_formula},
                                                {"su_membership", check.su_membership},
                                                {"trace_compatible", check.trace_compatible}};
  std::vector<std::pair<std::string, std::string>> out;
  bool failed = false;
  for (const auto& [name, ok] : steps) {
    out.emplace_back(name, failed ? "skipped" : (ok ? "pass" : "fail"));
    failed = failed || !ok;
  }
  return out;
}

Json embedding_check_json(const EmbeddingCheck& check) {
  Json steps = Json::object();
  for (const auto& [name, status] : embedding_statuses(check)) steps[name] = status;
  Json j{{"ok", check.ok()}, {"checks", steps}};
  if (!check.ok()) {
    j["failure"] = check.failure;
    if (check.failing_index) j["failing_index"] = *check.failing_index;
    if (check.witness) j["witness"] = matrix_json(*check.witness);
  }
  return j;
}

Json identity_check_json(const IdentityCheck& check) {
  Json j{{"name", check.name}, {"status", check.pass ? "pass" : "fail"}};
  if (check.witness) j["witness"] = matrix_json(*check.witness);
  return j;
}

Json identity_report_json(const IdentityReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(identity_check_json(c));
  return {{"seed", report.seed},     {"dim_v", report.dim_v}, {"dim_w", report.dim_w},
          {"mode", report.mode},     {"rep", report.rep},     {"checks", checks},
          {"pass", report.all_pass()}};
}

Json degree_row_json(const DegreeRow& row) {
  return {{"degree", degree_json(row.degree)},
          {"coeff", rational_json(row.coeff)},
          {"gate", gate_name(row.gate)},
          {"margin", row.margin}};
}

Json report_json(const MWReport& report) {
  Json table = Json::array();
  for (const auto& row : report.table) table.push_back(degree_row_json(row));
  Json identities{{"seed", report.identities.seed},
                  {"trials", report.identities.trials},
                  {"passed", report.identities.passed}};
  return {{"schema", kReportSchemaVersion},
          {"group", group_json(report.group)},
          {"rank", report.rank},
          {"p_x", report.p_x},
          {"c_sigma", rational_json(report.c_sigma)},
          {"vol", rational_json(report.vol)},
          {"representation", report.representation},
          {"bound",
           {{"lo", rational_json(report.bound.interval.lo())},
            {"hi", rational_json(report.bound.interval.hi())},
            {"decimal", decimal_string(report.bound.interval.lo(), 12)},
            {"pi_bits", report.bound.pi_bits},
            {"max_degree", degree_json(report.bound.max_degree)}}},
          {"toledo_table", table},
          {"table_truncated", report.table_truncated},
          {"certificates", {{"admissibility", certificate_json(report.admissibility)}, {"identities", identities}}},
          {"inputs", {{"seed", report.options.seed}, {"trials", report.options.trials}, {"pi_bits", report.options.pi_bits}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string degree_csv(const std::vector<DegreeRow>& rows) {
  std::ostringstream out;
  out << "degree,coeff,gate,margin\n";
  for (const auto& r : rows) {
    out << r.degree.get_str() << ',' << rational_to_short_string(r.coeff) << ',' << gate_name(r.gate) << ','
        << (r.margin ? "margin" : "") << '\n';
  }
  return out.str();
}

std::string degree_text_table(const std::vector<DegreeRow>& rows) {
  std::size_t wd = 6;
  std::size_t wc = 5;
  for (const auto& r : rows) {
    wd = std::max(wd, r.degree.get_str().size());
    wc = std::max(wc, rational_to_short_string(r.coeff).size());
  }
  std::ostringstream out;
  out << cell("degree", wd) << "  " << cell("coeff", wc) << "  gate\n";
  for (const auto& r : rows) {
    out << cell(r.degree.get_str(), wd) << "  " << cell(rational_to_short_string(r.coeff), wc) << "  "
        << gate_name(r.gate) << (r.margin ? "  (margin)" : "") << '\n';
  }
  return out.str();
}

std::string report_text(const MWReport& report) {
  std::ostringstream out;
  out << "group          " << report.group.name() << '\n'
      << "representation " << report.representation << '\n'
      << "rank           " << report.rank << '\n'
      << "p_X            " << report.p_x << '\n'
      << "c_sigma        " << rational_to_short_string(report.c_sigma) << '\n'
      << "vol            " << rational_to_short_string(report.vol) << '\n'
      << "bound          " << decimal_string(report.bound.interval.lo(), 12) << "... (pi bits "
      << report.bound.pi_bits << ")\n"
      << "max_degree     " << report.bound.max_degree.get_str() << '\n'
      << "identities     " << report.identities.passed << '/' << report.identities.trials << " passed (seed "
      << report.identities.seed << ")\n\n";
  out << degree_text_table(report.table);
  if (report.table_truncated) out << "(table truncated to |degree| <= " << report.options.table_degrees << ")\n";
  return out.str();
}

std::string report_csv(const MWReport& report) {
  std::ostringstream out;
  out << "group,rank,p_x,c_sigma,vol,bound_lo,bound_hi,max_degree\n"
      << '"' << report.group.name() << "\"," << report.rank << ',' << report.p_x << ','
      << rational_to_short_string(report.c_sigma) << ',' << rational_to_short_string(report.vol) << ','
      << rational_to_short_string(report.bound.interval.lo()) << ','
      << rational_to_short_string(report.bound.interval.hi()) << ',' << report.bound.max_degree.get_str() << '\n';
  return out.str();
}

}  // namespace toledo
