#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace toledo::cli {

namespace {

struct RawOptions {
  std::string group;
  int p = 0;
  int q = 0;
  int n = 0;
  std::string vol = "1";
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string format = "json";
  std::optional<unsigned> pi_bits;
  std::string output;
  std::string fault = "none";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  throw ParseError("unknown format: " + s);
}

Subcommand parse_subcommand(const std::string& s) {
  for (auto c : {Subcommand::Report, Subcommand::Verify, Subcommand::CheckEmbedding, Subcommand::ScanDegrees}) {
    if (subcommand_name(c) == s) return c;
  }
  throw ParseError("unknown subcommand: " + s);
}

unsigned checked_pi_bits(long long bits, const std::string& source) {
  if (bits < 8 || bits > static_cast<long long>(kPiBitsCap)) {
    throw UsageError(source + " must be in [8, " + std::to_string(kPiBitsCap) + "], got " + std::to_string(bits));
  }
  return static_cast<unsigned>(bits);
}

std::size_t default_trials(Subcommand c) {
  switch (c) {
    case Subcommand::Report:
      return 8;
    case Subcommand::Verify:
      return 20;
    default:
      return 0;
  }
}

CLI::App* add_command(CLI::App& app, Subcommand c, const std::string& description, RawOptions& raw) {
  CLI::App* sub = app.add_subcommand(subcommand_name(c), description);
  sub->add_option("--group", raw.group, "Group family")->required()->check(CLI::IsMember({"su", "sp"}));
  sub->add_option("--p", raw.p, "p of su(p,q)");
  sub->add_option("--q", raw.q, "q of su(p,q)");
  sub->add_option("--n", raw.n, "n of sp(2n,R)");
  sub->add_option("--vol", raw.vol, "Volume as an exact rational, e.g. 628/100")->capture_default_str();
  sub->add_option("--seed", raw.seed, "Seed for Higgs samples")->capture_default_str();
  if (c == Subcommand::Report || c == Subcommand::Verify) {
    sub->add_option("--trials", raw.trials,
                    "Number of Higgs samples (default " + std::to_string(default_trials(c)) + ")");
  }
  sub->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--pi-bits", raw.pi_bits, "Starting pi precision in bits (overrides MW_PI_BITS)");
  sub->add_option("--output", raw.output, "Write output to this file instead of stdout");
  sub->add_option("--inject-fault", raw.fault, "Test hook: sign-of-I or drop-sqrt2")
      ->group("Debug")
      ->check(CLI::IsMember({"none", "sign-of-I", "drop-sqrt2"}))
      ->capture_default_str();
  return sub;
}

CliConfig validate(Subcommand c, const RawOptions& raw, const CLI::App& sub,
                   const std::optional<std::string>& env_pi_bits) {
  CliConfig cfg;
  cfg.command = c;
  if (raw.group == "su") {
    if (sub.count("--n") > 0) throw UsageError("--n applies to --group sp");
    cfg.group = GroupSpec::su(raw.p, raw.q);
  } else {
    if (sub.count("--p") > 0 || sub.count("--q") > 0) throw UsageError("--p/--q apply to --group su");
    cfg.group = GroupSpec::sp(raw.n);
  }
  try {
    cfg.group.validate();
  } catch (const ParameterOutOfRange& e) {
    throw UsageError(e.what());
  }

  try {
    cfg.vol = parse_rational(raw.vol);
  } catch (const Error& e) {
    throw UsageError("--vol must be an exact rational such as 628/100: " + std::string(e.what()));
  }
  if (sgn(cfg.vol) <= 0) throw UsageError("--vol must be positive");

  cfg.seed = raw.seed;
  cfg.trials = raw.trials;
  if (c == Subcommand::Verify && cfg.trials < 1) throw UsageError("--trials must be >= 1");
  cfg.format = parse_format(raw.format);
  if (raw.pi_bits) {
    cfg.pi_bits = checked_pi_bits(*raw.pi_bits, "--pi-bits");
  } else if (env_pi_bits) {
    long long bits = 0;
    std::istringstream in(*env_pi_bits);
    if (!(in >> bits) || !in.eof()) throw UsageError("MW_PI_BITS is not an integer: " + *env_pi_bits);
    cfg.pi_bits = checked_pi_bits(bits, "MW_PI_BITS");
  }
  cfg.output = raw.output;
  cfg.fault = parse_fault(raw.fault);
  if (cfg.fault == Fault::DropSqrt2 && cfg.group.family != Family::Sp2N) {
    throw UsageError("--inject-fault drop-sqrt2 needs --group sp");
  }
  if (c == Subcommand::CheckEmbedding) {
    if (cfg.group.family != Family::Sp2N) throw UsageError("check-embedding needs --group sp");
    if (cfg.fault == Fault::SignOfI) throw UsageError("--inject-fault sign-of-I does not apply to check-embedding");
  }
  return cfg;
}

void write_error(std::ostream& err, const std::string& stage, const std::string& message) {
  err << Json{{"error", {{"stage", stage}, {"message", message}}}}.dump() << '\n';
}

void print_witness(std::ostream& err, const std::optional<MatrixF>& witness) {
  if (witness) err << "witness:\n" << witness->to_string() << '\n';
}

Json command_header(Subcommand c, const CliConfig& cfg) {
  return {{"schema", kReportSchemaVersion}, {"command", subcommand_name(c)}, {"group", group_json(cfg.group)}};
}

int run_report(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportOptions opts;
  opts.seed = cfg.seed;
  opts.trials = cfg.trials;
  opts.pi_bits = cfg.effective_pi_bits();
  opts.fault = cfg.fault;
  MWReport r;
  try {
    r = build_report(cfg.group, cfg.vol, opts);
  } catch (const ReportError& e) {
    write_error(err, e.stage(), e.what());
    return kExitFailure;
  }
  switch (cfg.format) {
    case OutputFormat::Json: {
      Json j = report_json(r);
      j["command"] = subcommand_name(Subcommand::Report);
      out << dump(j);
      break;
    }
    case OutputFormat::Csv:
      out << report_csv(r) << '\n' << degree_csv(r.table);
      break;
    case OutputFormat::Table:
      out << report_text(r);
      break;
  }
  return kExitOk;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<HermitianSymmetricSpace> space;
  try {
    space.emplace(build_space(cfg.group));
  } catch (const Error& e) {
    write_error(err, "algebra", e.what());
    return kExitFailure;
  }
  const AdmissibleRep rep = representation_for(*space, cfg.fault);
  const std::vector<IdentityCheck> structure = structure_checks(*space, rep, cfg.fault);

  std::optional<Rational> c_sigma;
  std::string c_sigma_error;
  try {
    c_sigma = compute_c_sigma(*space, rep);
  } catch (const Error& e) {
    c_sigma_error = e.what();
  }

  std::vector<IdentityReport> samples;
  if (c_sigma) {
    const auto modes = campaign_modes(rep.dim_v(), rep.dim_w());
    samples.reserve(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const HiggsSample s =
          make_sample(rep.dim_v(), rep.dim_w(), modes[t % modes.size()], trial_seed(cfg.seed, t));
      samples.push_back(run_identity_suite(s, rep, *c_sigma));
    }
  }

  const auto failed_structure =
      std::find_if(structure.begin(), structure.end(), [](const IdentityCheck& c) { return !c.pass; });
  const auto failed_sample =
      std::find_if(samples.begin(), samples.end(), [](const IdentityReport& r) { return !r.all_pass(); });
  const bool pass = failed_structure == structure.end() && c_sigma && failed_sample == samples.end();

  switch (cfg.format) {
    case OutputFormat::Json: {
      Json j = command_header(Subcommand::Verify, cfg);
      Json checks = Json::array();
      for (const auto& c : structure) checks.push_back(identity_check_json(c));
      Json trials = Json::array();
      for (const auto& s : samples) trials.push_back(identity_report_json(s));
      j["representation"] = rep.descriptor();
      j["c_sigma"] = c_sigma ? Json(rational_to_short_string(*c_sigma)) : Json(nullptr);
      j["seed"] = cfg.seed;
      j["trials"] = cfg.trials;
      j["structure"] = checks;
      j["samples"] = trials;
      j["pass"] = pass;
      out << dump(j);
      break;
    }
    case OutputFormat::Csv:
      out << "kind,index,name,seed,mode,status\n";
      for (std::size_t k = 0; k < structure.size(); ++k) {
        out << "structure," << k << ',' << structure[k].name << ",,," << (structure[k].pass ? "pass" : "fail") << '\n';
      }
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const IdentityCheck* f = samples[k].first_failure();
        out << "sample," << k << ',' << (f ? f->name : "all") << ',' << samples[k].seed << ',' << samples[k].mode
            << ',' << (f ? "fail" : "pass") << '\n';
      }
      break;
    case OutputFormat::Table:
      out << "group " << cfg.group.name() << "  representation " << rep.descriptor() << '\n';
      for (const auto& c : structure) out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << '\n';
      out << "c_sigma " << (c_sigma ? rational_to_short_string(*c_sigma) : "unavailable") << '\n';
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const IdentityCheck* f = samples[k].first_failure();
        out << "  trial " << k << "  " << samples[k].mode << "  seed " << samples[k].seed << "  "
            << (f ? "FAIL " + f->name : std::string("pass")) << '\n';
      }
      out << (pass ? "PASS" : "FAIL") << '\n';
      break;
  }

  if (failed_structure != structure.end()) {
    err << "verify failed: " << failed_structure->name << '\n';
    if (failed_structure->name == "admissible") {
      const AdmissibilityCertificate cert = certify_admissible(*space, rep, central_for(*space, cfg.fault));
      err << NotAdmissible(cert).what() << '\n';
    }
    print_witness(err, failed_structure->witness);
  } else if (!c_sigma) {
    err << "verify failed: c_sigma: " << c_sigma_error << '\n';
  } else if (failed_sample != samples.end()) {
    const IdentityCheck* f = failed_sample->first_failure();
    err << "verify failed: trial " << (failed_sample - samples.begin()) << " seed " << failed_sample->seed << ": "
        << f->name << '\n';
    print_witness(err, f->witness);
  }
  return pass ? kExitOk : kExitFailure;
}

int run_check_embedding(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<HermitianSymmetricSpace> space;
  try {
    space.emplace(build_space(cfg.group));
  } catch (const Error& e) {
    write_error(err, "algebra", e.what());
    return kExitFailure;
  }
  const EmbeddingData emb = embedding_for(static_cast<std::size_t>(cfg.group.n), cfg.fault);
  const EmbeddingCheck check = check_embedding(*space, emb);
  switch (cfg.format) {
    case OutputFormat::Json: {
      Json j = command_header(Subcommand::CheckEmbedding, cfg);
      j["check"] = embedding_check_json(check);
      j["basis_size"] = space->algebra().dim();
      out << dump(j);
      break;
    }
    case OutputFormat::Csv:
      out << "check,status\n";
      for (const auto& [name, status] : embedding_statuses(check)) out << name << ',' << status << '\n';
      break;
    case OutputFormat::Table:
      out << "embedding " << cfg.group.name() << " -> su(" << cfg.group.n << "," << cfg.group.n << ")\n";
      for (const auto& [name, status] : embedding_statuses(check)) {
        out << "  " << name << std::string(18 - name.size(), ' ') << status << '\n';
      }
      break;
  }
  if (!check.ok()) {
    err << "embedding check failed: " << check.failure << '\n';
    if (check.failing_index) {
      err << "basis element " << *check.failing_index << " (" << space->algebra().label(*check.failing_index)
          << "):\n"
          << space->algebra().element(*check.failing_index).to_string() << '\n';
    }
    print_witness(err, check.witness);
    return kExitFailure;
  }
  return kExitOk;
}

int run_scan(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportOptions opts;
  opts.seed = cfg.seed;
  opts.trials = 0;
  opts.pi_bits = cfg.effective_pi_bits();
  opts.table_degrees = kScanRowLimit / 2;
  opts.fault = cfg.fault;
  MWReport r;
  try {
    r = build_report(cfg.group, cfg.vol, opts);
  } catch (const ReportError& e) {
    write_error(err, e.stage(), e.what());
    return kExitFailure;
  }
  if (r.table_truncated) {
    write_error(err, "table", "degree table exceeds " + std::to_string(kScanRowLimit) + " rows");
    return kExitFailure;
  }
  switch (cfg.format) {
    case OutputFormat::Json: {
      Json j = command_header(Subcommand::ScanDegrees, cfg);
      Json rows = Json::array();
      for (const auto& row : r.table) rows.push_back(degree_row_json(row));
      j["rank"] = r.rank;
      j["c_sigma"] = rational_to_short_string(r.c_sigma);
      j["vol"] = rational_to_short_string(r.vol);
      j["max_degree"] = report_json(r)["bound"]["max_degree"];
      j["rows"] = rows;
      out << dump(j);
      break;
    }
    case OutputFormat::Csv:
      out << degree_csv(r.table);
      break;
    case OutputFormat::Table:
      out << cfg.group.name() << "  rank " << r.rank << "  c_sigma " << rational_to_short_string(r.c_sigma)
          << "  vol " << rational_to_short_string(r.vol) << "  max_degree " << r.bound.max_degree.get_str() << "\n\n"
          << degree_text_table(r.table);
      break;
  }
  return kExitOk;
}

}  // namespace

std::string subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Report:
      return "report";
    case Subcommand::Verify:
      return "verify";
    case Subcommand::CheckEmbedding:
      return "check-embedding";
    case Subcommand::ScanDegrees:
      return "scan-degrees";
  }
  return "unknown";
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Table:
      return "table";
  }
  return "unknown";
}

Json config_json(const CliConfig& c) {
  return {{"command", subcommand_name(c.command)},
          {"group", group_json(c.group)},
          {"vol", rational_to_short_string(c.vol)},
          {"seed", c.seed},
          {"trials", c.trials},
          {"format", format_name(c.format)},
          {"pi_bits", c.pi_bits ? Json(*c.pi_bits) : Json(nullptr)},
          {"output", c.output},
          {"fault", fault_name(c.fault)}};
}

CliConfig config_from_json(const Json& j) {
  try {
    CliConfig c;
    c.command = parse_subcommand(j.at("command").get<std::string>());
    const Json& g = j.at("group");
    const std::string family = g.at("family").get<std::string>();
    if (family == "su") {
      c.group = GroupSpec::su(g.at("p").get<int>(), g.at("q").get<int>());
    } else if (family == "sp") {
      c.group = GroupSpec::sp(g.at("n").get<int>());
    } else {
      throw ParseError("unknown family: " + family);
    }
    c.vol = parse_rational(j.at("vol").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.trials = j.at("trials").get<std::size_t>();
    c.format = parse_format(j.at("format").get<std::string>());
    if (!j.at("pi_bits").is_null()) c.pi_bits = j.at("pi_bits").get<unsigned>();
    c.output = j.at("output").get<std::string>();
    c.fault = parse_fault(j.at("fault").get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
}

ParseOutcome parse_args(const std::vector<std::string>& args, const std::optional<std::string>& env_pi_bits) {
  CLI::App app{"Exact Milnor-Wood bounds and Toledo identities for su(p,q) and sp(2n,R)", "toledo"};
  app.require_subcommand(1);
  RawOptions raw;
  const std::pair<Subcommand, CLI::App*> subs[] = {
      {Subcommand::Report, add_command(app, Subcommand::Report, "Build a Milnor-Wood report", raw)},
      {Subcommand::Verify, add_command(app, Subcommand::Verify, "Run the identity and structure suites", raw)},
      {Subcommand::CheckEmbedding,
       add_command(app, Subcommand::CheckEmbedding, "Check the sp(2n,R) -> su(n,n) embedding", raw)},
      {Subcommand::ScanDegrees, add_command(app, Subcommand::ScanDegrees, "Tabulate degrees against the gate", raw)},
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  ParseOutcome outcome;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto& [c, sub] : subs) {
      if (sub->parsed()) target = sub;
    }
    outcome.message = target->help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = std::string(e.what()) + "\nRun with --help for more information.\n";
    return outcome;
  }

  for (const auto& [c, sub] : subs) {
    if (!sub->parsed()) continue;
    const CLI::Option* trials = sub->get_option_no_throw("--trials");
    if (trials == nullptr || trials->count() == 0) raw.trials = default_trials(c);
    try {
      outcome.config = validate(c, raw, *sub, env_pi_bits);
    } catch (const Error& e) {
      outcome.exit_code = kExitUsage;
      outcome.message = std::string("usage error: ") + e.what() + "\n";
    }
    return outcome;
  }
  outcome.exit_code = kExitUsage;
  outcome.message = "no subcommand given\n";
  return outcome;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Subcommand::Report:
      return run_report(config, out, err);
    case Subcommand::Verify:
      return run_verify(config, out, err);
    case Subcommand::CheckEmbedding:
      return run_check_embedding(config, out, err);
    case Subcommand::ScanDegrees:
      return run_scan(config, out, err);
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, const std::optional<std::string>& env_pi_bits,
               std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_args(args, env_pi_bits);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  if (parsed.config->output.empty()) return run(*parsed.config, out, err);

  std::ostringstream buffer;
  const int code = run(*parsed.config, buffer, err);
  std::ofstream file(parsed.config->output, std::ios::binary);
  if (!file || !(file << buffer.str())) {
    err << "cannot write " << parsed.config->output << '\n';
    return kExitFailure;
  }
  return code;
}

}  // namespace toledo::cli
