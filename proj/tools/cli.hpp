#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toledo/serialize.hpp"

namespace toledo::cli {

enum class Subcommand { Report, Verify, CheckEmbedding, ScanDegrees };
enum class OutputFormat { Json, Csv, Table };

std::string subcommand_name(Subcommand s);  // "report", "verify", ...
std::string format_name(OutputFormat f);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kScanRowLimit = 100001;

struct CliConfig {
  Subcommand command = Subcommand::Report;
  GroupSpec group;
  Rational vol = 1;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  OutputFormat format = OutputFormat::Json;
  /// Starting pi precision; MW_PI_BITS or the library default when unset.
  std::optional<unsigned> pi_bits;
  /// Empty for stdout.
  std::string output;
  Fault fault = Fault::None;

  unsigned effective_pi_bits() const { return pi_bits.value_or(kDefaultPiBits); }
  friend bool operator==(const CliConfig&, const CliConfig&) = default;
};

Json config_json(const CliConfig& c);
/// Throws ParseError on malformed input.
CliConfig config_from_json(const Json& j);

struct ParseOutcome {
  std::optional<CliConfig> config;
  int exit_code = kExitOk;
  /// Help text or the usage error.
  std::string message;
};

/// Parses argv (without the program name handled specially); `env_pi_bits`
/// is the value of MW_PI_BITS, if set.
ParseOutcome parse_args(const std::vector<std::string>& args, const std::optional<std::string>& env_pi_bits);

/// Runs a parsed config, writing the result to `out` and diagnostics to
/// `err`; returns the exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, honoring --output.
int main_entry(const std::vector<std::string>& args, const std::optional<std::string>& env_pi_bits,
               std::ostream& out, std::ostream& err);

}  // namespace toledo::cli
