#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toledo/admissible.hpp"
#include "toledo/higgs.hpp"
#include "toledo/interval.hpp"

namespace toledo {

class NonpositiveVolume : public Error {
 public:
  using Error::Error;
};
class ZeroCSigma : public Error {
 public:
  using Error::Error;
};
class PrecisionCapExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr unsigned kDefaultPiBits = 64;
inline constexpr unsigned kPiBitsCap = 4096;

/// T(rho) = coeff * 2 pi.
struct ToledoValue {
  Rational coeff;
};

/// coeff = c_sigma * deg_v / vol. Throws NonpositiveVolume.
ToledoValue toledo_from_degree(const Rational& c_sigma, const Integer& deg_v, const Rational& vol);

enum class GateStatus { Pass, Fail };
std::string gate_name(GateStatus g);  // "PASS" / "FAIL"

/// Decides 2 pi |coeff| <= rank, doubling the pi precision from
/// `start_bits` until the comparison is strict. Throws ParameterOutOfRange
/// for rank 0 and PrecisionCapExceeded past kPiBitsCap.
GateStatus mw_gate(const ToledoValue& t, std::size_t rank, unsigned start_bits = kDefaultPiBits);

struct DegreeBound {
  /// Encloses rank * vol / (2 pi |c_sigma|).
  RationalInterval interval{0, 0};
  /// floor of the bound, certified by the interval.
  Integer max_degree;
  /// Precision of the pi enclosure that certified the floor.
  unsigned pi_bits = 0;
};

/// Throws ParameterOutOfRange, ZeroCSigma, NonpositiveVolume or
/// PrecisionCapExceeded.
DegreeBound degree_bound(std::size_t rank, const Rational& c_sigma, const Rational& vol,
                         unsigned start_bits = kDefaultPiBits);

/// Test hooks that corrupt one ingredient of the pipeline.
enum class Fault { None, SignOfI, DropSqrt2 };
std::string fault_name(Fault f);  // "none", "sign-of-I", "drop-sqrt2"
/// Throws ParseError.
Fault parse_fault(const std::string& text);

/// T with the 1/sqrt 2 factor removed under DropSqrt2.
EmbeddingData embedding_for(std::size_t n, Fault fault);
/// The admissible representation of the space, built with `fault` applied.
AdmissibleRep representation_for(const HermitianSymmetricSpace& space, Fault fault);
/// I, or -I under SignOfI.
MatrixF central_for(const HermitianSymmetricSpace& space, Fault fault);

/// Exact structural checks on a space and its representation: Jacobi,
/// grading, Killing invariance and closed form, complex structure, real
/// rank, admissibility, and the embedding checks for sp(2n,R).
std::vector<IdentityCheck> structure_checks(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                                            Fault fault);

struct DegreeRow {
  Integer degree;
  Rational coeff;
  GateStatus gate = GateStatus::Pass;
  /// Row just outside [-max_degree, max_degree].
  bool margin = false;
};

/// Rows d in [-max_degree, max_degree], then margin rows +-(max_degree+1).
/// Throws ParameterOutOfRange if that exceeds `row_limit` rows.
std::vector<DegreeRow> degree_table(std::size_t rank, const Rational& c_sigma, const Rational& vol,
                                    const DegreeBound& bound, unsigned start_bits, std::size_t row_limit);

struct IdentitySummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
};

struct ReportOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 8;
  unsigned pi_bits = kDefaultPiBits;
  /// Largest |d| listed in the report's Toledo table.
  std::size_t table_degrees = 32;
  Fault fault = Fault::None;
};

struct MWReport {
  GroupSpec group;
  std::size_t rank = 0;
  int p_x = 0;
  Rational c_sigma;
  Rational vol;
  DegreeBound bound;
  std::vector<DegreeRow> table;
  bool table_truncated = false;
  std::string representation;
  AdmissibilityCertificate admissibility;
  IdentitySummary identities;
  ReportOptions options;
};

/// Failure of one pipeline stage, named in `stage()`.
class ReportError : public Error {
 public:
  ReportError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Runs the whole pipeline for one group and volume. Throws ReportError.
MWReport build_report(const GroupSpec& spec, const Rational& vol, const ReportOptions& options);

}  // namespace toledo
