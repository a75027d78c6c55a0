#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toledo/admissible.hpp"

namespace toledo {

enum class SampleMode { IMultiple, ScalarMultiple, Structured };

std::string mode_name(SampleMode m);  // "I_MULTIPLE", "SCALAR_MULTIPLE", "STRUCTURED"
/// Throws ParseError.
SampleMode parse_mode(std::string_view text);

/// A Higgs field evaluated on two real tangent vectors: theta_k = theta(xi_k).
struct HiggsSample {
  std::size_t dim_v = 0;
  std::size_t dim_w = 0;
  MatrixF theta1;
  MatrixF theta2;
  SampleMode mode = SampleMode::IMultiple;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return dim_v + dim_w; }
  /// Both thetas have the shape [[0, beta], [gamma, 0]].
  bool off_diagonal() const;
  bool commutes() const;
};

class ResampleExhausted : public Error {
 public:
  using Error::Error;
};

/// Deterministic in (dims, mode, seed). Throws ParameterOutOfRange for zero
/// dims and ResampleExhausted when STRUCTURED mode finds no commuting
/// non-proportional pair (always the case for dims (1,1)).
HiggsSample make_sample(std::size_t dim_v, std::size_t dim_w, SampleMode mode, std::uint64_t seed);

/// tau(X) = -conj(X)^T.
MatrixF tau(const MatrixF& theta);
/// Theta_C = theta - tau(theta) = theta + conj(theta)^T.
MatrixF theta_c(const MatrixF& theta);

/// [alpha ^ beta](xi1, xi2) = [alpha1, beta2] - [alpha2, beta1].
MatrixF wedge(const MatrixF& alpha1, const MatrixF& alpha2, const MatrixF& beta1, const MatrixF& beta2);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::optional<MatrixF> witness;
};

struct IdentityReport {
  std::uint64_t seed = 0;
  std::size_t dim_v = 0;
  std::size_t dim_w = 0;
  std::string mode;
  std::string rep;
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  /// First failing check, if any.
  const IdentityCheck* first_failure() const;
};

/// The five sub-identities of [Theta ^ Theta] = 2 [theta ^ conj(theta)^T].
IdentityReport verify_wedge_collapse(const HiggsSample& s);

struct CurvatureBlocks {
  MatrixF f_v;
  MatrixF f_w;
};

class BlockLeak : public Error {
 public:
  BlockLeak(const std::string& what, MatrixF f) : Error(what), f_(std::move(f)) {}
  const MatrixF& curvature() const noexcept { return f_; }

 private:
  MatrixF f_;
};

class SpellingMismatch : public Error {
 public:
  using Error::Error;
};

struct CurvatureResult {
  CurvatureBlocks blocks;
  /// tr(dsigma(I) [theta ^ conj(theta)^T]).
  FieldScalar lhs;
  /// i/(v+w) (dim W tr F_V - dim V tr F_W).
  FieldScalar rhs;
  /// i tr F_V, the value both sides collapse to once tr F_V = -tr F_W.
  FieldScalar collapsed;
};

/// F = -[theta ^ conj(theta)^T], asserted equal to [theta ^ tau(theta)] and
/// block-diagonal. Throws DimensionMismatch if the split differs from the
/// representation's, SpellingMismatch or BlockLeak.
CurvatureResult curvature_and_trace_identity(const HiggsSample& s, const AdmissibleRep& rep);

class RouteMismatch : public Error {
 public:
  RouteMismatch(FieldScalar a, FieldScalar b, FieldScalar c);
  const FieldScalar& route_a() const noexcept { return a_; }
  const FieldScalar& route_b() const noexcept { return b_; }
  const FieldScalar& route_c() const noexcept { return c_; }

 private:
  FieldScalar a_, b_, c_;
};

struct OmegaRoutes {
  FieldScalar a;  // c tr(sI T1 T2 - T1 sI T2)
  FieldScalar b;  // (c/2) tr(sI ([T1,T2] - [T2,T1]))
  FieldScalar c;  // c tr(sI [theta ^ conj(theta)^T])
};

/// All three routes without comparing them.
OmegaRoutes omega_routes(const HiggsSample& s, const AdmissibleRep& rep, const Rational& c_sigma);
/// The common value; throws RouteMismatch.
FieldScalar omega_two_routes(const HiggsSample& s, const AdmissibleRep& rep, const Rational& c_sigma);

/// Wedge collapse plus curvature, flatness and route checks in one report.
IdentityReport run_identity_suite(const HiggsSample& s, const AdmissibleRep& rep, const Rational& c_sigma);

/// Modes a campaign cycles through for the given split; STRUCTURED is
/// dropped for (1,1).
std::vector<SampleMode> campaign_modes(std::size_t dim_v, std::size_t dim_w);
/// Seed of trial `index` in a campaign started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

}  // namespace toledo
