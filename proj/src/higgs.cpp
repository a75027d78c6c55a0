#include "toledo/higgs.hpp"

#include <random>

#include "toledo/linalg.hpp"

namespace toledo {

namespace {

constexpr int kStructuredAttempts = 32;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  long range(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational small_rational() {
    Rational r(range(-3, 3), range(1, 3));
    r.canonicalize();
    return r;
  }

  FieldScalar gaussian() { return FieldScalar::gaussian(small_rational(), small_rational()); }

  FieldScalar nonzero_gaussian() {
    FieldScalar x;
    while (x.is_zero()) x = gaussian();
    return x;
  }

  /// Gaussian-rational matrix with roughly a quarter of its entries zero.
  MatrixF block(std::size_t rows, std::size_t cols) {
    MatrixF m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (range(0, 3) != 0) m(r, c) = gaussian();
      }
    }
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

MatrixF off_diagonal(const MatrixF& beta, const MatrixF& gamma) {
  const std::size_t v = beta.rows();
  const std::size_t w = beta.cols();
  MatrixF m(v + w, v + w);
  m.set_block(0, v, beta);
  m.set_block(v, 0, gamma);
  return m;
}

MatrixF random_theta(Draw& draw, std::size_t v, std::size_t w) {
  MatrixF m;
  do {
    m = off_diagonal(draw.block(v, w), draw.block(w, v));
  } while (m.is_zero());
  return m;
}

bool is_off_diagonal(const MatrixF& m, std::size_t v, std::size_t w) {
  if (m.rows() != v + w || m.cols() != v + w) return false;
  return m.block(0, 0, v, v).is_zero() && m.block(v, v, w, w).is_zero();
}

std::pair<MatrixF, MatrixF> structured_candidate(Draw& draw, std::size_t v, std::size_t w) {
  if (draw.range(0, 1) == 0) {
    // Odd polynomial in theta1: theta1^3 is again off-diagonal and commutes.
    MatrixF t1 = random_theta(draw, v, w);
    const FieldScalar a = draw.nonzero_gaussian();
    const FieldScalar b = draw.nonzero_gaussian();
    MatrixF t2 = a * t1 + b * (t1 * t1 * t1);
    return {std::move(t1), std::move(t2)};
  }
  // One block shared as zero: both products beta_i gamma_j vanish.
  const bool keep_beta = draw.range(0, 1) == 0;
  auto one = [&] {
    MatrixF beta = keep_beta ? draw.block(v, w) : MatrixF(v, w);
    MatrixF gamma = keep_beta ? MatrixF(w, v) : draw.block(w, v);
    return off_diagonal(beta, gamma);
  };
  MatrixF t1 = one();
  MatrixF t2 = one();
  return {std::move(t1), std::move(t2)};
}

FieldScalar trace_with(const MatrixF& sigma_i, const MatrixF& x) { return trace_of_product(sigma_i, x); }

void add(IdentityReport& r, std::string name, const MatrixF& lhs, const MatrixF& rhs) {
  IdentityCheck c{std::move(name), lhs == rhs, std::nullopt};
  if (!c.pass) c.witness = lhs - rhs;
  r.checks.push_back(std::move(c));
}

void add_scalar(IdentityReport& r, std::string name, const FieldScalar& lhs, const FieldScalar& rhs) {
  IdentityCheck c{std::move(name), lhs == rhs, std::nullopt};
  if (!c.pass) c.witness = MatrixF{{lhs, rhs}};
  r.checks.push_back(std::move(c));
}

}  // namespace

std::string mode_name(SampleMode m) {
  switch (m) {
    case SampleMode::IMultiple:
      return "I_MULTIPLE";
    case SampleMode::ScalarMultiple:
      return "SCALAR_MULTIPLE";
    case SampleMode::Structured:
      return "STRUCTURED";
  }
  return "UNKNOWN";
}

SampleMode parse_mode(std::string_view text) {
  if (text == "I_MULTIPLE") return SampleMode::IMultiple;
  if (text == "SCALAR_MULTIPLE") return SampleMode::ScalarMultiple;
  if (text == "STRUCTURED") return SampleMode::Structured;
  throw ParseError("unknown sample mode: " + std::string(text));
}

bool HiggsSample::off_diagonal() const {
  return is_off_diagonal(theta1, dim_v, dim_w) && is_off_diagonal(theta2, dim_v, dim_w);
}

bool HiggsSample::commutes() const { return commutator(theta1, theta2).is_zero(); }

HiggsSample make_sample(std::size_t dim_v, std::size_t dim_w, SampleMode mode, std::uint64_t seed) {
  if (dim_v == 0 || dim_w == 0) throw ParameterOutOfRange("Higgs sample dims must be >= 1");
  Draw draw(seed);
  HiggsSample s{dim_v, dim_w, {}, {}, mode, seed};
  switch (mode) {
    case SampleMode::IMultiple:
      s.theta1 = random_theta(draw, dim_v, dim_w);
      s.theta2 = FieldScalar::i() * s.theta1;
      return s;
    case SampleMode::ScalarMultiple: {
      s.theta1 = random_theta(draw, dim_v, dim_w);
      Rational lambda;
      while (sgn(lambda) == 0) lambda = draw.small_rational();
      s.theta2 = FieldScalar(lambda) * s.theta1;
      return s;
    }
    case SampleMode::Structured:
      for (int attempt = 0; attempt < kStructuredAttempts; ++attempt) {
        auto [t1, t2] = structured_candidate(draw, dim_v, dim_w);
        if (!commutator(t1, t2).is_zero()) continue;
        const MatrixF pair[] = {t1, t2};
        if (field_rank(pair) != 2) continue;
        s.theta1 = std::move(t1);
        s.theta2 = std::move(t2);
        return s;
      }
      throw ResampleExhausted("no commuting non-proportional pair for dims (" + std::to_string(dim_v) + "," +
                              std::to_string(dim_w) + ") after " + std::to_string(kStructuredAttempts) + " attempts");
  }
  throw ParameterOutOfRange("unknown sample mode");
}

MatrixF tau(const MatrixF& theta) { return -theta.dagger(); }

MatrixF theta_c(const MatrixF& theta) { return theta - tau(theta); }

MatrixF wedge(const MatrixF& alpha1, const MatrixF& alpha2, const MatrixF& beta1, const MatrixF& beta2) {
  return commutator(alpha1, beta2) - commutator(alpha2, beta1);
}

bool IdentityReport::all_pass() const { return first_failure() == nullptr; }

const IdentityCheck* IdentityReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

IdentityReport verify_wedge_collapse(const HiggsSample& s) {
  IdentityReport r{s.seed, s.dim_v, s.dim_w, mode_name(s.mode), "", {}};
  const MatrixF& t1 = s.theta1;
  const MatrixF& t2 = s.theta2;
  const MatrixF b1 = t1.dagger();
  const MatrixF b2 = t2.dagger();
  const MatrixF big1 = theta_c(t1);
  const MatrixF big2 = theta_c(t2);

  const MatrixF big = wedge(big1, big2, big1, big2);
  const MatrixF tt = wedge(t1, t2, t1, t2);
  const MatrixF tb = wedge(t1, t2, b1, b2);
  const MatrixF bt = wedge(b1, b2, t1, t2);
  const MatrixF bb = wedge(b1, b2, b1, b2);
  const MatrixF zero(s.size(), s.size());

  add(r, "wedge_expansion", big, tt + tb + bt + bb);
  add(r, "theta_wedge_theta_zero", tt, zero);
  add(r, "thetabar_wedge_thetabar_zero", bb, zero);
  add(r, "mixed_terms_equal", tb, bt);
  add(r, "wedge_collapse", big, FieldScalar(2) * tb);
  return r;
}

CurvatureResult curvature_and_trace_identity(const HiggsSample& s, const AdmissibleRep& rep) {
  if (s.dim_v != rep.dim_v() || s.dim_w != rep.dim_w()) {
    throw DimensionMismatch("curvature_and_trace_identity", s.dim_v, s.dim_w, rep.dim_v(), rep.dim_w());
  }
  const std::size_t v = s.dim_v;
  const std::size_t w = s.dim_w;
  const MatrixF tb = wedge(s.theta1, s.theta2, s.theta1.dagger(), s.theta2.dagger());
  const MatrixF f = -tb;
  const MatrixF f_tau = wedge(s.theta1, s.theta2, tau(s.theta1), tau(s.theta2));
  if (f != f_tau) throw SpellingMismatch("-[theta ^ conj(theta)^T] differs from [theta ^ tau(theta)]");
  if (!f.block(0, v, v, w).is_zero() || !f.block(v, 0, w, v).is_zero()) {
    throw BlockLeak("curvature has off-diagonal blocks", f);
  }

  CurvatureResult out;
  out.blocks.f_v = f.block(0, 0, v, v);
  out.blocks.f_w = f.block(v, v, w, w);
  const FieldScalar tr_v = out.blocks.f_v.trace();
  const FieldScalar tr_w = out.blocks.f_w.trace();
  const FieldScalar i = FieldScalar::i();
  const FieldScalar scale = i * FieldScalar::ratio(1, static_cast<long>(v + w));
  out.lhs = trace_with(rep.sigma_central(), tb);
  out.rhs = scale * (FieldScalar(static_cast<long>(w)) * tr_v - FieldScalar(static_cast<long>(v)) * tr_w);
  out.collapsed = i * tr_v;
  return out;
}

RouteMismatch::RouteMismatch(FieldScalar a, FieldScalar b, FieldScalar c)
    : Error("omega routes disagree: A = " + a.to_string() + ", B = " + b.to_string() + ", C = " + c.to_string()),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)) {}

OmegaRoutes omega_routes(const HiggsSample& s, const AdmissibleRep& rep, const Rational& c_sigma) {
  const MatrixF& si = rep.sigma_central();
  const MatrixF big1 = theta_c(s.theta1);
  const MatrixF big2 = theta_c(s.theta2);
  const FieldScalar c(c_sigma);

  OmegaRoutes out;
  out.a = c * (trace_of_product(si * big1, big2) - trace_of_product(big1 * si, big2));
  const MatrixF sym = commutator(big1, big2) - commutator(big2, big1);
  out.b = c * FieldScalar::ratio(1, 2) * trace_with(si, sym);
  const MatrixF tb = wedge(s.theta1, s.theta2, s.theta1.dagger(), s.theta2.dagger());
  out.c = c * trace_with(si, tb);
  return out;
}

FieldScalar omega_two_routes(const HiggsSample& s, const AdmissibleRep& rep, const Rational& c_sigma) {
  OmegaRoutes r = omega_routes(s, rep, c_sigma);
  if (r.a != r.b || r.b != r.c) throw RouteMismatch(std::move(r.a), std::move(r.b), std::move(r.c));
  return r.a;
}

IdentityReport run_identity_suite(const HiggsSample& s, const AdmissibleRep& rep, const Rational& c_sigma) {
  IdentityReport r = verify_wedge_collapse(s);
  r.rep = rep.descriptor();
  {
    IdentityCheck c{"off_diagonal_sample", s.off_diagonal(), std::nullopt};
    if (!c.pass) c.witness = s.theta1;
    r.checks.push_back(std::move(c));
  }
  add(r, "theta_c_is_theta_minus_tau", theta_c(s.theta1), s.theta1 - tau(s.theta1));

  try {
    const CurvatureResult cr = curvature_and_trace_identity(s, rep);
    r.checks.push_back({"curvature_block_diagonal", true, std::nullopt});
    add_scalar(r, "flatness_trace", cr.blocks.f_v.trace(), -cr.blocks.f_w.trace());
    add_scalar(r, "trace_identity", cr.lhs, cr.rhs);
    add_scalar(r, "trace_collapse", cr.lhs, cr.collapsed);
  } catch (const BlockLeak& e) {
    r.checks.push_back({"curvature_block_diagonal", false, e.curvature()});
  } catch (const SpellingMismatch&) {
    r.checks.push_back({"curvature_spellings_agree", false, std::nullopt});
  }

  const OmegaRoutes routes = omega_routes(s, rep, c_sigma);
  IdentityCheck rc{"omega_routes_agree", routes.a == routes.b && routes.b == routes.c, std::nullopt};
  if (!rc.pass) rc.witness = MatrixF{{routes.a, routes.b, routes.c}};
  r.checks.push_back(std::move(rc));
  return r;
}

std::vector<SampleMode> campaign_modes(std::size_t dim_v, std::size_t dim_w) {
  if (dim_v == 1 && dim_w == 1) return {SampleMode::IMultiple, SampleMode::ScalarMultiple};
  return {SampleMode::IMultiple, SampleMode::ScalarMultiple, SampleMode::Structured};
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over seed + index.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace toledo
