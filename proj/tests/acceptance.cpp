#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "toledo/report.hpp"

using namespace toledo;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

std::vector<GroupSpec> su_groups() {
  std::vector<GroupSpec> out;
  for (int p = 1; p <= 4; ++p) {
    for (int q = p; p + q <= 8; ++q) out.push_back(GroupSpec::su(p, q));
  }
  return out;
}

std::vector<GroupSpec> sp_groups() {
  std::vector<GroupSpec> out;
  for (int n = 1; n <= 4; ++n) out.push_back(GroupSpec::sp(n));
  return out;
}

std::size_t expected_rank(const GroupSpec& s) {
  return static_cast<std::size_t>(s.family == Family::SuPQ ? std::min(s.p, s.q) : s.n);
}

int expected_px(const GroupSpec& s) { return s.family == Family::SuPQ ? s.p + s.q : s.n + 1; }

struct Built {
  GroupSpec spec;
  std::unique_ptr<HermitianSymmetricSpace> space;
  std::unique_ptr<AdmissibleRep> rep;
};

std::vector<Built> g_built;

const Built& built(const GroupSpec& spec) {
  for (const auto& b : g_built) {
    if (b.spec == spec) return b;
  }
  auto space = std::make_unique<HermitianSymmetricSpace>(build_space(spec));
  auto rep = std::make_unique<AdmissibleRep>(standard_admissible_rep(*space));
  g_built.push_back({spec, std::move(space), std::move(rep)});
  return g_built.back();
}

Outcome c_sigma_family(const std::vector<GroupSpec>& groups, double limit) {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& spec : groups) {
    try {
      const Built& b = built(spec);
      (void)check_admissible(*b.space, *b.rep, b.space->hermitian().central);
      const Rational c = compute_c_sigma(*b.space, *b.rep);
      if (c != -2) o.fail(spec.name() + " gave c_sigma " + rational_to_short_string(c));
    } catch (const Error& e) {
      o.fail(spec.name() + ": " + e.what());
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= limit) o.fail("runtime " + fmt_seconds(dt));
  if (o.pass) o.detail = std::to_string(groups.size()) + " groups in " + fmt_seconds(dt);
  return o;
}

std::vector<GroupSpec> all_groups() {
  auto out = su_groups();
  for (const auto& s : sp_groups()) out.push_back(s);
  return out;
}

Outcome killing_closed_forms() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& spec : all_groups()) {
    const RealLieAlgebra& g = built(spec).space->algebra();
    const QMatrix ad_trace = killing_form(g).gram;
    const Rational scale(2 * expected_px(spec));
    for (std::size_t i = 0; i < g.dim(); ++i) {
      for (std::size_t j = 0; j < g.dim(); ++j) {
        const FieldScalar closed = FieldScalar(scale) * trace_of_product(g.element(i), g.element(j));
        ++pairs;
        if (closed != FieldScalar(ad_trace(i, j))) {
          o.fail(spec.name() + " pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " basis pairs";
  return o;
}

MatrixF block_equation(std::size_t v, std::size_t w) {
  const FieldScalar n(Rational(static_cast<unsigned long>(v + w)));
  std::vector<FieldScalar> d;
  for (std::size_t k = 0; k < v; ++k) d.push_back(-FieldScalar::i() * FieldScalar(Rational(static_cast<unsigned long>(w))) / n);
  for (std::size_t k = 0; k < w; ++k) d.push_back(FieldScalar::i() * FieldScalar(Rational(static_cast<unsigned long>(v))) / n);
  return MatrixF::diagonal(d);
}

Outcome complex_structure() {
  Outcome o;
  for (const auto& spec : all_groups()) {
    const Built& b = built(spec);
    const MatrixF& i_el = b.space->hermitian().central;
    for (const auto& x : b.space->p_basis()) {
      if (commutator(i_el, commutator(i_el, x)) != -x) o.fail(spec.name() + ": ad(I)^2 != -1 on p");
    }
    for (const auto& k : b.space->k_basis()) {
      if (!commutator(i_el, k).is_zero()) o.fail(spec.name() + ": [I, k] != 0");
    }
    std::size_t v = 0;
    std::size_t w = 0;
    if (spec.family == Family::SuPQ) {
      v = static_cast<std::size_t>(spec.p);
      w = static_cast<std::size_t>(spec.q);
    } else {
      v = w = static_cast<std::size_t>(spec.n);
    }
    const MatrixF expected = block_equation(v, w);
    if (b.rep->apply(i_el) != expected || b.rep->sigma_central() != expected) {
      o.fail(spec.name() + ": dsigma(I) differs from the block equation");
    }
    const AdmissibilityCertificate cert = certify_admissible(*b.space, *b.rep, i_el);
    if (!cert.admissible()) o.fail(spec.name() + ": " + condition_name(cert.failed));
  }
  if (o.pass) o.detail = std::to_string(all_groups().size()) + " groups";
  return o;
}

/// Rational rows of the linear system [sum c_j p_j, a] = 0, one row per
/// rational component of each matrix entry.
std::size_t centralizer_dim_in_p(const std::vector<MatrixF>& p, const std::vector<MatrixF>& flat) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : flat) {
    std::vector<MatrixF> images;
    for (const auto& x : p) images.push_back(commutator(x, a));
    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        for (int part = 0; part < 4; ++part) {
          std::vector<Rational> row;
          bool nonzero = false;
          for (const auto& img : images) {
            const FieldScalar& e = img(r, c);
            const Rational& v = part == 0 ? e.a() : part == 1 ? e.b() : part == 2 ? e.c() : e.d();
            nonzero = nonzero || sgn(v) != 0;
            row.push_back(v);
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
  }
  QMatrix m(rows.size(), p.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < p.size(); ++c) m(r, c) = rows[r][c];
  }
  return nullspace(m).size();
}

Outcome real_ranks() {
  Outcome o;
  for (const auto& spec : all_groups()) {
    const Built& b = built(spec);
    const RealRank rr = real_rank(b.space->algebra(), b.space->cartan());
    const std::size_t want = expected_rank(spec);
    if (rr.rank != want || rr.flat_basis.size() != want) {
      o.fail(spec.name() + ": rank " + std::to_string(rr.rank));
      continue;
    }
    try {
      for (const auto& a : rr.flat_basis) (void)b.space->p_coordinates(a);
    } catch (const Error&) {
      o.fail(spec.name() + ": flat not in p");
    }
    for (std::size_t i = 0; i < want; ++i) {
      for (std::size_t j = i + 1; j < want; ++j) {
        if (!commutator(rr.flat_basis[i], rr.flat_basis[j]).is_zero()) o.fail(spec.name() + ": flat not abelian");
      }
    }
    if (field_rank(rr.flat_basis) != want) o.fail(spec.name() + ": flat basis dependent");
    const std::size_t cz = centralizer_dim_in_p(b.space->p_basis(), rr.flat_basis);
    if (cz != want) o.fail(spec.name() + ": centralizer in p has dim " + std::to_string(cz));
  }
  if (o.pass) o.detail = "maximal flats certified for " + std::to_string(all_groups().size()) + " groups";
  return o;
}

/// The displayed image of X(A,B,C) under T-conjugation, assembled entrywise.
MatrixF displayed_block(const MatrixF& a, const MatrixF& b, const MatrixF& c, const MatrixF& s) {
  const std::size_t n = a.rows();
  const FieldScalar i = FieldScalar::i();
  const FieldScalar half = FieldScalar::ratio(1, 2);
  const MatrixF at = a.transpose();
  MatrixF out(2 * n, 2 * n);
  out.set_block(0, 0, half * (s * (a - at - i * (b - c)) * s));
  out.set_block(0, n, half * (s * (-a - at - i * (b + c)) * s));
  out.set_block(n, 0, half * (s * (-a - at + i * (b + c)) * s));
  out.set_block(n, n, half * (s * (a - at + i * (b - c)) * s));
  return out;
}

Outcome embedding_checks() {
  Outcome o;
  std::size_t elements = 0;
  for (const auto& spec : sp_groups()) {
    const Built& b = built(spec);
    const auto n = static_cast<std::size_t>(spec.n);
    const EmbeddingData e = EmbeddingData::make(n);
    const EmbeddingCheck ec = check_embedding(*b.space, e);
    if (!ec.ok()) o.fail(spec.name() + ": " + ec.failure);
    if (e.s * e.s != MatrixF::identity(n)) o.fail(spec.name() + ": S^2 != 1");
    if (e.t * e.t.dagger() != MatrixF::identity(2 * n)) o.fail(spec.name() + ": T T^dagger != 1");
    const RealLieAlgebra& g = b.space->algebra();
    for (std::size_t k = 0; k < g.dim(); ++k) {
      const MatrixF& x = g.element(k);
      const MatrixF got = e.conjugate(x);
      ++elements;
      if (got != displayed_block(x.block(0, 0, n, n), x.block(0, n, n, n), x.block(n, 0, n, n), e.s)) {
        o.fail(spec.name() + ": block display differs on " + g.label(k));
      }
      for (std::size_t j = 0; j < g.dim(); ++j) {
        if (trace_of_product(got, e.conjugate(g.element(j))) != trace_of_product(x, g.element(j))) {
          o.fail(spec.name() + ": trace compatibility");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(elements) + " basis elements";
  return o;
}

MatrixF wedge_with_adjoint(const HiggsSample& s) {
  const MatrixF& a = s.theta1;
  const MatrixF& b = s.theta2;
  return a * b.dagger() - b.dagger() * a - b * a.dagger() + a.dagger() * b;
}

Outcome higgs_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  constexpr int kPerDims = 60;
  std::size_t samples = 0;
  std::uint64_t seed = 20261016;
  for (std::size_t v = 1; v <= 3; ++v) {
    for (std::size_t w = 1; w <= 3; ++w) {
      const Built& b = built(GroupSpec::su(static_cast<int>(v), static_cast<int>(w)));
      const auto modes = campaign_modes(v, w);
      for (int t = 0; t < kPerDims; ++t) {
        const HiggsSample s =
            make_sample(v, w, modes[static_cast<std::size_t>(t) % modes.size()], trial_seed(seed, samples));
        ++samples;
        const std::string tag = "(" + std::to_string(v) + "," + std::to_string(w) + ") seed " + std::to_string(s.seed);
        const IdentityReport r = run_identity_suite(s, *b.rep, Rational(-2));
        if (const IdentityCheck* f = r.first_failure()) o.fail(tag + ": " + f->name);
        const MatrixF big = wedge(s.theta1 + s.theta1.dagger(), s.theta2 + s.theta2.dagger(),
                                  s.theta1 + s.theta1.dagger(), s.theta2 + s.theta2.dagger());
        const MatrixF f = -wedge_with_adjoint(s);
        if (big != FieldScalar(2) * wedge_with_adjoint(s)) o.fail(tag + ": wedge collapse");
        if (!f.block(0, v, v, w).is_zero() || !f.block(v, 0, w, v).is_zero()) o.fail(tag + ": F leaks");
        if (f.block(0, 0, v, v).trace() != -f.block(v, v, w, w).trace()) o.fail(tag + ": tr F_V != -tr F_W");
        const OmegaRoutes routes = omega_routes(s, *b.rep, Rational(-2));
        if (routes.a != routes.b || routes.b != routes.c) o.fail(tag + ": omega routes disagree");
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 30) o.fail("runtime " + fmt_seconds(dt));
  if (o.pass) o.detail = std::to_string(samples) + " samples in " + fmt_seconds(dt);
  return o;
}

GroupSpec random_group(testing::Gen& gen) {
  const auto all = all_groups();
  return all[static_cast<std::size_t>(gen.range(0, static_cast<long>(all.size()) - 1))];
}

Outcome bound_specialization() {
  Outcome o;
  testing::Gen gen(8);
  const Rational pi_lo = testing::pi_fifty_digits();
  const Rational pi_hi = testing::pi_fifty_digits_upper();
  for (int k = 0; k < 20; ++k) {
    const GroupSpec spec = random_group(gen);
    const Rational vol = gen.positive_rational(5000, 97);
    const std::size_t rank = built(spec).space->hermitian().rank;
    const DegreeBound b = degree_bound(rank, Rational(-2), vol);
    const Rational base = Rational(static_cast<unsigned long>(expected_rank(spec))) * vol / 4;
    const Rational oracle = base / pi_lo;
    const Rational width = b.interval.width();
    const std::string tag = spec.name() + " vol " + rational_to_short_string(vol);
    if (oracle < b.interval.lo() - width || oracle > b.interval.hi() + width) o.fail(tag + ": oracle outside interval");
    const Integer f_lo = floor(base / pi_hi);
    if (f_lo != floor(oracle)) o.fail(tag + ": oracle floor undecided");
    if (b.max_degree != floor(oracle)) o.fail(tag + ": max_degree " + b.max_degree.get_str());
  }
  if (o.pass) o.detail = "20 cases";
  return o;
}

Outcome gate_consistency() {
  Outcome o;
  testing::Gen gen(9);
  std::size_t degrees = 0;
  for (int k = 0; k < 20; ++k) {
    const GroupSpec spec = random_group(gen);
    const Rational vol = gen.positive_rational(600, 13);
    const Built& b = built(spec);
    const std::size_t rank = b.space->hermitian().rank;
    const Rational c = compute_c_sigma(*b.space, *b.rep);
    const DegreeBound bound = degree_bound(rank, c, vol);
    for (Integer d = -bound.max_degree - 1; d <= bound.max_degree + 1; ++d) {
      ++degrees;
      const bool inside = abs(d) <= bound.max_degree;
      const GateStatus g = mw_gate(toledo_from_degree(c, d, vol), rank);
      if ((g == GateStatus::Pass) != inside) {
        o.fail(spec.name() + " vol " + rational_to_short_string(vol) + " degree " + d.get_str());
      }
    }
  }
  if (o.pass) o.detail = "20 configurations, " + std::to_string(degrees) + " degrees";
  return o;
}

bool capture(const std::string& cmd, std::string& out) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return false;
  std::array<char, 4096> buf{};
  out.clear();
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  return pclose(pipe) == 0;
}

Outcome determinism() {
  Outcome o;
  const std::string bin = TOLEDO_CLI_PATH;
  const std::vector<std::string> commands = {
      "verify --group su --p 2 --q 2 --trials 50 --seed 42",
      "verify --group sp --n 3 --trials 20 --seed 7",
      "report --group su --p 2 --q 3 --vol 100 --seed 5",
      "report --group sp --n 2 --vol 355/113 --format csv",
  };
  for (const auto& args : commands) {
    std::string first;
    std::string second;
    const bool ok1 = capture("'" + bin + "' " + args, first);
    const bool ok2 = capture("'" + bin + "' " + args, second);
    if (!ok1 || !ok2) o.fail(args + ": nonzero exit");
    if (first.empty() || first != second) o.fail(args + ": outputs differ");
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands run twice";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"c_sigma = -2 for su(p,q), p+q <= 8, under 10 s", [] { return c_sigma_family(su_groups(), 10); }},
      {"c_sigma = -2 for sp(2n,R), n <= 4, under 10 s", [] { return c_sigma_family(sp_groups(), 10); }},
      {"Killing closed forms equal ad-traces", killing_closed_forms},
      {"complex structure and dsigma(I) block equation", complex_structure},
      {"real rank with maximal abelian certificate", real_ranks},
      {"sp(2n,R) -> su(n,n) embedding checks", embedding_checks},
      {"Higgs identity suite, 540 samples under 30 s", higgs_suite},
      {"degree bound against 50-digit pi", bound_specialization},
      {"gate agrees with degree bound", gate_consistency},
      {"CLI output is byte-identical across runs", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
