#include "toledo/report.hpp"

#include <algorithm>

namespace toledo {

namespace {

Rational abs_of(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

unsigned next_bits(unsigned bits) {
  if (bits >= kPiBitsCap) throw PrecisionCapExceeded("pi precision cap of " + std::to_string(kPiBitsCap) + " bits reached");
  return std::min(bits * 2, kPiBitsCap);
}

std::size_t expected_rank(const GroupSpec& spec) {
  if (spec.family == Family::SuPQ) return static_cast<std::size_t>(std::min(spec.p, spec.q));
  return static_cast<std::size_t>(spec.n);
}

DegreeRow make_row(const Integer& d, std::size_t rank, const Rational& c_sigma, const Rational& vol,
                   unsigned start_bits, bool margin) {
  const ToledoValue t = toledo_from_degree(c_sigma, d, vol);
  return {d, t.coeff, mw_gate(t, rank, start_bits), margin};
}

}  // namespace

ToledoValue toledo_from_degree(const Rational& c_sigma, const Integer& deg_v, const Rational& vol) {
  if (sgn(vol) <= 0) throw NonpositiveVolume("volume must be positive, got " + rational_to_short_string(vol));
  Rational coeff = c_sigma * Rational(deg_v) / vol;
  coeff.canonicalize();
  return {coeff};
}

std::string gate_name(GateStatus g) { return g == GateStatus::Pass ? "PASS" : "FAIL"; }

GateStatus mw_gate(const ToledoValue& t, std::size_t rank, unsigned start_bits) {
  if (rank == 0) throw ParameterOutOfRange("mw_gate needs rank >= 1");
  if (sgn(t.coeff) == 0) return GateStatus::Pass;
  const Rational r(static_cast<unsigned long>(rank));
  const Rational scale = 2 * abs_of(t.coeff);
  for (unsigned bits = start_bits;; bits = next_bits(bits)) {
    const RationalInterval x = scale * pi_enclosure(bits);
    if (x.hi() <= r) return GateStatus::Pass;
    if (x.lo() >= r) return GateStatus::Fail;
  }
}

DegreeBound degree_bound(std::size_t rank, const Rational& c_sigma, const Rational& vol, unsigned start_bits) {
  if (rank == 0) throw ParameterOutOfRange("degree_bound needs rank >= 1");
  if (sgn(c_sigma) == 0) throw ZeroCSigma("c_sigma is zero");
  if (sgn(vol) <= 0) throw NonpositiveVolume("volume must be positive, got " + rational_to_short_string(vol));
  const Rational numerator = Rational(static_cast<unsigned long>(rank)) * vol;
  const Rational two_c = 2 * abs_of(c_sigma);
  for (unsigned bits = start_bits;; bits = next_bits(bits)) {
    const RationalInterval bound = numerator * (two_c * pi_enclosure(bits)).reciprocal();
    const Integer k = floor(bound.lo());
    if (bound.hi() <= Rational(k + 1)) return {bound, k, bits};
  }
}

std::string fault_name(Fault f) {
  switch (f) {
    case Fault::None:
      return "none";
    case Fault::SignOfI:
      return "sign-of-I";
    case Fault::DropSqrt2:
      return "drop-sqrt2";
  }
  return "unknown";
}

Fault parse_fault(const std::string& text) {
  if (text == "none") return Fault::None;
  if (text == "sign-of-I") return Fault::SignOfI;
  if (text == "drop-sqrt2") return Fault::DropSqrt2;
  throw ParseError("unknown fault: " + text);
}

EmbeddingData embedding_for(std::size_t n, Fault fault) {
  EmbeddingData e = EmbeddingData::make(n);
  if (fault == Fault::DropSqrt2) e.t *= FieldScalar::sqrt2();
  return e;
}

AdmissibleRep representation_for(const HermitianSymmetricSpace& space, Fault fault) {
  const GroupSpec& spec = space.algebra().spec();
  if (spec.family == Family::SuPQ || fault != Fault::DropSqrt2) return standard_admissible_rep(space);
  const auto n = static_cast<std::size_t>(spec.n);
  EmbeddingData emb = embedding_for(n, fault);
  MatrixF sigma_central = emb.conjugate(space.hermitian().central);
  return {spec, RepKind::CayleyConjugation, std::move(emb), n, n, std::move(sigma_central)};
}

MatrixF central_for(const HermitianSymmetricSpace& space, Fault fault) {
  if (fault == Fault::SignOfI) return -space.hermitian().central;
  return space.hermitian().central;
}

std::vector<IdentityCheck> structure_checks(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                                            Fault fault) {
  const RealLieAlgebra& g = space.algebra();
  const GroupSpec& spec = g.spec();
  const MatrixF central = central_for(space, fault);
  std::vector<IdentityCheck> out;
  auto add = [&out](std::string name, bool pass, std::optional<MatrixF> witness = std::nullopt) {
    out.push_back({std::move(name), pass, pass ? std::nullopt : std::move(witness)});
  };

  add("jacobi", g.jacobi_holds());
  add("cartan_grading", grading_holds(g, space.cartan()));
  add("killing_ad_invariant", killing_ad_invariant(g, space.killing()));
  add("killing_closed_form", killing_closed_form_holds(g, space.killing(), space.hermitian().p_x));
  add("complex_structure", complex_structure_holds(g, space.cartan(), central), central);
  const RealRank rr = real_rank(g, space.cartan());
  add("real_rank", rr.rank == expected_rank(spec) && rr.centralizer_dim == rr.rank);

  const AdmissibilityCertificate cert = certify_admissible(space, rep, central);
  add("admissible", cert.admissible(), cert.witness);
  if (cert.admissible()) {
    bool ok = true;
    try {
      ok = compute_c_sigma(space, rep) != 0;
    } catch (const Error&) {
      ok = false;
    }
    add("c_sigma_consistent", ok);
  }
  if (spec.family == Family::Sp2N && rep.embedding()) {
    const EmbeddingCheck ec = check_embedding(space, *rep.embedding());
    add("embedding", ec.ok(), ec.witness);
  }
  return out;
}

std::vector<DegreeRow> degree_table(std::size_t rank, const Rational& c_sigma, const Rational& vol,
                                    const DegreeBound& bound, unsigned start_bits, std::size_t row_limit) {
  const Integer rows = 2 * bound.max_degree + 3;
  if (rows > Integer(static_cast<unsigned long>(row_limit))) {
    throw ParameterOutOfRange("degree table would have " + rows.get_str() + " rows, limit is " +
                              std::to_string(row_limit));
  }
  std::vector<DegreeRow> out;
  out.reserve(rows.get_ui());
  for (Integer d = -bound.max_degree; d <= bound.max_degree; ++d) {
    out.push_back(make_row(d, rank, c_sigma, vol, start_bits, false));
  }
  out.push_back(make_row(-bound.max_degree - 1, rank, c_sigma, vol, start_bits, true));
  out.push_back(make_row(bound.max_degree + 1, rank, c_sigma, vol, start_bits, true));
  return out;
}

MWReport build_report(const GroupSpec& spec, const Rational& vol, const ReportOptions& options) {
  auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const ReportError&) {
      throw;
    } catch (const Error& e) {
      throw ReportError(name, e.what());
    }
  };

  MWReport r;
  r.group = spec;
  r.vol = vol;
  r.options = options;
  if (sgn(vol) <= 0) throw ReportError("input", "volume must be positive, got " + rational_to_short_string(vol));

  const HermitianSymmetricSpace space = stage("algebra", [&] { return build_space(spec); });
  r.rank = space.hermitian().rank;
  r.p_x = space.hermitian().p_x;

  const AdmissibleRep rep = stage("representation", [&] { return representation_for(space, options.fault); });
  r.representation = rep.descriptor();
  r.admissibility =
      stage("admissibility", [&] { return check_admissible(space, rep, central_for(space, options.fault)); });
  r.c_sigma = stage("c_sigma", [&] { return compute_c_sigma(space, rep); });

  r.identities.seed = options.seed;
  r.identities.trials = options.trials;
  stage("identities", [&] {
    const auto modes = campaign_modes(rep.dim_v(), rep.dim_w());
    for (std::size_t t = 0; t < options.trials; ++t) {
      const HiggsSample s =
          make_sample(rep.dim_v(), rep.dim_w(), modes[t % modes.size()], trial_seed(options.seed, t));
      const IdentityReport ir = run_identity_suite(s, rep, r.c_sigma);
      if (const IdentityCheck* f = ir.first_failure()) {
        throw ReportError("identities", "trial " + std::to_string(t) + ": " + f->name + " failed");
      }
      ++r.identities.passed;
    }
    return 0;
  });

  r.bound = stage("bound", [&] { return degree_bound(r.rank, r.c_sigma, vol, options.pi_bits); });
  stage("table", [&] {
    const Integer limit(static_cast<unsigned long>(options.table_degrees));
    r.table_truncated = r.bound.max_degree > limit;
    const Integer m = r.table_truncated ? limit : r.bound.max_degree;
    for (Integer d = -m; d <= m; ++d) r.table.push_back(make_row(d, r.rank, r.c_sigma, vol, options.pi_bits, false));
    if (!r.table_truncated) {
      r.table.push_back(make_row(-m - 1, r.rank, r.c_sigma, vol, options.pi_bits, true));
      r.table.push_back(make_row(m + 1, r.rank, r.c_sigma, vol, options.pi_bits, true));
    }
    return 0;
  });
  return r;
}

}  // namespace toledo
