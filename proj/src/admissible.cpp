#include "toledo/admissible.hpp"

namespace toledo {

EmbeddingData EmbeddingData::make(std::size_t n) {
  if (n == 0) throw ParameterOutOfRange("embedding needs n >= 1");
  EmbeddingData e;
  e.n = n;
  e.s = MatrixF(n, n);
  for (std::size_t k = 0; k < n; ++k) e.s(k, n - 1 - k) = 1;
  const FieldScalar i = FieldScalar::i();
  const FieldScalar inv_sqrt2 = FieldScalar::sqrt2().inv();
  e.t = MatrixF(2 * n, 2 * n);
  e.t.set_block(0, 0, -i * e.s);
  e.t.set_block(0, n, e.s);
  e.t.set_block(n, 0, i * e.s);
  e.t.set_block(n, n, e.s);
  e.t *= inv_sqrt2;
  return e;
}

MatrixF EmbeddingData::conjugate(const MatrixF& x) const { return t * x * t.dagger(); }

MatrixF cayley_block_formula(const MatrixF& a, const MatrixF& b, const MatrixF& c, const MatrixF& s) {
  const std::size_t n = s.rows();
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

AdmissibleRep::AdmissibleRep(GroupSpec source, RepKind kind, std::optional<EmbeddingData> embedding,
                             std::size_t dim_v, std::size_t dim_w, MatrixF sigma_central)
    : source_(source),
      kind_(kind),
      embedding_(std::move(embedding)),
      dim_v_(dim_v),
      dim_w_(dim_w),
      sigma_central_(std::move(sigma_central)) {}

MatrixF AdmissibleRep::apply(const MatrixF& x) const {
  if (kind_ == RepKind::Standard) return x;
  return embedding_->conjugate(x);
}

std::string AdmissibleRep::descriptor() const {
  const std::string split = "C^" + std::to_string(dim_v_) + " + C^" + std::to_string(dim_w_);
  if (kind_ == RepKind::Standard) return "standard " + source_.name() + " on " + split;
  return "T-conjugation " + source_.name() + " -> su(" + std::to_string(dim_v_) + "," + std::to_string(dim_w_) +
         ") on " + split;
}

Realization orientation_reference(const GroupSpec& spec) {
  if (spec.family == Family::SuPQ) return identity_realization;
  auto emb = EmbeddingData::make(static_cast<std::size_t>(spec.n));
  return [emb = std::move(emb)](const MatrixF& x) { return emb.conjugate(x); };
}

HermitianSymmetricSpace build_space(const GroupSpec& spec) {
  return HermitianSymmetricSpace::build(spec, orientation_reference(spec));
}

AdmissibleRep standard_rep_su(const HermitianSymmetricSpace& space) {
  const GroupSpec& spec = space.algebra().spec();
  if (spec.family != Family::SuPQ) throw WrongFamily("standard_rep_su needs su(p,q), got " + spec.name());
  return {spec,
          RepKind::Standard,
          std::nullopt,
          static_cast<std::size_t>(spec.p),
          static_cast<std::size_t>(spec.q),
          space.hermitian().central};
}

AdmissibleRep embed_sp_in_su(const HermitianSymmetricSpace& space) {
  const GroupSpec& spec = space.algebra().spec();
  if (spec.family != Family::Sp2N) throw WrongFamily("embed_sp_in_su needs sp(2n,R), got " + spec.name());
  const auto n = static_cast<std::size_t>(spec.n);
  EmbeddingData emb = EmbeddingData::make(n);
  MatrixF sigma_central = emb.conjugate(space.hermitian().central);
  return {spec, RepKind::CayleyConjugation, std::move(emb), n, n, std::move(sigma_central)};
}

AdmissibleRep standard_admissible_rep(const HermitianSymmetricSpace& space) {
  if (space.algebra().spec().family == Family::SuPQ) return standard_rep_su(space);
  return embed_sp_in_su(space);
}

std::string condition_name(AdmissibilityCondition c) {
  switch (c) {
    case AdmissibilityCondition::None:
      return "none";
    case AdmissibilityCondition::Faithful:
      return "faithful";
    case AdmissibilityCondition::CentralBlocks:
      return "central-blocks";
    case AdmissibilityCondition::OffDiagonal:
      return "off-diagonal";
    case AdmissibilityCondition::Homomorphism:
      return "homomorphism";
  }
  return "unknown";
}

namespace {

// Reads (dim V, dim W) off the sign pattern of the diagonal of sigma(I) and
// checks the two-block equation exactly.
bool central_block_equation(const MatrixF& sigma_i, std::size_t& dim_v, std::size_t& dim_w, std::string& why) {
  if (!sigma_i.is_diagonal()) {
    why = "dsigma(I) is not diagonal";
    return false;
  }
  const std::size_t n = sigma_i.rows();
  std::size_t v = 0;
  while (v < n && sign_of_quadratic(sigma_i(v, v).c(), sigma_i(v, v).d()) < 0) ++v;
  dim_v = v;
  dim_w = n - v;
  if (v == 0 || v == n) {
    why = "dsigma(I) has no two-block sign pattern with V first";
    return false;
  }
  const FieldScalar i = FieldScalar::i();
  const FieldScalar scale = i * FieldScalar::ratio(1, static_cast<long>(n));
  const FieldScalar on_v = scale * FieldScalar(-static_cast<long>(dim_w));
  const FieldScalar on_w = scale * FieldScalar(static_cast<long>(dim_v));
  for (std::size_t k = 0; k < n; ++k) {
    if (sigma_i(k, k) != (k < v ? on_v : on_w)) {
      why = "diagonal entry " + std::to_string(k) + " is " + sigma_i(k, k).to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

AdmissibilityCertificate certify_admissible(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                                            const MatrixF& central) {
  AdmissibilityCertificate cert;
  const RealLieAlgebra& g = space.algebra();
  auto fail = [&cert](AdmissibilityCondition c, std::string why, std::optional<MatrixF> witness) {
    if (cert.failed != AdmissibilityCondition::None) return;
    cert.failed = c;
    cert.failure = std::move(why);
    cert.witness = std::move(witness);
  };

  std::vector<MatrixF> images;
  images.reserve(g.dim());
  for (const auto& e : g.basis()) images.push_back(rep.apply(e));

  // (a) complex rank of the images equals dim g.
  cert.faithful = field_rank(images) == g.dim();
  if (!cert.faithful) fail(AdmissibilityCondition::Faithful, "images of the basis are linearly dependent", {});

  // (b) two-block form of dsigma(I), split discovered from its signs.
  const MatrixF sigma_i = rep.apply(central);
  std::string why;
  cert.central_blocks = central_block_equation(sigma_i, cert.dim_v, cert.dim_w, why);
  if (cert.central_blocks && (cert.dim_v != rep.dim_v() || cert.dim_w != rep.dim_w())) {
    cert.central_blocks = false;
    why = "discovered split (" + std::to_string(cert.dim_v) + "," + std::to_string(cert.dim_w) +
          ") differs from the representation's";
  }
  if (!cert.central_blocks) fail(AdmissibilityCondition::CentralBlocks, why, sigma_i);

  // (c) dsigma(p) lands in the off-diagonal blocks of the split.
  const std::size_t v = rep.dim_v();
  const std::size_t w = rep.dim_w();
  cert.off_diagonal = true;
  for (auto k : space.cartan().p_indices) {
    const MatrixF& img = images[k];
    if (img.rows() != v + w || !img.block(0, 0, v, v).is_zero() || !img.block(v, v, w, w).is_zero()) {
      cert.off_diagonal = false;
      fail(AdmissibilityCondition::OffDiagonal, "image of " + g.label(k) + " has diagonal blocks", img);
      break;
    }
  }

  // dsigma is a Lie algebra homomorphism on basis pairs.
  cert.homomorphism = true;
  for (std::size_t a = 0; a < g.dim() && cert.homomorphism; ++a) {
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      const MatrixF lhs = rep.apply(commutator(g.element(a), g.element(b)));
      if (lhs != commutator(images[a], images[b])) {
        cert.homomorphism = false;
        fail(AdmissibilityCondition::Homomorphism, "bracket of " + g.label(a) + " and " + g.label(b) + " not preserved",
             lhs);
        break;
      }
    }
  }
  return cert;
}

AdmissibilityCertificate check_admissible(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                                          const MatrixF& central) {
  AdmissibilityCertificate cert = certify_admissible(space, rep, central);
  if (!cert.admissible()) throw NotAdmissible(std::move(cert));
  return cert;
}

Rational compute_c_sigma(const HermitianSymmetricSpace& space, const AdmissibleRep& rep) {
  return compute_c_sigma(space, rep, space.p_basis());
}

Rational compute_c_sigma(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                         const std::vector<MatrixF>& p_vectors) {
  std::vector<MatrixF> images;
  images.reserve(p_vectors.size());
  for (const auto& x : p_vectors) images.push_back(rep.apply(x));
  const MatrixF& sigma_i = rep.sigma_central();

  std::optional<Rational> ratio;
  std::size_t ra = 0;
  std::size_t rb = 0;
  auto pair_name = [](std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (std::size_t a = 0; a < p_vectors.size(); ++a) {
    for (std::size_t b = 0; b < p_vectors.size(); ++b) {
      const FieldScalar lhs = space.omega_o(p_vectors[a], p_vectors[b]);
      // tr(sigma(I) sigma(X) sigma(Y) - sigma(X) sigma(I) sigma(Y))
      const FieldScalar rhs =
          trace_of_product(sigma_i * images[a], images[b]) - trace_of_product(images[a] * sigma_i, images[b]);
      if (rhs.is_zero()) {
        if (!lhs.is_zero()) {
          throw InconsistentRatio("omega_o" + pair_name(a, b) + " = " + lhs.to_string() + " but trace form vanishes");
        }
        continue;
      }
      const FieldScalar q = lhs / rhs;
      if (!q.is_rational()) {
        throw InconsistentRatio("ratio at " + pair_name(a, b) + " is not rational: " + q.to_string());
      }
      if (!ratio) {
        ratio = q.as_rational();
        ra = a;
        rb = b;
      } else if (*ratio != q.as_rational()) {
        throw InconsistentRatio("pairs " + pair_name(ra, rb) + " and " + pair_name(a, b) + " give " +
                                ratio->get_str() + " vs " + q.as_rational().get_str());
      }
    }
  }
  if (!ratio) throw AllDegenerate("trace form vanishes on every p pair");
  return *ratio;
}

EmbeddingCheck check_embedding(const HermitianSymmetricSpace& space, const EmbeddingData& emb) {
  const RealLieAlgebra& g = space.algebra();
  if (g.spec().family != Family::Sp2N) throw WrongFamily("check_embedding needs sp(2n,R), got " + g.spec().name());
  EmbeddingCheck out;
  const std::size_t n = emb.n;

  out.s_involution = emb.s * emb.s == MatrixF::identity(n);
  if (!out.s_involution) {
    out.failure = "S*S is not the identity";
    out.witness = emb.s * emb.s;
    return out;
  }
  const MatrixF ttd = emb.t * emb.t.dagger();
  out.t_unitary = ttd == MatrixF::identity(2 * n);
  if (!out.t_unitary) {
    out.failure = "T*T^dagger is not the identity";
    out.witness = ttd;
    return out;
  }

  std::vector<FieldScalar> signs(2 * n, FieldScalar(1));
  for (std::size_t k = n; k < 2 * n; ++k) signs[k] = -1;
  const MatrixF j = MatrixF::diagonal(signs);

  std::vector<MatrixF> images;
  images.reserve(g.dim());
  out.block_formula = true;
  out.su_membership = true;
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const MatrixF& x = g.element(k);
    const MatrixF y = emb.conjugate(x);
    const MatrixF expected = cayley_block_formula(x.block(0, 0, n, n), x.block(0, n, n, n), x.block(n, 0, n, n), emb.s);
    if (y != expected) {
      out.block_formula = false;
      out.failure = "T X T^dagger differs from the block formula for " + g.label(k);
      out.failing_index = k;
      out.witness = y;
      return out;
    }
    if (!(y.dagger() * j + j * y).is_zero() || !y.trace().is_zero()) {
      out.su_membership = false;
      out.failure = "image of " + g.label(k) + " is not in su(n,n)";
      out.failing_index = k;
      out.witness = y;
      return out;
    }
    images.push_back(y);
  }

  out.trace_compatible = true;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    for (std::size_t b = a; b < g.dim(); ++b) {
      if (trace_of_product(images[a], images[b]) != trace_of_product(g.element(a), g.element(b))) {
        out.trace_compatible = false;
        out.failure = "tr(sigma X sigma Y) != tr(XY) for " + g.label(a) + ", " + g.label(b);
        out.failing_index = a;
        return out;
      }
    }
  }
  return out;
}

}  // namespace toledo
