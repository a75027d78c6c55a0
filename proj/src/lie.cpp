#include "toledo/lie.hpp"

#include <algorithm>

namespace toledo {

std::string family_tag(Family f) { return f == Family::SuPQ ? "su" : "sp"; }

void GroupSpec::validate() const {
  if (family == Family::SuPQ) {
    if (p < 1 || q < 1) {
      throw ParameterOutOfRange("su(p,q) needs p >= 1 and q >= 1, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    }
  } else if (n < 1) {
    throw ParameterOutOfRange("sp(2n,R) needs n >= 1, got n=" + std::to_string(n));
  }
}

std::string GroupSpec::name() const {
  if (family == Family::SuPQ) return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return "sp(" + std::to_string(2 * n) + ",R)";
}

std::size_t GroupSpec::matrix_size() const {
  return family == Family::SuPQ ? static_cast<std::size_t>(p + q) : static_cast<std::size_t>(2 * n);
}

std::size_t GroupSpec::expected_dim() const {
  if (family == Family::SuPQ) {
    const auto m = static_cast<std::size_t>(p + q);
    return m * m - 1;
  }
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * n + 1);
}

namespace {

const FieldScalar& imag_unit() {
  static const FieldScalar i = FieldScalar::i();
  return i;
}

std::string ij(std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); }

void build_su(int p, int q, std::vector<MatrixF>& basis, std::vector<std::string>& labels) {
  const std::size_t p_ = static_cast<std::size_t>(p);
  const std::size_t n = p_ + static_cast<std::size_t>(q);
  auto unit = [n](std::size_t r, std::size_t c) { return MatrixF::unit(n, r, c); };
  const FieldScalar& i = imag_unit();

  // k = s(u(p) + u(q)): anti-Hermitian block-diagonal, trace-free.
  auto block_pairs = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a < hi; ++a) {
      for (std::size_t b = a + 1; b < hi; ++b) {
        basis.push_back(unit(a, b) - unit(b, a));
        labels.push_back("k:E" + ij(a, b) + "-E" + ij(b, a));
        basis.push_back(i * (unit(a, b) + unit(b, a)));
        labels.push_back("k:i(E" + ij(a, b) + "+E" + ij(b, a) + ")");
      }
    }
  };
  block_pairs(0, p_);
  block_pairs(p_, n);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    basis.push_back(i * (unit(a, a) - unit(a + 1, a + 1)));
    labels.push_back("k:i(E" + ij(a, a) + "-E" + ij(a + 1, a + 1) + ")");
  }
  // p: Hermitian off-diagonal blocks [[0,B],[B^dagger,0]].
  for (std::size_t a = 0; a < p_; ++a) {
    for (std::size_t b = p_; b < n; ++b) {
      basis.push_back(unit(a, b) + unit(b, a));
      labels.push_back("p:E" + ij(a, b) + "+E" + ij(b, a));
      basis.push_back(i * (unit(a, b) - unit(b, a)));
      labels.push_back("p:i(E" + ij(a, b) + "-E" + ij(b, a) + ")");
    }
  }
}

// X(A,B,C) = [[A, B], [C, -A^T]].
MatrixF sp_block(std::size_t n, const MatrixF& a, const MatrixF& b, const MatrixF& c) {
  MatrixF x(2 * n, 2 * n);
  x.set_block(0, 0, a);
  x.set_block(0, n, b);
  x.set_block(n, 0, c);
  x.set_block(n, n, -a.transpose());
  return x;
}

void build_sp(int n_int, std::vector<MatrixF>& basis, std::vector<std::string>& labels) {
  const auto n = static_cast<std::size_t>(n_int);
  const MatrixF zero(n, n);
  auto sym = [n](std::size_t a, std::size_t b) {
    MatrixF s = MatrixF::unit(n, a, b);
    if (a != b) s += MatrixF::unit(n, b, a);
    return s;
  };
  // k = u(n): A antisymmetric, C = -B.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      basis.push_back(sp_block(n, MatrixF::unit(n, a, b) - MatrixF::unit(n, b, a), zero, zero));
      labels.push_back("k:X(A=E" + ij(a, b) + "-E" + ij(b, a) + ")");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      basis.push_back(sp_block(n, zero, sym(a, b), -sym(a, b)));
      labels.push_back("k:X(B=-C=S" + ij(a, b) + ")");
    }
  }
  // p: A symmetric, C = B.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      basis.push_back(sp_block(n, sym(a, b), zero, zero));
      labels.push_back("p:X(A=S" + ij(a, b) + ")");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      basis.push_back(sp_block(n, zero, sym(a, b), sym(a, b)));
      labels.push_back("p:X(B=C=S" + ij(a, b) + ")");
    }
  }
}

}  // namespace

RealLieAlgebra RealLieAlgebra::build(const GroupSpec& spec) {
  spec.validate();
  std::vector<MatrixF> basis;
  std::vector<std::string> labels;
  if (spec.family == Family::SuPQ) {
    build_su(spec.p, spec.q, basis, labels);
  } else {
    build_sp(spec.n, basis, labels);
  }
  return RealLieAlgebra(spec, std::move(basis), std::move(labels));
}

RealLieAlgebra RealLieAlgebra::from_basis(const GroupSpec& spec, std::vector<MatrixF> basis,
                                          std::vector<std::string> labels) {
  spec.validate();
  labels.resize(basis.size());
  return RealLieAlgebra(spec, std::move(basis), std::move(labels));
}

RealLieAlgebra::RealLieAlgebra(GroupSpec spec, std::vector<MatrixF> basis, std::vector<std::string> labels)
    : spec_(spec), basis_(std::move(basis)), labels_(std::move(labels)), solver_(basis_) {
  const std::size_t d = basis_.size();
  constants_.resize(d * d * d);
  brackets_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const MatrixF br = commutator(basis_[i], basis_[j]);
      auto coords = solver_.solve(br);
      if (!coords) {
        throw NotInSpan(spec_.name() + ": bracket [" + labels_[i] + ", " + labels_[j] + "] leaves the algebra");
      }
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& v = (*coords)[k];
        if (sgn(v) == 0) continue;
        constants_[(i * d + j) * d + k] = v;
        constants_[(j * d + i) * d + k] = -v;
        brackets_[i * d + j].emplace_back(k, v);
        brackets_[j * d + i].emplace_back(k, -v);
      }
    }
  }
}

std::vector<Rational> RealLieAlgebra::coordinates(const MatrixF& m) const {
  auto coords = solver_.solve(m);
  if (!coords) throw NotInSpan("matrix is not in " + spec_.name());
  return std::move(*coords);
}

bool RealLieAlgebra::satisfies_real_form(const MatrixF& m) const {
  const std::size_t n = spec_.matrix_size();
  if (m.rows() != n || m.cols() != n) return false;
  if (spec_.family == Family::SuPQ) {
    std::vector<FieldScalar> signs(n, FieldScalar(1));
    for (std::size_t k = static_cast<std::size_t>(spec_.p); k < n; ++k) signs[k] = -1;
    const MatrixF j = MatrixF::diagonal(signs);
    return (m.dagger() * j + j * m).is_zero() && m.trace().is_zero();
  }
  for (const auto& x : m.entries()) {
    if (!x.is_real()) return false;
  }
  const std::size_t h = n / 2;
  MatrixF omega(n, n);
  omega.set_block(0, h, MatrixF::identity(h));
  omega.set_block(h, 0, -MatrixF::identity(h));
  return (m.transpose() * omega + omega * m).is_zero();
}

bool RealLieAlgebra::jacobi_holds() const {
  const std::size_t d = dim();
  std::vector<Rational> acc(d);
  // [e_a, [e_b, e_c]] accumulated into acc.
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [l, v] : bracket(b, c)) {
      for (const auto& [m, w] : bracket(a, l)) acc[m] += v * w;
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        for (auto& x : acc) x = 0;
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        for (const auto& x : acc) {
          if (sgn(x) != 0) return false;
        }
      }
    }
  }
  return true;
}

CartanDecomposition cartan_decompose(const RealLieAlgebra& g) {
  CartanDecomposition out;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const MatrixF& x = g.element(i);
    const MatrixF involuted = -x.dagger();
    if (involuted == x) {
      out.k_indices.push_back(i);
    } else if (involuted == -x) {
      out.p_indices.push_back(i);
    } else {
      throw BasisNotAdapted(g.spec().name() + ": basis element " + std::to_string(i) + " (" + g.label(i) +
                            ") is not an eigenvector of X -> -X^dagger");
    }
  }
  return out;
}

bool grading_holds(const RealLieAlgebra& g, const CartanDecomposition& cartan) {
  std::vector<bool> compact(g.dim(), false);
  for (auto k : cartan.k_indices) compact[k] = true;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      // Parity of [e_i, e_j] is compact iff both or neither are compact.
      const bool expect_compact = compact[i] == compact[j];
      for (const auto& [k, v] : g.bracket(i, j)) {
        if (compact[k] != expect_compact) return false;
      }
    }
  }
  return true;
}

MetricForm killing_form(const RealLieAlgebra& g) {
  const std::size_t d = g.dim();
  MetricForm out{MetricKind::Killing, QMatrix(d, d)};
  // tr(ad_i ad_j) = sum_{k,l} c[i][k][l] c[j][l][k]
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational t;
      for (std::size_t k = 0; k < d; ++k) {
        for (const auto& [l, v] : g.bracket(i, k)) {
          const Rational& w = g.structure_constant(j, l, k);
          if (sgn(w) != 0) t += v * w;
        }
      }
      out.gram(i, j) = t;
      out.gram(j, i) = t;
    }
  }
  return out;
}

bool killing_ad_invariant(const RealLieAlgebra& g, const MetricForm& killing) {
  const std::size_t d = g.dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) {
        Rational s;
        for (const auto& [l, v] : g.bracket(x, y)) s += v * killing.gram(l, z);
        for (const auto& [l, v] : g.bracket(x, z)) s += v * killing.gram(y, l);
        if (sgn(s) != 0) return false;
      }
    }
  }
  return true;
}

MatrixF identity_realization(const MatrixF& m) { return m; }

namespace {

// Matrix of ad(z)|p on p coordinates, for z given by full coordinates.
QMatrix ad_on_p(const RealLieAlgebra& g, const CartanDecomposition& cartan, std::span<const Rational> z) {
  const std::size_t np = cartan.p_indices.size();
  std::vector<std::size_t> p_pos(g.dim(), np);
  for (std::size_t b = 0; b < np; ++b) p_pos[cartan.p_indices[b]] = b;
  QMatrix m(np, np);
  for (std::size_t t = 0; t < g.dim(); ++t) {
    if (sgn(z[t]) == 0) continue;
    for (std::size_t b = 0; b < np; ++b) {
      for (const auto& [l, v] : g.bracket(t, cartan.p_indices[b])) {
        if (p_pos[l] == np) throw NoSolution("ad(z) does not preserve p");
        m(p_pos[l], b) += z[t] * v;
      }
    }
  }
  return m;
}

}  // namespace

MatrixF central_element(const RealLieAlgebra& g, const CartanDecomposition& cartan, const Realization& reference) {
  const auto& ks = cartan.k_indices;
  const std::size_t nk = ks.size();
  const std::size_t d = g.dim();
  // Rows: for each k_j and output coordinate l, sum_a x_a c[k_a][k_j][l] = 0.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t j = 0; j < nk; ++j) {
    for (std::size_t l = 0; l < d; ++l) {
      std::vector<Rational> row(nk);
      bool nonzero = false;
      for (std::size_t a = 0; a < nk; ++a) {
        row[a] = g.structure_constant(ks[a], ks[j], l);
        nonzero = nonzero || sgn(row[a]) != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  QMatrix system(rows.size(), nk);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < nk; ++c) system(r, c) = rows[r][c];
  }
  const auto centre = nullspace(system);
  if (centre.size() != 1) {
    throw NoSolution(g.spec().name() + ": centre of k has dimension " + std::to_string(centre.size()) +
                     ", expected 1");
  }
  std::vector<Rational> z(d);
  for (std::size_t a = 0; a < nk; ++a) z[ks[a]] = centre[0][a];

  const QMatrix ad = ad_on_p(g, cartan, z);
  const QMatrix sq = ad * ad;
  const std::size_t np = cartan.p_indices.size();
  if (np == 0) throw NoSolution("p is empty");
  const Rational lambda = sq(0, 0);
  if (sq != lambda * QMatrix::identity(np) || sgn(lambda) >= 0) {
    throw NoSolution(g.spec().name() + ": ad(z)^2 is not a negative scalar on p");
  }
  const auto scale = sqrt_in_field(Rational(-lambda));
  if (!scale) throw NoSolution(g.spec().name() + ": sqrt(" + Rational(-lambda).get_str() + ") not in Q(sqrt 2)");

  MatrixF central = g.combine(z) * scale->inv();
  const MatrixF oriented = reference(central);
  if (!oriented.is_square() || oriented.rows() == 0) throw NoSolution("reference realization returned no matrix");
  const FieldScalar& lead = oriented(0, 0);
  const int s = sign_of_quadratic(lead.c(), lead.d());
  if (s == 0) throw NoSolution(g.spec().name() + ": reference realization cannot orient I");
  if (s > 0) central = -central;
  return central;
}

RealRank real_rank(const RealLieAlgebra& g, const CartanDecomposition& cartan) {
  const GroupSpec& spec = g.spec();
  const std::size_t n = spec.matrix_size();
  RealRank out;
  if (spec.family == Family::SuPQ) {
    const auto p = static_cast<std::size_t>(spec.p);
    const auto r = static_cast<std::size_t>(std::min(spec.p, spec.q));
    for (std::size_t j = 0; j < r; ++j) {
      out.flat_basis.push_back(MatrixF::unit(n, j, p + j) + MatrixF::unit(n, p + j, j));
    }
  } else {
    const auto h = static_cast<std::size_t>(spec.n);
    for (std::size_t j = 0; j < h; ++j) {
      out.flat_basis.push_back(MatrixF::unit(n, j, h + j) + MatrixF::unit(n, h + j, j));
    }
  }
  out.rank = out.flat_basis.size();

  for (std::size_t a = 0; a < out.rank; ++a) {
    for (std::size_t b = a + 1; b < out.rank; ++b) {
      if (!commutator(out.flat_basis[a], out.flat_basis[b]).is_zero()) {
        throw MaximalityFailure(spec.name() + ": candidate flat is not abelian");
      }
    }
  }

  std::vector<bool> in_p(g.dim(), false);
  for (auto k : cartan.p_indices) in_p[k] = true;
  const std::size_t np = cartan.p_indices.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : out.flat_basis) {
    const auto coords = g.coordinates(a);
    for (std::size_t t = 0; t < g.dim(); ++t) {
      if (sgn(coords[t]) != 0 && !in_p[t]) throw MaximalityFailure(spec.name() + ": candidate flat leaves p");
    }
    // [a, sum_b y_b p_b] = 0, one equation per output coordinate.
    QMatrix block(g.dim(), np);
    for (std::size_t t = 0; t < g.dim(); ++t) {
      if (sgn(coords[t]) == 0) continue;
      for (std::size_t b = 0; b < np; ++b) {
        for (const auto& [l, v] : g.bracket(t, cartan.p_indices[b])) block(l, b) += coords[t] * v;
      }
    }
    for (std::size_t l = 0; l < g.dim(); ++l) {
      std::vector<Rational> row(np);
      bool nonzero = false;
      for (std::size_t b = 0; b < np; ++b) {
        row[b] = block(l, b);
        nonzero = nonzero || sgn(row[b]) != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  QMatrix system(rows.size(), np);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < np; ++c) system(r, c) = rows[r][c];
  }
  out.centralizer_dim = np - rank(system);
  if (out.centralizer_dim != out.rank) {
    throw MaximalityFailure(spec.name() + ": centralizer of the flat in p has dimension " +
                            std::to_string(out.centralizer_dim) + " > " + std::to_string(out.rank));
  }
  return out;
}

int p_x(const GroupSpec& spec) { return spec.family == Family::SuPQ ? spec.p + spec.q : spec.n + 1; }

Metrics metrics(const CartanDecomposition& cartan, const MetricForm& killing, int p_x) {
  const auto& ps = cartan.p_indices;
  Metrics out;
  out.killing = {MetricKind::Killing, killing.gram.submatrix(ps, ps)};
  out.normalized = {MetricKind::Normalized, Rational(1, p_x) * out.killing.gram};
  Rational half_px(p_x, 2);
  half_px.canonicalize();
  out.bergman = {MetricKind::Bergman, half_px * out.normalized.gram};
  return out;
}

bool killing_closed_form_holds(const RealLieAlgebra& g, const MetricForm& killing, int p_x) {
  const FieldScalar coefficient(2L * p_x);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      const FieldScalar closed = coefficient * trace_of_product(g.element(i), g.element(j));
      if (closed != FieldScalar(killing.gram(i, j))) return false;
    }
  }
  return true;
}

bool complex_structure_holds(const RealLieAlgebra& g, const CartanDecomposition& cartan, const MatrixF& central) {
  for (auto k : cartan.k_indices) {
    if (!commutator(central, g.element(k)).is_zero()) return false;
  }
  for (auto p : cartan.p_indices) {
    const MatrixF& x = g.element(p);
    if (commutator(central, commutator(central, x)) != -x) return false;
  }
  return true;
}

HermitianSymmetricSpace::HermitianSymmetricSpace(RealLieAlgebra algebra, CartanDecomposition cartan,
                                                 MetricForm killing, HermitianStructure hermitian, Metrics metrics)
    : algebra_(std::move(algebra)),
      cartan_(std::move(cartan)),
      killing_(std::move(killing)),
      hermitian_(std::move(hermitian)),
      metrics_(std::move(metrics)) {}

HermitianSymmetricSpace HermitianSymmetricSpace::build(const GroupSpec& spec, const Realization& reference) {
  return build(RealLieAlgebra::build(spec), reference);
}

HermitianSymmetricSpace HermitianSymmetricSpace::build(RealLieAlgebra algebra, const Realization& reference) {
  CartanDecomposition cartan = cartan_decompose(algebra);
  MetricForm killing = killing_form(algebra);
  const GroupSpec& spec = algebra.spec();

  // p_X from the family table, cross-checked against the Killing coefficient.
  const int px = p_x(spec);
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    const FieldScalar t = trace_of_product(algebra.element(i), algebra.element(i));
    if (t.is_zero()) continue;
    if (!t.is_rational() || killing.gram(i, i) / t.as_rational() != Rational(2 * px)) {
      throw Error(spec.name() + ": Killing coefficient disagrees with 2 p_X = " + std::to_string(2 * px));
    }
    break;
  }

  HermitianStructure herm;
  herm.central = central_element(algebra, cartan, reference);
  herm.p_x = px;
  RealRank rr = real_rank(algebra, cartan);
  herm.rank = rr.rank;
  herm.flat_basis = std::move(rr.flat_basis);
  Metrics m = toledo::metrics(cartan, killing, px);
  return HermitianSymmetricSpace(std::move(algebra), std::move(cartan), std::move(killing), std::move(herm),
                                 std::move(m));
}

std::vector<MatrixF> HermitianSymmetricSpace::p_basis() const {
  std::vector<MatrixF> out;
  for (auto k : cartan_.p_indices) out.push_back(algebra_.element(k));
  return out;
}

std::vector<MatrixF> HermitianSymmetricSpace::k_basis() const {
  std::vector<MatrixF> out;
  for (auto k : cartan_.k_indices) out.push_back(algebra_.element(k));
  return out;
}

std::vector<Rational> HermitianSymmetricSpace::p_coordinates(const MatrixF& x) const {
  std::vector<Rational> full;
  try {
    full = algebra_.coordinates(x);
  } catch (const NotInSpan&) {
    throw ArgumentNotInP("argument is not in " + algebra_.spec().name());
  }
  for (auto k : cartan_.k_indices) {
    if (sgn(full[k]) != 0) throw ArgumentNotInP("argument has a k-component");
  }
  std::vector<Rational> out;
  out.reserve(cartan_.p_indices.size());
  for (auto k : cartan_.p_indices) out.push_back(full[k]);
  return out;
}

Rational HermitianSymmetricSpace::normalized_metric(const MatrixF& x, const MatrixF& y) const {
  const auto xc = p_coordinates(x);
  const auto yc = p_coordinates(y);
  const QMatrix& g = metrics_.normalized.gram;
  Rational s;
  for (std::size_t a = 0; a < xc.size(); ++a) {
    if (sgn(xc[a]) == 0) continue;
    for (std::size_t b = 0; b < yc.size(); ++b) {
      if (sgn(yc[b]) != 0 && sgn(g(a, b)) != 0) s += xc[a] * g(a, b) * yc[b];
    }
  }
  return s;
}

FieldScalar HermitianSymmetricSpace::omega_o(const MatrixF& x, const MatrixF& y) const {
  (void)p_coordinates(x);
  (void)p_coordinates(y);
  return FieldScalar(normalized_metric(x, commutator(hermitian_.central, y)));
}

}  // namespace toledo
