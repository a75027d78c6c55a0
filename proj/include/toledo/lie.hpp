#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "toledo/error.hpp"
#include "toledo/linalg.hpp"
#include "toledo/matrix.hpp"

namespace toledo {

enum class Family { SuPQ, Sp2N };

std::string family_tag(Family f);  // "su" / "sp"

/// Which Hermitian algebra to build: su(p,q) or sp(2n,R).
struct GroupSpec {
  Family family = Family::SuPQ;
  int p = 0;
  int q = 0;
  int n = 0;

  static GroupSpec su(int p, int q) { return {Family::SuPQ, p, q, 0}; }
  static GroupSpec sp(int n) { return {Family::Sp2N, 0, 0, n}; }

  /// Throws ParameterOutOfRange.
  void validate() const;
  /// "su(2,3)" or "sp(6,R)".
  std::string name() const;
  /// Size of the defining matrices: p+q or 2n.
  std::size_t matrix_size() const;
  std::size_t expected_dim() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

class NotInSpan : public Error {
 public:
  using Error::Error;
};
class BasisNotAdapted : public Error {
 public:
  using Error::Error;
};
class NoSolution : public Error {
 public:
  using Error::Error;
};
class MaximalityFailure : public Error {
 public:
  using Error::Error;
};
class ArgumentNotInP : public Error {
 public:
  using Error::Error;
};

/// A real form of sl(N,C) given by an explicit matrix basis.
///
/// The basis is adapted to the Cartan involution X -> -X^dagger: compact
/// generators first, then the non-compact ones. Structure constants are
/// rational and stored densely as c[i][j][k] with [e_i, e_j] = sum_k c e_k.
class RealLieAlgebra {
 public:
  /// build_algebra. Throws ParameterOutOfRange.
  static RealLieAlgebra build(const GroupSpec& spec);
  /// Wraps an arbitrary linearly independent, bracket-closed family; used to
  /// feed non-standard bases (e.g. rescaled or non-adapted) to the checks.
  static RealLieAlgebra from_basis(const GroupSpec& spec, std::vector<MatrixF> basis,
                                   std::vector<std::string> labels);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<MatrixF>& basis() const noexcept { return basis_; }
  const MatrixF& element(std::size_t i) const { return basis_.at(i); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  /// Nonzero coordinates of [e_i, e_j].
  const SparseVector& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }

  /// Throws NotInSpan for matrices outside the algebra.
  std::vector<Rational> coordinates(const MatrixF& m) const;
  MatrixF combine(std::span<const Rational> coords) const { return solver_.combine(coords); }

  /// Real-form membership in the defining realization.
  bool satisfies_real_form(const MatrixF& m) const;
  /// Brute-force Jacobi identity over every basis triple.
  bool jacobi_holds() const;

 private:
  RealLieAlgebra(GroupSpec spec, std::vector<MatrixF> basis, std::vector<std::string> labels);

  GroupSpec spec_;
  std::vector<MatrixF> basis_;
  std::vector<std::string> labels_;
  SpanCoordinates solver_;
  std::vector<Rational> constants_;
  std::vector<SparseVector> brackets_;
};

struct CartanDecomposition {
  std::vector<std::size_t> k_indices;
  std::vector<std::size_t> p_indices;
};

/// Splits the basis into +1 / -1 eigenvectors of X -> -X^dagger.
/// Throws BasisNotAdapted if some basis element is neither.
CartanDecomposition cartan_decompose(const RealLieAlgebra& g);
/// [k,k] in k, [k,p] in p, [p,p] in k on every basis pair.
bool grading_holds(const RealLieAlgebra& g, const CartanDecomposition& cartan);

enum class MetricKind { Killing, Bergman, Normalized };

/// Gram matrix of a symmetric bilinear form on some basis.
struct MetricForm {
  MetricKind kind = MetricKind::Killing;
  QMatrix gram;
};

/// Killing form tr(ad e_i o ad e_j) on the full basis.
MetricForm killing_form(const RealLieAlgebra& g);
/// kappa([x,y],z) + kappa(y,[x,z]) = 0 on every basis triple.
bool killing_ad_invariant(const RealLieAlgebra& g, const MetricForm& killing);

/// Maps an algebra element into the matrix realization used to orient I.
using Realization = std::function<MatrixF(const MatrixF&)>;
MatrixF identity_realization(const MatrixF& m);

/// The element I of the centre of k with ad(I)^2 = -1 on p.
///
/// Solves [I, k] = 0 exactly, normalizes by the scalar ad(Z)^2|p, and fixes
/// the sign so that the first diagonal entry of reference(I) has negative
/// imaginary part. Throws NoSolution when any step fails.
MatrixF central_element(const RealLieAlgebra& g, const CartanDecomposition& cartan, const Realization& reference);

struct RealRank {
  std::size_t rank = 0;
  std::vector<MatrixF> flat_basis;
  /// Dimension of the centralizer of the flat inside p (equals rank).
  std::size_t centralizer_dim = 0;
};

/// Standard flat of p, certified maximal by an exact kernel computation.
/// Throws MaximalityFailure.
RealRank real_rank(const RealLieAlgebra& g, const CartanDecomposition& cartan);

/// Ratio of the Killing metric to the normalized metric: p+q or n+1.
int p_x(const GroupSpec& spec);

struct HermitianStructure {
  MatrixF central;  // I
  int p_x = 0;
  std::size_t rank = 0;
  std::vector<MatrixF> flat_basis;
};

/// The three metrics on the p-basis, in order of cartan.p_indices.
struct Metrics {
  MetricForm killing;
  MetricForm bergman;
  MetricForm normalized;
};

/// Everything lie-core derives for one group, built once and read-only.
class HermitianSymmetricSpace {
 public:
  /// Throws on any failed certificate (Jacobi is not re-run here).
  static HermitianSymmetricSpace build(const GroupSpec& spec, const Realization& reference);
  /// Variant taking an already-built algebra.
  static HermitianSymmetricSpace build(RealLieAlgebra algebra, const Realization& reference);

  const RealLieAlgebra& algebra() const noexcept { return algebra_; }
  const CartanDecomposition& cartan() const noexcept { return cartan_; }
  const MetricForm& killing() const noexcept { return killing_; }
  const HermitianStructure& hermitian() const noexcept { return hermitian_; }
  const Metrics& metrics() const noexcept { return metrics_; }

  /// Basis matrices of p, in cartan order.
  std::vector<MatrixF> p_basis() const;
  std::vector<MatrixF> k_basis() const;

  /// Coordinates on the p-basis; throws ArgumentNotInP.
  std::vector<Rational> p_coordinates(const MatrixF& x) const;
  /// g_norm(X, Y) for X, Y in p.
  Rational normalized_metric(const MatrixF& x, const MatrixF& y) const;
  /// omega_o(X, Y) = g_norm(X, [I, Y]).
  FieldScalar omega_o(const MatrixF& x, const MatrixF& y) const;

 private:
  HermitianSymmetricSpace(RealLieAlgebra algebra, CartanDecomposition cartan, MetricForm killing,
                          HermitianStructure hermitian, Metrics metrics);

  RealLieAlgebra algebra_;
  CartanDecomposition cartan_;
  MetricForm killing_;
  HermitianStructure hermitian_;
  Metrics metrics_;
};

/// Three Gram matrices with g_norm = g_Kill / p_X and g_Berg = (p_X/2) g_norm.
Metrics metrics(const CartanDecomposition& cartan, const MetricForm& killing, int p_x);

/// Checks gram_Kill[i][j] = 2 p_X tr(e_i e_j) on every basis pair.
bool killing_closed_form_holds(const RealLieAlgebra& g, const MetricForm& killing, int p_x);

/// ad(I)^2 = -1 on p and [I, k] = 0.
bool complex_structure_holds(const RealLieAlgebra& g, const CartanDecomposition& cartan, const MatrixF& central);

}  // namespace toledo
