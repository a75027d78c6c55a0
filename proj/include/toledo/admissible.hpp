#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toledo/lie.hpp"

namespace toledo {

class WrongFamily : public Error {
 public:
  using Error::Error;
};

class InconsistentRatio : public Error {
 public:
  using Error::Error;
};

class AllDegenerate : public Error {
 public:
  using Error::Error;
};

/// S (antidiagonal ones, n x n) and T = (1/sqrt 2) [[-iS, S], [iS, S]].
struct EmbeddingData {
  std::size_t n = 0;
  MatrixF s;
  MatrixF t;

  static EmbeddingData make(std::size_t n);
  /// T X T^dagger.
  MatrixF conjugate(const MatrixF& x) const;
};

/// Closed-form image of X(A,B,C) = [[A,B],[C,-A^T]] under T-conjugation:
///   1/2 [[S(A-A^T-i(B-C))S,  S(-A-A^T-i(B+C))S],
///        [S(-A-A^T+i(B+C))S, S(A-A^T+i(B-C))S]].
MatrixF cayley_block_formula(const MatrixF& a, const MatrixF& b, const MatrixF& c, const MatrixF& s);

enum class RepKind { Standard, CayleyConjugation };

/// A faithful matrix representation E = V + W of a Hermitian algebra.
class AdmissibleRep {
 public:
  AdmissibleRep(GroupSpec source, RepKind kind, std::optional<EmbeddingData> embedding, std::size_t dim_v,
                std::size_t dim_w, MatrixF sigma_central);

  const GroupSpec& source() const noexcept { return source_; }
  RepKind kind() const noexcept { return kind_; }
  const std::optional<EmbeddingData>& embedding() const noexcept { return embedding_; }
  std::size_t dim_v() const noexcept { return dim_v_; }
  std::size_t dim_w() const noexcept { return dim_w_; }
  /// dsigma(I).
  const MatrixF& sigma_central() const noexcept { return sigma_central_; }

  /// dsigma(X): identity for the standard representation, T X T^dagger for
  /// the symplectic embedding.
  MatrixF apply(const MatrixF& x) const;
  std::string descriptor() const;

 private:
  GroupSpec source_;
  RepKind kind_;
  std::optional<EmbeddingData> embedding_;
  std::size_t dim_v_;
  std::size_t dim_w_;
  MatrixF sigma_central_;
};

/// Matrix realization that orients I: identity for su(p,q), T-conjugation
/// for sp(2n,R).
Realization orientation_reference(const GroupSpec& spec);
/// Builds the symmetric space with the matching orientation reference.
HermitianSymmetricSpace build_space(const GroupSpec& spec);

/// Throws WrongFamily.
AdmissibleRep standard_rep_su(const HermitianSymmetricSpace& space);
/// Throws WrongFamily.
AdmissibleRep embed_sp_in_su(const HermitianSymmetricSpace& space);
/// Whichever of the two applies to the space's family.
AdmissibleRep standard_admissible_rep(const HermitianSymmetricSpace& space);

enum class AdmissibilityCondition { None, Faithful, CentralBlocks, OffDiagonal, Homomorphism };
std::string condition_name(AdmissibilityCondition c);

struct AdmissibilityCertificate {
  bool faithful = false;
  bool central_blocks = false;  // dsigma(I) = i/(v+w) diag(-w 1_V, v 1_W)
  bool off_diagonal = false;    // dsigma(p) in [[0,B],[C,0]]
  bool homomorphism = false;
  /// Split discovered from the eigenvalue pattern of dsigma(I).
  std::size_t dim_v = 0;
  std::size_t dim_w = 0;
  AdmissibilityCondition failed = AdmissibilityCondition::None;
  std::string failure;
  std::optional<MatrixF> witness;

  bool admissible() const noexcept { return failed == AdmissibilityCondition::None; }
};

class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(AdmissibilityCertificate cert)
      : Error("not admissible: " + condition_name(cert.failed) + ": " + cert.failure), cert_(std::move(cert)) {}
  const AdmissibilityCertificate& certificate() const noexcept { return cert_; }

 private:
  AdmissibilityCertificate cert_;
};

/// Evaluates every admissibility condition for `central` as the complex
/// structure; never throws on a negative outcome.
AdmissibilityCertificate certify_admissible(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                                            const MatrixF& central);
/// Same, but throws NotAdmissible naming the first failed condition.
AdmissibilityCertificate check_admissible(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                                          const MatrixF& central);

/// The single rational c with omega_o(X,Y) = c tr(dsigma(I) [dsigma X, dsigma Y])
/// over every pair drawn from `p_vectors` (default: the p-basis).
Rational compute_c_sigma(const HermitianSymmetricSpace& space, const AdmissibleRep& rep);
Rational compute_c_sigma(const HermitianSymmetricSpace& space, const AdmissibleRep& rep,
                         const std::vector<MatrixF>& p_vectors);

struct EmbeddingCheck {
  bool s_involution = false;
  bool t_unitary = false;
  bool block_formula = false;
  bool su_membership = false;
  bool trace_compatible = false;
  std::string failure;
  std::optional<std::size_t> failing_index;
  std::optional<MatrixF> witness;

  bool ok() const noexcept {
    return s_involution && t_unitary && block_formula && su_membership && trace_compatible;
  }
};

/// Exact checks of the sp(2n,R) -> su(n,n) embedding over every basis
/// element; stops at the first failure. Throws WrongFamily.
EmbeddingCheck check_embedding(const HermitianSymmetricSpace& space, const EmbeddingData& embedding);

}  // namespace toledo
