#pragma once

#include <string>
#include <vector>

#include "quatlie/quatmat.hpp"
#include "quatlie/rng.hpp"

namespace quatlie {

/// The six matrix Lie algebras of the embedding chain and its symplectic
/// companion. Ambient sizes: n+1, n+1, 2n+2, 2n+2, 4n+4, 2n+2.
enum class AlgebraKind { SuN1, UN1, SpN1, U2N2, So4N4, Sp2N2C };

struct AlgebraTag {
  AlgebraKind kind;
  int n;
  BasisConvention convention = BasisConvention::BlockDiag;

  Eigen::Index ambient_size() const;
  /// Scalar field of the stored ambient matrix (Real only for so(4n,4)).
  Field matrix_field() const;
  /// Real dimension of the ambient matrix space (m^2 or 2 m^2).
  int coordinate_dim() const;
  /// Real dimension of the algebra, closed form.
  int dimension() const;
  std::string name() const;

  bool operator==(const AlgebraTag&) const = default;
};

inline AlgebraTag su_n1(int n, BasisConvention c = BasisConvention::BlockDiag) {
  return {AlgebraKind::SuN1, n, c};
}
inline AlgebraTag u_n1(int n, BasisConvention c = BasisConvention::BlockDiag) {
  return {AlgebraKind::UN1, n, c};
}
inline AlgebraTag sp_n1(int n, BasisConvention c = BasisConvention::BlockDiag) {
  return {AlgebraKind::SpN1, n, c};
}
inline AlgebraTag u_2n2(int n, BasisConvention c = BasisConvention::BlockDiag) {
  return {AlgebraKind::U2N2, n, c};
}
inline AlgebraTag so_4n4(int n, BasisConvention c = BasisConvention::BlockDiag) {
  return {AlgebraKind::So4N4, n, c};
}
inline AlgebraTag sp_2n2_c(int n, BasisConvention c = BasisConvention::BlockDiag) {
  return {AlgebraKind::Sp2N2C, n, c};
}

/// A matrix tagged with its ambient algebra and the basis convention in force.
struct LieElement {
  AlgebraTag algebra;
  CMatrix mat;

  double norm() const { return mat.norm(); }
};

/// Defining forms. Sizes: indefinite (n+1), doubled/symplectic/reality (2n+2),
/// quad (4n+4). BlockDiag: Q = diag(I_n, -1), diag(Q, Q), [[0,-Q],[Q,0]],
/// S = [[0,I],[-I,0]], diag(Q,Q,Q,Q). AntiDiag: Lambda0 = diag(-1, I_n),
/// Lambda = diag(Lambda0, J0 Lambda0 J0), [[0,J0],[-J0,0]],
/// [[0,J1],[-J1^T,0]], diag(Lambda, Lambda).
CMatrix indefinite_form(int n, BasisConvention conv);
CMatrix doubled_form(int n, BasisConvention conv);
CMatrix symplectic_form(int n, BasisConvention conv);
CMatrix reality_form(int n, BasisConvention conv);
RMatrix quad_form(int n, BasisConvention conv);

/// Norm of the defect of all defining equations of the algebra; zero exactly
/// on members. Throws on ambient size mismatch.
double membership_residual(const CMatrix& x, const AlgebraTag& alg);

/// Isometric real coordinates of the ambient matrix space: for complex
/// matrices the stacked (Re, Im) entries; for real ones the entries.
RVector vec_ambient(const CMatrix& x, const AlgebraTag& alg);
CMatrix unvec_ambient(const RVector& v, const AlgebraTag& alg);

/// Orthonormal basis of an algebra (with respect to Re Tr(X Y*)), built once
/// per tag as the null space of the stacked defining linear constraints and
/// cached immutably; safe for concurrent use after construction.
class AlgebraBasis {
public:
  static const AlgebraBasis& get(const AlgebraTag& tag);

  const AlgebraTag& tag() const { return tag_; }
  int dim() const { return static_cast<int>(elements_.size()); }
  const std::vector<CMatrix>& elements() const { return elements_; }

  CMatrix combine(const RVector& coeffs) const;
  /// Coefficients of the orthogonal projection onto the algebra.
  RVector coordinates(const CMatrix& x) const;
  /// Distance from x to its orthogonal projection onto the algebra.
  double projection_defect(const CMatrix& x) const;

private:
  explicit AlgebraBasis(const AlgebraTag& tag);
  AlgebraTag tag_;
  std::vector<CMatrix> elements_;
  RMatrix coordinate_basis_;  // coordinate_dim x dim, orthonormal columns
};

/// Gaussian element in the algebra's cached orthonormal basis; deterministic
/// per RNG state; membership residual at rounding level.
LieElement random_element(const AlgebraTag& alg, SeededRng& rng);

/// [X, Y] = XY - YX. Requires matching algebras.
LieElement bracket(const LieElement& x, const LieElement& y);

/// The embedding chain su(n,1) -> u(n,1) -> sp(n,1) -> u(2n,2) -> so(4n,4).
/// u(n,1) -> sp(n,1): diag(A, conj A) (BlockDiag) or diag(A, -J0 A^T J0)
/// (AntiDiag); u(2n,2) -> so(4n,4): realification in the convention's layout.
/// Composes automatically across non-adjacent forward pairs; rejects reversed
/// or off-chain pairs.
LieElement embed(const LieElement& x, const AlgebraTag& target);

/// scale * Re Tr(X Y*). Symmetric; Ad-invariant under the compact subgroup.
double trace_pairing(const CMatrix& x, const CMatrix& y, double scale = 1.0);
double trace_pairing(const LieElement& x, const LieElement& y, double scale = 1.0);

/// Cartan decomposition of su(n,1) into block-diagonal k and the off-block p;
/// theta(k) = k, theta(p) = -p for the Cartan involution theta = -adjoint.
struct CartanSplit {
  LieElement k_part;
  LieElement p_part;
};
CartanSplit cartan_split(const LieElement& x);

/// The p-part matrix X(x) with vector slot x (BlockDiag: last row/column;
/// AntiDiag: first row/column). Hermitian; X(x) in su(n,1) for x in C^n.
CMatrix p_element(const CVector& x, BasisConvention conv);

/// Orthonormal basis of p, interleaved as X(e_1)/sqrt2, X(i e_1)/sqrt2, ...
std::vector<CMatrix> p_basis(int n, BasisConvention conv);

/// Matrix exponential (for equivariance tests).
CMatrix matrix_exp(const CMatrix& x);

/// Certifies sp(n,1) = (quaternionic matrices) ∩ u(2n,2) = sp(2n+2,C) ∩ u(2n,2)
/// at the Lie algebra level: sampled sp(n,1) elements satisfy both sets of
/// defining equations, and the joint null space of the stacked u(2n,2) and
/// sp(2n+2,C) constraints has dimension (n+1)(2n+3).
struct IntersectionReport {
  int n = 0;
  int joint_dimension = 0;
  int expected_dimension = 0;
  double max_u22_residual = 0.0;
  double max_sp_complex_residual = 0.0;
};
IntersectionReport verify_intersection(int n, int trials, SeededRng& rng);

}  // namespace quatlie
