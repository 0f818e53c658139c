#pragma once

#include <string>
#include <vector>

#include "quatlie/liecore.hpp"

namespace quatlie {

/// One invariant summand of an algebra under the adjoint action of the
/// embedded u(n,1): a label and an orthonormal basis in the ambient real
/// coordinates of the decomposed algebra.
struct Summand {
  std::string label;
  RMatrix coordinate_basis;  // coordinate_dim x dim, orthonormal columns

  int dim() const { return static_cast<int>(coordinate_basis.cols()); }
};

/// Explicit direct-sum decomposition of sp(n,1), u(2n,2) or so(4n,4) into
/// u(n,1)-invariant summands, with certification residuals.
struct DecompositionReport {
  AlgebraTag algebra;
  std::vector<Summand> summands;
  /// |U^T U - I| over the stacked summand coordinates U (mutual orthogonality
  /// and per-summand orthonormality at once).
  double orthonormality_residual = 0.0;
  /// Largest distance from an algebra basis vector to span(U): the summands
  /// jointly exhaust the algebra.
  double completeness_residual = 0.0;
  /// Largest defining-equation residual over all summand basis vectors: each
  /// summand sits inside the algebra.
  double membership_residual = 0.0;

  int total_dim() const;
  const Summand& summand(const std::string& label) const;
};

/// Builds the decomposition. Supports both basis conventions; summands are
/// constructed in the block-diagonal picture and conjugated across when the
/// antidiagonal convention is requested.
DecompositionReport decompose(const AlgebraTag& alg);

/// Largest normalized defect |proj(Ad(g) x) - Ad(g) proj(x)| over random
/// group elements g = exp(t * embedded u(n,1)) and random algebra elements x,
/// maximized over all summands of the report.
double equivariance_defect(const DecompositionReport& report, int trials, SeededRng& rng);

/// The same defect after swapping one basis vector between the first and last
/// summands; certifies that the equivariance test can detect a wrong split.
double equivariance_defect_corrupted(const DecompositionReport& report, int trials,
                                     SeededRng& rng);

/// The space of linear maps from p to symmetric (n+1) x (n+1) complex values,
/// with its distinguished totally symmetric cubic slice: maps of the form
/// X(y) -> [[A(y), 0], [0, 0]] with A(y)_{jk} = sum_l T_{jkl} y_l for a
/// symmetric 3-tensor T over C^n. Basis cochains are stored as their value
/// lists on the interleaved orthonormal basis of p.
struct CubicSliceReport {
  int n = 0;
  int ambient_dim = 0;  // 2n(n+1)(n+2) over R
  int cubic_dim = 0;    // n(n+1)(n+2)/3 over R
  /// cubic_basis[k][j] is the value of the k-th basis map at p_basis[j].
  std::vector<std::vector<CMatrix>> cubic_basis;
};

CubicSliceReport hom_p_decompose(int n);

}  // namespace quatlie
