#pragma once

#include <cstdint>
#include <map>

#include "quatlie/liecore.hpp"

namespace quatlie {

/// The semisimple grading direction diag(-1, 0_n, 0_n, 1) inside the
/// antidiagonal realization of sp(2n+2, C); its adjoint action has integer
/// spectrum {-2,...,2} and induces the filtration certified below.
CMatrix grading_element(int n);

/// Decomposition of an algebra element into adjoint eigencomponents of the
/// grading direction, keyed by integer degree.
struct GradedElement {
  int n = 0;
  std::map<int, CMatrix> components;  // degrees -2..2, all keys present
  double eigenvector_residual = 0.0;  // max |[v, X_k] - k X_k| normalized

  CMatrix reassembled() const;
};

/// Splits an antidiagonal sp(2n+2, C) element by entry degree and certifies
/// the adjoint eigenvalue equations. Throws on membership failure.
GradedElement grade_decompose(const LieElement& x);

/// The one-dimensional degree -2 piece: the single corner entry.
CMatrix lowering_corner_element(int n);

/// The degree -1 family parametrized by u, w in C^n: first-row entries with
/// their symplectically forced partners in the last column.
CMatrix lowering_row_element(int n, const CVector& u, const CVector& w);

/// Rank-certified graded dimensions plus bracket-degree and block-pattern
/// residuals, sampled over random elements.
struct GradingReport {
  int n = 0;
  int trials = 0;
  std::map<int, int> complex_dims;           // per degree
  int total_complex_dim = 0;
  double eigen_residual_max = 0.0;
  double reassembly_residual = 0.0;
  double bracket_degree_residual = 0.0;      // [Gr^a, Gr^b] inside Gr^{a+b}
  double top_bracket_residual = 0.0;         // degree overflow brackets vanish
  double zero_pattern_residual = 0.0;        // corner balance + middle pattern
  double subalgebra_residual = 0.0;          // nonnegative degrees close up
  std::map<int, int> gl_image_complex_dims;  // graded dims of the gl(n+1,C) image
};
GradingReport grading_report(int n, int trials, std::uint64_t seed);

}  // namespace quatlie
