#pragma once

#include <vector>

#include "quatlie/branching.hpp"
#include "quatlie/liecore.hpp"

namespace quatlie {

/// A one-cochain on p with complex symmetric (n+1) x (n+1) values, stored by
/// its values on the interleaved orthonormal basis of p (block-diagonal
/// convention throughout).
struct Cochain {
  int n = 0;
  std::vector<CMatrix> values;  // 2n matrices

  double squared_norm() const;
  double norm() const;
};

Cochain zero_cochain(int n);
/// Gaussian cochain in the isometric coordinates below.
Cochain random_cochain(int n, SeededRng& rng);

/// Real dimension of the cochain space: 2n(n+1)(n+2).
int cochain_dim(int n);

/// Isometric real coordinates: per value, the upper triangle with diagonal
/// entries at weight 1 and off-diagonal entries at weight sqrt2, real and
/// imaginary parts interleaved. |coords| = cochain norm.
RVector cochain_coordinates(const Cochain& eta);
Cochain cochain_from_coordinates(int n, const RVector& coords);

/// Entrywise conjugation of all values; intertwines the plain and conjugate
/// curvature pipelines.
Cochain conjugate_values(const Cochain& eta);

/// Action of an ambient matrix on a symmetric value: x^T q + q x, or
/// conj(x)^T q + q conj(x) for the conjugate module. Symmetric operators for
/// x in p, skew for x in k, with respect to the real Frobenius inner product.
CMatrix rho_action(const CMatrix& x, const CMatrix& value, bool conjugate = false);

/// The contracted square of the first-order action along the basis of p:
/// beta(X_k, X_l) = rho(X_k) eta(X_l), with its derived invariants.
struct BetaTensor {
  std::vector<std::vector<CMatrix>> entries;  // [k][l]
  double total_square = 0.0;      // sum |beta(X_k, X_l)|^2
  double antisym_square = 0.0;    // sum |(beta(X_k,X_l) - beta(X_l,X_k))/2|^2
  double trace_square = 0.0;      // |sum_k beta(X_k, X_k)|^2
};
BetaTensor beta_tensor(const Cochain& eta, bool conjugate = false);

/// The curvature-term operator
///   (T eta)(Y) = sum_k rho(X_k)^2 eta(Y) + rho([X_k, Y]) eta(X_k),
/// summed over the orthonormal basis {X_k} of p.
Cochain t_apply(const Cochain& eta, bool conjugate = false);

/// sum_k Re <a(X_k), b(X_k)> over the value entries.
double energy_product(const Cochain& a, const Cochain& b);

/// Certifies (T eta, eta) = 2 |alpha|^2 + |Tr beta|^2 for one cochain.
struct EnergyIdentityReport {
  double energy = 0.0;      // (T eta, eta)
  double predicted = 0.0;   // 2 |alpha|^2 + |Tr beta|^2
  double residual = 0.0;    // |energy - predicted| / (1 + |eta|^2)
};
EnergyIdentityReport energy_identity(const Cochain& eta, bool conjugate = false);

/// (T eta, eta) recomputed in a rotated orthonormal basis of p; the operator
/// is basis independent, so this must agree with energy_identity.
double energy_with_rotated_basis(const Cochain& eta, const RMatrix& ortho,
                                 bool conjugate = false);

/// Haar-ish random orthogonal matrix (QR of a Gaussian square).
RMatrix random_orthogonal(int dim, SeededRng& rng);

/// Spectral analysis of the operator's Gram matrix in the isometric
/// coordinates, with an explicit kernel-gap certificate.
struct KernelReport {
  int n = 0;
  bool conjugate = false;
  int ambient_dim = 0;
  int kernel_dim = 0;
  double asymmetry = 0.0;                   // |G - G^T| before symmetrizing
  double threshold = 0.0;                   // 1e-9 * largest eigenvalue
  double largest_kernel_eigenvalue = 0.0;   // max |lambda| below threshold
  double smallest_positive_eigenvalue = 0.0;
  double gap_ratio = 0.0;                   // smallest positive / threshold
  RMatrix kernel_basis;                     // ambient_dim x kernel_dim
};
KernelReport kernel_report(int n, bool conjugate = false);

/// Mutual orthogonal-projection distances between the numerical kernel and
/// the constructed cubic slice (value-conjugated for the conjugate module).
struct SliceMatchReport {
  int kernel_dim = 0;
  int slice_dim = 0;
  double kernel_to_slice = 0.0;  // max_k |(I - C C^T) kernel_k|
  double slice_to_kernel = 0.0;  // max_k |(I - K K^T) slice_k|
};
SliceMatchReport kernel_matches_cubic_slice(const KernelReport& report);

}  // namespace quatlie
