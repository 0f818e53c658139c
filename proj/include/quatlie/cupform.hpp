#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quatlie/branching.hpp"
#include "quatlie/liecore.hpp"

namespace quatlie {

/// Complex-structure behaviour of a p-valued one-form: Holomorphic means
/// alpha(iY) = J(alpha(Y)) for the target's complex structure J,
/// AntiHolomorphic means alpha(iY) = -J(alpha(Y)).
enum class FormType { Holomorphic, AntiHolomorphic, Unrestricted };

/// A one-form on p with values in a target algebra, stored by its values on
/// the interleaved orthonormal basis of p (block-diagonal convention).
struct PValuedOneForm {
  int n = 0;
  AlgebraTag target;
  FormType type = FormType::Unrestricted;
  std::vector<CMatrix> values;  // 2n ambient-size matrices

  double squared_norm() const;
};

/// sp(n,1)-valued form whose value on slot m is the complexification of the
/// pure-j quaternionic matrix j Q delta_m, for symmetric delta_m.
PValuedOneForm sp_form_from_delta(int n, const std::vector<CMatrix>& delta,
                                  FormType type);
/// Recovers the symmetric delta matrices from an sp-valued form.
std::vector<CMatrix> sp_form_delta(const PValuedOneForm& form);

/// so(4n,4)-valued form supported on the off-diagonal corner blocks
///   value = [[0, B R(Q)], [-B^T R(Q), 0]],
/// with B the linear (or anti-linear, for the conjugate family) realification
/// of the given complex symmetric matrices.
PValuedOneForm so44_corner_form(int n, const std::vector<CMatrix>& bmats,
                                bool antiholomorphic);
/// Recovers the real corner blocks B_m.
std::vector<RMatrix> so44_corner_blocks(const PValuedOneForm& form);

/// Random elements of the constructed cubic slice, pushed into each target.
PValuedOneForm random_cubic_sp_form(int n, SeededRng& rng);
PValuedOneForm random_cubic_so44_form(int n, SeededRng& rng, bool antiholomorphic);

/// Largest violation of the form's declared type label (0 for Unrestricted).
double type_label_defect(const PValuedOneForm& form);

/// Antisymmetric two-form on p-basis pairs with algebra values.
struct AlgebraTwoForm {
  int n = 0;
  AlgebraTag target;
  std::vector<std::vector<CMatrix>> entries;  // [m][l], antisymmetric
};

/// The bracket-square [alpha, alpha](Y, Y') = 2 [alpha(Y), alpha(Y')].
AlgebraTwoForm bracket_square(const PValuedOneForm& alpha);

/// Pairing with the central direction i I: lambda(X) for X in sp(n,1).
/// Throws if the element fails the membership equations.
double lambda_sp(const LieElement& x);

/// The two invariant pairings on so(4n,4): traces against diag(J, -J) and
/// diag(J, J) with J the realified multiplication by i.
std::pair<double, double> lambda_primes(const LieElement& x);

/// Scalar two-forms obtained by applying the pairings entrywise.
RMatrix lambda_matrix(const AlgebraTwoForm& form);          // sp target
RMatrix lambda_prime_matrix(const AlgebraTwoForm& form);    // so44 target
RMatrix lambda_dprime_matrix(const AlgebraTwoForm& form);   // so44 target

/// Unitary frame structure on p = C^n: J rotates slot 2k to slot 2k+1 and
/// omega(slot 2k, slot 2k+1) = 1.
struct KahlerStructure {
  int n = 0;
  RMatrix omega;              // 2n x 2n antisymmetric
  RMatrix complex_structure;  // 2n x 2n, squares to -I
};
KahlerStructure standard_kahler(int n);

/// Top-degree wedge quotient (phi wedge omega^{n-1}) / omega^n, computed in
/// closed form and calibrated so the quotient at phi = omega is 1.
double wedge_top_ratio(const RMatrix& phi, const KahlerStructure& ks);
/// Brute-force evaluation of the same quotient as alternating sums over all
/// permutations of the 2n frame vectors; requires n <= 4.
double wedge_top_ratio_oracle(const RMatrix& phi, const KahlerStructure& ks);

/// Constancy certificate for the ratio lambda o [alpha, alpha] wedge
/// omega^{n-1} / (|alpha|^2 omega^n) over random cubic-slice forms.
struct SquareRatioReport {
  int n = 0;
  int trials = 0;
  double c_estimate = 0.0;       // mean of ratio / |alpha|^2
  double relative_spread = 0.0;  // max |r - mean| / |mean|
  int sign = 0;
  double delta_formula_residual = 0.0;  // display formula vs direct brackets
  double delta_sum_residual = 0.0;      // r |alpha|^2 vs -(8/n) sum |delta|^2
  double fast_vs_oracle = 0.0;          // fast path vs permutation oracle
};
SquareRatioReport square_ratio_check(int n, int trials, std::uint64_t seed);

/// Vanishing and signed-norm certificates for the two so(4n,4) pairings on
/// brackets of corner-supported symmetric-square elements.
struct VanishingReport {
  int n = 0;
  int trials = 0;
  double dprime_on_holomorphic = 0.0;     // lambda'' on brackets of plain type
  double prime_on_antiholomorphic = 0.0;  // lambda' on brackets of conj type
  double mixed_prime = 0.0;               // both pairings on mixed brackets
  double mixed_dprime = 0.0;
  double prime_signed_ratio_defect = 0.0;   // lambda'([Z, JZ]) / |Z|^2 vs -2
  double dprime_signed_ratio_defect = 0.0;  // lambda''([Z', JZ']) / |Z'|^2 vs +2
  double corner_display_residual = 0.0;     // lambda'([Z, Z']) vs 8 Tr(DC' - CD')
};
VanishingReport pairing_vanishing_check(int n, int trials, std::uint64_t seed);

/// The combined-pairing ratio on (alpha + alpha') for holomorphic alpha and
/// anti-holomorphic alpha' from the cubic slice: a single fixed-sign constant
/// times (|alpha|^2 + |alpha'|^2), with vanishing cross terms.
struct AnisotropyReport {
  int n = 0;
  int trials = 0;
  double c_estimate = 0.0;
  double relative_spread = 0.0;
  int sign = 0;
  double cross_prime_max = 0.0;         // lambda' on the mixed bracket part
  double cross_dprime_max = 0.0;
  double holomorphic_only_defect = 0.0;  // alpha' = 0 path vs c_estimate
  double min_normalized_ratio = 0.0;     // min |ratio| on unit-norm inputs
  double type_label_defect_max = 0.0;
};
AnisotropyReport anisotropy_check(int n, int trials, std::uint64_t seed);

}  // namespace quatlie
