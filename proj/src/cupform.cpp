#include "quatlie/cupform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace quatlie {

namespace {

void check_form(const PValuedOneForm& form) {
  if (form.n < 1) {
    throw std::invalid_argument("one-form requires n >= 1");
  }
  if (form.values.size() != static_cast<std::size_t>(2 * form.n)) {
    throw std::invalid_argument("one-form must carry one value per basis direction of p");
  }
  const Eigen::Index size = form.target.ambient_size();
  for (const CMatrix& v : form.values) {
    if (v.rows() != size || v.cols() != size) {
      throw std::invalid_argument("one-form value has the wrong ambient size");
    }
  }
}

void check_membership(const LieElement& x, AlgebraKind kind, const char* what) {
  if (x.algebra.kind != kind) {
    throw std::invalid_argument(std::string(what) + ": element has the wrong algebra tag");
  }
  const double residual = membership_residual(x.mat, x.algebra);
  if (residual > 1e-6 * (1.0 + x.mat.squaredNorm())) {
    throw std::invalid_argument(std::string(what) + ": membership equations fail");
  }
}

CMatrix indefinite_q(int n) {
  return indefinite_form(n, BasisConvention::BlockDiag);
}

/// Pairing of an sp(n,1) matrix with the complexified central direction iI.
double lambda_sp_value(const CMatrix& x, int n) {
  const Eigen::Index m = n + 1;
  const CMatrix center =
      complexify(Complex(0.0, 1.0) * CMatrix::Identity(m, m),
                 CMatrix::Zero(m, m), BasisConvention::BlockDiag);
  return trace_pairing(x, center);
}

RMatrix realified_rotation(int n) {
  const Eigen::Index m = n + 1;
  return realify_linear(Complex(0.0, 1.0) * CMatrix::Identity(m, m));
}

CMatrix prime_direction(int n, double lower_sign) {
  const RMatrix j = realified_rotation(n);
  const Eigen::Index h = j.rows();
  RMatrix out = RMatrix::Zero(2 * h, 2 * h);
  out.topLeftCorner(h, h) = j;
  out.bottomRightCorner(h, h) = lower_sign * j;
  return out.cast<Complex>();
}

double lambda_prime_value(const CMatrix& x, int n, double lower_sign) {
  return (prime_direction(n, lower_sign) * x).trace().real();
}

/// Corner element [[0, B R(Q)], [-B^T R(Q), 0]] of so(4n,4) for real B.
CMatrix corner_element(const RMatrix& b, int n) {
  const RMatrix qr = realify_linear(indefinite_q(n));
  const Eigen::Index h = qr.rows();
  RMatrix out = RMatrix::Zero(2 * h, 2 * h);
  out.topRightCorner(h, h) = b * qr;
  out.bottomLeftCorner(h, h) = -b.transpose() * qr;
  return out.cast<Complex>();
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

/// Random linear combination of the cubic-slice value lists, bounded away
/// from zero.
std::vector<CMatrix> random_cubic_values(int n, SeededRng& rng) {
  const CubicSliceReport slice = hom_p_decompose(n);
  std::vector<double> coeff(static_cast<std::size_t>(slice.cubic_dim));
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& c : coeff) {
      c = rng.normal();
      norm2 += c * c;
    }
  } while (norm2 < 1e-6);
  std::vector<CMatrix> values(static_cast<std::size_t>(2 * n),
                              CMatrix::Zero(n + 1, n + 1));
  for (std::size_t c = 0; c < coeff.size(); ++c) {
    for (std::size_t m = 0; m < values.size(); ++m) {
      values[m] += coeff[c] * slice.cubic_basis[c][m];
    }
  }
  return values;
}

struct RatioStats {
  double mean = 0.0;
  double spread = 0.0;
  int sign = 0;
};

RatioStats summarize(const std::vector<double>& ratios) {
  RatioStats stats;
  if (ratios.empty()) {
    return stats;
  }
  stats.mean = std::accumulate(ratios.begin(), ratios.end(), 0.0) /
               static_cast<double>(ratios.size());
  for (double r : ratios) {
    stats.spread = std::max(stats.spread, std::abs(r - stats.mean));
  }
  if (stats.mean != 0.0) {
    stats.spread /= std::abs(stats.mean);
    stats.sign = stats.mean > 0.0 ? 1 : -1;
  }
  return stats;
}

/// Alternating permutation sum of a product of n two-forms over the 2n frame
/// vectors: sum_sigma sgn(sigma) prod_f factors[f](sigma(2f), sigma(2f+1)).
double alternating_sum(const std::vector<const RMatrix*>& factors, int frame) {
  std::vector<int> perm(static_cast<std::size_t>(frame));
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) {
        if (perm[i] > perm[j]) {
          ++inversions;
        }
      }
    }
    double term = (inversions % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      term *= (*factors[f])(perm[2 * f], perm[2 * f + 1]);
      if (term == 0.0) {
        break;
      }
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

RMatrix scalarized(const AlgebraTwoForm& form, AlgebraKind kind,
                   double (*functional)(const CMatrix&, int)) {
  if (form.target.kind != kind) {
    throw std::invalid_argument("two-form has the wrong target algebra");
  }
  const int dim = 2 * form.n;
  RMatrix out(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int l = 0; l < dim; ++l) {
      out(m, l) = functional(
          form.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)],
          form.n);
    }
  }
  return out;
}

double lambda_sp_functional(const CMatrix& x, int n) { return lambda_sp_value(x, n); }
double lambda_prime_functional(const CMatrix& x, int n) {
  return lambda_prime_value(x, n, -1.0);
}
double lambda_dprime_functional(const CMatrix& x, int n) {
  return lambda_prime_value(x, n, 1.0);
}

/// Random complex symmetric matrix supported on the top-left n x n corner of
/// the (n+1)-frame.
CMatrix random_corner_symmetric(int n, SeededRng& rng) {
  CMatrix b = CMatrix::Zero(n + 1, n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Complex entry = rng.complex_normal();
      b(i, j) = entry;
      b(j, i) = entry;
    }
  }
  return b;
}

}  // namespace

double PValuedOneForm::squared_norm() const {
  double total = 0.0;
  for (const CMatrix& v : values) {
    total += v.squaredNorm();
  }
  return total;
}

PValuedOneForm sp_form_from_delta(int n, const std::vector<CMatrix>& delta,
                                  FormType type) {
  if (n < 1 || delta.size() != static_cast<std::size_t>(2 * n)) {
    throw std::invalid_argument("need one symmetric slope per basis direction of p");
  }
  const CMatrix q = indefinite_q(n);
  PValuedOneForm form;
  form.n = n;
  form.target = sp_n1(n);
  form.type = type;
  form.values.reserve(delta.size());
  const CMatrix zero = CMatrix::Zero(n + 1, n + 1);
  for (const CMatrix& d : delta) {
    if (d.rows() != n + 1 || d.cols() != n + 1) {
      throw std::invalid_argument("slope matrix has the wrong size");
    }
    if ((d - d.transpose()).norm() > 1e-10 * (1.0 + d.norm())) {
      throw std::invalid_argument("slope matrix must be symmetric");
    }
    form.values.push_back(complexify(zero, q * d, BasisConvention::BlockDiag));
  }
  return form;
}

std::vector<CMatrix> sp_form_delta(const PValuedOneForm& form) {
  check_form(form);
  if (form.target.kind != AlgebraKind::SpN1) {
    throw std::invalid_argument("expected an sp(n,1)-valued form");
  }
  const Eigen::Index m = form.n + 1;
  const CMatrix q = indefinite_q(form.n);
  std::vector<CMatrix> delta;
  delta.reserve(form.values.size());
  for (const CMatrix& v : form.values) {
    delta.push_back(q * v.bottomLeftCorner(m, m));
  }
  return delta;
}

PValuedOneForm so44_corner_form(int n, const std::vector<CMatrix>& bmats,
                                bool antiholomorphic) {
  if (n < 1 || bmats.size() != static_cast<std::size_t>(2 * n)) {
    throw std::invalid_argument("need one corner matrix per basis direction of p");
  }
  PValuedOneForm form;
  form.n = n;
  form.target = so_4n4(n);
  form.type = antiholomorphic ? FormType::AntiHolomorphic : FormType::Holomorphic;
  form.values.reserve(bmats.size());
  for (const CMatrix& b : bmats) {
    if (b.rows() != n + 1 || b.cols() != n + 1) {
      throw std::invalid_argument("corner matrix has the wrong size");
    }
    const RMatrix real_block =
        antiholomorphic ? realify_antilinear(b) : realify_linear(b);
    form.values.push_back(corner_element(real_block, n));
  }
  return form;
}

std::vector<RMatrix> so44_corner_blocks(const PValuedOneForm& form) {
  check_form(form);
  if (form.target.kind != AlgebraKind::So4N4) {
    throw std::invalid_argument("expected an so(4n,4)-valued form");
  }
  const RMatrix qr = realify_linear(indefinite_q(form.n));
  const Eigen::Index h = qr.rows();
  std::vector<RMatrix> blocks;
  blocks.reserve(form.values.size());
  for (const CMatrix& v : form.values) {
    blocks.push_back(v.topRightCorner(h, h).real() * qr);
  }
  return blocks;
}

PValuedOneForm random_cubic_sp_form(int n, SeededRng& rng) {
  return sp_form_from_delta(n, random_cubic_values(n, rng), FormType::Holomorphic);
}

PValuedOneForm random_cubic_so44_form(int n, SeededRng& rng, bool antiholomorphic) {
  return so44_corner_form(n, random_cubic_values(n, rng), antiholomorphic);
}

double type_label_defect(const PValuedOneForm& form) {
  check_form(form);
  if (form.type == FormType::Unrestricted) {
    return 0.0;
  }
  double defect = 0.0;
  if (form.target.kind == AlgebraKind::SpN1) {
    const std::vector<CMatrix> delta = sp_form_delta(form);
    const Complex rot =
        form.type == FormType::Holomorphic ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
    for (int k = 0; k < form.n; ++k) {
      const CMatrix& even = delta[static_cast<std::size_t>(2 * k)];
      const CMatrix& odd = delta[static_cast<std::size_t>(2 * k + 1)];
      defect = std::max(defect, (odd - rot * even).norm() / (1.0 + even.norm()));
    }
    return defect;
  }
  if (form.target.kind == AlgebraKind::So4N4) {
    const std::vector<RMatrix> blocks = so44_corner_blocks(form);
    const RMatrix j = realified_rotation(form.n);
    for (int k = 0; k < form.n; ++k) {
      const RMatrix& even = blocks[static_cast<std::size_t>(2 * k)];
      const RMatrix& odd = blocks[static_cast<std::size_t>(2 * k + 1)];
      // Both families satisfy alpha(iY) = J alpha(Y) at the block level; the
      // label is honest when the block also lies in the right realification
      // family: J-commuting for the plain one, J-anticommuting for the
      // conjugate one.
      defect = std::max(defect, (odd - j * even).norm() / (1.0 + even.norm()));
      const RMatrix family = form.type == FormType::Holomorphic
                                 ? RMatrix(j * even - even * j)
                                 : RMatrix(j * even + even * j);
      defect = std::max(defect, family.norm() / (1.0 + even.norm()));
    }
    return defect;
  }
  throw std::invalid_argument("type labels are defined for sp and so44 targets");
}

AlgebraTwoForm bracket_square(const PValuedOneForm& alpha) {
  check_form(alpha);
  const std::size_t dim = alpha.values.size();
  AlgebraTwoForm out;
  out.n = alpha.n;
  out.target = alpha.target;
  out.entries.assign(dim, std::vector<CMatrix>(dim));
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t l = 0; l < dim; ++l) {
      out.entries[m][l] = 2.0 * commutator(alpha.values[m], alpha.values[l]);
    }
  }
  return out;
}

double lambda_sp(const LieElement& x) {
  check_membership(x, AlgebraKind::SpN1, "lambda_sp");
  return lambda_sp_value(x.mat, x.algebra.n);
}

std::pair<double, double> lambda_primes(const LieElement& x) {
  check_membership(x, AlgebraKind::So4N4, "lambda_primes");
  return {lambda_prime_value(x.mat, x.algebra.n, -1.0),
          lambda_prime_value(x.mat, x.algebra.n, 1.0)};
}

RMatrix lambda_matrix(const AlgebraTwoForm& form) {
  return scalarized(form, AlgebraKind::SpN1, lambda_sp_functional);
}

RMatrix lambda_prime_matrix(const AlgebraTwoForm& form) {
  return scalarized(form, AlgebraKind::So4N4, lambda_prime_functional);
}

RMatrix lambda_dprime_matrix(const AlgebraTwoForm& form) {
  return scalarized(form, AlgebraKind::So4N4, lambda_dprime_functional);
}

KahlerStructure standard_kahler(int n) {
  if (n < 1) {
    throw std::invalid_argument("standard_kahler requires n >= 1");
  }
  KahlerStructure ks;
  ks.n = n;
  ks.omega = RMatrix::Zero(2 * n, 2 * n);
  ks.complex_structure = RMatrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    ks.omega(2 * k, 2 * k + 1) = 1.0;
    ks.omega(2 * k + 1, 2 * k) = -1.0;
    ks.complex_structure(2 * k + 1, 2 * k) = 1.0;
    ks.complex_structure(2 * k, 2 * k + 1) = -1.0;
  }
  return ks;
}

double wedge_top_ratio(const RMatrix& phi, const KahlerStructure& ks) {
  const int dim = 2 * ks.n;
  if (phi.rows() != dim || phi.cols() != dim) {
    throw std::invalid_argument("two-form has the wrong frame size");
  }
  if ((phi + phi.transpose()).norm() > 1e-9 * (1.0 + phi.norm())) {
    throw std::invalid_argument("wedge_top_ratio requires an antisymmetric form");
  }
  double calibration = 0.0;
  double total = 0.0;
  for (int k = 0; k < ks.n; ++k) {
    calibration += ks.omega(2 * k, 2 * k + 1);
    total += phi(2 * k, 2 * k + 1);
  }
  if (std::abs(calibration) < 1e-12) {
    throw std::runtime_error("degenerate frame normalization");
  }
  return total / calibration;
}

double wedge_top_ratio_oracle(const RMatrix& phi, const KahlerStructure& ks) {
  if (ks.n > 4) {
    throw std::invalid_argument("permutation oracle limited to n <= 4");
  }
  const int dim = 2 * ks.n;
  if (phi.rows() != dim || phi.cols() != dim) {
    throw std::invalid_argument("two-form has the wrong frame size");
  }
  if ((phi + phi.transpose()).norm() > 1e-9 * (1.0 + phi.norm())) {
    throw std::invalid_argument("permutation oracle requires an antisymmetric form");
  }
  std::vector<const RMatrix*> numerator(static_cast<std::size_t>(ks.n), &ks.omega);
  numerator[0] = &phi;
  const std::vector<const RMatrix*> denominator(static_cast<std::size_t>(ks.n),
                                                &ks.omega);
  const double bottom = alternating_sum(denominator, dim);
  if (std::abs(bottom) < 1e-8) {
    throw std::runtime_error("top power of the frame form vanishes");
  }
  return alternating_sum(numerator, dim) / bottom;
}

SquareRatioReport square_ratio_check(int n, int trials, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("square_ratio_check requires n >= 2");
  }
  SeededRng rng(seed);
  const KahlerStructure ks = standard_kahler(n);
  const CMatrix q = indefinite_q(n);
  SquareRatioReport report;
  report.n = n;
  report.trials = trials;
  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    const PValuedOneForm alpha = random_cubic_sp_form(n, rng);
    const AlgebraTwoForm square = bracket_square(alpha);
    const std::vector<CMatrix> delta = sp_form_delta(alpha);

    for (std::size_t m = 0; m < delta.size(); ++m) {
      for (std::size_t l = 0; l < delta.size(); ++l) {
        const CMatrix c = -q * delta[m].conjugate() * q * delta[l] +
                          q * delta[l].conjugate() * q * delta[m];
        const CMatrix predicted =
            2.0 * complexify(c, CMatrix::Zero(n + 1, n + 1),
                             BasisConvention::BlockDiag);
        report.delta_formula_residual = std::max(
            report.delta_formula_residual,
            (square.entries[m][l] - predicted).norm() / (1.0 + predicted.norm()));
      }
    }

    const RMatrix phi = lambda_matrix(square);
    const double fast = wedge_top_ratio(phi, ks);
    if (n <= 4) {
      const double oracle = wedge_top_ratio_oracle(phi, ks);
      report.fast_vs_oracle = std::max(report.fast_vs_oracle,
                                       std::abs(fast - oracle) / (1.0 + std::abs(oracle)));
    }

    double even_slope_square = 0.0;
    for (int k = 0; k < n; ++k) {
      even_slope_square += delta[static_cast<std::size_t>(2 * k)].squaredNorm();
    }
    report.delta_sum_residual =
        std::max(report.delta_sum_residual,
                 std::abs(fast + (8.0 / n) * even_slope_square) /
                     (1.0 + std::abs(fast)));

    ratios.push_back(fast / alpha.squared_norm());
  }
  const RatioStats stats = summarize(ratios);
  report.c_estimate = stats.mean;
  report.relative_spread = stats.spread;
  report.sign = stats.sign;
  return report;
}

VanishingReport pairing_vanishing_check(int n, int trials, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("pairing_vanishing_check requires n >= 2");
  }
  SeededRng rng(seed);
  const RMatrix j = realified_rotation(n);
  VanishingReport report;
  report.n = n;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const CMatrix b1 = random_corner_symmetric(n, rng);
    const CMatrix b2 = random_corner_symmetric(n, rng);
    const CMatrix c1 = random_corner_symmetric(n, rng);
    const CMatrix c2 = random_corner_symmetric(n, rng);
    const CMatrix z1 = corner_element(realify_linear(b1), n);
    const CMatrix z2 = corner_element(realify_linear(b2), n);
    const CMatrix w1 = corner_element(realify_antilinear(c1), n);
    const CMatrix w2 = corner_element(realify_antilinear(c2), n);

    const auto scale2 = [](const CMatrix& a, const CMatrix& b) {
      return 1.0 + a.norm() * b.norm();
    };

    const CMatrix plain_pair = commutator(z1, z2);
    report.dprime_on_holomorphic =
        std::max(report.dprime_on_holomorphic,
                 std::abs(lambda_prime_value(plain_pair, n, 1.0)) / scale2(z1, z2));

    const CMatrix conj_pair = commutator(w1, w2);
    report.prime_on_antiholomorphic =
        std::max(report.prime_on_antiholomorphic,
                 std::abs(lambda_prime_value(conj_pair, n, -1.0)) / scale2(w1, w2));

    const CMatrix mixed = commutator(z1, w1);
    report.mixed_prime =
        std::max(report.mixed_prime,
                 std::abs(lambda_prime_value(mixed, n, -1.0)) / scale2(z1, w1));
    report.mixed_dprime =
        std::max(report.mixed_dprime,
                 std::abs(lambda_prime_value(mixed, n, 1.0)) / scale2(z1, w1));

    // Signed norms against the family complex structures: B -> JB on the
    // plain side, B -> -JB on the conjugate side.
    const CMatrix z1_rot = corner_element(j * realify_linear(b1), n);
    const double prime_ratio =
        lambda_prime_value(commutator(z1, z1_rot), n, -1.0) / z1.squaredNorm();
    report.prime_signed_ratio_defect =
        std::max(report.prime_signed_ratio_defect, std::abs(prime_ratio + 2.0));

    const CMatrix w1_rot = corner_element(-j * realify_antilinear(c1), n);
    const double dprime_ratio =
        lambda_prime_value(commutator(w1, w1_rot), n, 1.0) / w1.squaredNorm();
    report.dprime_signed_ratio_defect =
        std::max(report.dprime_signed_ratio_defect, std::abs(dprime_ratio - 2.0));

    // Corner display: for B = C + iD with real symmetric corner C, D,
    // lambda'([Z(B), Z(B')]) = 8 Tr(DC' - CD').
    const RMatrix cr1 = b1.real();
    const RMatrix di1 = b1.imag();
    const RMatrix cr2 = b2.real();
    const RMatrix di2 = b2.imag();
    const double display =
        8.0 * (di1 * cr2 - cr1 * di2).trace();
    report.corner_display_residual =
        std::max(report.corner_display_residual,
                 std::abs(lambda_prime_value(plain_pair, n, -1.0) - display) /
                     scale2(z1, z2));
  }
  return report;
}

AnisotropyReport anisotropy_check(int n, int trials, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("anisotropy_check requires n >= 2");
  }
  SeededRng rng(seed);
  const KahlerStructure ks = standard_kahler(n);
  AnisotropyReport report;
  report.n = n;
  report.trials = trials;
  report.min_normalized_ratio = std::numeric_limits<double>::infinity();
  std::vector<double> ratios;
  std::vector<double> holo_ratios;
  ratios.reserve(static_cast<std::size_t>(trials));
  holo_ratios.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    const PValuedOneForm alpha = random_cubic_so44_form(n, rng, false);
    const PValuedOneForm alpha_bar = random_cubic_so44_form(n, rng, true);
    report.type_label_defect_max =
        std::max({report.type_label_defect_max, type_label_defect(alpha),
                  type_label_defect(alpha_bar)});

    PValuedOneForm total = alpha;
    total.type = FormType::Unrestricted;
    for (std::size_t m = 0; m < total.values.size(); ++m) {
      total.values[m] += alpha_bar.values[m];
    }

    const AlgebraTwoForm sq_total = bracket_square(total);
    const AlgebraTwoForm sq_holo = bracket_square(alpha);
    const AlgebraTwoForm sq_anti = bracket_square(alpha_bar);

    for (std::size_t m = 0; m < sq_total.entries.size(); ++m) {
      for (std::size_t l = 0; l < sq_total.entries.size(); ++l) {
        const CMatrix cross = sq_total.entries[m][l] - sq_holo.entries[m][l] -
                              sq_anti.entries[m][l];
        const double scale = 1.0 + alpha.values[m].norm() * alpha_bar.values[l].norm() +
                             alpha_bar.values[m].norm() * alpha.values[l].norm();
        report.cross_prime_max =
            std::max(report.cross_prime_max,
                     std::abs(lambda_prime_value(cross, n, -1.0)) / scale);
        report.cross_dprime_max =
            std::max(report.cross_dprime_max,
                     std::abs(lambda_prime_value(cross, n, 1.0)) / scale);
      }
    }

    const RMatrix phi_total =
        lambda_prime_matrix(sq_total) + lambda_dprime_matrix(sq_total);
    const double ratio = wedge_top_ratio(phi_total, ks);
    const double a2 = alpha.squared_norm();
    const double b2 = alpha_bar.squared_norm();
    ratios.push_back(ratio / (a2 + b2));
    report.min_normalized_ratio =
        std::min(report.min_normalized_ratio, std::abs(ratio) / (a2 + b2));

    const RMatrix phi_holo =
        lambda_prime_matrix(sq_holo) + lambda_dprime_matrix(sq_holo);
    holo_ratios.push_back(wedge_top_ratio(phi_holo, ks) / a2);
  }
  const RatioStats stats = summarize(ratios);
  report.c_estimate = stats.mean;
  report.relative_spread = stats.spread;
  report.sign = stats.sign;
  for (double r : holo_ratios) {
    report.holomorphic_only_defect =
        std::max(report.holomorphic_only_defect,
                 std::abs(r - stats.mean) / std::abs(stats.mean));
  }
  return report;
}

}  // namespace quatlie
