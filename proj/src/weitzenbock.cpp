#include "quatlie/weitzenbock.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace quatlie {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_cochain(const Cochain& eta) {
  if (eta.n < 1) {
    throw std::invalid_argument("cochain requires n >= 1");
  }
  const auto m = static_cast<Eigen::Index>(eta.n + 1);
  if (eta.values.size() != static_cast<std::size_t>(2 * eta.n)) {
    throw std::invalid_argument("cochain must carry one value per basis direction of p");
  }
  for (const CMatrix& v : eta.values) {
    if (v.rows() != m || v.cols() != m) {
      throw std::invalid_argument("cochain value has the wrong shape");
    }
  }
}

double real_inner(const CMatrix& a, const CMatrix& b) {
  return a.cwiseProduct(b.conjugate()).sum().real();
}

/// (T eta)(Y_j) for an arbitrary orthonormal list {X_k} spanning p, where the
/// value list holds eta(X_k). Separated from t_apply so basis invariance can
/// be exercised directly.
std::vector<CMatrix> t_apply_with_basis(const std::vector<CMatrix>& basis,
                                        const std::vector<CMatrix>& values,
                                        bool conjugate) {
  const std::size_t dim = basis.size();
  std::vector<CMatrix> out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const CMatrix& y = basis[j];
    CMatrix acc = CMatrix::Zero(y.rows(), y.cols());
    for (std::size_t k = 0; k < dim; ++k) {
      const CMatrix& x = basis[k];
      acc += rho_action(x, rho_action(x, values[j], conjugate), conjugate);
      acc += rho_action(x * y - y * x, values[k], conjugate);
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace

double Cochain::squared_norm() const {
  double total = 0.0;
  for (const CMatrix& v : values) {
    total += v.squaredNorm();
  }
  return total;
}

double Cochain::norm() const { return std::sqrt(squared_norm()); }

Cochain zero_cochain(int n) {
  if (n < 1) {
    throw std::invalid_argument("zero_cochain requires n >= 1");
  }
  Cochain eta;
  eta.n = n;
  eta.values.assign(static_cast<std::size_t>(2 * n), CMatrix::Zero(n + 1, n + 1));
  return eta;
}

Cochain random_cochain(int n, SeededRng& rng) {
  RVector coords(cochain_dim(n));
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    coords(i) = rng.normal();
  }
  return cochain_from_coordinates(n, coords);
}

int cochain_dim(int n) { return 2 * n * (n + 1) * (n + 2); }

RVector cochain_coordinates(const Cochain& eta) {
  check_cochain(eta);
  const Eigen::Index m = eta.n + 1;
  RVector coords(cochain_dim(eta.n));
  Eigen::Index pos = 0;
  for (const CMatrix& v : eta.values) {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index k = i; k < m; ++k) {
        const double weight = (i == k) ? 1.0 : kSqrt2;
        coords(pos++) = weight * v(i, k).real();
        coords(pos++) = weight * v(i, k).imag();
      }
    }
  }
  return coords;
}

Cochain cochain_from_coordinates(int n, const RVector& coords) {
  if (coords.size() != cochain_dim(n)) {
    throw std::invalid_argument("coordinate vector has the wrong length");
  }
  Cochain eta = zero_cochain(n);
  const Eigen::Index m = n + 1;
  Eigen::Index pos = 0;
  for (CMatrix& v : eta.values) {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index k = i; k < m; ++k) {
        const double weight = (i == k) ? 1.0 : kSqrt2;
        const Complex entry(coords(pos) / weight, coords(pos + 1) / weight);
        pos += 2;
        v(i, k) = entry;
        v(k, i) = entry;
      }
    }
  }
  return eta;
}

Cochain conjugate_values(const Cochain& eta) {
  check_cochain(eta);
  Cochain out = eta;
  for (CMatrix& v : out.values) {
    v = v.conjugate();
  }
  return out;
}

CMatrix rho_action(const CMatrix& x, const CMatrix& value, bool conjugate) {
  if (x.rows() != value.rows() || x.cols() != value.cols() || x.rows() != x.cols()) {
    throw std::invalid_argument("rho_action requires square matrices of equal size");
  }
  if (conjugate) {
    const CMatrix xc = x.conjugate();
    return xc.transpose() * value + value * xc;
  }
  return x.transpose() * value + value * x;
}

BetaTensor beta_tensor(const Cochain& eta, bool conjugate) {
  check_cochain(eta);
  const std::vector<CMatrix> basis = p_basis(eta.n, BasisConvention::BlockDiag);
  const std::size_t dim = basis.size();
  BetaTensor beta;
  beta.entries.assign(dim, std::vector<CMatrix>(dim));
  CMatrix trace_part = CMatrix::Zero(eta.n + 1, eta.n + 1);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l < dim; ++l) {
      beta.entries[k][l] = rho_action(basis[k], eta.values[l], conjugate);
      beta.total_square += beta.entries[k][l].squaredNorm();
    }
    trace_part += beta.entries[k][k];
  }
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l < dim; ++l) {
      beta.antisym_square +=
          0.25 * (beta.entries[k][l] - beta.entries[l][k]).squaredNorm();
    }
  }
  beta.trace_square = trace_part.squaredNorm();
  return beta;
}

Cochain t_apply(const Cochain& eta, bool conjugate) {
  check_cochain(eta);
  Cochain out = zero_cochain(eta.n);
  out.values = t_apply_with_basis(p_basis(eta.n, BasisConvention::BlockDiag),
                                  eta.values, conjugate);
  return out;
}

double energy_product(const Cochain& a, const Cochain& b) {
  check_cochain(a);
  check_cochain(b);
  if (a.n != b.n) {
    throw std::invalid_argument("energy_product requires matching rank");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    total += real_inner(a.values[k], b.values[k]);
  }
  return total;
}

EnergyIdentityReport energy_identity(const Cochain& eta, bool conjugate) {
  EnergyIdentityReport report;
  report.energy = energy_product(t_apply(eta, conjugate), eta);
  const BetaTensor beta = beta_tensor(eta, conjugate);
  report.predicted = 2.0 * beta.antisym_square + beta.trace_square;
  report.residual =
      std::abs(report.energy - report.predicted) / (1.0 + eta.squared_norm());
  return report;
}

double energy_with_rotated_basis(const Cochain& eta, const RMatrix& ortho,
                                 bool conjugate) {
  check_cochain(eta);
  const std::vector<CMatrix> basis = p_basis(eta.n, BasisConvention::BlockDiag);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (ortho.rows() != dim || ortho.cols() != dim) {
    throw std::invalid_argument("rotation must act on the basis of p");
  }
  std::vector<CMatrix> rotated_basis(basis.size());
  std::vector<CMatrix> rotated_values(basis.size());
  for (Eigen::Index j = 0; j < dim; ++j) {
    CMatrix xb = CMatrix::Zero(eta.n + 1, eta.n + 1);
    CMatrix vb = CMatrix::Zero(eta.n + 1, eta.n + 1);
    for (Eigen::Index i = 0; i < dim; ++i) {
      xb += ortho(i, j) * basis[i];
      vb += ortho(i, j) * eta.values[i];
    }
    rotated_basis[j] = xb;
    rotated_values[j] = vb;
  }
  const std::vector<CMatrix> image =
      t_apply_with_basis(rotated_basis, rotated_values, conjugate);
  double total = 0.0;
  for (std::size_t k = 0; k < image.size(); ++k) {
    total += real_inner(image[k], rotated_values[k]);
  }
  return total;
}

RMatrix random_orthogonal(int dim, SeededRng& rng) {
  if (dim < 1) {
    throw std::invalid_argument("random_orthogonal requires dim >= 1");
  }
  RMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = rng.normal();
    }
  }
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ() * RMatrix::Identity(dim, dim);
  // Fix the column signs against the R diagonal so the distribution is
  // insensitive to Householder conventions.
  const RMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) {
      q.col(j) = -q.col(j);
    }
  }
  return q;
}

KernelReport kernel_report(int n, bool conjugate) {
  if (n < 1) {
    throw std::invalid_argument("kernel_report requires n >= 1");
  }
  const int dim = cochain_dim(n);
  RMatrix gram(dim, dim);
  for (int a = 0; a < dim; ++a) {
    RVector coords = RVector::Zero(dim);
    coords(a) = 1.0;
    const Cochain image = t_apply(cochain_from_coordinates(n, coords), conjugate);
    gram.col(a) = cochain_coordinates(image);
  }

  KernelReport report;
  report.n = n;
  report.conjugate = conjugate;
  report.ambient_dim = dim;
  report.asymmetry = (gram - gram.transpose()).norm();
  const RMatrix sym = 0.5 * (gram + gram.transpose());

  Eigen::SelfAdjointEigenSolver<RMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of the Gram matrix failed");
  }
  const RVector eigenvalues = solver.eigenvalues();
  const double lambda_max = eigenvalues.cwiseAbs().maxCoeff();
  report.threshold = 1e-9 * lambda_max;

  std::vector<Eigen::Index> kernel_indices;
  report.smallest_positive_eigenvalue = lambda_max;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues(i);
    if (std::abs(lambda) <= report.threshold) {
      kernel_indices.push_back(i);
      report.largest_kernel_eigenvalue =
          std::max(report.largest_kernel_eigenvalue, std::abs(lambda));
    } else if (lambda > 0.0) {
      report.smallest_positive_eigenvalue =
          std::min(report.smallest_positive_eigenvalue, lambda);
    }
  }
  report.kernel_dim = static_cast<int>(kernel_indices.size());
  report.gap_ratio = report.smallest_positive_eigenvalue / report.threshold;
  report.kernel_basis.resize(dim, report.kernel_dim);
  for (std::size_t c = 0; c < kernel_indices.size(); ++c) {
    report.kernel_basis.col(static_cast<Eigen::Index>(c)) =
        solver.eigenvectors().col(kernel_indices[c]);
  }
  return report;
}

SliceMatchReport kernel_matches_cubic_slice(const KernelReport& report) {
  const CubicSliceReport slice = hom_p_decompose(report.n);
  RMatrix raw(report.ambient_dim, slice.cubic_dim);
  for (int k = 0; k < slice.cubic_dim; ++k) {
    Cochain eta = zero_cochain(report.n);
    eta.values = slice.cubic_basis[static_cast<std::size_t>(k)];
    if (report.conjugate) {
      eta = conjugate_values(eta);
    }
    raw.col(k) = cochain_coordinates(eta);
  }
  Eigen::HouseholderQR<RMatrix> qr(raw);
  const RMatrix slice_basis =
      qr.householderQ() * RMatrix::Identity(report.ambient_dim, slice.cubic_dim);

  SliceMatchReport match;
  match.kernel_dim = report.kernel_dim;
  match.slice_dim = slice.cubic_dim;
  const RMatrix& kernel = report.kernel_basis;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    const RVector v = kernel.col(k);
    match.kernel_to_slice = std::max(
        match.kernel_to_slice, (v - slice_basis * (slice_basis.transpose() * v)).norm());
  }
  for (Eigen::Index k = 0; k < slice_basis.cols(); ++k) {
    const RVector v = slice_basis.col(k);
    match.slice_to_kernel =
        std::max(match.slice_to_kernel, (v - kernel * (kernel.transpose() * v)).norm());
  }
  return match;
}

}  // namespace quatlie
