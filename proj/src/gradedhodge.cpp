#include "quatlie/gradedhodge.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace quatlie {

namespace {

int frame_size(int n) { return 2 * (n + 1); }

/// Diagonal weight of a frame index under the grading direction.
int index_weight(Eigen::Index i, int n) {
  if (i == 0) {
    return -1;
  }
  if (i == 2 * n + 1) {
    return 1;
  }
  return 0;
}

int entry_degree(Eigen::Index i, Eigen::Index j, int n) {
  return index_weight(i, n) - index_weight(j, n);
}

CMatrix component_of(const CMatrix& x, int degree, int n) {
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (entry_degree(i, j, n) == degree) {
        out(i, j) = x(i, j);
      }
    }
  }
  return out;
}

void check_graded_tag(const AlgebraTag& tag, const char* what) {
  if (tag.kind != AlgebraKind::Sp2N2C) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a complex symplectic element");
  }
  if (tag.convention != BasisConvention::AntiDiag) {
    throw std::invalid_argument(std::string(what) +
                                ": the grading lives in the antidiagonal realization");
  }
}

/// n x n antidiagonal ones, the middle-block pairing matrix.
RMatrix middle_exchange(int n) {
  RMatrix j0 = RMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    j0(i, n - 1 - i) = 1.0;
  }
  return j0;
}

/// The complex-linear image of gl(n+1, C): A -> diag(A, -J0 A^T J0).
CMatrix gl_image(const CMatrix& a, int n) {
  const Eigen::Index m = n + 1;
  RMatrix j0 = RMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    j0(i, m - 1 - i) = 1.0;
  }
  const CMatrix j0c = j0.cast<Complex>();
  CMatrix out = CMatrix::Zero(2 * m, 2 * m);
  out.topLeftCorner(m, m) = a;
  out.bottomRightCorner(m, m) = -j0c * a.transpose() * j0c;
  return out;
}

/// Complex dimension of the span of the degree-k parts of the given matrices,
/// certified by a rank-revealing factorization of the realified columns.
int graded_complex_dim(const std::vector<CMatrix>& elements, int degree, int n,
                       const AlgebraTag& tag) {
  if (elements.empty()) {
    return 0;
  }
  RMatrix stacked(vec_ambient(elements.front(), tag).size(),
                  static_cast<Eigen::Index>(elements.size()));
  for (std::size_t c = 0; c < elements.size(); ++c) {
    stacked.col(static_cast<Eigen::Index>(c)) =
        vec_ambient(component_of(elements[c], degree, n), tag);
  }
  Eigen::ColPivHouseholderQR<RMatrix> qr(stacked);
  const auto rank = qr.rank();
  if (rank % 2 != 0) {
    throw std::runtime_error("graded piece has odd real rank");
  }
  return static_cast<int>(rank / 2);
}

}  // namespace

CMatrix grading_element(int n) {
  if (n < 1) {
    throw std::invalid_argument("grading_element requires n >= 1");
  }
  CMatrix v = CMatrix::Zero(frame_size(n), frame_size(n));
  v(0, 0) = -1.0;
  v(2 * n + 1, 2 * n + 1) = 1.0;
  return v;
}

CMatrix GradedElement::reassembled() const {
  CMatrix out = CMatrix::Zero(frame_size(n), frame_size(n));
  for (const auto& [degree, part] : components) {
    out += part;
  }
  return out;
}

GradedElement grade_decompose(const LieElement& x) {
  check_graded_tag(x.algebra, "grade_decompose");
  const int n = x.algebra.n;
  const double residual = membership_residual(x.mat, x.algebra);
  if (residual > 1e-6 * (1.0 + x.mat.squaredNorm())) {
    throw std::invalid_argument("grade_decompose: membership equations fail");
  }
  GradedElement out;
  out.n = n;
  const CMatrix v = grading_element(n);
  for (int degree = -2; degree <= 2; ++degree) {
    CMatrix part = component_of(x.mat, degree, n);
    const double eigen_residual = (v * part - part * v - double(degree) * part).norm() /
                                  (1.0 + part.norm());
    if (eigen_residual > 1e-9) {
      throw std::runtime_error("grade_decompose: adjoint eigenvalue equation fails");
    }
    out.eigenvector_residual = std::max(out.eigenvector_residual, eigen_residual);
    out.components.emplace(degree, std::move(part));
  }
  return out;
}

CMatrix lowering_corner_element(int n) {
  if (n < 1) {
    throw std::invalid_argument("lowering_corner_element requires n >= 1");
  }
  CMatrix out = CMatrix::Zero(frame_size(n), frame_size(n));
  out(0, 2 * n + 1) = 1.0;
  return out;
}

CMatrix lowering_row_element(int n, const CVector& u, const CVector& w) {
  if (n < 1 || u.size() != n || w.size() != n) {
    throw std::invalid_argument("lowering_row_element requires parameters in C^n");
  }
  CMatrix out = CMatrix::Zero(frame_size(n), frame_size(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    // First-row entries across the two middle blocks.
    out(0, 1 + j) = u(j);
    out(0, n + 1 + j) = w(j);
    // Partners in the last column forced by the symplectic pairing: the
    // top-right block is persymmetric and the bottom-right block mirrors the
    // top-left one with a sign.
    out(n - j, 2 * n + 1) = w(j);
    out(2 * n + 1 - (j + 1), 2 * n + 1) = -u(j);
  }
  return out;
}

GradingReport grading_report(int n, int trials, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("grading_report requires n >= 2");
  }
  const AlgebraTag tag = sp_2n2_c(n, BasisConvention::AntiDiag);
  const AlgebraBasis& basis = AlgebraBasis::get(tag);
  GradingReport report;
  report.n = n;
  report.trials = trials;

  for (int degree = -2; degree <= 2; ++degree) {
    const int dim = graded_complex_dim(basis.elements(), degree, n, tag);
    report.complex_dims[degree] = dim;
    report.total_complex_dim += dim;
  }

  const RMatrix j0n = middle_exchange(n);
  SeededRng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const LieElement x = random_element(tag, rng);
    const LieElement y = random_element(tag, rng);
    const GradedElement gx = grade_decompose(x);
    const GradedElement gy = grade_decompose(y);
    report.eigen_residual_max =
        std::max({report.eigen_residual_max, gx.eigenvector_residual,
                  gy.eigenvector_residual});
    report.reassembly_residual =
        std::max(report.reassembly_residual,
                 (gx.reassembled() - x.mat).norm() / (1.0 + x.mat.norm()));

    // Degree additivity of the bracket, including forced vanishing past the
    // top degree.
    for (const auto& [da, xa] : gx.components) {
      for (const auto& [db, yb] : gy.components) {
        const CMatrix bracket = xa * yb - yb * xa;
        const double scale = 1.0 + xa.norm() * yb.norm();
        const int target = da + db;
        if (std::abs(target) <= 2) {
          const double off =
              (bracket - component_of(bracket, target, n)).norm() / scale;
          report.bracket_degree_residual =
              std::max(report.bracket_degree_residual, off);
        } else {
          report.top_bracket_residual =
              std::max(report.top_bracket_residual, bracket.norm() / scale);
        }
      }
    }

    // Degree-zero block pattern: balanced corners and a middle block that is
    // symplectic for the exchange pairing on the two middle slots.
    const CMatrix& zero_part = gx.components.at(0);
    const Complex a = zero_part(0, 0);
    const Complex d = zero_part(2 * n + 1, 2 * n + 1);
    const CMatrix middle = zero_part.block(1, 1, 2 * n, 2 * n);
    CMatrix pairing = CMatrix::Zero(2 * n, 2 * n);
    pairing.topRightCorner(n, n) = j0n.cast<Complex>();
    pairing.bottomLeftCorner(n, n) = -j0n.cast<Complex>();
    const double pattern =
        (std::abs(d + a) +
         (middle.transpose() * pairing + pairing * middle).norm()) /
        (1.0 + zero_part.norm());
    report.zero_pattern_residual = std::max(report.zero_pattern_residual, pattern);

    // Nonnegative degrees form a subalgebra.
    CMatrix f0x = CMatrix::Zero(frame_size(n), frame_size(n));
    CMatrix f0y = CMatrix::Zero(frame_size(n), frame_size(n));
    for (int degree = 0; degree <= 2; ++degree) {
      f0x += gx.components.at(degree);
      f0y += gy.components.at(degree);
    }
    const CMatrix closed = f0x * f0y - f0y * f0x;
    double negative_mass = 0.0;
    for (int degree = -2; degree < 0; ++degree) {
      negative_mass += component_of(closed, degree, n).squaredNorm();
    }
    report.subalgebra_residual =
        std::max(report.subalgebra_residual,
                 std::sqrt(negative_mass) / (1.0 + f0x.norm() * f0y.norm()));
  }

  // Graded dimensions of the complex-linear gl(n+1, C) image.
  std::vector<CMatrix> gl_elements;
  const Eigen::Index m = n + 1;
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      CMatrix unit = CMatrix::Zero(m, m);
      unit(r, c) = 1.0;
      gl_elements.push_back(gl_image(unit, n));
      unit(r, c) = Complex(0.0, 1.0);
      gl_elements.push_back(gl_image(unit, n));
    }
  }
  for (int degree = -2; degree <= 2; ++degree) {
    report.gl_image_complex_dims[degree] =
        graded_complex_dim(gl_elements, degree, n, tag);
  }
  return report;
}

}  // namespace quatlie
