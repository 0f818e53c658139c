#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "quatlie/weitzenbock.hpp"

using namespace quatlie;

namespace {

double real_inner(const CMatrix& a, const CMatrix& b) {
  return a.cwiseProduct(b.conjugate()).sum().real();
}

CMatrix random_symmetric_value(int n, SeededRng& rng) {
  CMatrix q(n + 1, n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) {
    for (Eigen::Index j = 0; j <= n; ++j) {
      q(i, j) = rng.complex_normal();
    }
  }
  return q + q.transpose().eval();
}

// The curvature-term sum with the bracket in the opposite slot order; used as
// a negative control for the energy identity.
Cochain t_apply_bracket_flipped(const Cochain& eta) {
  const std::vector<CMatrix> basis = p_basis(eta.n, BasisConvention::BlockDiag);
  Cochain out = zero_cochain(eta.n);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const CMatrix& y = basis[j];
    CMatrix acc = CMatrix::Zero(y.rows(), y.cols());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const CMatrix& x = basis[k];
      acc += rho_action(x, rho_action(x, eta.values[j]));
      acc += rho_action(y * x - x * y, eta.values[k]);
    }
    out.values[j] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("cochain coordinates are an isometric bijection") {
  for (int n : {2, 3}) {
    CHECK(cochain_dim(n) == 2 * n * (n + 1) * (n + 2));
    SeededRng rng(100 + n);
    for (int trial = 0; trial < 20; ++trial) {
      Cochain eta = random_cochain(n, rng);
      REQUIRE(eta.values.size() == static_cast<std::size_t>(2 * n));
      for (const CMatrix& v : eta.values) {
        CHECK((v - v.transpose()).norm() < 1e-14);
      }
      RVector coords = cochain_coordinates(eta);
      CHECK(coords.size() == cochain_dim(n));
      CHECK(std::abs(coords.norm() - eta.norm()) < 1e-12 * (1.0 + eta.norm()));
      Cochain back = cochain_from_coordinates(n, coords);
      double diff = 0.0;
      for (std::size_t k = 0; k < eta.values.size(); ++k) {
        diff += (eta.values[k] - back.values[k]).norm();
      }
      CHECK(diff < 1e-13);
    }
  }
  CHECK_THROWS_AS(cochain_from_coordinates(2, RVector::Zero(5)), std::invalid_argument);
  CHECK_THROWS_AS(zero_cochain(0), std::invalid_argument);
}

TEST_CASE("first-order action matches its block formula and symmetry type") {
  for (int n : {2, 3}) {
    SeededRng rng(200 + n);
    for (int trial = 0; trial < 10; ++trial) {
      // Assemble a symmetric value from blocks a (n x n symmetric), b, d.
      CMatrix a(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          a(i, j) = rng.complex_normal();
        }
      }
      a = (a + a.transpose()).eval();
      CVector b(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        b(i) = rng.complex_normal();
      }
      Complex d = rng.complex_normal();
      CMatrix q = CMatrix::Zero(n + 1, n + 1);
      q.topLeftCorner(n, n) = a;
      q.topRightCorner(n, 1) = b;
      q.bottomLeftCorner(1, n) = b.transpose();
      q(n, n) = d;

      CVector x(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        x(i) = rng.complex_normal();
      }
      const CMatrix image = rho_action(p_element(x, BasisConvention::BlockDiag), q);
      CHECK((image - image.transpose()).norm() < 1e-13);

      CMatrix expected = CMatrix::Zero(n + 1, n + 1);
      const CMatrix outer = b * x.adjoint();
      expected.topLeftCorner(n, n) = outer + outer.transpose();
      const CVector top = a * x + d * x.conjugate();
      expected.topRightCorner(n, 1) = top;
      expected.bottomLeftCorner(1, n) = top.transpose();
      expected(n, n) = 2.0 * x.transpose() * b;
      CHECK((image - expected).norm() < 1e-12 * (1.0 + q.norm()) * (1.0 + x.norm()));
    }

    // Anti-homomorphism: rho(X) rho(Y) - rho(Y) rho(X) = rho([Y, X]).
    const AlgebraTag su = su_n1(n);
    SeededRng rng2(300 + n);
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrix x = random_element(su, rng2).mat;
      const CMatrix y = random_element(su, rng2).mat;
      const CMatrix q = random_symmetric_value(n, rng2);
      const CMatrix lhs = rho_action(x, rho_action(y, q)) - rho_action(y, rho_action(x, q));
      const CMatrix rhs = rho_action(y * x - x * y, q);
      CHECK((lhs - rhs).norm() < 1e-12 * (1.0 + q.norm()) *
                                     (1.0 + x.norm() * y.norm()));
    }

    // Symmetric on p, skew on k, for the real inner product on values.
    SeededRng rng3(400 + n);
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrix q1 = random_symmetric_value(n, rng3);
      const CMatrix q2 = random_symmetric_value(n, rng3);
      CVector y(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        y(i) = rng3.complex_normal();
      }
      const CMatrix xp = p_element(y, BasisConvention::BlockDiag);
      CHECK(std::abs(real_inner(rho_action(xp, q1), q2) -
                     real_inner(q1, rho_action(xp, q2))) <
            1e-11 * (1.0 + q1.norm() * q2.norm()) * (1.0 + xp.norm()));
      const CMatrix xk = cartan_split(random_element(su, rng3)).k_part.mat;
      CHECK(std::abs(real_inner(rho_action(xk, q1), q2) +
                     real_inner(q1, rho_action(xk, q2))) <
            1e-11 * (1.0 + q1.norm() * q2.norm()) * (1.0 + xk.norm()));
    }
  }
}

TEST_CASE("energy identity holds for random cochains in both pipelines") {
  for (int n : {2, 3}) {
    SeededRng rng(500 + n);
    for (int trial = 0; trial < 40; ++trial) {
      const Cochain eta = random_cochain(n, rng);
      for (bool conjugate : {false, true}) {
        const EnergyIdentityReport report = energy_identity(eta, conjugate);
        CHECK(report.residual < 1e-12);
        CHECK(report.energy >= -1e-10);
      }
      // Consistency of the derived invariants: |beta|^2 >= |alpha|^2 and the
      // predicted energy recombines them as 2|alpha|^2 + |Tr beta|^2.
      const BetaTensor beta = beta_tensor(eta);
      CHECK(beta.total_square >= beta.antisym_square - 1e-12);
      const EnergyIdentityReport report = energy_identity(eta);
      CHECK(std::abs(report.predicted -
                     (2.0 * beta.antisym_square + beta.trace_square)) <
            1e-10 * (1.0 + beta.total_square));
    }
  }
}

TEST_CASE("flipping the bracket slot breaks the energy identity") {
  SeededRng rng(600);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const Cochain eta = random_cochain(2, rng);
    const BetaTensor beta = beta_tensor(eta);
    const double predicted = 2.0 * beta.antisym_square + beta.trace_square;
    const double flipped = energy_product(t_apply_bracket_flipped(eta), eta);
    worst = std::max(worst,
                     std::abs(flipped - predicted) / (1.0 + eta.squared_norm()));
  }
  CHECK(worst > 1e-2);
}

TEST_CASE("corner-supported unit cochain has energy twice the rank") {
  for (int n : {2, 3, 4}) {
    Cochain pure = zero_cochain(n);
    pure.values[0](n, n) = 1.0;
    const double energy = energy_product(t_apply(pure), pure);
    CHECK(std::abs(energy - 2.0 * n) < 1e-12);
    const EnergyIdentityReport report = energy_identity(pure);
    CHECK(report.residual < 1e-13);
  }
}

TEST_CASE("curvature operator is linear and self-adjoint") {
  for (int n : {2, 3}) {
    SeededRng rng(700 + n);
    for (int trial = 0; trial < 10; ++trial) {
      const Cochain a = random_cochain(n, rng);
      const Cochain b = random_cochain(n, rng);
      const double scale = 1.0 + a.norm() * b.norm();
      CHECK(std::abs(energy_product(t_apply(a), b) -
                     energy_product(a, t_apply(b))) < 1e-10 * scale);

      Cochain sum = zero_cochain(n);
      for (std::size_t k = 0; k < sum.values.size(); ++k) {
        sum.values[k] = a.values[k] + 2.5 * b.values[k];
      }
      const Cochain lhs = t_apply(sum);
      const Cochain ta = t_apply(a);
      const Cochain tb = t_apply(b);
      double defect = 0.0;
      for (std::size_t k = 0; k < sum.values.size(); ++k) {
        defect += (lhs.values[k] - ta.values[k] - 2.5 * tb.values[k]).norm();
      }
      CHECK(defect < 1e-10 * scale);
    }
    CHECK_THROWS_AS(energy_product(zero_cochain(2), zero_cochain(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("energy is invariant under rotating the orthonormal basis of p") {
  for (int n : {2, 3}) {
    SeededRng rng(800 + n);
    for (int trial = 0; trial < 5; ++trial) {
      const Cochain eta = random_cochain(n, rng);
      const RMatrix o = random_orthogonal(2 * n, rng);
      CHECK((o.transpose() * o - RMatrix::Identity(2 * n, 2 * n)).norm() < 1e-13);
      const double fixed = energy_product(t_apply(eta), eta);
      const double rotated = energy_with_rotated_basis(eta, o);
      CHECK(std::abs(fixed - rotated) < 1e-11 * (1.0 + eta.squared_norm()));
    }
  }
  // Determinism of the rotation generator.
  SeededRng r1(42), r2(42);
  CHECK((random_orthogonal(6, r1) - random_orthogonal(6, r2)).norm() == 0.0);
}

TEST_CASE("kernel has the cubic dimension with a wide spectral gap") {
  struct Expected {
    int n;
    int ambient;
    int kernel;
  };
  for (const Expected e : {Expected{2, 48, 8}, Expected{3, 120, 20}}) {
    for (bool conjugate : {false, true}) {
      const KernelReport report = kernel_report(e.n, conjugate);
      CHECK(report.ambient_dim == e.ambient);
      CHECK(report.kernel_dim == e.kernel);
      CHECK(report.asymmetry < 1e-12);
      CHECK(report.largest_kernel_eigenvalue <= report.threshold);
      CHECK(report.gap_ratio > 1e3);
      CHECK((report.kernel_basis.transpose() * report.kernel_basis -
             RMatrix::Identity(e.kernel, e.kernel))
                .norm() < 1e-12);
    }
  }
}

TEST_CASE("numerical kernel coincides with the constructed cubic slice") {
  for (int n : {2, 3}) {
    for (bool conjugate : {false, true}) {
      const KernelReport report = kernel_report(n, conjugate);
      const SliceMatchReport match = kernel_matches_cubic_slice(report);
      CHECK(match.kernel_dim == match.slice_dim);
      CHECK(match.kernel_to_slice < 1e-9);
      CHECK(match.slice_to_kernel < 1e-9);
    }
  }
}

TEST_CASE("value conjugation intertwines the two pipelines") {
  SeededRng rng(900);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Cochain eta = random_cochain(n, rng);
      const Cochain lhs = t_apply(conjugate_values(eta), true);
      const Cochain rhs = conjugate_values(t_apply(eta, false));
      double defect = 0.0;
      for (std::size_t k = 0; k < lhs.values.size(); ++k) {
        defect += (lhs.values[k] - rhs.values[k]).norm();
      }
      CHECK(defect < 1e-13 * (1.0 + eta.norm()));
    }
  }
}

TEST_CASE("conjugating the kernel gives the kernel of the conjugate operator") {
  const KernelReport plain = kernel_report(2, false);
  const KernelReport conj = kernel_report(2, true);
  REQUIRE(plain.kernel_dim == conj.kernel_dim);
  double worst = 0.0;
  for (int c = 0; c < plain.kernel_dim; ++c) {
    const Cochain eta = cochain_from_coordinates(2, plain.kernel_basis.col(c));
    const RVector v = cochain_coordinates(conjugate_values(eta));
    worst = std::max(
        worst,
        (v - conj.kernel_basis * (conj.kernel_basis.transpose() * v)).norm());
  }
  CHECK(worst < 1e-9);
}
