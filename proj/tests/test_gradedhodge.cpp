#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "quatlie/gradedhodge.hpp"

using namespace quatlie;

namespace {

double off_degree_mass(const GradedElement& g, int kept_degree) {
  double mass = 0.0;
  for (const auto& [degree, part] : g.components) {
    if (degree != kept_degree) {
      mass += part.squaredNorm();
    }
  }
  return std::sqrt(mass);
}

}  // namespace

TEST_CASE("grading direction is a member of pure degree zero") {
  for (int n : {2, 3}) {
    const AlgebraTag tag = sp_2n2_c(n, BasisConvention::AntiDiag);
    const CMatrix v = grading_element(n);
    CHECK(membership_residual(v, tag) < 1e-14);
    const GradedElement g = grade_decompose(LieElement{tag, v});
    CHECK(off_degree_mass(g, 0) == 0.0);
    CHECK((g.components.at(0) - v).norm() == 0.0);
    CHECK((g.reassembled() - v).norm() == 0.0);
    CHECK(g.eigenvector_residual < 1e-13);
  }
}

TEST_CASE("corner entry spans the lowest graded piece") {
  for (int n : {2, 3}) {
    const AlgebraTag tag = sp_2n2_c(n, BasisConvention::AntiDiag);
    const CMatrix corner = lowering_corner_element(n);
    CHECK(membership_residual(corner, tag) < 1e-14);
    const GradedElement g = grade_decompose(LieElement{tag, corner});
    CHECK(off_degree_mass(g, -2) == 0.0);
    CHECK(g.components.at(-2).norm() == 1.0);
  }
}

TEST_CASE("first-row family: members of pure degree -1 spanning the piece") {
  for (int n : {2, 3}) {
    const AlgebraTag tag = sp_2n2_c(n, BasisConvention::AntiDiag);
    SeededRng rng(90 + n);
    for (int trial = 0; trial < 10; ++trial) {
      CVector u(n), w(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        u(i) = rng.complex_normal();
        w(i) = rng.complex_normal();
      }
      const CMatrix x = lowering_row_element(n, u, w);
      CHECK(membership_residual(x, tag) < 1e-13 * (1.0 + x.squaredNorm()));
      const GradedElement g = grade_decompose(LieElement{tag, x});
      CHECK(off_degree_mass(g, -1) == 0.0);
    }

    // Unit parameters realify to a full-rank family: real dimension 4n.
    std::vector<CMatrix> family;
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Complex phase : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
        CVector e = CVector::Zero(n);
        e(k) = phase;
        family.push_back(lowering_row_element(n, e, CVector::Zero(n)));
        family.push_back(lowering_row_element(n, CVector::Zero(n), e));
      }
    }
    RMatrix stacked(vec_ambient(family.front(), tag).size(),
                    static_cast<Eigen::Index>(family.size()));
    for (std::size_t c = 0; c < family.size(); ++c) {
      stacked.col(static_cast<Eigen::Index>(c)) = vec_ambient(family[c], tag);
    }
    CHECK(Eigen::ColPivHouseholderQR<RMatrix>(stacked).rank() == 4 * n);

    CHECK(lowering_row_element(n, CVector::Zero(n), CVector::Zero(n)).norm() == 0.0);
    CHECK_THROWS_AS(lowering_row_element(n, CVector::Zero(n + 1), CVector::Zero(n)),
                    std::invalid_argument);
  }
}

TEST_CASE("decomposition reassembles exactly and validates its input") {
  const int n = 2;
  const AlgebraTag tag = sp_2n2_c(n, BasisConvention::AntiDiag);
  SeededRng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const LieElement x = random_element(tag, rng);
    const GradedElement g = grade_decompose(x);
    CHECK((g.reassembled() - x.mat).norm() == 0.0);
    CHECK(g.eigenvector_residual < 1e-12);
    CHECK(g.components.size() == 5);
  }

  const CMatrix member = grading_element(n);
  CHECK_THROWS_AS(grade_decompose(LieElement{sp_2n2_c(n, BasisConvention::BlockDiag),
                                             member}),
                  std::invalid_argument);
  CHECK_THROWS_AS(grade_decompose(LieElement{su_n1(n), CMatrix::Zero(3, 3)}),
                  std::invalid_argument);
  const CMatrix outsider = CMatrix::Identity(6, 6);
  CHECK_THROWS_AS(grade_decompose(LieElement{tag, outsider}), std::invalid_argument);
}

TEST_CASE("graded dimensions, bracket degrees, and block patterns certify") {
  struct Expected {
    int n;
    std::map<int, int> dims;
  };
  const std::vector<Expected> table = {
      {2, {{-2, 1}, {-1, 4}, {0, 11}, {1, 4}, {2, 1}}},
      {3, {{-2, 1}, {-1, 6}, {0, 22}, {1, 6}, {2, 1}}},
  };
  for (const Expected& e : table) {
    const GradingReport report = grading_report(e.n, 20, 2025);
    CHECK(report.complex_dims == e.dims);
    CHECK(report.total_complex_dim == (e.n + 1) * (2 * e.n + 3));
    for (int degree = 1; degree <= 2; ++degree) {
      CHECK(report.complex_dims.at(degree) == report.complex_dims.at(-degree));
    }
    CHECK(report.eigen_residual_max < 1e-12);
    CHECK(report.reassembly_residual == 0.0);
    CHECK(report.bracket_degree_residual < 1e-12);
    CHECK(report.top_bracket_residual < 1e-12);
    CHECK(report.zero_pattern_residual < 1e-12);
    CHECK(report.subalgebra_residual < 1e-12);

    // The complex-linear gl(n+1) image meets only the middle degrees, with
    // the split n^2+1 / n / n.
    CHECK(report.gl_image_complex_dims.at(0) == e.n * e.n + 1);
    CHECK(report.gl_image_complex_dims.at(1) == e.n);
    CHECK(report.gl_image_complex_dims.at(-1) == e.n);
    CHECK(report.gl_image_complex_dims.at(2) == 0);
    CHECK(report.gl_image_complex_dims.at(-2) == 0);

    // Filtration bookkeeping: the step from degrees >= 0 to degrees >= -1
    // adds exactly the dimension of the degree -1 piece.
    CHECK(report.complex_dims.at(-1) == 2 * e.n);
  }
  CHECK_THROWS_AS(grading_report(1, 5, 1), std::invalid_argument);

  const GradingReport a = grading_report(2, 10, 77);
  const GradingReport b = grading_report(2, 10, 77);
  CHECK(a.bracket_degree_residual == b.bracket_degree_residual);
  CHECK(a.zero_pattern_residual == b.zero_pattern_residual);
}
