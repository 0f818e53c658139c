#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "quatlie/branching.hpp"

using namespace quatlie;

namespace {

std::vector<int> summand_dims(const DecompositionReport& report) {
  std::vector<int> dims;
  for (const Summand& s : report.summands) dims.push_back(s.dim());
  return dims;
}

void check_certified(const DecompositionReport& report) {
  CAPTURE(report.algebra.name());
  CHECK(report.total_dim() == report.algebra.dimension());
  CHECK(report.orthonormality_residual < 1e-12);
  CHECK(report.completeness_residual < 1e-10);
  CHECK(report.membership_residual < 1e-10);

  std::set<std::string> labels;
  for (const Summand& s : report.summands) labels.insert(s.label);
  CHECK(labels.size() == report.summands.size());
}

}  // namespace

TEST_CASE("sp(n,1) splits into the adjoint block and the symmetric square") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    const DecompositionReport report = decompose(sp_n1(n));
    check_certified(report);
    REQUIRE(report.summands.size() == 2);
    CHECK(report.summand("u(n,1) adjoint block").dim() == (n + 1) * (n + 1));
    CHECK(report.summand("symmetric square slot").dim() == (n + 1) * (n + 2));
  }
  CHECK(summand_dims(decompose(sp_n1(2))) == std::vector<int>{9, 12});
}

TEST_CASE("u(2n,2) splits into two diagonal copies and two square slots") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    const DecompositionReport report = decompose(u_2n2(n));
    check_certified(report);
    REQUIRE(report.summands.size() == 4);
    CHECK(report.summand("u(n,1) upper diagonal block").dim() == (n + 1) * (n + 1));
    CHECK(report.summand("u(n,1) lower diagonal block").dim() == (n + 1) * (n + 1));
    CHECK(report.summand("antisymmetric square (off-diagonal)").dim() == n * (n + 1));
    CHECK(report.summand("symmetric square (off-diagonal)").dim() == (n + 1) * (n + 2));
  }
  CHECK(summand_dims(decompose(u_2n2(2))) == std::vector<int>{9, 9, 6, 12});
}

TEST_CASE("so(4n,4) splits into ten invariant summands") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    const DecompositionReport report = decompose(so_4n4(n));
    check_certified(report);
    REQUIRE(report.summands.size() == 10);
    CHECK(report.summand("center line, first factor").dim() == 1);
    CHECK(report.summand("center line, second factor").dim() == 1);
    CHECK(report.summand("su(n,1), first factor").dim() == n * (n + 2));
    CHECK(report.summand("su(n,1), second factor").dim() == n * (n + 2));
    CHECK(report.summand("antisymmetric square, first diagonal").dim() == n * (n + 1));
    CHECK(report.summand("antisymmetric square, second diagonal").dim() == n * (n + 1));
    CHECK(report.summand("antisymmetric square, off-diagonal").dim() == n * (n + 1));
    CHECK(report.summand("adjoint type, off-diagonal").dim() == (n + 1) * (n + 1));
    CHECK(report.summand("adjoint type twisted, off-diagonal").dim() == (n + 1) * (n + 1));
    CHECK(report.summand("symmetric square, off-diagonal").dim() == (n + 1) * (n + 2));
  }
  CHECK(summand_dims(decompose(so_4n4(2))) ==
        std::vector<int>{1, 1, 8, 8, 6, 6, 6, 9, 9, 12});
  CHECK_THROWS_AS(decompose(so_4n4(2)).summand("no such label"), std::out_of_range);
}

TEST_CASE("decomposition is rejected for algebras without a recipe") {
  CHECK_THROWS_AS(decompose(su_n1(2)), std::invalid_argument);
  CHECK_THROWS_AS(decompose(u_n1(2)), std::invalid_argument);
  CHECK_THROWS_AS(decompose(sp_2n2_c(2)), std::invalid_argument);
}

TEST_CASE("summand projections commute with the adjoint group action") {
  SeededRng rng(101);
  for (const AlgebraTag& tag : {sp_n1(2), u_2n2(2), so_4n4(2)}) {
    CAPTURE(tag.name());
    const DecompositionReport report = decompose(tag);
    SeededRng positive = rng.fork(static_cast<std::uint64_t>(tag.kind));
    CHECK(equivariance_defect(report, 20, positive) < 1e-9);

    // A deliberately mixed-up basis must be detected.
    SeededRng corrupted = rng.fork(100 + static_cast<std::uint64_t>(tag.kind));
    CHECK(equivariance_defect_corrupted(report, 20, corrupted) > 1e-2);
  }
}

TEST_CASE("antidiagonal convention reports are certified too") {
  SeededRng rng(103);
  for (const AlgebraTag& tag :
       {sp_n1(2, BasisConvention::AntiDiag), u_2n2(2, BasisConvention::AntiDiag),
        so_4n4(2, BasisConvention::AntiDiag)}) {
    CAPTURE(tag.name());
    const DecompositionReport report = decompose(tag);
    check_certified(report);
    SeededRng stream = rng.fork(static_cast<std::uint64_t>(tag.kind));
    CHECK(equivariance_defect(report, 10, stream) < 1e-9);
  }
}

TEST_CASE("cubic slice of the p-cochain space has the closed-form dimension") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    const CubicSliceReport report = hom_p_decompose(n);
    CHECK(report.n == n);
    CHECK(report.ambient_dim == 2 * n * (n + 1) * (n + 2));
    CHECK(report.cubic_dim == n * (n + 1) * (n + 2) / 3);
    CHECK(static_cast<int>(report.cubic_basis.size()) == report.cubic_dim);

    // Each basis map has 2n values; all symmetric, supported away from the
    // distinguished row and column.
    for (const auto& values : report.cubic_basis) {
      REQUIRE(static_cast<int>(values.size()) == 2 * n);
      for (const CMatrix& v : values) {
        CHECK((v - v.transpose()).norm() == 0.0);
        CHECK(v.row(n).norm() == 0.0);
        CHECK(v.col(n).norm() == 0.0);
      }
      // Complex linearity in the slot: the value at i e_k is i times the
      // value at e_k.
      for (int k = 0; k < n; ++k)
        CHECK((values[2 * k + 1] - Complex(0, 1) * values[2 * k]).norm() < 1e-15);
    }
  }
  CHECK(hom_p_decompose(2).ambient_dim == 48);
  CHECK(hom_p_decompose(2).cubic_dim == 8);
  CHECK(hom_p_decompose(3).ambient_dim == 120);
  CHECK(hom_p_decompose(3).cubic_dim == 20);
}

TEST_CASE("cubic slice basis maps are linearly independent") {
  const int n = 2;
  const CubicSliceReport report = hom_p_decompose(n);
  const Eigen::Index m = n + 1;
  const Eigen::Index per_value = 2 * m * m;
  RMatrix cols(2 * n * per_value, report.cubic_dim);
  for (int k = 0; k < report.cubic_dim; ++k) {
    for (int j = 0; j < 2 * n; ++j) {
      const CMatrix& v = report.cubic_basis[k][j];
      Eigen::Map<const Eigen::VectorXcd> flat(v.data(), m * m);
      cols.col(k).segment(j * per_value, m * m) = flat.real();
      cols.col(k).segment(j * per_value + m * m, m * m) = flat.imag();
    }
  }
  Eigen::ColPivHouseholderQR<RMatrix> qr(cols);
  qr.setThreshold(1e-10);
  CHECK(qr.rank() == report.cubic_dim);
}
