#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "quatlie/liecore.hpp"

using namespace quatlie;

namespace {

const Complex kI(0.0, 1.0);

CMatrix random_cmatrix(SeededRng& rng, Eigen::Index r, Eigen::Index c) {
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rng.complex_normal();
  return m;
}

CMatrix random_symmetric(SeededRng& rng, Eigen::Index m) {
  const CMatrix a = random_cmatrix(rng, m, m);
  return (a + a.transpose()) / 2.0;
}

std::vector<AlgebraTag> all_tags(int n, BasisConvention conv) {
  return {su_n1(n, conv),  u_n1(n, conv),   sp_n1(n, conv),
          u_2n2(n, conv),  so_4n4(n, conv), sp_2n2_c(n, conv)};
}

}  // namespace

TEST_CASE("algebra dimensions follow the closed forms") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(su_n1(n).dimension() == n * (n + 2));
    CHECK(u_n1(n).dimension() == (n + 1) * (n + 1));
    CHECK(sp_n1(n).dimension() == (n + 1) * (2 * n + 3));
    CHECK(u_2n2(n).dimension() == 4 * (n + 1) * (n + 1));
    CHECK(so_4n4(n).dimension() == 2 * (n + 1) * (4 * n + 3));
    CHECK(sp_2n2_c(n).dimension() == 2 * (n + 1) * (2 * n + 3));
  }
  CHECK(su_n1(2).dimension() == 8);
  CHECK(u_n1(2).dimension() == 9);
  CHECK(sp_n1(2).dimension() == 21);
  CHECK(u_2n2(2).dimension() == 36);
  CHECK(so_4n4(2).dimension() == 66);
  CHECK(sp_2n2_c(2).dimension() == 42);
}

TEST_CASE("numerical bases realize the predicted dimensions") {
  // The basis constructor itself certifies that the null space of the
  // defining constraints has exactly the closed-form dimension.
  for (int n = 2; n <= 3; ++n) {
    for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
      for (const AlgebraTag& tag : all_tags(n, conv)) {
        CAPTURE(tag.name());
        const AlgebraBasis& basis = AlgebraBasis::get(tag);
        CHECK(basis.dim() == tag.dimension());
        CHECK(static_cast<int>(basis.elements().size()) == tag.dimension());
        // Cached: repeated lookups return the same object.
        CHECK(&AlgebraBasis::get(tag) == &basis);
      }
    }
  }
}

TEST_CASE("random elements satisfy the defining equations") {
  SeededRng rng(31);
  for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
    for (const AlgebraTag& tag : all_tags(2, conv)) {
      CAPTURE(tag.name());
      for (int t = 0; t < 10; ++t) {
        const LieElement x = random_element(tag, rng);
        CHECK(membership_residual(x.mat, tag) <= 1e-12 * (1.0 + x.mat.squaredNorm()));
      }
    }
  }
}

TEST_CASE("basis coordinates round-trip and detect non-members") {
  SeededRng rng(37);
  for (const AlgebraTag& tag : all_tags(2, BasisConvention::BlockDiag)) {
    CAPTURE(tag.name());
    const AlgebraBasis& basis = AlgebraBasis::get(tag);
    RVector coeffs(basis.dim());
    for (int k = 0; k < basis.dim(); ++k) coeffs(k) = rng.normal();
    const CMatrix x = basis.combine(coeffs);
    CHECK((basis.coordinates(x) - coeffs).norm() < 1e-12 * (1.0 + coeffs.norm()));
    CHECK(basis.projection_defect(x) < 1e-12 * (1.0 + x.norm()));
  }

  // A strictly upper-triangular unit entry is far from every one of these
  // algebras except u(2n,2)/sp(2n+2,C)-type spaces; test against su(n,1).
  const AlgebraTag su = su_n1(2);
  CMatrix bad = CMatrix::Zero(3, 3);
  bad(0, 1) = 1.0;
  CHECK(AlgebraBasis::get(su).projection_defect(bad) > 0.1);
  CHECK(membership_residual(bad, su) > 0.5);
}

TEST_CASE("ambient vectorization is isometric") {
  SeededRng rng(41);
  const AlgebraTag tag = u_2n2(2);
  const CMatrix x = random_cmatrix(rng, tag.ambient_size(), tag.ambient_size());
  const RVector v = vec_ambient(x, tag);
  CHECK(v.size() == tag.coordinate_dim());
  CHECK(v.norm() == doctest::Approx(x.norm()).epsilon(1e-14));
  CHECK((unvec_ambient(v, tag) - x).norm() == 0.0);

  const AlgebraTag real_tag = so_4n4(2);
  const CMatrix y = random_cmatrix(rng, 12, 12).real().cast<Complex>();
  CHECK((unvec_ambient(vec_ambient(y, real_tag), real_tag) - y).norm() == 0.0);
}

TEST_CASE("brackets close and satisfy the Jacobi identity") {
  SeededRng rng(43);
  for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
    for (const AlgebraTag& tag : all_tags(2, conv)) {
      CAPTURE(tag.name());
      const LieElement x = random_element(tag, rng);
      const LieElement y = random_element(tag, rng);
      const LieElement z = random_element(tag, rng);
      const double scale = (1.0 + x.norm()) * (1.0 + y.norm()) * (1.0 + z.norm());

      CHECK(membership_residual(bracket(x, y).mat, tag) < 1e-11 * scale);

      const CMatrix jacobi = bracket(bracket(x, y), z).mat + bracket(bracket(y, z), x).mat +
                             bracket(bracket(z, x), y).mat;
      CHECK(jacobi.norm() < 1e-11 * scale);
    }
  }
  CHECK_THROWS_AS(bracket(random_element(su_n1(2), rng), random_element(u_n1(2), rng)),
                  std::invalid_argument);
}

TEST_CASE("defining forms have the stated shapes") {
  const int n = 2;
  const Eigen::Index m = n + 1;

  const CMatrix q = indefinite_form(n, BasisConvention::BlockDiag);
  CHECK(q(0, 0) == Complex(1, 0));
  CHECK(q(m - 1, m - 1) == Complex(-1, 0));
  const CMatrix l0 = indefinite_form(n, BasisConvention::AntiDiag);
  CHECK(l0(0, 0) == Complex(-1, 0));
  CHECK(l0(m - 1, m - 1) == Complex(1, 0));

  const CMatrix g2 = doubled_form(n, BasisConvention::BlockDiag);
  CHECK((g2.topLeftCorner(m, m) - q).norm() == 0.0);
  CHECK((g2.bottomRightCorner(m, m) - q).norm() == 0.0);

  // AntiDiag doubled form is diag(-1, 1, ..., 1, -1).
  const CMatrix lam = doubled_form(n, BasisConvention::AntiDiag);
  CHECK(lam(0, 0) == Complex(-1, 0));
  CHECK(lam(2 * m - 1, 2 * m - 1) == Complex(-1, 0));
  for (Eigen::Index i = 1; i < 2 * m - 1; ++i) CHECK(lam(i, i) == Complex(1, 0));

  // Symplectic forms are antisymmetric and invertible.
  for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
    const CMatrix omega = symplectic_form(n, conv);
    CHECK((omega + omega.transpose()).norm() == 0.0);
    CHECK(std::abs(std::abs(omega.determinant()) - 1.0) < 1e-12);
  }

  // Signature of the quadrupled form: trace is 4((n+1) - 1) - ... = 4(n - 1) + ... ;
  // count directly: 4n positive and 4 negative directions give trace 4n - 4.
  for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
    const RMatrix g4 = quad_form(n, conv);
    CHECK(g4.trace() == doctest::Approx(4.0 * n - 4.0));
    CHECK((g4 * g4 - RMatrix::Identity(4 * m, 4 * m)).norm() == 0.0);
  }
}

TEST_CASE("quaternionic generators with symmetric coefficient lie in sp(n,1)") {
  SeededRng rng(47);
  const int n = 2;
  const Eigen::Index m = n + 1;
  const CMatrix Q = indefinite_form(n, BasisConvention::BlockDiag);
  const AlgebraTag sp = sp_n1(n);

  const CMatrix E1 = random_symmetric(rng, m);
  const CMatrix E2 = random_symmetric(rng, m);
  const CMatrix x1 = complexify(CMatrix::Zero(m, m), CMatrix(Q * E1), BasisConvention::BlockDiag);
  const CMatrix x2 = complexify(CMatrix::Zero(m, m), CMatrix(Q * E2), BasisConvention::BlockDiag);
  CHECK(membership_residual(x1, sp) < 1e-12 * (1.0 + x1.squaredNorm()));
  CHECK(membership_residual(x2, sp) < 1e-12 * (1.0 + x2.squaredNorm()));

  // An antisymmetric coefficient must fail.
  const CMatrix anti = random_cmatrix(rng, m, m);
  const CMatrix E_bad = (anti - anti.transpose()) / 2.0;
  const CMatrix x_bad = complexify(CMatrix::Zero(m, m), CMatrix(Q * E_bad), BasisConvention::BlockDiag);
  CHECK(membership_residual(x_bad, sp) > 0.1 * E_bad.norm());

  // The bracket of two such generators lands in the complex subalgebra:
  // [jQE, jQF] = -Q conj(E) Q F + Q conj(F) Q E, embedded as diag(C, conj C).
  const CMatrix C = -Q * E1.conjugate() * Q * E2 + Q * E2.conjugate() * Q * E1;
  const CMatrix lhs = x1 * x2 - x2 * x1;
  const CMatrix rhs = complexify(C, CMatrix::Zero(m, m), BasisConvention::BlockDiag);
  CHECK((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
  CHECK(membership_residual(C, u_n1(n)) < 1e-12 * (1.0 + C.squaredNorm()));
}

TEST_CASE("antidiagonal-convention sp(n,1) has the expected block anatomy") {
  SeededRng rng(53);
  const int n = 2;
  const Eigen::Index m = n + 1;
  const CMatrix J0 = antidiag_j0(m).cast<Complex>();
  const CMatrix J1 = antidiag_j1(m).cast<Complex>();
  const CMatrix L0 = indefinite_form(n, BasisConvention::AntiDiag);
  const CMatrix L0p = J0 * L0 * J0;

  const LieElement A_elt = random_element(u_n1(n, BasisConvention::AntiDiag), rng);
  const CMatrix A = A_elt.mat;
  const CMatrix B = J0 * random_symmetric(rng, m);
  CHECK((J0 * B - B.transpose() * J0).norm() < 1e-13);

  CMatrix X = CMatrix::Zero(2 * m, 2 * m);
  X.topLeftCorner(m, m) = A;
  X.topRightCorner(m, m) = B;
  X.bottomLeftCorner(m, m) = -L0p * B.adjoint() * L0;
  X.bottomRightCorner(m, m) = J1.transpose() * A.conjugate() * J1;

  const AlgebraTag sp_f = sp_n1(n, BasisConvention::AntiDiag);
  CHECK(membership_residual(X, sp_f) < 1e-12 * (1.0 + X.squaredNorm()));

  // Moving to the block-diagonal convention recovers a quaternionic matrix
  // whose complex part is the J0-conjugate of A.
  const CMatrix X_bd =
      change_convention(X, BasisConvention::AntiDiag, BasisConvention::BlockDiag, SizeClass::Doubled, n);
  CHECK((X_bd.topLeftCorner(m, m) - J0 * A * J0).norm() < 1e-12);
}

TEST_CASE("the embedding chain consists of Lie algebra homomorphisms") {
  SeededRng rng(59);
  for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
    CAPTURE(static_cast<int>(conv));
    const int n = 2;
    const std::vector<AlgebraTag> chain = {su_n1(n, conv), u_n1(n, conv), sp_n1(n, conv),
                                           u_2n2(n, conv), so_4n4(n, conv)};
    for (std::size_t s = 0; s < chain.size(); ++s) {
      const LieElement x = random_element(chain[s], rng);
      const LieElement y = random_element(chain[s], rng);
      const double scale = (1.0 + x.norm()) * (1.0 + y.norm());
      for (std::size_t t = s + 1; t < chain.size(); ++t) {
        CAPTURE(chain[s].name());
        CAPTURE(chain[t].name());
        const LieElement ex = embed(x, chain[t]);
        const LieElement ey = embed(y, chain[t]);
        // Lands in the target algebra.
        CHECK(membership_residual(ex.mat, chain[t]) < 1e-11 * (1.0 + ex.mat.squaredNorm()));
        // Respects brackets.
        CHECK((embed(bracket(x, y), chain[t]).mat - bracket(ex, ey).mat).norm() <
              1e-11 * scale);
        // Composing through an intermediate stage changes nothing.
        if (t > s + 1) {
          const LieElement via = embed(embed(x, chain[t - 1]), chain[t]);
          CHECK((via.mat - ex.mat).norm() < 1e-12 * (1.0 + ex.norm()));
        }
      }
    }
    // Reversed and off-chain requests are rejected.
    CHECK_THROWS_AS(embed(random_element(u_2n2(n, conv), rng), sp_n1(n, conv)),
                    std::invalid_argument);
    CHECK_THROWS_AS(embed(random_element(su_n1(n, conv), rng), sp_2n2_c(n, conv)),
                    std::invalid_argument);
  }
}

TEST_CASE("trace pairing is symmetric and scales along the chain") {
  SeededRng rng(61);
  const int n = 2;
  const LieElement x = random_element(su_n1(n), rng);
  const LieElement y = random_element(su_n1(n), rng);

  CHECK(trace_pairing(x, y) == doctest::Approx(trace_pairing(y, x)).epsilon(1e-13));
  CHECK(trace_pairing(x, x) > 0.0);
  CHECK(trace_pairing(x, y, 2.0) == doctest::Approx(2.0 * trace_pairing(x, y)).epsilon(1e-13));

  // Cumulative factors 1, 2, 2, 4 for u(n,1), sp(n,1), u(2n,2), so(4n,4).
  const double base = trace_pairing(x, y);
  CHECK(trace_pairing(embed(x, u_n1(n)), embed(y, u_n1(n))) ==
        doctest::Approx(base).epsilon(1e-12));
  CHECK(trace_pairing(embed(x, sp_n1(n)), embed(y, sp_n1(n))) ==
        doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(trace_pairing(embed(x, u_2n2(n)), embed(y, u_2n2(n))) ==
        doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(trace_pairing(embed(x, so_4n4(n)), embed(y, so_4n4(n))) ==
        doctest::Approx(4.0 * base).epsilon(1e-12));
}

TEST_CASE("cartan decomposition splits su(n,1) against the involution") {
  SeededRng rng(67);
  for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
    CAPTURE(static_cast<int>(conv));
    const AlgebraTag su = su_n1(2, conv);
    const LieElement x = random_element(su, rng);
    const CartanSplit split = cartan_split(x);

    CHECK((split.k_part.mat + split.p_part.mat - x.mat).norm() == 0.0);
    CHECK(membership_residual(split.k_part.mat, su) < 1e-12 * (1.0 + x.mat.squaredNorm()));
    CHECK(membership_residual(split.p_part.mat, su) < 1e-12 * (1.0 + x.mat.squaredNorm()));

    // theta = -adjoint fixes k and negates p.
    CHECK((-split.k_part.mat.adjoint() - split.k_part.mat).norm() < 1e-12);
    CHECK((-split.p_part.mat.adjoint() + split.p_part.mat).norm() < 1e-12);

    // k and p are orthogonal for the trace pairing, and the two summands
    // bracket back correctly: [k, p] stays in p's row/column cross shape.
    CHECK(std::abs(trace_pairing(split.k_part, split.p_part)) < 1e-12);
  }
  CHECK_THROWS_AS(cartan_split(random_element(u_n1(2), rng)), std::invalid_argument);
}

TEST_CASE("tangent slot matrices are Hermitian members of su(n,1)") {
  SeededRng rng(71);
  const int n = 2;
  for (const BasisConvention conv : {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
    CAPTURE(static_cast<int>(conv));
    CVector a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a(k) = rng.complex_normal();
      b(k) = rng.complex_normal();
    }
    const CMatrix Xa = p_element(a, conv);
    const CMatrix Xb = p_element(b, conv);
    CHECK((Xa - Xa.adjoint()).norm() == 0.0);
    CHECK(membership_residual(Xa, su_n1(n, conv)) < 1e-13 * (1.0 + Xa.squaredNorm()));

    // Normalized pairing recovers the real inner product of the slots.
    CHECK(trace_pairing(Xa, Xb, 0.5) ==
          doctest::Approx((a.adjoint() * b)(0, 0).real()).epsilon(1e-12));

    // The distinguished index carries every nonzero entry.
    const Eigen::Index d = conv == BasisConvention::BlockDiag ? n : 0;
    for (Eigen::Index r = 0; r < n + 1; ++r)
      for (Eigen::Index c = 0; c < n + 1; ++c)
        if (r != d && c != d) CHECK(Xa(r, c) == Complex(0, 0));

    // The interleaved basis is orthonormal and spans p_element values.
    const std::vector<CMatrix> basis = p_basis(n, conv);
    CHECK(basis.size() == 2 * static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < basis.size(); ++s)
      for (std::size_t t = 0; t < basis.size(); ++t)
        CHECK(trace_pairing(basis[s], basis[t]) ==
              doctest::Approx(s == t ? 1.0 : 0.0).epsilon(1e-12));

    CMatrix recombined = CMatrix::Zero(n + 1, n + 1);
    for (int k = 0; k < n; ++k) {
      recombined += std::sqrt(2.0) * a(k).real() * basis[2 * k];
      recombined += std::sqrt(2.0) * a(k).imag() * basis[2 * k + 1];
    }
    CHECK((recombined - Xa).norm() < 1e-13);
  }
}

TEST_CASE("matrix exponential of an algebra element preserves the form") {
  SeededRng rng(73);
  const int n = 2;
  const CMatrix G = indefinite_form(n, BasisConvention::BlockDiag);
  const LieElement x = random_element(su_n1(n), rng);
  const CMatrix g = matrix_exp(CMatrix(0.2 * x.mat));
  CHECK((g.adjoint() * G * g - G).norm() < 1e-12);
  CHECK((matrix_exp(CMatrix::Zero(3, 3)) - CMatrix::Identity(3, 3)).norm() == 0.0);
  CHECK(std::abs(std::abs(g.determinant()) - 1.0) < 1e-12);
}

TEST_CASE("sp(n,1) is the joint solution set inside u(2n,2) and sp(2n+2,C)") {
  SeededRng rng(79);
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    const IntersectionReport report = verify_intersection(n, 25, rng);
    CHECK(report.n == n);
    CHECK(report.expected_dimension == (n + 1) * (2 * n + 3));
    CHECK(report.joint_dimension == report.expected_dimension);
    CHECK(report.max_u22_residual < 1e-12);
    CHECK(report.max_sp_complex_residual < 1e-12);
  }
  CHECK_THROWS_AS(verify_intersection(1, 1, rng), std::invalid_argument);
}

TEST_CASE("random element generation is reproducible per seed") {
  const AlgebraTag tag = sp_n1(2);
  SeededRng a(1234);
  SeededRng b(1234);
  const LieElement xa = random_element(tag, a);
  const LieElement xb = random_element(tag, b);
  CHECK((xa.mat - xb.mat).norm() == 0.0);

  SeededRng c(1235);
  const LieElement xc = random_element(tag, c);
  CHECK((xa.mat - xc.mat).norm() > 1e-3);
}
