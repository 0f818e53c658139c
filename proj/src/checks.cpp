#include "quatlie/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "quatlie/branching.hpp"
#include "quatlie/cupform.hpp"
#include "quatlie/gradedhodge.hpp"
#include "quatlie/weitzenbock.hpp"

namespace quatlie {
namespace {

/// Appends CheckRecords with shared suite/config fields and per-check wall
/// times measured as deltas between consecutive records.
class Recorder {
public:
  Recorder(std::string suite, int n, int trials, std::uint64_t seed,
           std::vector<CheckRecord>& sink)
      : suite_(std::move(suite)),
        n_(n),
        trials_(trials),
        seed_(seed),
        sink_(sink),
        last_(Clock::now()) {}

  void le(const std::string& name, const std::string& anchor, double measured,
          double threshold) {
    push(name, anchor, measured, threshold, "le", measured <= threshold);
  }

  void ge(const std::string& name, const std::string& anchor, double measured,
          double threshold) {
    push(name, anchor, measured, threshold, "ge", measured >= threshold);
  }

private:
  using Clock = std::chrono::steady_clock;

  void push(const std::string& name, const std::string& anchor, double measured,
            double threshold, std::string comparison, bool pass) {
    const Clock::time_point now = Clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    sink_.push_back(CheckRecord{suite_, name, anchor, n_, trials_, seed_, measured,
                                threshold, std::move(comparison), pass, ms});
  }

  std::string suite_;
  int n_;
  int trials_;
  std::uint64_t seed_;
  std::vector<CheckRecord>& sink_;
  Clock::time_point last_;
};

Quaternion random_quaternion(SeededRng& rng) {
  return {rng.complex_normal(), rng.complex_normal()};
}

CMatrix random_cmatrix(Eigen::Index rows, Eigen::Index cols, SeededRng& rng) {
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = rng.complex_normal();
    }
  }
  return m;
}

StructuredMatrix random_quaternionic(Eigen::Index m, SeededRng& rng) {
  return StructuredMatrix::from_parts(random_cmatrix(m, m, rng),
                                      random_cmatrix(m, m, rng));
}

CVector random_cvector(Eigen::Index size, SeededRng& rng) {
  CVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    v(i) = rng.complex_normal();
  }
  return v;
}

// ---------------------------------------------------------------------------
// quatmat

void quatmat_checks(Recorder& rec, int n, int trials, double tol, SeededRng& rng) {
  const Quaternion p(Complex(1, 2), Complex(3, 4));
  const Quaternion q(Complex(5, 6), Complex(7, 8));
  rec.le("product_hand_example",
         "(1+2i + j(3+4i))(5+6i + j(7+8i)) = (-60+20i) + j(14+32i)",
         distance(p * q, Quaternion(Complex(-60, 20), Complex(14, 32))), tol);

  double assoc = 0.0, antihom = 0.0, norm_mult = 0.0, left_mult = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    const Quaternion c = random_quaternion(rng);
    const double scale = 1.0 + squared_abs(a) + squared_abs(b) + squared_abs(c);
    assoc = std::max(assoc, distance((a * b) * c, a * (b * c)) / scale);
    antihom = std::max(antihom, distance(conj(a * b), conj(b) * conj(a)) / scale);
    norm_mult = std::max(
        norm_mult, std::abs(squared_abs(a * b) - squared_abs(a) * squared_abs(b)) /
                       (1.0 + squared_abs(a) * squared_abs(b)));
    left_mult = std::max(
        left_mult,
        (left_mult_matrix(a) * left_mult_matrix(b) - left_mult_matrix(a * b)).norm() /
            scale);
  }
  rec.le("associativity_fuzz", "(p q) r = p (q r)", assoc, tol);
  rec.le("conjugation_antihomomorphism", "conj(p q) = conj(q) conj(p)", antihom, tol);
  rec.le("norm_multiplicativity", "|p q|^2 = |p|^2 |q|^2", norm_mult, tol);

  CMatrix display(2, 2);
  display << p.a, -std::conj(p.b), p.b, std::conj(p.a);
  rec.le("left_mult_matrix_display",
         "L(a + jb) = [[a, -conj(b)], [b, conj(a)]] and L(p q) = L(p) L(q)",
         std::max((left_mult_matrix(p) - display).norm(), left_mult), tol);

  const Eigen::Index m = n + 1;
  double blocks = 0.0, adj = 0.0, cplx_hom = 0.0, cplx_adj = 0.0, reality = 0.0;
  double realify_laws = 0.0, trace_norm = 0.0;
  for (int t = 0; t < std::max(2, trials / 5); ++t) {
    const StructuredMatrix M = random_quaternionic(m, rng);
    const StructuredMatrix N = random_quaternionic(m, rng);
    const double scale = 1.0 + M.frobenius_norm() * M.frobenius_norm() +
                         N.frobenius_norm() * N.frobenius_norm();
    const StructuredMatrix MN = M * N;
    const CMatrix& A = M.complex_part();
    const CMatrix& B = M.j_part();
    const CMatrix& C = N.complex_part();
    const CMatrix& D = N.j_part();
    blocks = std::max(blocks,
                      ((MN.complex_part() - (A * C - B.conjugate() * D)).norm() +
                       (MN.j_part() - (A.conjugate() * D + B * C)).norm()) /
                          scale);
    adj = std::max(adj, MN.adjoint().distance(N.adjoint() * M.adjoint()) / scale);
    for (const BasisConvention conv :
         {BasisConvention::BlockDiag, BasisConvention::AntiDiag}) {
      cplx_hom = std::max(
          cplx_hom,
          (complexify(MN, conv) - complexify(M, conv) * complexify(N, conv)).norm() /
              scale);
      cplx_adj = std::max(
          cplx_adj,
          (complexify(M.adjoint(), conv) - complexify(M, conv).adjoint()).norm() /
              scale);
      const CMatrix X = complexify(M, conv);
      const CMatrix S = reality_form(n, conv);
      reality = std::max(reality, (X * S - S * X.conjugate()).norm() / scale);
    }

    const CMatrix Y = random_cmatrix(m, m, rng);
    const CMatrix Z = random_cmatrix(m, m, rng);
    const double cscale = 1.0 + Y.squaredNorm() + Z.squaredNorm();
    double laws =
        (realify_linear(Y) * realify_linear(Z) - realify_linear(Y * Z)).norm();
    laws = std::max(laws, (realify_antilinear(Y) * realify_antilinear(Z) -
                           realify_linear(Y * Z.conjugate()))
                              .norm());
    laws = std::max(laws, (realify_linear(Y) * realify_antilinear(Z) -
                           realify_antilinear(Y * Z))
                              .norm());
    laws = std::max(laws, (realify_antilinear(Y) * realify_linear(Z) -
                           realify_antilinear(Y * Z.conjugate()))
                              .norm());
    laws = std::max(laws,
                    (realify_linear(Y).transpose() - realify_linear(Y.adjoint())).norm());
    laws = std::max(laws, (realify_antilinear(Y).transpose() -
                           realify_antilinear(Y.transpose()))
                              .norm());
    realify_laws = std::max(realify_laws, laws / cscale);
    trace_norm =
        std::max(trace_norm, std::abs(realify_antilinear(Y).trace()) / cscale);
    trace_norm = std::max(
        trace_norm,
        std::abs(realify_linear(Y).squaredNorm() - 2.0 * Y.squaredNorm()) / cscale);
  }
  rec.le("matrix_product_blocks",
         "(A + jB)(C + jD) = (AC - conj(B)D) + j(conj(A)D + BC)", blocks, tol);
  rec.le("adjoint_antihomomorphism", "(M N)* = N* M*", adj, tol);
  rec.le("complexify_homomorphism",
         "complexify(M N) = complexify(M) complexify(N) in both conventions",
         cplx_hom, tol);
  rec.le("complexify_adjoint", "complexify(M*) = complexify(M)*", cplx_adj, tol);
  rec.le("quaternionic_reality",
         "X S = S conj(X) on complexified images, S the reality form", reality, tol);
  rec.le("realify_product_laws",
         "R_l R_l = R_l(MN); R_a R_a = R_l(M conj(N)); mixed laws; transposes",
         realify_laws, tol);
  rec.le("realify_trace_and_norm", "Tr R_a(M) = 0 and |R_l(M)|^2 = 2 |M|^2",
         trace_norm, tol);
}

// ---------------------------------------------------------------------------
// liecore

void liecore_checks(Recorder& rec, int n, int trials, double tol, SeededRng& rng) {
  struct DimCase {
    const char* name;
    const char* anchor;
    AlgebraTag tag;
    int expected;
  };
  const std::vector<DimCase> dims = {
      {"su_dimension", "dim su(n,1) = n(n+2)", su_n1(n), n * (n + 2)},
      {"u_dimension", "dim u(n,1) = (n+1)^2", u_n1(n), (n + 1) * (n + 1)},
      {"sp_dimension", "dim sp(n,1) = (n+1)(2n+3)", sp_n1(n), (n + 1) * (2 * n + 3)},
      {"u22_dimension", "dim u(2n,2) = 4(n+1)^2", u_2n2(n), 4 * (n + 1) * (n + 1)},
      {"so44_dimension", "dim so(4n,4) = 2(n+1)(4n+3)", so_4n4(n),
       2 * (n + 1) * (4 * n + 3)},
      {"sp_complex_dimension", "dim_R sp(2n+2,C) = 2(n+1)(2n+3)", sp_2n2_c(n),
       2 * (n + 1) * (2 * n + 3)},
  };
  for (const DimCase& d : dims) {
    const AlgebraBasis& basis = AlgebraBasis::get(d.tag);
    RMatrix stacked(vec_ambient(basis.elements().front(), d.tag).size(), basis.dim());
    for (int c = 0; c < basis.dim(); ++c) {
      stacked.col(c) =
          vec_ambient(basis.elements()[static_cast<std::size_t>(c)], d.tag);
    }
    const int rank = static_cast<int>(Eigen::ColPivHouseholderQR<RMatrix>(stacked).rank());
    const double mismatch = std::abs(static_cast<double>(basis.dim() - d.expected)) +
                            std::abs(static_cast<double>(rank - d.expected)) +
                            std::abs(static_cast<double>(d.tag.dimension() - d.expected));
    rec.le(d.name, d.anchor, mismatch, 0.5);
  }

  double member = 0.0;
  double outsider = std::numeric_limits<double>::infinity();
  for (const DimCase& d : dims) {
    for (int t = 0; t < std::max(2, trials / 6); ++t) {
      const LieElement x = random_element(d.tag, rng);
      member = std::max(member,
                        membership_residual(x.mat, d.tag) / (1.0 + x.mat.squaredNorm()));
    }
    const Eigen::Index a = d.tag.ambient_size();
    outsider = std::min(outsider, membership_residual(CMatrix::Identity(a, a), d.tag));
  }
  rec.le("membership_random", "sampled elements satisfy the defining equations",
         member, tol);
  rec.ge("membership_rejects_outsider",
         "the identity matrix violates every membership system", outsider, 1e-2);

  {
    const Eigen::Index m = n + 1;
    const RMatrix j0 = antidiag_j0(m);
    const RMatrix j1 = antidiag_j1(m);
    const RMatrix qf = indefinite_form(n, BasisConvention::BlockDiag).real();
    const RMatrix l0 = indefinite_form(n, BasisConvention::AntiDiag).real();
    double exact = (j0 * j0 - RMatrix::Identity(m, m)).norm();
    exact = std::max(exact, (j1 * j1.transpose() - RMatrix::Identity(m, m)).norm());
    exact = std::max(exact, (j1 * qf - j0).norm());
    exact = std::max(exact, (j0 * qf - j1).norm());
    exact = std::max(exact, (l0 * j1 - j0).norm());
    exact = std::max(exact, (j0 * j1 - qf).norm());
    exact = std::max(exact, (j0 * l0 * j0 - qf).norm());
    rec.le("antidiag_identities",
           "J0^2 = I; J1 J1^T = I; J1 Q = J0; J0 Q = J1; Lambda0 J1 = J0; J0 J1 = Q; "
           "J0 Lambda0 J0 = Q",
           exact, tol);
  }

  {
    double rt = 0.0;
    for (int t = 0; t < 5; ++t) {
      const LieElement x = random_element(sp_n1(n), rng);
      const double scale = 1.0 + x.mat.squaredNorm();
      const CMatrix moved =
          change_convention(x.mat, BasisConvention::BlockDiag,
                            BasisConvention::AntiDiag, SizeClass::Doubled, n);
      rt = std::max(rt, membership_residual(
                            moved, sp_n1(n, BasisConvention::AntiDiag)) /
                            scale);
      const CMatrix back =
          change_convention(moved, BasisConvention::AntiDiag,
                            BasisConvention::BlockDiag, SizeClass::Doubled, n);
      rt = std::max(rt, (back - x.mat).norm() / scale);
    }
    rec.le("convention_roundtrip",
           "moving sp(n,1) to the antidiagonal picture preserves membership; the round "
           "trip is the identity",
           rt, tol);

    const RMatrix w4 = convention_intertwiner_quad(n);
    const double transport =
        std::max((w4.transpose() * quad_form(n, BasisConvention::BlockDiag) * w4 -
                  quad_form(n, BasisConvention::AntiDiag))
                     .norm(),
                 (w4.transpose() * w4 - RMatrix::Identity(w4.rows(), w4.cols())).norm());
    rec.le("quad_form_transport",
           "W4^T G_blockdiag W4 = G_antidiag with W4 orthogonal", transport, tol);
  }

  {
    const std::vector<AlgebraTag> chain = {su_n1(n), u_n1(n), sp_n1(n), u_2n2(n),
                                           so_4n4(n)};
    const double factors[] = {1.0, 2.0, 2.0, 4.0};
    double brackets = 0.0, members = 0.0, pairing = 0.0;
    for (int t = 0; t < std::max(2, trials / 10); ++t) {
      const LieElement x = random_element(su_n1(n), rng);
      const LieElement y = random_element(su_n1(n), rng);
      const double scale = 1.0 + x.mat.squaredNorm() + y.mat.squaredNorm();
      const double base = trace_pairing(x, y);
      for (std::size_t link = 1; link < chain.size(); ++link) {
        const LieElement ex = embed(x, chain[link]);
        const LieElement ey = embed(y, chain[link]);
        members = std::max(members, membership_residual(ex.mat, chain[link]) / scale);
        brackets = std::max(
            brackets,
            (bracket(ex, ey).mat - embed(bracket(x, y), chain[link]).mat).norm() /
                scale);
        pairing = std::max(pairing, std::abs(trace_pairing(ex, ey) -
                                             factors[link - 1] * base) /
                                        scale);
      }
    }
    rec.le("embedding_chain_brackets",
           "[embed x, embed y] = embed [x, y] along su -> u -> sp -> u(2n,2) -> "
           "so(4n,4)",
           brackets, tol);
    rec.le("embedding_chain_membership", "each embedding lands inside its target",
           members, tol);
    rec.le("trace_pairing_chain",
           "pairing factors 1, 2, 2, 4 at u(n,1), sp(n,1), u(2n,2), so(4n,4)",
           pairing, tol);
  }

  {
    const std::vector<CMatrix> basis = p_basis(n, BasisConvention::BlockDiag);
    double defect = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double want = (i == j) ? 1.0 : 0.0;
        defect = std::max(defect, std::abs(trace_pairing(basis[i], basis[j]) - want));
      }
    }
    for (int t = 0; t < 5; ++t) {
      const CVector a = random_cvector(n, rng);
      const CVector b = random_cvector(n, rng);
      const double inner =
          trace_pairing(p_element(a, BasisConvention::BlockDiag),
                        p_element(b, BasisConvention::BlockDiag), 0.5);
      defect = std::max(defect, std::abs(inner - a.dot(b).real()) /
                                    (1.0 + a.squaredNorm() + b.squaredNorm()));
    }
    rec.le("p_basis_orthonormality",
           "interleaved basis of p is orthonormal for Re Tr(X Y*); "
           "(1/2)(X(a), X(b)) = Re <a, b>",
           defect, tol);
  }

  {
    const IntersectionReport report =
        verify_intersection(n, std::max(2, trials / 4), rng);
    rec.le("intersection_members",
           "sampled sp(n,1) elements satisfy the u(2n,2) and sp(2n+2,C) equations",
           std::max(report.max_u22_residual, report.max_sp_complex_residual), tol);
    rec.le("intersection_dimension",
           "the joint null space of the stacked conditions has dimension (n+1)(2n+3)",
           std::abs(static_cast<double>(report.joint_dimension -
                                        report.expected_dimension)) +
               std::abs(static_cast<double>(report.expected_dimension -
                                            (n + 1) * (2 * n + 3))),
           0.5);
  }
}

// ---------------------------------------------------------------------------
// branching

void branching_checks(Recorder& rec, int n, int trials, double tol, SeededRng& rng) {
  struct SplitCase {
    const char* split_name;
    const char* dims_name;
    const char* split_anchor;
    const char* dims_anchor;
    AlgebraTag tag;
    std::vector<int> expected_dims;
  };
  const std::vector<SplitCase> cases = {
      {"sp_split_certificates", "sp_summand_dims",
       "sp(n,1) splits into orthonormal u(n,1)-invariant summands inside the algebra",
       "summand dims (n+1)^2 + (n+1)(n+2) = (n+1)(2n+3)", sp_n1(n),
       {(n + 1) * (n + 1), (n + 1) * (n + 2)}},
      {"u22_split_certificates", "u22_summand_dims",
       "u(2n,2) splits into four u(n,1)-invariant summands",
       "summand dims (n+1)^2, (n+1)^2, n(n+1), (n+1)(n+2) sum to 4(n+1)^2", u_2n2(n),
       {(n + 1) * (n + 1), (n + 1) * (n + 1), n * (n + 1), (n + 1) * (n + 2)}},
      {"so44_split_certificates", "so44_summand_dims",
       "so(4n,4) splits into ten u(n,1)-invariant summands",
       "summand dims 1, 1, n(n+2) x2, n(n+1) x3, (n+1)^2 x2, (n+1)(n+2) sum to "
       "2(n+1)(4n+3)",
       so_4n4(n),
       {1, 1, n * (n + 2), n * (n + 2), n * (n + 1), n * (n + 1), n * (n + 1),
        (n + 1) * (n + 1), (n + 1) * (n + 1), (n + 1) * (n + 2)}},
  };

  std::vector<DecompositionReport> reports;
  for (const SplitCase& sc : cases) {
    DecompositionReport report = decompose(sc.tag);
    rec.le(sc.split_name, sc.split_anchor,
           std::max({report.orthonormality_residual, report.completeness_residual,
                     report.membership_residual}),
           tol);
    double mismatch = std::abs(static_cast<double>(report.summands.size()) -
                               static_cast<double>(sc.expected_dims.size()));
    if (report.summands.size() == sc.expected_dims.size()) {
      for (std::size_t i = 0; i < sc.expected_dims.size(); ++i) {
        mismatch +=
            std::abs(static_cast<double>(report.summands[i].dim() - sc.expected_dims[i]));
      }
    }
    int total = 0;
    for (const int d : sc.expected_dims) total += d;
    mismatch += std::abs(static_cast<double>(report.total_dim() - total));
    rec.le(sc.dims_name, sc.dims_anchor, mismatch, 0.5);
    reports.push_back(std::move(report));
  }

  double equivariance = 0.0;
  for (const DecompositionReport& report : reports) {
    equivariance =
        std::max(equivariance, equivariance_defect(report, std::max(5, trials / 2), rng));
  }
  rec.le("equivariance_all_summands",
         "Ad(exp(embedded u(n,1))) maps each summand into itself", equivariance, tol);
  rec.ge("equivariance_corrupted_control",
         "a summand corrupted by one swapped basis vector is detected",
         equivariance_defect_corrupted(reports.back(), std::max(3, trials / 10), rng),
         1e-2);

  const CubicSliceReport cubic = hom_p_decompose(n);
  rec.le("cubic_slice_dims",
         "maps p -> S^2 C^(n+1) have real dimension 2n(n+1)(n+2); the symmetric-cubic "
         "slice has n(n+1)(n+2)/3",
         std::abs(static_cast<double>(cubic.ambient_dim - 2 * n * (n + 1) * (n + 2))) +
             std::abs(static_cast<double>(cubic.cubic_dim -
                                          n * (n + 1) * (n + 2) / 3)),
         0.5);

  double structure = 0.0;
  for (const std::vector<CMatrix>& cochain : cubic.cubic_basis) {
    for (const CMatrix& v : cochain) {
      structure = std::max(structure, (v - v.transpose()).norm());
      structure = std::max(structure, v.col(n).norm() + v.row(n).norm());
    }
    for (std::size_t k = 0; 2 * k + 1 < cochain.size(); ++k) {
      structure = std::max(
          structure, (cochain[2 * k + 1] - Complex(0.0, 1.0) * cochain[2 * k]).norm());
    }
  }
  rec.le("cubic_slice_structure",
         "cubic-slice values are symmetric, supported on the first n coordinates, and "
         "C-linear in the slot",
         structure, tol);
}

// ---------------------------------------------------------------------------
// weitzenbock

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

CMatrix random_symmetric_value(int n, SeededRng& rng) {
  const CMatrix v = random_cmatrix(n + 1, n + 1, rng);
  return v + v.transpose();
}

double value_inner(const CMatrix& a, const CMatrix& b) {
  return (a.array() * b.array().conjugate()).sum().real();
}

void weitzenbock_checks(Recorder& rec, int n, int trials, double tol, SeededRng& rng) {
  double isometry = 0.0;
  for (int t = 0; t < std::max(2, trials / 5); ++t) {
    const Cochain eta = random_cochain(n, rng);
    const RVector coords = cochain_coordinates(eta);
    isometry = std::max(isometry, std::abs(coords.squaredNorm() - eta.squared_norm()) /
                                      (1.0 + eta.squared_norm()));
    const Cochain back = cochain_from_coordinates(n, coords);
    double diff = 0.0;
    for (std::size_t s = 0; s < eta.values.size(); ++s) {
      diff += (eta.values[s] - back.values[s]).squaredNorm();
    }
    isometry = std::max(isometry, std::sqrt(diff));
  }
  rec.le("coordinate_isometry",
         "cochain coordinates are an isometric bijection onto R^(2n(n+1)(n+2))",
         isometry, tol);

  double block_formula = 0.0, anti_hom = 0.0, symmetry = 0.0;
  for (int t = 0; t < std::max(3, trials / 10); ++t) {
    const CMatrix a0 = random_cmatrix(n, n, rng);
    const CMatrix a = a0 + a0.transpose();
    const CVector b = random_cvector(n, rng);
    const Complex d = rng.complex_normal();
    CMatrix value = CMatrix::Zero(n + 1, n + 1);
    value.topLeftCorner(n, n) = a;
    value.topRightCorner(n, 1) = b;
    value.bottomLeftCorner(1, n) = b.transpose();
    value(n, n) = d;

    const CVector x = random_cvector(n, rng);
    const CMatrix image = rho_action(p_element(x, BasisConvention::BlockDiag), value);
    CMatrix expected = CMatrix::Zero(n + 1, n + 1);
    const CMatrix outer = b * x.adjoint();
    expected.topLeftCorner(n, n) = outer + outer.transpose();
    const CVector top = a * x + d * x.conjugate();
    expected.topRightCorner(n, 1) = top;
    expected.bottomLeftCorner(1, n) = top.transpose();
    expected(n, n) = 2.0 * x.transpose() * b;
    block_formula = std::max(block_formula,
                             (image - expected).norm() /
                                 ((1.0 + value.squaredNorm()) * (1.0 + x.squaredNorm())));

    const CMatrix gx = random_element(su_n1(n), rng).mat;
    const CMatrix gy = random_element(su_n1(n), rng).mat;
    const CMatrix lhs =
        rho_action(gx, rho_action(gy, value)) - rho_action(gy, rho_action(gx, value));
    const CMatrix rhs = rho_action(gy * gx - gx * gy, value);
    anti_hom = std::max(anti_hom, (lhs - rhs).norm() /
                                      ((1.0 + value.squaredNorm()) *
                                       (1.0 + gx.norm() * gy.norm())));

    const CartanSplit split = cartan_split(random_element(su_n1(n), rng));
    const CMatrix w = random_symmetric_value(n, rng);
    const double scale = (1.0 + value.norm()) * (1.0 + w.norm());
    symmetry = std::max(symmetry,
                        std::abs(value_inner(rho_action(split.p_part.mat, value), w) -
                                 value_inner(value, rho_action(split.p_part.mat, w))) /
                            scale);
    symmetry = std::max(symmetry,
                        std::abs(value_inner(rho_action(split.k_part.mat, value), w) +
                                 value_inner(value, rho_action(split.k_part.mat, w))) /
                            scale);
  }
  rec.le("action_block_formula",
         "rho(X(x)) [[A, B], [B^T, d]] = [[B x* + (B x*)^T, A x + d conj(x)], "
         "[(A x + d conj(x))^T, 2 x^T B]]",
         block_formula, tol);
  rec.le("action_antihomomorphism", "rho(X) rho(Y) - rho(Y) rho(X) = rho([Y, X])",
         anti_hom, tol);
  rec.le("action_symmetry_types",
         "rho of the p-part is symmetric and rho of the k-part is skew for Re Tr(V W*)",
         symmetry, tol);

  double energy = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Cochain eta = random_cochain(n, rng);
    const EnergyIdentityReport r = energy_identity(eta, t % 2 == 1);
    energy = std::max(energy, r.residual / (1.0 + eta.squared_norm()));
  }
  rec.le("energy_identity", "(T eta, eta) = 2 |alpha|^2 + |Tr beta|^2", energy, tol);

  double flip = 0.0;
  for (int t = 0; t < std::max(5, trials / 10); ++t) {
    const Cochain eta = random_cochain(n, rng);
    const BetaTensor beta = beta_tensor(eta);
    const double predicted = 2.0 * beta.antisym_square + beta.trace_square;
    const double flipped = energy_product(t_apply_bracket_flipped(eta), eta);
    flip = std::max(flip, std::abs(flipped - predicted) / (1.0 + eta.squared_norm()));
  }
  rec.ge("energy_flip_control",
         "swapping the bracket slots in the curvature term breaks the energy identity",
         flip, 1e-2);

  {
    Cochain pure = zero_cochain(n);
    pure.values[0](n, n) = 1.0;
    const double e = energy_product(t_apply(pure), pure);
    rec.le("corner_energy", "the unit corner-supported cochain has energy exactly 2n",
           std::abs(e - 2.0 * n), tol);
  }

  {
    double invariance = 0.0;
    for (int t = 0; t < 3; ++t) {
      const Cochain eta = random_cochain(n, rng);
      const RMatrix ortho = random_orthogonal(2 * n, rng);
      const double rotated = energy_with_rotated_basis(eta, ortho, false);
      const double straight = energy_product(t_apply(eta), eta);
      invariance = std::max(invariance,
                            std::abs(rotated - straight) / (1.0 + eta.squared_norm()));
    }
    rec.le("basis_invariance",
           "(T eta, eta) is invariant under rotating the orthonormal basis of p",
           invariance, tol);
  }

  const KernelReport plain = kernel_report(n, false);
  const KernelReport conj = kernel_report(n, true);
  rec.le("gram_symmetry", "the energy Gram matrix is symmetric",
         std::max(plain.asymmetry, conj.asymmetry), tol);

  const int cubic_dim = n * (n + 1) * (n + 2) / 3;
  rec.le("kernel_dimension", "dim ker T = n(n+1)(n+2)/3 in both pipelines",
         std::abs(static_cast<double>(plain.kernel_dim - cubic_dim)) +
             std::abs(static_cast<double>(conj.kernel_dim - cubic_dim)) +
             std::abs(static_cast<double>(plain.ambient_dim -
                                          2 * n * (n + 1) * (n + 2))),
         0.5);
  rec.ge("spectral_gap",
         "the smallest positive Gram eigenvalue sits far above the kernel threshold",
         std::min(plain.gap_ratio, conj.gap_ratio), 1e3);

  const SliceMatchReport match_plain = kernel_matches_cubic_slice(plain);
  const SliceMatchReport match_conj = kernel_matches_cubic_slice(conj);
  rec.le("kernel_slice_match",
         "ker T equals the constructed cubic slice (mutual projection residuals)",
         std::max({match_plain.kernel_to_slice, match_plain.slice_to_kernel,
                   match_conj.kernel_to_slice, match_conj.slice_to_kernel}),
         tol);

  {
    double intertwine = 0.0;
    for (int t = 0; t < 3; ++t) {
      const Cochain eta = random_cochain(n, rng);
      const Cochain lhs = t_apply(conjugate_values(eta), true);
      const Cochain rhs = conjugate_values(t_apply(eta, false));
      double diff = 0.0;
      for (std::size_t s = 0; s < lhs.values.size(); ++s) {
        diff += (lhs.values[s] - rhs.values[s]).squaredNorm();
      }
      intertwine = std::max(intertwine, std::sqrt(diff) / (1.0 + eta.squared_norm()));
    }
    rec.le("conjugation_intertwiner",
           "conjugating values intertwines the two curvature pipelines", intertwine,
           tol);
  }
}

// ---------------------------------------------------------------------------
// cupform

void cupform_checks(Recorder& rec, int n, int trials, double tol, SeededRng& rng) {
  const AlgebraTag sp = sp_n1(n);
  {
    const Eigen::Index m = n + 1;
    const CMatrix center =
        complexify(Complex(0.0, 1.0) * CMatrix::Identity(m, m), CMatrix::Zero(m, m),
                   BasisConvention::BlockDiag);
    rec.le("central_pairing_value", "lambda(complexified i I) = 2(n+1)",
           std::abs(lambda_sp(LieElement{sp, center}) - 2.0 * (n + 1)), tol);

    double invariance = 0.0;
    for (int t = 0; t < std::max(3, trials / 10); ++t) {
      const LieElement x = random_element(sp, rng);
      const CMatrix gen = 0.4 * embed(random_element(su_n1(n), rng), sp).mat;
      const CMatrix g = matrix_exp(gen);
      const CMatrix moved = g * x.mat * g.inverse();
      invariance = std::max(invariance,
                            std::abs(lambda_sp(LieElement{sp, moved}) - lambda_sp(x)) /
                                (1.0 + x.mat.squaredNorm()));
    }
    rec.le("central_pairing_invariance",
           "lambda(Ad(g) x) = lambda(x) for g = exp(embedded su(n,1))", invariance,
           tol);
  }

  const AlgebraTag so = so_4n4(n);
  {
    const RMatrix jrot =
        realify_linear(Complex(0.0, 1.0) * CMatrix::Identity(n + 1, n + 1));
    const Eigen::Index h = 2 * n + 2;
    RMatrix dir_prime = RMatrix::Zero(2 * h, 2 * h);
    dir_prime.topLeftCorner(h, h) = jrot;
    dir_prime.bottomRightCorner(h, h) = -jrot;
    RMatrix dir_dprime = dir_prime;
    dir_dprime.bottomRightCorner(h, h) = jrot;
    double defect = membership_residual(dir_prime.cast<Complex>(), so) +
                    membership_residual(dir_dprime.cast<Complex>(), so);
    for (int t = 0; t < 3; ++t) {
      const LieElement x = random_element(so, rng);
      const auto [lp, ldp] = lambda_primes(x);
      const double scale = 1.0 + x.mat.squaredNorm();
      defect = std::max(
          defect,
          std::abs(lp - (dir_prime.cast<Complex>() * x.mat).trace().real()) / scale);
      defect = std::max(
          defect,
          std::abs(ldp - (dir_dprime.cast<Complex>() * x.mat).trace().real()) / scale);
    }
    rec.le("pairing_directions_members",
           "lambda' = Tr(diag(J,-J) X) and lambda'' = Tr(diag(J,J) X), both directions "
           "inside so(4n,4)",
           defect, tol);
  }

  {
    double structure = 0.0;
    for (int t = 0; t < 2; ++t) {
      const PValuedOneForm alpha = random_cubic_sp_form(n, rng);
      const AlgebraTwoForm phi = bracket_square(alpha);
      for (std::size_t u = 0; u < phi.entries.size(); ++u) {
        for (std::size_t v = 0; v < phi.entries[u].size(); ++v) {
          structure = std::max(
              structure, (phi.entries[u][v] + phi.entries[v][u]).norm() /
                             (1.0 + alpha.squared_norm()));
          structure =
              std::max(structure, membership_residual(phi.entries[u][v], phi.target) /
                                      (1.0 + alpha.squared_norm()));
        }
      }
    }
    rec.le("bracket_square_structure",
           "[alpha, alpha] is antisymmetric with values in the target algebra",
           structure, tol);
  }

  {
    const KahlerStructure ks = standard_kahler(n);
    const Eigen::Index dim = 2 * n;
    double frame = (ks.omega + ks.omega.transpose()).norm();
    frame = std::max(frame, (ks.complex_structure * ks.complex_structure +
                             RMatrix::Identity(dim, dim))
                                .norm());
    frame = std::max(frame, (ks.complex_structure.transpose() * ks.omega *
                                 ks.complex_structure -
                             ks.omega)
                                .norm());
    rec.le("frame_structure",
           "omega is antisymmetric, J^2 = -I, and omega(J u, J v) = omega(u, v)",
           frame, tol);

    double calibration = std::abs(wedge_top_ratio(ks.omega, ks) - 1.0);
    RMatrix mixed = RMatrix::Zero(dim, dim);
    if (n >= 2) {
      mixed(0, 2) = 1.0;
      mixed(2, 0) = -1.0;
      calibration = std::max(calibration, std::abs(wedge_top_ratio(mixed, ks)));
    }
    rec.le("wedge_calibration",
           "omega^n / omega^n = 1 and two-forms on mixed frame pairs wedge to zero",
           calibration, tol);
  }

  const SquareRatioReport square =
      square_ratio_check(n, std::max(3, trials / 2), rng.next_u64());
  rec.le("slope_display",
         "2 [j Q delta, j Q delta'] complexifies to diag(C, conj(C)) with C = "
         "-Q conj(delta) Q delta' + Q conj(delta') Q delta",
         square.delta_formula_residual, tol);
  rec.le("slot_negativity",
         "lambda(phi(e_2k, e_2k+1)) = -8 |delta_2k|^2 on the cubic slice",
         square.delta_sum_residual, tol);
  rec.le("wedge_fast_vs_oracle",
         "the frame-pair wedge quotient equals the permutation-expansion oracle",
         square.fast_vs_oracle, tol);
  rec.le("square_ratio_check",
         "(lambda o [alpha, alpha] wedge omega^(n-1) / omega^n) / |alpha|^2 is the "
         "constant -2/n on the cubic slice",
         std::max({std::abs(square.c_estimate + 2.0 / n) * (n / 2.0),
                   square.relative_spread, square.sign == -1 ? 0.0 : 1.0}),
         tol);

  {
    const KahlerStructure ks = standard_kahler(n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int t = 0; t < 10; ++t) {
      std::vector<CMatrix> delta;
      for (int s = 0; s < 2 * n; ++s) {
        const CMatrix d = random_cmatrix(n + 1, n + 1, rng);
        delta.push_back(d + d.transpose());
      }
      const PValuedOneForm alpha = sp_form_from_delta(n, delta, FormType::Unrestricted);
      const double r = wedge_top_ratio(lambda_matrix(bracket_square(alpha)), ks) /
                       alpha.squared_norm();
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    rec.ge("square_ratio_offslice_control",
           "independent random slopes produce visibly non-constant ratios", hi - lo,
           1e-2);
  }

  const VanishingReport vanishing =
      pairing_vanishing_check(n, std::max(3, trials / 2), rng.next_u64());
  rec.le("pairing_vanishing_check",
         "lambda'' on J-commuting pairs, lambda' on J-anticommuting pairs, and both "
         "on mixed pairs vanish",
         std::max({vanishing.dprime_on_holomorphic, vanishing.prime_on_antiholomorphic,
                   vanishing.mixed_prime, vanishing.mixed_dprime}),
         tol);
  rec.le("signed_norm_ratios",
         "lambda'([Z, JZ]) = -2 |Z|^2 and lambda''([Z', JZ']) = +2 |Z'|^2",
         std::max(vanishing.prime_signed_ratio_defect,
                  vanishing.dprime_signed_ratio_defect),
         tol);
  rec.le("corner_commutator_display",
         "lambda'([Z, Z']) = 8 Tr(D C' - C D') for corner blocks B = C + i D",
         vanishing.corner_display_residual, tol);

  const AnisotropyReport aniso =
      anisotropy_check(n, std::max(3, trials / 2), rng.next_u64());
  rec.le("anisotropy_constancy",
         "the combined pairing ratio equals -(2/n)(|alpha|^2 + |alpha'|^2)",
         std::max({std::abs(aniso.c_estimate + 2.0 / n) * (n / 2.0),
                   aniso.relative_spread, aniso.sign == -1 ? 0.0 : 1.0}),
         tol);
  rec.le("anisotropy_cross_terms",
         "lambda' and lambda'' vanish on the mixed squares [alpha wedge alpha']",
         std::max(aniso.cross_prime_max, aniso.cross_dprime_max), tol);
  rec.ge("anisotropy_min_ratio",
         "the minimum normalized ratio magnitude stays within 10% of 2/n",
         aniso.min_normalized_ratio, 0.9 * (2.0 / n));
  rec.le("anisotropy_label_consistency",
         "all-holomorphic input reproduces the same constant and every family label "
         "verifies",
         std::max(aniso.holomorphic_only_defect, aniso.type_label_defect_max), tol);

  {
    PValuedOneForm alpha = random_cubic_sp_form(n, rng);
    alpha.values[1] = -alpha.values[1];
    const double sp_defect = type_label_defect(alpha);
    PValuedOneForm beta = random_cubic_so44_form(n, rng, false);
    beta.type = FormType::AntiHolomorphic;
    const double so_defect = type_label_defect(beta);
    rec.ge("type_label_detection",
           "a negated slot or a swapped family flag trips the type label check",
           std::min(sp_defect, so_defect), 1e-2);
  }
}

// ---------------------------------------------------------------------------
// gradedhodge

void gradedhodge_checks(Recorder& rec, int n, int trials, double tol, SeededRng& rng) {
  const AlgebraTag tag = sp_2n2_c(n, BasisConvention::AntiDiag);

  {
    double defect = 0.0;
    const GradedElement gv = grade_decompose(LieElement{tag, grading_element(n)});
    defect += gv.eigenvector_residual;
    for (const auto& [degree, part] : gv.components) {
      if (degree != 0) defect += part.norm();
    }
    const GradedElement gc = grade_decompose(LieElement{tag, lowering_corner_element(n)});
    for (const auto& [degree, part] : gc.components) {
      if (degree != -2) defect += part.norm();
    }
    const CMatrix row =
        lowering_row_element(n, random_cvector(n, rng), random_cvector(n, rng));
    defect += membership_residual(row, tag) / (1.0 + row.squaredNorm());
    const GradedElement gr = grade_decompose(LieElement{tag, row});
    for (const auto& [degree, part] : gr.components) {
      if (degree != -1) defect += part.norm();
    }
    rec.le("grading_pure_degrees",
           "v has degree 0, the corner element degree -2, the first-row family degree "
           "-1",
           defect, tol);
  }

  const GradingReport report = grading_report(n, std::max(3, trials / 5), rng.next_u64());
  {
    const std::map<int, int> want = {
        {-2, 1}, {-1, 2 * n}, {0, n * (2 * n + 1) + 1}, {1, 2 * n}, {2, 1}};
    double mismatch = (report.complex_dims == want) ? 0.0 : 1.0;
    mismatch += std::abs(
        static_cast<double>(report.total_complex_dim - (n + 1) * (2 * n + 3)));
    rec.le("graded_dimensions",
           "complex dims {1, 2n, n(2n+1)+1, 2n, 1} summing to (n+1)(2n+3)", mismatch,
           0.5);
    double symmetric = 0.0;
    for (int k = 1; k <= 2; ++k) {
      symmetric += std::abs(
          static_cast<double>(report.complex_dims.at(k) - report.complex_dims.at(-k)));
    }
    rec.le("graded_dimension_symmetry", "dim Gr^k = dim Gr^-k", symmetric, 0.5);
  }
  rec.le("component_reassembly",
         "x is the exact sum of its graded components, each an ad(v) eigenvector",
         report.reassembly_residual + report.eigen_residual_max, tol);
  rec.le("bracket_degree_additivity", "[Gr^a, Gr^b] lies in degree a + b",
         report.bracket_degree_residual, tol);
  rec.le("top_degree_vanishing", "[Gr^a, Gr^b] = 0 whenever |a + b| > 2",
         report.top_bracket_residual, tol);
  rec.le("degree_zero_pattern",
         "Gr^0 couples opposite corner scalars with a middle block preserving the "
         "inner symplectic form",
         report.zero_pattern_residual + report.subalgebra_residual, tol);

  {
    std::vector<CMatrix> family;
    for (Eigen::Index k = 0; k < n; ++k) {
      for (const Complex phase : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
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
    const int rank = static_cast<int>(Eigen::ColPivHouseholderQR<RMatrix>(stacked).rank());
    rec.le("lowering_family_span",
           "unit parameters span the degree -1 piece with real rank 4n",
           std::abs(static_cast<double>(rank - 4 * n)), 0.5);
  }

  {
    double mismatch =
        std::abs(static_cast<double>(report.gl_image_complex_dims.at(0) - (n * n + 1)));
    mismatch += std::abs(static_cast<double>(report.gl_image_complex_dims.at(1) - n));
    mismatch += std::abs(static_cast<double>(report.gl_image_complex_dims.at(-1) - n));
    mismatch += std::abs(static_cast<double>(report.gl_image_complex_dims.at(2)));
    mismatch += std::abs(static_cast<double>(report.gl_image_complex_dims.at(-2)));
    rec.le("gl_image_degrees",
           "the gl(n+1, C) image meets degrees {-1, 0, 1} with dims {n, n^2+1, n}",
           mismatch, 0.5);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "quatmat", "liecore", "branching", "weitzenbock", "cupform", "gradedhodge"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& suite, int n,
                                   const RunConfig& config) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  if (config.trials < 1) throw std::invalid_argument("trials must be positive");
  if (!(config.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  const std::vector<std::string>& names = suite_names();
  const auto it = std::find(names.begin(), names.end(), suite);
  if (it == names.end()) throw std::invalid_argument("unknown suite: " + suite);
  const std::size_t index = static_cast<std::size_t>(it - names.begin());

  SeededRng rng =
      SeededRng(config.seed).fork(index * 64 + static_cast<std::uint64_t>(n));
  std::vector<CheckRecord> records;
  Recorder rec(suite, n, config.trials, config.seed, records);
  switch (index) {
    case 0: quatmat_checks(rec, n, config.trials, config.tolerance, rng); break;
    case 1: liecore_checks(rec, n, config.trials, config.tolerance, rng); break;
    case 2: branching_checks(rec, n, config.trials, config.tolerance, rng); break;
    case 3: weitzenbock_checks(rec, n, config.trials, config.tolerance, rng); break;
    case 4: cupform_checks(rec, n, config.trials, config.tolerance, rng); break;
    default: gradedhodge_checks(rec, n, config.trials, config.tolerance, rng); break;
  }
  return records;
}

std::vector<CheckRecord> run_checks(const RunConfig& config) {
  std::vector<std::string> chosen =
      config.suites.empty() ? suite_names() : config.suites;
  for (const std::string& suite : chosen) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) ==
        suite_names().end()) {
      throw std::invalid_argument("unknown suite: " + suite);
    }
  }
  if (config.ranks.empty()) throw std::invalid_argument("no ranks configured");

  std::vector<CheckRecord> all;
  for (const int n : config.ranks) {
    for (const std::string& suite : suite_names()) {
      if (std::find(chosen.begin(), chosen.end(), suite) == chosen.end()) continue;
      std::vector<CheckRecord> part = run_suite(suite, n, config);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  return all;
}

bool all_pass(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

void write_human_report(const std::vector<CheckRecord>& records, std::ostream& os) {
  std::size_t width = 8;
  for (const CheckRecord& r : records) {
    width = std::max(width, r.suite.size() + r.name.size() + 1);
  }
  std::size_t passed = 0;
  for (const CheckRecord& r : records) {
    char line[256];
    std::snprintf(line, sizeof line, "%s %-*s n=%d  %.3e %s %.3e  [%.1f ms]",
                  r.pass ? "PASS" : "FAIL", static_cast<int>(width),
                  (r.suite + "/" + r.name).c_str(), r.n, r.measured,
                  r.comparison == "le" ? "<=" : ">=", r.threshold, r.wall_ms);
    os << line << "\n";
    if (r.pass) ++passed;
  }
  os << records.size() << " checks: " << passed << " passed, "
     << (records.size() - passed) << " failed\n";
}

void write_machine_report(const std::vector<CheckRecord>& records, std::ostream& os) {
  for (const CheckRecord& r : records) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["check"] = r.name;
    j["anchor"] = r.anchor;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["measured"] = r.measured;
    j["threshold"] = r.threshold;
    j["comparison"] = r.comparison;
    j["pass"] = r.pass;
    os << j.dump() << "\n";
  }
}

}  // namespace quatlie
