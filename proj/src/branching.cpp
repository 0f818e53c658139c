#include "quatlie/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/QR>

namespace quatlie {

namespace {

const Complex kI(0.0, 1.0);

/// Real basis of complex symmetric m x m matrices: unit entries on each
/// unordered index pair, duplicated over the phases {1, i}.
std::vector<CMatrix> symmetric_matrix_basis(Eigen::Index m) {
  std::vector<CMatrix> basis;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j; k < m; ++k) {
      for (const Complex phase : {Complex(1, 0), kI}) {
        CMatrix e = CMatrix::Zero(m, m);
        e(j, k) = phase;
        e(k, j) = phase;
        basis.push_back(e);
      }
    }
  }
  return basis;
}

std::vector<CMatrix> antisymmetric_matrix_basis(Eigen::Index m) {
  std::vector<CMatrix> basis;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j + 1; k < m; ++k) {
      for (const Complex phase : {Complex(1, 0), kI}) {
        CMatrix e = CMatrix::Zero(m, m);
        e(j, k) = phase;
        e(k, j) = -phase;
        basis.push_back(e);
      }
    }
  }
  return basis;
}

CMatrix block_diag2(const CMatrix& a, const CMatrix& b) {
  CMatrix m = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

/// Off-diagonal so(4n,4) element of the W-layout: [[0, B Qr], [-B^T Qr, 0]]
/// lies in the algebra for every real B (Qr is the realified form).
CMatrix offdiag_slot(const RMatrix& b, const RMatrix& qr) {
  const Eigen::Index h = b.rows();
  CMatrix z = CMatrix::Zero(2 * h, 2 * h);
  z.topRightCorner(h, h) = (b * qr).cast<Complex>();
  z.bottomLeftCorner(h, h) = (-b.transpose() * qr).cast<Complex>();
  return z;
}

Summand make_summand(const std::string& label, const std::vector<CMatrix>& mats,
                     const AlgebraTag& tag) {
  const Eigen::Index rows = tag.coordinate_dim();
  const Eigen::Index cols = static_cast<Eigen::Index>(mats.size());
  RMatrix raw(rows, cols);
  for (Eigen::Index k = 0; k < cols; ++k) raw.col(k) = vec_ambient(mats[k], tag);

  Eigen::HouseholderQR<RMatrix> qr(raw);
  const RMatrix thin_q = qr.householderQ() * RMatrix::Identity(rows, cols);
  const RMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  double max_diag = 0.0, min_diag = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < cols; ++k) {
    const double d = std::abs(r(k, k));
    max_diag = std::max(max_diag, d);
    min_diag = std::min(min_diag, d);
  }
  if (min_diag < 1e-8 * std::max(1.0, max_diag))
    throw std::runtime_error("summand '" + label + "' is rank deficient");
  return {label, thin_q};
}

struct SummandRecipe {
  std::string label;
  std::vector<CMatrix> mats;
};

std::vector<SummandRecipe> sp_summands(int n) {
  const Eigen::Index m = n + 1;
  const CMatrix q = indefinite_form(n, BasisConvention::BlockDiag);
  const CMatrix zero = CMatrix::Zero(m, m);

  SummandRecipe adj{"u(n,1) adjoint block", {}};
  for (const CMatrix& c : AlgebraBasis::get(u_n1(n)).elements())
    adj.mats.push_back(complexify(c, zero, BasisConvention::BlockDiag));

  SummandRecipe sym{"symmetric square slot", {}};
  for (const CMatrix& e : symmetric_matrix_basis(m))
    sym.mats.push_back(complexify(zero, CMatrix(q * e), BasisConvention::BlockDiag));

  return {adj, sym};
}

std::vector<SummandRecipe> u22_summands(int n) {
  const Eigen::Index m = n + 1;
  const CMatrix q = indefinite_form(n, BasisConvention::BlockDiag);
  const CMatrix zero = CMatrix::Zero(m, m);

  SummandRecipe upper{"u(n,1) upper diagonal block", {}};
  SummandRecipe lower{"u(n,1) lower diagonal block", {}};
  for (const CMatrix& c : AlgebraBasis::get(u_n1(n)).elements()) {
    upper.mats.push_back(block_diag2(c, zero));
    lower.mats.push_back(block_diag2(zero, c));
  }

  const auto off = [&](const CMatrix& b) {
    CMatrix x = CMatrix::Zero(2 * m, 2 * m);
    x.topRightCorner(m, m) = b * q;
    x.bottomLeftCorner(m, m) = -b.adjoint() * q;
    return x;
  };
  SummandRecipe anti{"antisymmetric square (off-diagonal)", {}};
  for (const CMatrix& b : antisymmetric_matrix_basis(m)) anti.mats.push_back(off(b));
  SummandRecipe sym{"symmetric square (off-diagonal)", {}};
  for (const CMatrix& b : symmetric_matrix_basis(m)) sym.mats.push_back(off(b));

  return {upper, lower, anti, sym};
}

std::vector<SummandRecipe> so44_summands(int n) {
  const Eigen::Index m = n + 1;
  const CMatrix q = indefinite_form(n, BasisConvention::BlockDiag);
  const RMatrix qr = realify_linear(q);  // diag(Q, Q), the one-factor form
  const CMatrix zero2 = CMatrix::Zero(2 * m, 2 * m);
  const CMatrix jmat = realify_linear(kI * CMatrix::Identity(m, m)).cast<Complex>();

  SummandRecipe z1{"center line, first factor", {block_diag2(jmat, zero2)}};
  SummandRecipe z2{"center line, second factor", {block_diag2(zero2, jmat)}};

  SummandRecipe su1{"su(n,1), first factor", {}};
  SummandRecipe su2{"su(n,1), second factor", {}};
  for (const CMatrix& a : AlgebraBasis::get(su_n1(n)).elements()) {
    const CMatrix ra = realify_linear(a).cast<Complex>();
    su1.mats.push_back(block_diag2(ra, zero2));
    su2.mats.push_back(block_diag2(zero2, ra));
  }

  SummandRecipe lam1{"antisymmetric square, first diagonal", {}};
  SummandRecipe lam2{"antisymmetric square, second diagonal", {}};
  for (const CMatrix& nmat : antisymmetric_matrix_basis(m)) {
    const CMatrix ran = realify_antilinear(CMatrix(q * nmat)).cast<Complex>();
    lam1.mats.push_back(block_diag2(ran, zero2));
    lam2.mats.push_back(block_diag2(zero2, ran));
  }

  SummandRecipe lam_off{"antisymmetric square, off-diagonal", {}};
  for (const CMatrix& b : antisymmetric_matrix_basis(m))
    lam_off.mats.push_back(offdiag_slot(realify_linear(b), qr));

  // The anti-linear off-diagonal piece: with D = C Q the action becomes the
  // plain commutator [A, D], so it splits into u(n,1) and i u(n,1) copies.
  SummandRecipe adj_off{"adjoint type, off-diagonal", {}};
  SummandRecipe iadj_off{"adjoint type twisted, off-diagonal", {}};
  for (const CMatrix& d : AlgebraBasis::get(u_n1(n)).elements()) {
    adj_off.mats.push_back(offdiag_slot(realify_antilinear(CMatrix(d * q)), qr));
    iadj_off.mats.push_back(offdiag_slot(realify_antilinear(CMatrix(kI * d * q)), qr));
  }

  SummandRecipe sym_off{"symmetric square, off-diagonal", {}};
  for (const CMatrix& b : symmetric_matrix_basis(m))
    sym_off.mats.push_back(offdiag_slot(realify_linear(b), qr));

  return {z1, z2, su1, su2, lam1, lam2, lam_off, adj_off, iadj_off, sym_off};
}

}  // namespace

int DecompositionReport::total_dim() const {
  int total = 0;
  for (const Summand& s : summands) total += s.dim();
  return total;
}

const Summand& DecompositionReport::summand(const std::string& label) const {
  for (const Summand& s : summands)
    if (s.label == label) return s;
  throw std::out_of_range("no summand labelled '" + label + "'");
}

DecompositionReport decompose(const AlgebraTag& alg) {
  std::vector<SummandRecipe> recipes;
  SizeClass size_class = SizeClass::Doubled;
  switch (alg.kind) {
    case AlgebraKind::SpN1: recipes = sp_summands(alg.n); break;
    case AlgebraKind::U2N2: recipes = u22_summands(alg.n); break;
    case AlgebraKind::So4N4:
      recipes = so44_summands(alg.n);
      size_class = SizeClass::Quadrupled;
      break;
    default:
      throw std::invalid_argument("no u(n,1) decomposition recipe for " + alg.name());
  }

  if (alg.convention == BasisConvention::AntiDiag) {
    for (SummandRecipe& recipe : recipes)
      for (CMatrix& mat : recipe.mats)
        mat = change_convention(mat, BasisConvention::BlockDiag, BasisConvention::AntiDiag,
                                size_class, alg.n);
  }

  DecompositionReport report;
  report.algebra = alg;
  for (const SummandRecipe& recipe : recipes)
    report.summands.push_back(make_summand(recipe.label, recipe.mats, alg));

  // Certification residuals.
  const int total = report.total_dim();
  RMatrix stacked(alg.coordinate_dim(), total);
  int at = 0;
  for (const Summand& s : report.summands) {
    stacked.middleCols(at, s.dim()) = s.coordinate_basis;
    at += s.dim();
  }
  report.orthonormality_residual =
      (stacked.transpose() * stacked - RMatrix::Identity(total, total)).norm();

  const AlgebraBasis& basis = AlgebraBasis::get(alg);
  for (const CMatrix& e : basis.elements()) {
    const RVector v = vec_ambient(e, alg);
    const double defect = (v - stacked * (stacked.transpose() * v)).norm();
    report.completeness_residual = std::max(report.completeness_residual, defect);
  }
  for (int k = 0; k < total; ++k) {
    const CMatrix x = unvec_ambient(stacked.col(k), alg);
    report.membership_residual =
        std::max(report.membership_residual, membership_residual(x, alg));
  }
  return report;
}

namespace {

double defect_for(const DecompositionReport& report, int trials, SeededRng& rng) {
  const AlgebraTag tag = report.algebra;
  const AlgebraTag u_tag = u_n1(tag.n, tag.convention);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const LieElement xi = random_element(u_tag, rng);
    const CMatrix gen = 0.5 * embed(xi, tag).mat / (1.0 + 0.2 * xi.norm());
    const CMatrix g = matrix_exp(gen);
    const CMatrix ginv = matrix_exp(CMatrix(-gen));

    const LieElement x = random_element(tag, rng);
    const CMatrix adx = g * x.mat * ginv;
    const RVector vx = vec_ambient(x.mat, tag);
    const RVector vax = vec_ambient(adx, tag);

    for (const Summand& s : report.summands) {
      const RMatrix& u = s.coordinate_basis;
      const RVector lhs = u * (u.transpose() * vax);
      const CMatrix proj_x = unvec_ambient(RVector(u * (u.transpose() * vx)), tag);
      const RVector rhs = vec_ambient(CMatrix(g * proj_x * ginv), tag);
      const double defect = (lhs - rhs).norm() / (1.0 + lhs.norm() + rhs.norm());
      worst = std::max(worst, defect);
    }
  }
  return worst;
}

}  // namespace

double equivariance_defect(const DecompositionReport& report, int trials, SeededRng& rng) {
  return defect_for(report, trials, rng);
}

double equivariance_defect_corrupted(const DecompositionReport& report, int trials,
                                     SeededRng& rng) {
  if (report.summands.size() < 2)
    throw std::invalid_argument("need at least two summands to corrupt");
  DecompositionReport corrupted = report;
  RMatrix& first = corrupted.summands.front().coordinate_basis;
  RMatrix& last = corrupted.summands.back().coordinate_basis;
  const RVector tmp = first.col(0);
  first.col(0) = last.col(0);
  last.col(0) = tmp;
  return defect_for(corrupted, trials, rng);
}

CubicSliceReport hom_p_decompose(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  CubicSliceReport report;
  report.n = n;
  const Eigen::Index m = n + 1;
  report.ambient_dim = 2 * n * (n + 1) * (n + 2);
  report.cubic_dim = n * (n + 1) * (n + 2) / 3;

  // Slot vectors of the interleaved basis of p: e_k / sqrt2, i e_k / sqrt2.
  std::vector<CVector> slots;
  for (int k = 0; k < n; ++k) {
    CVector e = CVector::Zero(n);
    e(k) = Complex(1.0 / std::sqrt(2.0), 0.0);
    slots.push_back(e);
    e(k) = Complex(0.0, 1.0 / std::sqrt(2.0));
    slots.push_back(e);
  }

  for (int l1 = 0; l1 < n; ++l1) {
    for (int l2 = l1; l2 < n; ++l2) {
      for (int l3 = l2; l3 < n; ++l3) {
        for (const Complex phase : {Complex(1, 0), kI}) {
          // Symmetric 3-tensor with unit entries on the orbit of (l1,l2,l3).
          std::vector<CMatrix> values;
          for (const CVector& y : slots) {
            CMatrix a = CMatrix::Zero(n, n);
            const int idx[3] = {l1, l2, l3};
            // Sum over the distinct assignments of one index to the slot.
            for (int pick = 0; pick < 3; ++pick) {
              if (pick > 0 && idx[pick] == idx[pick - 1]) continue;
              const int other[2] = {idx[(pick + 1) % 3], idx[(pick + 2) % 3]};
              a(other[0], other[1]) += phase * y(idx[pick]);
              if (other[0] != other[1]) a(other[1], other[0]) += phase * y(idx[pick]);
            }
            CMatrix value = CMatrix::Zero(m, m);
            value.topLeftCorner(n, n) = a;
            values.push_back(value);
          }
          report.cubic_basis.push_back(values);
        }
      }
    }
  }
  if (static_cast<int>(report.cubic_basis.size()) != report.cubic_dim)
    throw std::logic_error("cubic slice dimension mismatch");
  return report;
}

}  // namespace quatlie
