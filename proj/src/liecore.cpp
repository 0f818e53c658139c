#include "quatlie/liecore.hpp"

#include <map>
#include <memory>
#include <mutex>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace quatlie {

namespace {

constexpr double kNullspaceEigTol = 1e-12;  // relative to the largest eigenvalue

CMatrix cdiag(const CMatrix& a, const CMatrix& b) {
  CMatrix m = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

CMatrix two_block(const CMatrix& tr, const CMatrix& bl) {
  // [[0, tr], [bl, 0]] with square blocks of equal size.
  const Eigen::Index m = tr.rows();
  CMatrix x = CMatrix::Zero(2 * m, 2 * m);
  x.topRightCorner(m, m) = tr;
  x.bottomLeftCorner(m, m) = bl;
  return x;
}

}  // namespace

Eigen::Index AlgebraTag::ambient_size() const {
  switch (kind) {
    case AlgebraKind::SuN1:
    case AlgebraKind::UN1: return n + 1;
    case AlgebraKind::SpN1:
    case AlgebraKind::U2N2:
    case AlgebraKind::Sp2N2C: return 2 * n + 2;
    case AlgebraKind::So4N4: return 4 * n + 4;
  }
  throw std::logic_error("unreachable");
}

Field AlgebraTag::matrix_field() const {
  return kind == AlgebraKind::So4N4 ? Field::Real : Field::Complex;
}

int AlgebraTag::coordinate_dim() const {
  const int m = static_cast<int>(ambient_size());
  return matrix_field() == Field::Real ? m * m : 2 * m * m;
}

int AlgebraTag::dimension() const {
  switch (kind) {
    case AlgebraKind::SuN1: return n * (n + 2);
    case AlgebraKind::UN1: return (n + 1) * (n + 1);
    case AlgebraKind::SpN1: return (n + 1) * (2 * n + 3);
    case AlgebraKind::U2N2: return 4 * (n + 1) * (n + 1);
    case AlgebraKind::So4N4: return 2 * (n + 1) * (4 * n + 3);
    case AlgebraKind::Sp2N2C: return 2 * (n + 1) * (2 * n + 3);
  }
  throw std::logic_error("unreachable");
}

std::string AlgebraTag::name() const {
  std::string base;
  switch (kind) {
    case AlgebraKind::SuN1: base = "su(" + std::to_string(n) + ",1)"; break;
    case AlgebraKind::UN1: base = "u(" + std::to_string(n) + ",1)"; break;
    case AlgebraKind::SpN1: base = "sp(" + std::to_string(n) + ",1)"; break;
    case AlgebraKind::U2N2: base = "u(" + std::to_string(2 * n) + ",2)"; break;
    case AlgebraKind::So4N4: base = "so(" + std::to_string(4 * n) + ",4)"; break;
    case AlgebraKind::Sp2N2C: base = "sp(" + std::to_string(2 * n + 2) + ",C)"; break;
  }
  return base + (convention == BasisConvention::BlockDiag ? "" : "[antidiag]");
}

CMatrix indefinite_form(int n, BasisConvention conv) {
  CMatrix q = CMatrix::Identity(n + 1, n + 1);
  if (conv == BasisConvention::BlockDiag)
    q(n, n) = -1.0;
  else
    q(0, 0) = -1.0;
  return q;
}

CMatrix doubled_form(int n, BasisConvention conv) {
  const CMatrix g = indefinite_form(n, conv);
  if (conv == BasisConvention::BlockDiag) return cdiag(g, g);
  const CMatrix j0 = antidiag_j0(n + 1).cast<Complex>();
  return cdiag(g, j0 * g * j0);
}

CMatrix symplectic_form(int n, BasisConvention conv) {
  if (conv == BasisConvention::BlockDiag) {
    const CMatrix q = indefinite_form(n, conv);
    return two_block(-q, q);
  }
  const CMatrix j0 = antidiag_j0(n + 1).cast<Complex>();
  return two_block(j0, -j0);
}

CMatrix reality_form(int n, BasisConvention conv) {
  const Eigen::Index m = n + 1;
  if (conv == BasisConvention::BlockDiag) {
    const CMatrix id = CMatrix::Identity(m, m);
    return two_block(id, -id);
  }
  const CMatrix j1 = antidiag_j1(m).cast<Complex>();
  return two_block(j1, -j1.transpose());
}

RMatrix quad_form(int n, BasisConvention conv) {
  const CMatrix g2 = doubled_form(n, conv);
  RMatrix g(4 * n + 4, 4 * n + 4);
  g.setZero();
  if (conv == BasisConvention::BlockDiag) {
    // W-layout (Re z, Im z, Re w, Im w): each complex coordinate pair carries
    // the same signature, so the form is diag(Q, Q, Q, Q).
    const RMatrix q = indefinite_form(n, conv).real();
    const Eigen::Index m = n + 1;
    for (int blockIdx = 0; blockIdx < 4; ++blockIdx)
      g.block(blockIdx * m, blockIdx * m, m, m) = q;
  } else {
    const RMatrix lam = g2.real();
    const Eigen::Index m = 2 * n + 2;
    g.topLeftCorner(m, m) = lam;
    g.bottomRightCorner(m, m) = lam;
  }
  return g;
}

namespace {

/// All defining defects of the algebra, as a list of matrices whose joint
/// vanishing characterizes membership. Every map is real-linear in x.
std::vector<CMatrix> defining_defects(const CMatrix& x, const AlgebraTag& alg) {
  const int n = alg.n;
  const BasisConvention conv = alg.convention;
  std::vector<CMatrix> defects;
  switch (alg.kind) {
    case AlgebraKind::SuN1:
    case AlgebraKind::UN1: {
      const CMatrix g = indefinite_form(n, conv);
      defects.push_back(x.adjoint() * g + g * x);
      if (alg.kind == AlgebraKind::SuN1) {
        CMatrix tr(1, 1);
        tr(0, 0) = x.trace();
        defects.push_back(tr);
      }
      break;
    }
    case AlgebraKind::SpN1: {
      // GL(n+1, H) ∩ u(2n,2): quaternionic reality plus the Hermitian-form
      // equation. That the symplectic equation follows is certified by
      // verify_intersection, not assumed here.
      const CMatrix g2 = doubled_form(n, conv);
      const CMatrix s = reality_form(n, conv);
      defects.push_back(x.adjoint() * g2 + g2 * x);
      defects.push_back(x * s - s * x.conjugate());
      break;
    }
    case AlgebraKind::U2N2: {
      const CMatrix g2 = doubled_form(n, conv);
      defects.push_back(x.adjoint() * g2 + g2 * x);
      break;
    }
    case AlgebraKind::Sp2N2C: {
      const CMatrix omega = symplectic_form(n, conv);
      defects.push_back(x.transpose() * omega + omega * x);
      break;
    }
    case AlgebraKind::So4N4: {
      const CMatrix g4 = quad_form(n, conv).cast<Complex>();
      defects.push_back(x.transpose() * g4 + g4 * x);
      defects.push_back(x.imag().cast<Complex>());
      break;
    }
  }
  return defects;
}

}  // namespace

double membership_residual(const CMatrix& x, const AlgebraTag& alg) {
  const Eigen::Index m = alg.ambient_size();
  if (x.rows() != m || x.cols() != m)
    throw std::invalid_argument("ambient size mismatch for " + alg.name());
  double sq = 0.0;
  for (const CMatrix& d : defining_defects(x, alg)) sq += d.squaredNorm();
  return std::sqrt(sq);
}

RVector vec_ambient(const CMatrix& x, const AlgebraTag& alg) {
  const Eigen::Index m = alg.ambient_size();
  if (x.rows() != m || x.cols() != m)
    throw std::invalid_argument("ambient size mismatch for " + alg.name());
  RVector v(alg.coordinate_dim());
  const Eigen::Index mm = m * m;
  Eigen::Map<const Eigen::VectorXcd> flat(x.data(), mm);
  if (alg.matrix_field() == Field::Real) {
    v = flat.real();
  } else {
    v.head(mm) = flat.real();
    v.tail(mm) = flat.imag();
  }
  return v;
}

CMatrix unvec_ambient(const RVector& v, const AlgebraTag& alg) {
  const Eigen::Index m = alg.ambient_size();
  if (v.size() != alg.coordinate_dim())
    throw std::invalid_argument("coordinate size mismatch for " + alg.name());
  const Eigen::Index mm = m * m;
  CMatrix x(m, m);
  Eigen::Map<Eigen::VectorXcd> flat(x.data(), mm);
  if (alg.matrix_field() == Field::Real) {
    flat = v.cast<Complex>();
  } else {
    flat.real() = v.head(mm);
    flat.imag() = v.tail(mm);
  }
  return x;
}

namespace {

RVector vec_defects(const std::vector<CMatrix>& defects) {
  Eigen::Index total = 0;
  for (const CMatrix& d : defects) total += 2 * d.size();
  RVector v(total);
  Eigen::Index at = 0;
  for (const CMatrix& d : defects) {
    Eigen::Map<const Eigen::VectorXcd> flat(d.data(), d.size());
    v.segment(at, d.size()) = flat.real();
    at += d.size();
    v.segment(at, d.size()) = flat.imag();
    at += d.size();
  }
  return v;
}

/// Stacked matrix of the defining linear constraints in real coordinates.
RMatrix constraint_matrix(const AlgebraTag& alg) {
  const int coords = alg.coordinate_dim();
  const RVector probe =
      vec_defects(defining_defects(CMatrix::Zero(alg.ambient_size(), alg.ambient_size()), alg));
  RMatrix c(probe.size(), coords);
  for (int k = 0; k < coords; ++k) {
    RVector e = RVector::Zero(coords);
    e(k) = 1.0;
    c.col(k) = vec_defects(defining_defects(unvec_ambient(e, alg), alg));
  }
  return c;
}

/// Orthonormal null-space basis (columns), from the spectral decomposition of
/// C^T C with a relative eigenvalue threshold.
RMatrix nullspace_basis(const RMatrix& c) {
  const RMatrix gram = c.transpose() * c;
  Eigen::SelfAdjointEigenSolver<RMatrix> es(gram);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const RVector evals = es.eigenvalues();  // ascending
  const double cutoff = kNullspaceEigTol * std::max(1.0, evals(evals.size() - 1));
  int kernel = 0;
  while (kernel < evals.size() && evals(kernel) <= cutoff) ++kernel;
  return es.eigenvectors().leftCols(kernel);
}

}  // namespace

AlgebraBasis::AlgebraBasis(const AlgebraTag& tag) : tag_(tag) {
  coordinate_basis_ = nullspace_basis(constraint_matrix(tag));
  const int d = static_cast<int>(coordinate_basis_.cols());
  if (d != tag.dimension())
    throw std::runtime_error("null-space dimension of " + tag.name() + " is " +
                             std::to_string(d) + ", expected " +
                             std::to_string(tag.dimension()));
  elements_.reserve(d);
  for (int k = 0; k < d; ++k)
    elements_.push_back(unvec_ambient(coordinate_basis_.col(k), tag));
}

const AlgebraBasis& AlgebraBasis::get(const AlgebraTag& tag) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<AlgebraBasis>> cache;
  const std::tuple<int, int, int> key{static_cast<int>(tag.kind), tag.n,
                                      static_cast<int>(tag.convention)};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<AlgebraBasis>(new AlgebraBasis(tag))).first;
  return *it->second;
}

CMatrix AlgebraBasis::combine(const RVector& coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("coefficient count mismatch");
  return unvec_ambient(coordinate_basis_ * coeffs, tag_);
}

RVector AlgebraBasis::coordinates(const CMatrix& x) const {
  return coordinate_basis_.transpose() * vec_ambient(x, tag_);
}

double AlgebraBasis::projection_defect(const CMatrix& x) const {
  const RVector v = vec_ambient(x, tag_);
  return (v - coordinate_basis_ * (coordinate_basis_.transpose() * v)).norm();
}

LieElement random_element(const AlgebraTag& alg, SeededRng& rng) {
  const AlgebraBasis& basis = AlgebraBasis::get(alg);
  RVector coeffs(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) coeffs(k) = rng.normal();
  return {alg, basis.combine(coeffs)};
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (!(x.algebra == y.algebra)) throw std::invalid_argument("algebra mismatch in bracket");
  return {x.algebra, x.mat * y.mat - y.mat * x.mat};
}

namespace {

int chain_position(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::SuN1: return 0;
    case AlgebraKind::UN1: return 1;
    case AlgebraKind::SpN1: return 2;
    case AlgebraKind::U2N2: return 3;
    case AlgebraKind::So4N4: return 4;
    case AlgebraKind::Sp2N2C: return -1;
  }
  throw std::logic_error("unreachable");
}

CMatrix embed_step(const CMatrix& x, const AlgebraTag& source) {
  const int n = source.n;
  switch (source.kind) {
    case AlgebraKind::SuN1:
    case AlgebraKind::SpN1:
      return x;  // su(n,1) -> u(n,1) and sp(n,1) -> u(2n,2) are inclusions.
    case AlgebraKind::UN1: {
      if (source.convention == BasisConvention::BlockDiag)
        return cdiag(x, x.conjugate());
      const CMatrix j0 = antidiag_j0(n + 1).cast<Complex>();
      return cdiag(x, CMatrix(-j0 * x.transpose() * j0));
    }
    case AlgebraKind::U2N2: {
      const RMatrix r = realify_linear(x);
      if (source.convention == BasisConvention::AntiDiag) return r.cast<Complex>();
      const RMatrix p = wlayout_permutation(n);
      return (p * r * p.transpose()).cast<Complex>();
    }
    default:
      throw std::invalid_argument("no embedding step out of " + source.name());
  }
}

AlgebraKind chain_kind(int position) {
  switch (position) {
    case 0: return AlgebraKind::SuN1;
    case 1: return AlgebraKind::UN1;
    case 2: return AlgebraKind::SpN1;
    case 3: return AlgebraKind::U2N2;
    case 4: return AlgebraKind::So4N4;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LieElement embed(const LieElement& x, const AlgebraTag& target) {
  if (target.n != x.algebra.n || target.convention != x.algebra.convention)
    throw std::invalid_argument("embedding requires matching n and convention");
  const int from = chain_position(x.algebra.kind);
  const int to = chain_position(target.kind);
  if (from < 0 || to < 0 || to < from)
    throw std::invalid_argument("no embedding from " + x.algebra.name() + " to " +
                                target.name());
  CMatrix mat = x.mat;
  for (int pos = from; pos < to; ++pos)
    mat = embed_step(mat, {chain_kind(pos), target.n, target.convention});
  return {target, mat};
}

double trace_pairing(const CMatrix& x, const CMatrix& y, double scale) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("ambient size mismatch in trace pairing");
  return scale * (x.cwiseProduct(y.conjugate())).sum().real();
}

double trace_pairing(const LieElement& x, const LieElement& y, double scale) {
  return trace_pairing(x.mat, y.mat, scale);
}

CartanSplit cartan_split(const LieElement& x) {
  if (x.algebra.kind != AlgebraKind::SuN1)
    throw std::invalid_argument("cartan_split expects an su(n,1) element");
  const double residual = membership_residual(x.mat, x.algebra);
  if (residual > 1e-8 * (1.0 + x.mat.squaredNorm()))
    throw std::invalid_argument("cartan_split input fails su(n,1) membership");
  const Eigen::Index m = x.algebra.ambient_size();
  const Eigen::Index d = x.algebra.convention == BasisConvention::BlockDiag ? m - 1 : 0;
  CMatrix p = CMatrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    if (j == d) continue;
    p(d, j) = x.mat(d, j);
    p(j, d) = x.mat(j, d);
  }
  return {{x.algebra, CMatrix(x.mat - p)}, {x.algebra, p}};
}

CMatrix p_element(const CVector& x, BasisConvention conv) {
  const Eigen::Index n = x.size();
  CMatrix m = CMatrix::Zero(n + 1, n + 1);
  if (conv == BasisConvention::BlockDiag) {
    m.topRightCorner(n, 1) = x;
    m.bottomLeftCorner(1, n) = x.adjoint();
  } else {
    m.bottomLeftCorner(n, 1) = x;
    m.topRightCorner(1, n) = x.adjoint();
  }
  return m;
}

std::vector<CMatrix> p_basis(int n, BasisConvention conv) {
  std::vector<CMatrix> basis;
  basis.reserve(2 * n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    CVector e = CVector::Zero(n);
    e(k) = Complex(1.0, 0.0);
    basis.push_back(inv_sqrt2 * p_element(e, conv));
    e(k) = Complex(0.0, 1.0);
    basis.push_back(inv_sqrt2 * p_element(e, conv));
  }
  return basis;
}

CMatrix matrix_exp(const CMatrix& x) { return x.exp(); }

IntersectionReport verify_intersection(int n, int trials, SeededRng& rng) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  IntersectionReport report;
  report.n = n;
  report.expected_dimension = sp_n1(n).dimension();

  const AlgebraTag sp_tag = sp_n1(n);
  const AlgebraTag u22_tag = u_2n2(n);
  const AlgebraTag spc_tag = sp_2n2_c(n);
  for (int t = 0; t < trials; ++t) {
    const LieElement x = random_element(sp_tag, rng);
    const double scale = 1.0 + x.mat.squaredNorm();
    report.max_u22_residual =
        std::max(report.max_u22_residual, membership_residual(x.mat, u22_tag) / scale);
    report.max_sp_complex_residual =
        std::max(report.max_sp_complex_residual, membership_residual(x.mat, spc_tag) / scale);
  }

  const RMatrix cu = constraint_matrix(u22_tag);
  const RMatrix cs = constraint_matrix(spc_tag);
  RMatrix stacked(cu.rows() + cs.rows(), u22_tag.coordinate_dim());
  stacked << cu, cs;
  report.joint_dimension = static_cast<int>(nullspace_basis(stacked).cols());
  return report;
}

}  // namespace quatlie
