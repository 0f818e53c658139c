#include "quatlie/quatmat.hpp"

namespace quatlie {

CMatrix left_mult_matrix(const Quaternion& q) {
  CMatrix m(2, 2);
  m(0, 0) = q.a;
  m(0, 1) = -std::conj(q.b);
  m(1, 0) = q.b;
  m(1, 1) = std::conj(q.a);
  return m;
}

StructuredMatrix::StructuredMatrix(Field field, Eigen::Index rows, Eigen::Index cols)
    : field_(field), a_(CMatrix::Zero(rows, cols)), b_(CMatrix::Zero(rows, cols)) {}

StructuredMatrix StructuredMatrix::zero(Field field, Eigen::Index rows, Eigen::Index cols) {
  return StructuredMatrix(field, rows, cols);
}

StructuredMatrix StructuredMatrix::identity(Field field, Eigen::Index n) {
  StructuredMatrix m(field, n, n);
  m.a_ = CMatrix::Identity(n, n);
  return m;
}

StructuredMatrix StructuredMatrix::from_real(const RMatrix& m) {
  StructuredMatrix out(Field::Real, m.rows(), m.cols());
  out.a_ = m.cast<Complex>();
  return out;
}

StructuredMatrix StructuredMatrix::from_complex(const CMatrix& m) {
  StructuredMatrix out(Field::Complex, m.rows(), m.cols());
  out.a_ = m;
  return out;
}

StructuredMatrix StructuredMatrix::from_parts(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("quaternionic parts must share a shape");
  StructuredMatrix out(Field::Quaternion, a.rows(), a.cols());
  out.a_ = a;
  out.b_ = b;
  return out;
}

void StructuredMatrix::check_field_consistency() const {
  if (field_ != Field::Quaternion && b_.cwiseAbs().maxCoeff() != 0.0)
    throw std::logic_error("non-quaternionic matrix acquired a j part");
  if (field_ == Field::Real && a_.imag().cwiseAbs().maxCoeff() != 0.0)
    throw std::logic_error("real matrix acquired an imaginary part");
}

void StructuredMatrix::set(Eigen::Index r, Eigen::Index c, const Quaternion& q) {
  a_(r, c) = q.a;
  b_(r, c) = q.b;
  check_field_consistency();
}

StructuredMatrix StructuredMatrix::operator+(const StructuredMatrix& other) const {
  if (field_ != other.field_) throw std::invalid_argument("field mismatch");
  StructuredMatrix out(field_, rows(), cols());
  out.a_ = a_ + other.a_;
  out.b_ = b_ + other.b_;
  return out;
}

StructuredMatrix StructuredMatrix::operator-(const StructuredMatrix& other) const {
  if (field_ != other.field_) throw std::invalid_argument("field mismatch");
  StructuredMatrix out(field_, rows(), cols());
  out.a_ = a_ - other.a_;
  out.b_ = b_ - other.b_;
  return out;
}

StructuredMatrix StructuredMatrix::operator*(const StructuredMatrix& other) const {
  if (field_ != other.field_) throw std::invalid_argument("field mismatch");
  if (cols() != other.rows()) throw std::invalid_argument("shape mismatch");
  StructuredMatrix out(field_, rows(), other.cols());
  out.a_ = a_ * other.a_ - b_.conjugate() * other.b_;
  out.b_ = a_.conjugate() * other.b_ + b_ * other.a_;
  return out;
}

StructuredMatrix StructuredMatrix::scaled(double s) const {
  StructuredMatrix out(field_, rows(), cols());
  out.a_ = s * a_;
  out.b_ = s * b_;
  return out;
}

StructuredMatrix StructuredMatrix::left_scaled(Complex z) const {
  StructuredMatrix out(field_ == Field::Real ? Field::Complex : field_, rows(), cols());
  out.a_ = z * a_;
  out.b_ = std::conj(z) * b_;
  return out;
}

StructuredMatrix StructuredMatrix::transpose() const {
  StructuredMatrix out(field_, cols(), rows());
  out.a_ = a_.transpose();
  out.b_ = b_.transpose();
  return out;
}

StructuredMatrix StructuredMatrix::adjoint() const {
  // Entrywise conj then transpose: (A + jB)* = A^* - j B^T.
  StructuredMatrix out(field_, cols(), rows());
  out.a_ = a_.adjoint();
  out.b_ = -b_.transpose();
  return out;
}

StructuredMatrix StructuredMatrix::conjugate() const {
  StructuredMatrix out(field_, rows(), cols());
  out.a_ = a_.conjugate();
  out.b_ = -b_;
  return out;
}

Quaternion StructuredMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  return {a_.trace(), b_.trace()};
}

double StructuredMatrix::frobenius_norm() const {
  return std::sqrt(a_.squaredNorm() + b_.squaredNorm());
}

double StructuredMatrix::distance(const StructuredMatrix& other) const {
  return (*this - other).frobenius_norm();
}

CMatrix complexify(const CMatrix& a, const CMatrix& b, BasisConvention conv) {
  if (a.rows() != a.cols()) throw std::invalid_argument("complexify needs a square matrix");
  const Eigen::Index m = a.rows();
  CMatrix x(2 * m, 2 * m);
  x.topLeftCorner(m, m) = a;
  x.topRightCorner(m, m) = -b.conjugate();
  x.bottomLeftCorner(m, m) = b;
  x.bottomRightCorner(m, m) = a.conjugate();
  if (conv == BasisConvention::BlockDiag) return x;
  const int n = static_cast<int>(m) - 1;
  const CMatrix w = convention_intertwiner_doubled(n);
  // BlockDiag picture conjugated into the AntiDiag basis.
  return w.inverse() * x * w;
}

CMatrix complexify(const StructuredMatrix& m, BasisConvention conv) {
  if (!m.is_square()) throw std::invalid_argument("complexify needs a square matrix");
  return complexify(m.complex_part(), m.j_part(), conv);
}

RMatrix realify_linear(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("realify needs a square matrix");
  const Eigen::Index s = m.rows();
  RMatrix r(2 * s, 2 * s);
  r.topLeftCorner(s, s) = m.real();
  r.topRightCorner(s, s) = -m.imag();
  r.bottomLeftCorner(s, s) = m.imag();
  r.bottomRightCorner(s, s) = m.real();
  return r;
}

RMatrix realify_antilinear(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("realify needs a square matrix");
  const Eigen::Index s = m.rows();
  RMatrix r(2 * s, 2 * s);
  r.topLeftCorner(s, s) = m.real();
  r.topRightCorner(s, s) = m.imag();
  r.bottomLeftCorner(s, s) = m.imag();
  r.bottomRightCorner(s, s) = -m.real();
  return r;
}

StructuredMatrix realify(const StructuredMatrix& m, bool antilinear) {
  if (m.field() == Field::Quaternion)
    throw std::invalid_argument("realify acts on real or complex matrices");
  const CMatrix& a = m.complex_part();
  return StructuredMatrix::from_real(antilinear ? realify_antilinear(a) : realify_linear(a));
}

RMatrix antidiag_j0(Eigen::Index m) {
  RMatrix j = RMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) j(i, m - 1 - i) = 1.0;
  return j;
}

RMatrix antidiag_j1(Eigen::Index m) {
  RMatrix j = antidiag_j0(m);
  j(0, m - 1) = -1.0;
  return j;
}

CMatrix convention_intertwiner_single(int n) {
  return antidiag_j0(n + 1).cast<Complex>();
}

CMatrix convention_intertwiner_doubled(int n) {
  const Eigen::Index m = n + 1;
  const RMatrix j0 = antidiag_j0(m);
  const RMatrix j1 = antidiag_j1(m);
  CMatrix w = CMatrix::Zero(2 * m, 2 * m);
  w.topLeftCorner(m, m) = j0.cast<Complex>();
  w.bottomRightCorner(m, m) = (-j0 * j1).cast<Complex>();
  return w;
}

RMatrix wlayout_permutation(int n) {
  // Source coordinates: (Re z, Re w, Im z, Im w); target: (Re z, Im z, Re w, Im w).
  const Eigen::Index m = n + 1;
  RMatrix p = RMatrix::Zero(4 * m, 4 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    p(i, i) = 1.0;              // Re z
    p(m + i, 2 * m + i) = 1.0;  // Im z
    p(2 * m + i, m + i) = 1.0;  // Re w
    p(3 * m + i, 3 * m + i) = 1.0;  // Im w
  }
  return p;
}

RMatrix convention_intertwiner_quad(int n) {
  const CMatrix w = convention_intertwiner_doubled(n);
  return wlayout_permutation(n) * realify_linear(w);
}

CMatrix change_convention(const CMatrix& x, BasisConvention from, BasisConvention to,
                          SizeClass size_class, int n) {
  Eigen::Index expected = 0;
  switch (size_class) {
    case SizeClass::Single: expected = n + 1; break;
    case SizeClass::Doubled: expected = 2 * n + 2; break;
    case SizeClass::Quadrupled: expected = 4 * n + 4; break;
  }
  if (x.rows() != expected || x.cols() != expected)
    throw std::invalid_argument("matrix size does not match the stated size class");
  if (from == to) return x;
  const bool to_blockdiag = (to == BasisConvention::BlockDiag);
  switch (size_class) {
    case SizeClass::Single: {
      const CMatrix j0 = convention_intertwiner_single(n);
      return j0 * x * j0;  // J0 is its own inverse.
    }
    case SizeClass::Doubled: {
      const CMatrix w = convention_intertwiner_doubled(n);
      return to_blockdiag ? CMatrix(w * x * w.inverse()) : CMatrix(w.inverse() * x * w);
    }
    case SizeClass::Quadrupled: {
      const RMatrix w4 = convention_intertwiner_quad(n);
      const CMatrix w4c = w4.cast<Complex>();
      const CMatrix w4inv = w4.inverse().cast<Complex>();
      return to_blockdiag ? CMatrix(w4c * x * w4inv) : CMatrix(w4inv * x * w4c);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace quatlie
