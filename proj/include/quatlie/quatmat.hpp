#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace quatlie {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Quaternion stored as q = a + j b with a, b complex, so that
/// j^2 = -1 and j z = conj(z) j for every complex z.
struct Quaternion {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};

  Quaternion() = default;
  Quaternion(Complex a_, Complex b_) : a(a_), b(b_) {}
  explicit Quaternion(double real) : a(real, 0.0), b(0.0, 0.0) {}

  static Quaternion zero() { return {}; }
  static Quaternion one() { return Quaternion(Complex(1, 0), Complex(0, 0)); }
  static Quaternion unit_i() { return Quaternion(Complex(0, 1), Complex(0, 0)); }
  static Quaternion unit_j() { return Quaternion(Complex(0, 0), Complex(1, 0)); }
  static Quaternion unit_k() { return Quaternion(Complex(0, 0), Complex(0, 1)); }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b};
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a - q.a, p.b - q.b};
  }
  friend Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b}; }

  /// (a + jb)(c + jd) = (ac - conj(b) d) + j(conj(a) d + bc).
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - std::conj(p.b) * q.b, std::conj(p.a) * q.b + p.b * q.a};
  }
  friend Quaternion operator*(double s, const Quaternion& q) { return {s * q.a, s * q.b}; }
  friend Quaternion operator*(const Quaternion& q, double s) { return s * q; }

  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a == q.a && p.b == q.b;
  }
};

/// conj(a + jb) = conj(a) - j b; an anti-involution: conj(pq) = conj(q) conj(p).
inline Quaternion conj(const Quaternion& q) { return {std::conj(q.a), -q.b}; }

inline double squared_abs(const Quaternion& q) { return std::norm(q.a) + std::norm(q.b); }
inline double abs(const Quaternion& q) { return std::sqrt(squared_abs(q)); }

inline Quaternion inverse(const Quaternion& q) {
  const double n2 = squared_abs(q);
  if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
  return (1.0 / n2) * conj(q);
}

inline double distance(const Quaternion& p, const Quaternion& q) { return abs(p - q); }

/// 2x2 complex matrix of left multiplication by q = a + jb on coordinates
/// (x, y) of x + j y: [[a, -conj(b)], [b, conj(a)]].
CMatrix left_mult_matrix(const Quaternion& q);

enum class Field { Real, Complex, Quaternion };

/// Matrix basis conventions for the complexified pictures.
///
/// BlockDiag: indefinite form Q = diag(I_n, -1); a complex matrix A embeds as
/// diag(A, conj(A)); quaternionic reality X S = S conj(X) with S = [[0,I],[-I,0]].
/// AntiDiag:  form Lambda0 = diag(-1, I_n); antidiagonal J0 (ones) and J1
/// (top-right entry -1); reality via [[0, J1], [-J1^T, 0]].
enum class BasisConvention { BlockDiag, AntiDiag };

/// Dense matrix over the scalar tower R c C c H, stored as complex parts
/// M = A + j B (B = 0 unless quaternionic, Im A = 0 if real).
class StructuredMatrix {
public:
  StructuredMatrix(Field field, Eigen::Index rows, Eigen::Index cols);

  static StructuredMatrix zero(Field field, Eigen::Index rows, Eigen::Index cols);
  static StructuredMatrix identity(Field field, Eigen::Index n);
  static StructuredMatrix from_real(const RMatrix& m);
  static StructuredMatrix from_complex(const CMatrix& m);
  static StructuredMatrix from_parts(const CMatrix& a, const CMatrix& b);

  Field field() const { return field_; }
  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  bool is_square() const { return rows() == cols(); }

  const CMatrix& complex_part() const { return a_; }
  const CMatrix& j_part() const { return b_; }

  Quaternion at(Eigen::Index r, Eigen::Index c) const { return {a_(r, c), b_(r, c)}; }
  void set(Eigen::Index r, Eigen::Index c, const Quaternion& q);

  StructuredMatrix operator+(const StructuredMatrix& other) const;
  StructuredMatrix operator-(const StructuredMatrix& other) const;
  /// (A + jB)(C + jD) = (AC - conj(B) D) + j(conj(A) D + B C).
  StructuredMatrix operator*(const StructuredMatrix& other) const;
  StructuredMatrix scaled(double s) const;
  /// Left multiplication by a complex scalar: z (A + jB) = zA + j conj(z) B.
  StructuredMatrix left_scaled(Complex z) const;

  /// Entrywise transpose (formal; keeps the field tag).
  StructuredMatrix transpose() const;
  /// Conjugate transpose; an anti-homomorphism: (MN)* = N* M*.
  StructuredMatrix adjoint() const;
  StructuredMatrix conjugate() const;

  Quaternion trace() const;
  double frobenius_norm() const;
  double distance(const StructuredMatrix& other) const;

private:
  Field field_;
  CMatrix a_;
  CMatrix b_;
  void check_field_consistency() const;
};

/// Image of an m x m quaternionic matrix in GL(2m, C) under the chosen
/// convention; an injective algebra homomorphism whose image is the fixed set
/// of the convention's reality involution.
CMatrix complexify(const StructuredMatrix& m, BasisConvention conv);
CMatrix complexify(const CMatrix& a, const CMatrix& b, BasisConvention conv);

/// Real 2m x 2m picture of a complex m x m matrix.
/// Linear convention: the matrix of v -> M v, i.e. [[A, -B], [B, A]].
/// Anti-linear convention: the matrix of v -> M conj(v), i.e. [[A, B], [B, -A]].
RMatrix realify_linear(const CMatrix& m);
RMatrix realify_antilinear(const CMatrix& m);
StructuredMatrix realify(const StructuredMatrix& m, bool antilinear);

/// Antidiagonal matrices of the AntiDiag convention (size m >= 2):
/// j0: ones on the antidiagonal; j1: antidiagonal with top-right entry -1.
RMatrix antidiag_j0(Eigen::Index m);
RMatrix antidiag_j1(Eigen::Index m);

/// Unitary intertwiners between the two conventions.
/// Single size (n+1): X_bd = J0 X_f J0.
/// Doubled size (2n+2): X_bd = W X_f W^{-1}, W = diag(J0, -J0 J1).
/// Quadrupled size (4n+4), real: conjugation by P_wlayout * realify(W).
CMatrix convention_intertwiner_single(int n);
CMatrix convention_intertwiner_doubled(int n);
RMatrix convention_intertwiner_quad(int n);

/// Permutation taking the stacked (Re, Im) layout of realify() on C^{2n+2}
/// to the blockwise layout (Re z, Im z, Re w, Im w) with z, w in C^{n+1}.
RMatrix wlayout_permutation(int n);

enum class SizeClass { Single, Doubled, Quadrupled };

/// Conjugates X from one convention's basis to the other's. Involutive.
CMatrix change_convention(const CMatrix& x, BasisConvention from, BasisConvention to,
                          SizeClass size_class, int n);

}  // namespace quatlie
