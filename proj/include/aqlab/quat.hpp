#pragma once

/**
 * @file quat.hpp
 * @brief alpha-quaternions: i^2 = j^2 = alpha, k = ij, k^2 = -1.
 *
 * Product by Cayley-Dickson doubling of K_alpha. A quaternion a+ib+jc+kd is
 * stored as z1 + j z2 with z1 = a+ib and z2 = c-id, since
 * (a+ib) + j(c-id) = a + ib + jc - j i d = a + ib + jc + kd.
 */

#include <array>
#include <cmath>
#include <ostream>

#include <Eigen/Dense>

#include "aqlab/scalars.hpp"

namespace aqlab {

template <class T>
class basic_quaternion {
 public:
  using scalar = basic_ka<T>;

  constexpr basic_quaternion() = default;
  constexpr basic_quaternion(T a, T b, T c, T d, Alpha alpha) : a_(a), b_(b), c_(c), d_(d), alpha_(alpha) {}

  static constexpr basic_quaternion one(Alpha al) { return {1, 0, 0, 0, al}; }
  static constexpr basic_quaternion i(Alpha al) { return {0, 1, 0, 0, al}; }
  static constexpr basic_quaternion j(Alpha al) { return {0, 0, 1, 0, al}; }
  static constexpr basic_quaternion k(Alpha al) { return {0, 0, 0, 1, al}; }
  /// Purely imaginary ia + jb + kc.
  static constexpr basic_quaternion imaginary(T a, T b, T c, Alpha al) { return {0, a, b, c, al}; }

  /// Inverse of the z1 + j z2 splitting.
  static basic_quaternion from_pair(const scalar& z1, const scalar& z2) {
    if (z1.alpha() != z2.alpha()) throw error(errc::signature_mismatch, "pair with mixed alpha");
    return {z1.re(), z1.im(), z2.re(), -z2.im(), z1.alpha()};
  }

  constexpr T a() const noexcept { return a_; }
  constexpr T b() const noexcept { return b_; }
  constexpr T c() const noexcept { return c_; }
  constexpr T d() const noexcept { return d_; }
  constexpr Alpha alpha() const noexcept { return alpha_; }
  constexpr std::array<T, 4> coeffs() const noexcept { return {a_, b_, c_, d_}; }

  constexpr scalar z1() const noexcept { return {a_, b_, alpha_}; }
  constexpr scalar z2() const noexcept { return {c_, -d_, alpha_}; }

  constexpr basic_quaternion conj() const noexcept { return {a_, -b_, -c_, -d_, alpha_}; }

  constexpr T normsq() const noexcept {
    const T al = value(alpha_);
    return a_ * a_ - al * b_ * b_ - al * c_ * c_ + d_ * d_;
  }

  T max_abs() const noexcept { return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)}); }

  bool is_purely_imaginary() const noexcept { return std::abs(a_) < 1e-9 * (1 + max_abs()); }

  // (a1,a2)(b1,b2) = (a1 b1 + alpha b2 conj(a2), conj(a1) b2 + b1 a2)
  friend basic_quaternion operator*(const basic_quaternion& p, const basic_quaternion& q) {
    check(p, q);
    const scalar al = scalar::real(value(p.alpha_), p.alpha_);
    const scalar a1 = p.z1(), a2 = p.z2(), b1 = q.z1(), b2 = q.z2();
    return from_pair(a1 * b1 + al * b2 * a2.conj(), a1.conj() * b2 + b1 * a2);
  }
  friend basic_quaternion operator+(const basic_quaternion& p, const basic_quaternion& q) {
    check(p, q);
    return {p.a_ + q.a_, p.b_ + q.b_, p.c_ + q.c_, p.d_ + q.d_, p.alpha_};
  }
  friend basic_quaternion operator-(const basic_quaternion& p, const basic_quaternion& q) {
    check(p, q);
    return {p.a_ - q.a_, p.b_ - q.b_, p.c_ - q.c_, p.d_ - q.d_, p.alpha_};
  }
  friend constexpr basic_quaternion operator-(const basic_quaternion& p) {
    return {-p.a_, -p.b_, -p.c_, -p.d_, p.alpha_};
  }
  friend constexpr basic_quaternion operator*(T s, const basic_quaternion& p) {
    return {s * p.a_, s * p.b_, s * p.c_, s * p.d_, p.alpha_};
  }

  friend constexpr bool operator==(const basic_quaternion&, const basic_quaternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const basic_quaternion& q) {
    return os << '[' << q.a_ << ", " << q.b_ << ", " << q.c_ << ", " << q.d_ << "]_" << static_cast<int>(q.alpha_);
  }

 private:
  static void check(const basic_quaternion& p, const basic_quaternion& q) {
    if (p.alpha_ != q.alpha_) throw error(errc::signature_mismatch, "quaternion operands with different alpha");
  }

  T a_{}, b_{}, c_{}, d_{};
  Alpha alpha_{Alpha::minus};
};

using QuaternionA = basic_quaternion<double>;

inline QuaternionA qmul(const QuaternionA& p, const QuaternionA& q) { return p * q; }
inline QuaternionA qconj(const QuaternionA& q) { return q.conj(); }
inline double qnormsq(const QuaternionA& q) { return q.normsq(); }

/// <p,q> = 1/2 (conj(p) q + conj(q) p); only the real part survives.
inline double scalar_product(const QuaternionA& p, const QuaternionA& q) {
  return 0.5 * (p.conj() * q + q.conj() * p).a();
}

inline QuaternionA iq_commutator(const QuaternionA& p, const QuaternionA& q) {
  if (!p.is_purely_imaginary() || !q.is_purely_imaginary()) {
    throw error(errc::not_purely_imaginary, "commutator on IQ needs purely imaginary arguments");
  }
  return p * q - q * p;
}

// ---- 2x2 matrices over K_alpha -------------------------------------------

template <class T>
struct basic_spin_matrix {
  using scalar = basic_ka<T>;
  std::array<std::array<scalar, 2>, 2> m;

  const scalar& operator()(int r, int c) const { return m[r][c]; }
  scalar& operator()(int r, int c) { return m[r][c]; }

  Alpha alpha() const { return m[0][0].alpha(); }

  static basic_spin_matrix identity(Alpha al) {
    const scalar o = scalar::real(1, al), z = scalar::real(0, al);
    return {{{{o, z}, {z, o}}}};
  }

  scalar det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  /// Sum of the real parts of the diagonal.
  T real_trace() const { return m[0][0].re() + m[1][1].re(); }

  basic_spin_matrix conj() const {
    basic_spin_matrix r = *this;
    for (auto& row : r.m)
      for (auto& e : row) e = e.conj();
    return r;
  }
  basic_spin_matrix transpose() const {
    basic_spin_matrix r = *this;
    std::swap(r.m[0][1], r.m[1][0]);
    return r;
  }

  friend basic_spin_matrix operator*(const basic_spin_matrix& x, const basic_spin_matrix& y) {
    basic_spin_matrix r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
    return r;
  }
  friend basic_spin_matrix operator-(const basic_spin_matrix& x) {
    basic_spin_matrix r = x;
    for (auto& row : r.m)
      for (auto& e : row) e = -e;
    return r;
  }
  friend basic_spin_matrix operator*(T s, const basic_spin_matrix& x) {
    basic_spin_matrix r = x;
    for (auto& row : r.m)
      for (auto& e : row) e = s * e;
    return r;
  }

  /// Max componentwise distance.
  friend double distance(const basic_spin_matrix& x, const basic_spin_matrix& y) {
    double d = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) d = std::max(d, distance(x.m[i][j], y.m[i][j]));
    return d;
  }

  friend bool operator==(const basic_spin_matrix&, const basic_spin_matrix&) = default;
};

using SpinMatrix = basic_spin_matrix<double>;

/// [[z1, alpha conj(z2)], [z2, conj(z1)]]
inline SpinMatrix spin_matrix(const QuaternionA& q) {
  const Alpha al = q.alpha();
  const ScalarKA z1 = q.z1(), z2 = q.z2();
  return {{{{z1, value(al) * z2.conj()}, {z2, z1.conj()}}}};
}

/// The generalized Pauli matrices: images of i, j, k.
inline std::array<SpinMatrix, 3> pauli(Alpha al) {
  return {spin_matrix(QuaternionA::i(al)), spin_matrix(QuaternionA::j(al)), spin_matrix(QuaternionA::k(al))};
}

/// Matrix of X -> [q, X] on IQ in the basis (i, j, k); columns are images.
inline Eigen::Matrix3d ad_matrix(const QuaternionA& q) {
  if (!q.is_purely_imaginary()) throw error(errc::not_purely_imaginary, "ad_matrix needs a purely imaginary argument");
  const double al = value(q.alpha());
  const double a = q.b(), b = q.c(), c = q.d();
  Eigen::Matrix3d m;
  m << 0, 2 * al * c, -2 * al * b,
      -2 * al * c, 0, 2 * al * a,
      -2 * b, 2 * a, 0;
  return m;
}

}  // namespace aqlab
