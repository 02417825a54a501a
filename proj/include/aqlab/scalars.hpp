#pragma once

/**
 * @file scalars.hpp
 * @brief The ring K_alpha = R + iR with i^2 = alpha.
 *
 * alpha = -1 gives the complex numbers, alpha = +1 the double (split-complex)
 * numbers. The latter has zero divisors: (1+i)(1-i) = 1 - i^2 = 0, so
 * inversion is partial and guarded by an isotropy tolerance.
 */

#include <cmath>
#include <ostream>
#include <string>

#include "aqlab/error.hpp"

namespace aqlab {

/// Signature parameter alpha of the algebra; only the calibrated values +-1 exist.
enum class Alpha : int { minus = -1, plus = 1 };

constexpr double value(Alpha a) noexcept { return static_cast<double>(static_cast<int>(a)); }

inline Alpha alpha_from_int(int a) {
  if (a == -1) return Alpha::minus;
  if (a == 1) return Alpha::plus;
  throw error(errc::bad_input, "alpha must be -1 or +1, got " + std::to_string(a));
}

/// Absolute normsq threshold below which a scalar counts as a zero divisor.
inline constexpr double default_isotropy_tol = 1e-9;

template <class T>
class basic_ka {
 public:
  using value_type = T;

  constexpr basic_ka() = default;
  constexpr basic_ka(T re, T im, Alpha alpha) : re_(re), im_(im), alpha_(alpha) {}

  static constexpr basic_ka real(T re, Alpha alpha) { return {re, T{0}, alpha}; }
  static constexpr basic_ka unit_i(Alpha alpha) { return {T{0}, T{1}, alpha}; }

  constexpr T re() const noexcept { return re_; }
  constexpr T im() const noexcept { return im_; }
  constexpr Alpha alpha() const noexcept { return alpha_; }

  /// re^2 - alpha im^2; may be zero or negative when alpha = +1.
  constexpr T normsq() const noexcept { return re_ * re_ - value(alpha_) * im_ * im_; }

  constexpr basic_ka conj() const noexcept { return {re_, -im_, alpha_}; }

  basic_ka inv(double tol = default_isotropy_tol) const {
    const T n = normsq();
    if (std::abs(n) <= tol) {
      throw error(errc::isotropic_scalar, "normsq " + std::to_string(n) + " within isotropy tolerance");
    }
    return {re_ / n, -im_ / n, alpha_};
  }

  friend basic_ka operator+(const basic_ka& x, const basic_ka& y) {
    check(x, y);
    return {x.re_ + y.re_, x.im_ + y.im_, x.alpha_};
  }
  friend basic_ka operator-(const basic_ka& x, const basic_ka& y) {
    check(x, y);
    return {x.re_ - y.re_, x.im_ - y.im_, x.alpha_};
  }
  friend constexpr basic_ka operator-(const basic_ka& x) { return {-x.re_, -x.im_, x.alpha_}; }

  // (a+ib)(c+id) = (ac + alpha bd) + i(ad + bc)
  friend basic_ka operator*(const basic_ka& x, const basic_ka& y) {
    check(x, y);
    return {x.re_ * y.re_ + value(x.alpha_) * x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_, x.alpha_};
  }
  friend constexpr basic_ka operator*(T s, const basic_ka& x) { return {s * x.re_, s * x.im_, x.alpha_}; }
  friend constexpr basic_ka operator*(const basic_ka& x, T s) { return s * x; }
  friend constexpr basic_ka operator/(const basic_ka& x, T s) { return {x.re_ / s, x.im_ / s, x.alpha_}; }

  basic_ka& operator+=(const basic_ka& y) { return *this = *this + y; }
  basic_ka& operator-=(const basic_ka& y) { return *this = *this - y; }
  basic_ka& operator*=(const basic_ka& y) { return *this = *this * y; }

  friend constexpr bool operator==(const basic_ka&, const basic_ka&) = default;

  friend std::ostream& operator<<(std::ostream& os, const basic_ka& x) {
    return os << '(' << x.re_ << (x.im_ < 0 ? " - " : " + ") << std::abs(x.im_) << "i)";
  }

 private:
  static void check(const basic_ka& x, const basic_ka& y) {
    if (x.alpha_ != y.alpha_) throw error(errc::signature_mismatch, "K_alpha operands with different alpha");
  }

  T re_{};
  T im_{};
  Alpha alpha_{Alpha::minus};
};

using ScalarKA = basic_ka<double>;

inline ScalarKA mul(const ScalarKA& x, const ScalarKA& y) { return x * y; }
inline ScalarKA conj(const ScalarKA& x) { return x.conj(); }
inline double normsq(const ScalarKA& x) { return x.normsq(); }
inline ScalarKA inv(const ScalarKA& x, double tol = default_isotropy_tol) { return x.inv(tol); }

/// Componentwise max distance; used by tolerance checks throughout.
inline double distance(const ScalarKA& x, const ScalarKA& y) {
  return std::max(std::abs(x.re() - y.re()), std::abs(x.im() - y.im()));
}

}  // namespace aqlab
