#pragma once

/**
 * @file piaq.hpp
 * @brief Canonical connection of a parallelizable AQ structure on a bracket model.
 *
 * A model is R^m with an antisymmetric bracket and constant I, J satisfying
 * I^2 = J^2 = alpha id, IJ + JI = 0. Everything is left-invariant, so the
 * connection is a bilinear map and the identities below are checked on basis
 * pairs.
 *
 * Imaginary eigenvalues live in the K_alpha extension, modelled as pairs
 * (u, w) meaning u + i w with i^2 = alpha. Multiplication by i sends (u, w)
 * to (alpha w, u).
 */

#include <cmath>
#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "aqlab/liealg.hpp"
#include "aqlab/scalars.hpp"

namespace aqlab {

/// u + i w in R^m (x) K_alpha.
struct ExtVec {
  Vec re, im;

  static ExtVec real(const Vec& v) { return {v, Vec::Zero(v.size())}; }

  friend ExtVec operator+(const ExtVec& a, const ExtVec& b) { return {a.re + b.re, a.im + b.im}; }
  friend ExtVec operator-(const ExtVec& a, const ExtVec& b) { return {a.re - b.re, a.im - b.im}; }
  friend ExtVec operator*(double s, const ExtVec& a) { return {s * a.re, s * a.im}; }
  friend ExtVec operator*(const Mat& F, const ExtVec& a) { return {F * a.re, F * a.im}; }

  double max_abs() const { return std::max(re.cwiseAbs().maxCoeff(), im.cwiseAbs().maxCoeff()); }
};

/// s * v for s in K_alpha.
inline ExtVec scale(const ScalarKA& s, const ExtVec& v) {
  const double al = value(s.alpha());
  return {s.re() * v.re + al * s.im() * v.im, s.re() * v.im + s.im() * v.re};
}

inline ExtVec times_i(Alpha al, const ExtVec& v) { return {value(al) * v.im, v.re}; }

enum class Twistor { I, J, K };

inline std::string to_string(Twistor t) { return t == Twistor::I ? "I" : t == Twistor::J ? "J" : "K"; }

/// Outcome of a basis sweep; on failure, the worst basis pair (0-based).
struct Verdict {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
  double defect = 0;
};

inline constexpr double piaq_tol = 1e-10;

class PiAQModel {
 public:
  PiAQModel(StructureConstants bracket, Mat I, Mat J, Alpha alpha, std::string name = "model")
      : c_(std::move(bracket)), I_(std::move(I)), J_(std::move(J)), alpha_(alpha), name_(std::move(name)) {
    const int m = c_.dim();
    if (m % 2 != 0) throw error(errc::invalid_model, "dimension must be even");
    if (I_.rows() != m || I_.cols() != m || J_.rows() != m || J_.cols() != m)
      throw error(errc::invalid_model, "I and J must be m x m");
    const Mat id = Mat::Identity(m, m);
    const double s = 1 + std::max(I_.cwiseAbs().maxCoeff(), J_.cwiseAbs().maxCoeff());
    const double t = 1e-9 * s * s;
    const double a = value(alpha_);
    if ((I_ * I_ - a * id).cwiseAbs().maxCoeff() > t) throw error(errc::invalid_model, "I^2 != alpha id");
    if ((J_ * J_ - a * id).cwiseAbs().maxCoeff() > t) throw error(errc::invalid_model, "J^2 != alpha id");
    if ((I_ * J_ + J_ * I_).cwiseAbs().maxCoeff() > t) throw error(errc::invalid_model, "IJ + JI != 0");
    const double cs = std::max(1.0, c_.max_abs());
    if (c_.antisymmetry_defect() > 1e-12 * cs) throw error(errc::invalid_model, "bracket is not antisymmetric");
    is_lie_ = c_.jacobi_defect() <= jacobi_tol * cs * cs;
    K_ = I_ * J_;
    I3_ = I_ * I_ * I_;
    J3_ = J_ * J_ * J_;
  }

  static PiAQModel from_doubled(const DoubledModel& D) {
    return {D.algebra().constants(), D.I(), D.J(), Alpha::plus, D.algebra().name()};
  }

  int dim() const noexcept { return c_.dim(); }
  Alpha alpha() const noexcept { return alpha_; }
  const std::string& name() const noexcept { return name_; }
  const StructureConstants& constants() const noexcept { return c_; }
  bool is_lie() const noexcept { return is_lie_; }
  const Mat& I() const noexcept { return I_; }
  const Mat& J() const noexcept { return J_; }
  const Mat& K() const noexcept { return K_; }
  const Mat& twistor(Twistor t) const { return t == Twistor::I ? I_ : t == Twistor::J ? J_ : K_; }

  Vec bracket(const Vec& x, const Vec& y) const { return c_.bracket(x, y); }

  /// K_alpha-bilinear extension of the bracket.
  ExtVec bracket(const ExtVec& x, const ExtVec& y) const {
    const double a = value(alpha_);
    return {bracket(x.re, y.re) + a * bracket(x.im, y.im), bracket(x.re, y.im) + bracket(x.im, y.re)};
  }

  /// Real form of the connection.
  Vec connection(const Vec& X, const Vec& Y) const {
    const double a = value(alpha_);
    const Vec IX = I_ * X, IY = I_ * Y, JY = J_ * Y, IJY = K_ * Y;
    Vec r = bracket(X, Y) - a * bracket(IX, IY) + a * (J_ * bracket(X, JY)) - J_ * bracket(IX, IJY) -
            a * (I_ * bracket(IX, Y)) + a * (I_ * bracket(X, IY)) - K_ * bracket(X, IJY) + K_ * bracket(IX, JY);
    return 0.25 * r;
  }

  /// Projector form over the K_alpha extension with V = (1 + i I^3)/2, H = (1 - i I^3)/2:
  /// V{[HX,VY] + J^3[VX,JVY]} + H{[VX,HY] + J^3[HX,JHY]}.
  ExtVec connection_projector(const Vec& X, const Vec& Y) const {
    const ExtVec x = ExtVec::real(X), y = ExtVec::real(Y);
    const ExtVec vx = V(x), hx = H(x), vy = V(y), hy = H(y);
    return V(bracket(hx, vy) + J3_ * bracket(vx, J_ * vy)) + H(bracket(vx, hy) + J3_ * bracket(hx, J_ * hy));
  }

  ExtVec V(const ExtVec& p) const { return 0.5 * (p + times_i(alpha_, I3_ * p)); }
  ExtVec H(const ExtVec& p) const { return 0.5 * (p - times_i(alpha_, I3_ * p)); }

  /// S(X,Y) = nabla_X Y - nabla_Y X - [X,Y]; also the adjoint product X*Y.
  Vec torsion(const Vec& X, const Vec& Y) const { return connection(X, Y) - connection(Y, X) - bracket(X, Y); }
  Vec adjoint_product(const Vec& X, const Vec& Y) const { return torsion(X, Y); }

  ExtVec torsion(const ExtVec& x, const ExtVec& y) const {
    const double a = value(alpha_);
    return {torsion(x.re, y.re) + a * torsion(x.im, y.im), torsion(x.re, y.im) + torsion(x.im, y.re)};
  }

  /// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
  /// Meaningful as a curvature only when is_lie().
  Vec curvature(const Vec& X, const Vec& Y, const Vec& Z) const {
    return connection(X, connection(Y, Z)) - connection(Y, connection(X, Z)) - connection(bracket(X, Y), Z);
  }

 private:
  StructureConstants c_;
  Mat I_, J_, K_, I3_, J3_;
  Alpha alpha_;
  std::string name_;
  bool is_lie_ = false;
};

namespace detail {

inline Mat basis(int m) { return Mat::Identity(m, m); }

/// Sweep f(i,j) over basis pairs; f returns (defect, scale).
template <class F>
Verdict sweep_pairs(int m, F&& f, double tol = piaq_tol) {
  Verdict v;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [d, s] = f(i, j);
      const double rel = d / (1 + s);
      if (rel > v.defect) {
        v.defect = rel;
        if (rel > tol) v.witness = std::make_pair(i, j);
      }
    }
  v.holds = v.defect <= tol;
  if (v.holds) v.witness.reset();
  return v;
}

}  // namespace detail

/// c with F^2 = c id, c = +-1; NotTwistor otherwise.
inline int twistor_square(const Mat& F, double tol = 1e-9) {
  const Mat id = Mat::Identity(F.rows(), F.cols());
  const Mat F2 = F * F;
  const double t = tol * (1 + F.cwiseAbs().maxCoeff()) * (1 + F.cwiseAbs().maxCoeff());
  if ((F2 - id).cwiseAbs().maxCoeff() <= t) return 1;
  if ((F2 + id).cwiseAbs().maxCoeff() <= t) return -1;
  throw error(errc::not_twistor, "F^2 is not +-id");
}

/// N_F(X,Y) = c[X,Y] + [FX,FY] - F[FX,Y] - F[X,FY] where F^2 = c id.
inline Vec nijenhuis(const PiAQModel& M, const Mat& F, const Vec& X, const Vec& Y) {
  const int c = twistor_square(F);
  const Vec FX = F * X, FY = F * Y;
  return c * M.bracket(X, Y) + M.bracket(FX, FY) - F * M.bracket(FX, Y) - F * M.bracket(X, FY);
}

/// Torsion expression of the Nijenhuis tensor:
/// -c S(X,Y) - S(FX,FY) + F S(FX,Y) + F S(X,FY).
inline Vec nijenhuis_from_torsion(const PiAQModel& M, const Mat& F, const Vec& X, const Vec& Y) {
  const int c = twistor_square(F);
  const Vec FX = F * X, FY = F * Y;
  return -c * M.torsion(X, Y) - M.torsion(FX, FY) + F * M.torsion(FX, Y) + F * M.torsion(X, FY);
}

/// S = 0 and R = 0 on all basis arguments.
inline Verdict integrability(const PiAQModel& M, double tol = piaq_tol) {
  const int m = M.dim();
  const Mat E = detail::basis(m);
  return detail::sweep_pairs(
      m,
      [&](int i, int j) {
        double d = detail::inf(M.torsion(E.col(i), E.col(j)));
        for (int k = 0; k < m; ++k) d = std::max(d, detail::inf(M.curvature(E.col(i), E.col(j), E.col(k))));
        return std::pair{d, 0.0};
      },
      tol);
}

inline bool is_integrable(const PiAQModel& M, double tol = piaq_tol) { return integrability(M, tol).holds; }

/// I(X*Y) = IX*Y = X*IY
inline Verdict semiholonomy(const PiAQModel& M, double tol = piaq_tol) {
  const Mat E = detail::basis(M.dim());
  const Mat& I = M.I();
  return detail::sweep_pairs(
      M.dim(),
      [&](int i, int j) {
        const Vec X = E.col(i), Y = E.col(j);
        const Vec a = I * M.torsion(X, Y), b = M.torsion(I * X, Y), c = M.torsion(X, I * Y);
        return std::pair{std::max(detail::inf(a - b), detail::inf(a - c)),
                         std::max({detail::inf(a), detail::inf(b), detail::inf(c)})};
      },
      tol);
}

inline bool is_semiholonomic(const PiAQModel& M, double tol = piaq_tol) { return semiholonomy(M, tol).holds; }

/// Checks lam^2 = c for F^2 = c id; K_alpha has a square root of -1 only when alpha = -1.
inline void check_eigenvalue(const PiAQModel& M, const Mat& F, const ScalarKA& lam, double tol = 1e-9) {
  const int c = twistor_square(F);
  if (lam.alpha() != M.alpha()) throw error(errc::signature_mismatch, "eigenvalue alpha differs from model alpha");
  const bool real_root = std::abs(lam.im()) <= tol && std::abs(std::abs(lam.re()) - 1) <= tol;
  const bool imag_root = std::abs(lam.re()) <= tol && std::abs(std::abs(lam.im()) - 1) <= tol;
  if (c == 1 && real_root) return;
  if (c == -1 && M.alpha() == Alpha::minus && imag_root) return;
  std::ostringstream os;
  os << lam << " is not an eigenvalue of an endomorphism with square " << c << " id over K_" << static_cast<int>(M.alpha());
  throw error(errc::not_eigenvalue, os.str());
}

/// (1 +- lam F^3)/2 applied to a real vector; lam F^3 = lam^{-1} F.
inline ExtVec eigenprojector(const Mat& F, const ScalarKA& lam, const ExtVec& v, int sign = 1) {
  const ExtVec f3 = (F * F * F) * v;
  return 0.5 * (v + scale(sign * lam, f3));
}

/**
 * Whether the fundamental distribution D^lam_F is involutive.
 *
 * F = I: D^lam_I must be an ideal of the adjoint algebra, S(pi X, Y) in D^lam_I.
 * F = J or K on a semiholonomic model: FX*FY = lam F(X*Y).
 * Otherwise: D^lam_F must be a subalgebra, pi^- S(pi^+ X, pi^+ Y) = 0.
 */
inline Verdict fundamental_involutive(const PiAQModel& M, Twistor which, const ScalarKA& lam, double tol = piaq_tol) {
  const Mat& F = M.twistor(which);
  check_eigenvalue(M, F, lam);
  const int m = M.dim();
  const Mat E = detail::basis(m);
  auto pplus = [&](const Vec& v) { return eigenprojector(F, lam, ExtVec::real(v), 1); };
  auto pminus = [&](const ExtVec& v) { return 0.5 * (v - scale(lam, (F * F * F) * v)); };

  if (which == Twistor::I) {
    return detail::sweep_pairs(
        m,
        [&](int i, int j) {
          const ExtVec s = M.torsion(pplus(E.col(i)), ExtVec::real(E.col(j)));
          return std::pair{pminus(s).max_abs(), s.max_abs()};
        },
        tol);
  }
  if (is_semiholonomic(M, tol)) {
    return detail::sweep_pairs(
        m,
        [&](int i, int j) {
          const Vec X = E.col(i), Y = E.col(j);
          const ExtVec lhs = ExtVec::real(M.torsion(F * X, F * Y));
          const ExtVec rhs = scale(lam, ExtVec::real(F * M.torsion(X, Y)));
          return std::pair{(lhs - rhs).max_abs(), std::max(lhs.max_abs(), rhs.max_abs())};
        },
        tol);
  }
  return detail::sweep_pairs(
      m,
      [&](int i, int j) {
        const ExtVec s = M.torsion(pplus(E.col(i)), pplus(E.col(j)));
        return std::pair{pminus(s).max_abs(), s.max_abs()};
      },
      tol);
}

/// The default eigenvalue of I: +1 when alpha = +1, +i when alpha = -1.
inline ScalarKA principal_eigenvalue(Alpha al) {
  return al == Alpha::plus ? ScalarKA::real(1, al) : ScalarKA::unit_i(al);
}

/**
 * Constant-mu isoclinic distribution {X + mu JX | X in D^lam_I} is totally
 * geodesic iff J(X*Y) = mu (JX*JY) for X, Y in D^lam_I.
 */
inline Verdict isoclinic_geodesic_const_mu(const PiAQModel& M, double mu, std::optional<ScalarKA> lam = std::nullopt,
                                           double tol = piaq_tol) {
  if (std::abs(std::abs(mu) - 1) <= 1e-12) throw error(errc::invalid_mu, "mu must differ from +-1");
  if (!is_semiholonomic(M, tol)) throw error(errc::invalid_model, "isoclinic test requires a semiholonomic model");
  const ScalarKA l = lam.value_or(principal_eigenvalue(M.alpha()));
  check_eigenvalue(M, M.I(), l);
  const Mat& J = M.J();
  const Mat E = detail::basis(M.dim());
  return detail::sweep_pairs(
      M.dim(),
      [&](int i, int j) {
        const ExtVec X = eigenprojector(M.I(), l, ExtVec::real(E.col(i)));
        const ExtVec Y = eigenprojector(M.I(), l, ExtVec::real(E.col(j)));
        const ExtVec lhs = J * M.torsion(X, Y);
        const ExtVec rhs = mu * M.torsion(J * X, J * Y);
        return std::pair{(lhs - rhs).max_abs(), std::max(lhs.max_abs(), rhs.max_abs())};
      },
      tol);
}

inline bool is_isoclinic_geodesic_const_mu(const PiAQModel& M, double mu) { return isoclinic_geodesic_const_mu(M, mu).holds; }

/**
 * Three-web test for alpha = +1: the adjoint product is J-linear,
 * JX*JY = J(X*Y), and I is an automorphism-type involution,
 * I(X*Y) = IX*Y = X*IY.
 */
inline Verdict three_web(const PiAQModel& M, double tol = piaq_tol) {
  if (M.alpha() != Alpha::plus) throw error(errc::wrong_signature, "three-webs need alpha = +1");
  const Mat E = detail::basis(M.dim());
  const Mat &I = M.I(), &J = M.J();
  return detail::sweep_pairs(
      M.dim(),
      [&](int i, int j) {
        const Vec X = E.col(i), Y = E.col(j);
        const Vec s = M.torsion(X, Y);
        const Vec a = I * s, b = M.torsion(I * X, Y), c = M.torsion(X, I * Y);
        const Vec d = J * s, e = M.torsion(J * X, J * Y);
        const double defect = std::max({detail::inf(a - b), detail::inf(a - c), detail::inf(d - e)});
        return std::pair{defect, std::max({detail::inf(a), detail::inf(b), detail::inf(c), detail::inf(e)})};
      },
      tol);
}

inline bool is_three_web(const PiAQModel& M, double tol = piaq_tol) { return three_web(M, tol).holds; }

}  // namespace aqlab
