#pragma once

/**
 * @file spinor.hpp
 * @brief The spinvector space K_alpha (+) K_alpha, spinbases, orbit dimensions.
 */

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "aqlab/quat.hpp"

namespace aqlab {

struct SpinVector {
  ScalarKA x1, x2;

  Alpha alpha() const { return x1.alpha(); }

  friend SpinVector operator+(const SpinVector& u, const SpinVector& v) { return {u.x1 + v.x1, u.x2 + v.x2}; }
  friend SpinVector operator-(const SpinVector& u, const SpinVector& v) { return {u.x1 - v.x1, u.x2 - v.x2}; }
  friend SpinVector operator*(const ScalarKA& s, const SpinVector& v) { return {s * v.x1, s * v.x2}; }
  friend SpinVector operator*(double s, const SpinVector& v) { return {s * v.x1, s * v.x2}; }
  friend SpinVector operator*(const SpinMatrix& m, const SpinVector& v) {
    return {m(0, 0) * v.x1 + m(0, 1) * v.x2, m(1, 0) * v.x1 + m(1, 1) * v.x2};
  }
  friend double distance(const SpinVector& u, const SpinVector& v) {
    return std::max(distance(u.x1, v.x1), distance(u.x2, v.x2));
  }
};

/// <<X,Y>> = conj(z1) u1 - alpha conj(z2) u2
inline ScalarKA hermitian_form(const SpinVector& X, const SpinVector& Y) {
  const double al = value(X.alpha());
  return X.x1.conj() * Y.x1 - al * (X.x2.conj() * Y.x2);
}

/// Real part of the Hermitian form: the underlying real scalar product.
inline double real_inner(const SpinVector& X, const SpinVector& Y) { return hermitian_form(X, Y).re(); }

inline SpinVector apply(const QuaternionA& q, const SpinVector& X) {
  if (q.alpha() != X.alpha()) throw error(errc::signature_mismatch, "quaternion and spinvector alpha differ");
  return spin_matrix(q) * X;
}

struct IQBasis {
  QuaternionA j1, j2, j3;
  Alpha alpha() const { return j1.alpha(); }
};

/// Expected Gram diagonal of an orthonormal IQ basis: (-alpha, -alpha, 1).
inline std::array<double, 3> iq_gram_pattern(Alpha al) { return {-value(al), -value(al), 1.0}; }

/// Throws OrthonormalityViolated naming the first failing Gram entry.
inline void check_orthonormal(const IQBasis& B, double tol = 1e-9) {
  const std::array<const QuaternionA*, 3> js{&B.j1, &B.j2, &B.j3};
  for (auto* q : js) {
    if (q->alpha() != B.alpha()) throw error(errc::signature_mismatch, "IQ basis with mixed alpha");
    if (!q->is_purely_imaginary()) throw error(errc::orthonormality_violated, "basis element not purely imaginary");
  }
  const auto diag = iq_gram_pattern(B.alpha());
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double want = r == c ? diag[r] : 0.0;
      const double got = scalar_product(*js[r], *js[c]);
      if (std::abs(got - want) > tol) {
        std::ostringstream os;
        os << "Gram entry (" << r + 1 << "," << c + 1 << ") = " << got << ", expected " << want;
        throw error(errc::orthonormality_violated, os.str());
      }
    }
  }
}

struct SpinbasisResult {
  SpinMatrix change;  ///< columns are the spinbasis vectors
  int sign;           ///< +1 iff j3 = j1 j2
};

inline SpinMatrix columns(const SpinVector& e1, const SpinVector& e2) {
  return {{{{e1.x1, e2.x1}, {e1.x2, e2.x2}}}};
}

/// Inverse of a 2x2 K_alpha matrix; the determinant must be non-isotropic.
inline SpinMatrix inverse(const SpinMatrix& m) {
  const ScalarKA di = m.det().inv();
  return {{{{di * m(1, 1), -(di * m(0, 1))}, {-(di * m(1, 0)), di * m(0, 0)}}}};
}

/**
 * Spinbasis in which j1, j2, j3 act by sigma1, sigma2, sign*sigma3.
 *
 * Eigenvectors of [j1] for the eigenvalue i are X + i[j1]^3 X; the companion
 * vector X - i[j1]^3 X is rescaled so that [j2] maps the first onto it.
 */
inline SpinbasisResult spinbasis(const IQBasis& B, double tol = 1e-9) {
  check_orthonormal(B, tol);
  const Alpha al = B.alpha();
  const double a = value(al);
  const ScalarKA I = ScalarKA::unit_i(al), O = ScalarKA::real(1, al), Z = ScalarKA::real(0, al);
  const SpinMatrix A1 = spin_matrix(B.j1), A2 = spin_matrix(B.j2);
  const SpinMatrix A1c = A1 * A1 * A1;

  // deterministic seed sweep
  const std::array<SpinVector, 6> seeds{SpinVector{O, Z}, SpinVector{Z, O}, SpinVector{O, O},
                                        SpinVector{O, -O}, SpinVector{O, I}, SpinVector{I, O}};
  for (const SpinVector& X : seeds) {
    SpinVector e1 = X + I * (A1c * X);
    SpinVector e2 = X - I * (A1c * X);
    const double n1 = real_inner(e1, e1), n2 = real_inner(e2, e2);
    if (std::abs(n1) <= tol || std::abs(n2) <= tol) continue;
    e1 = (1 / std::sqrt(std::abs(n1))) * e1;
    e2 = (1 / std::sqrt(std::abs(n2))) * e2;
    if (a > 0 && n1 < 0) {
      // |i|^2 = -1 flips the sign of the Hermitian square
      e1 = I * e1;
      e2 = I * e2;
    }
    const ScalarKA d2 = hermitian_form(e2, e2);
    if (std::abs(d2.normsq()) <= tol) continue;
    const ScalarKA coef = hermitian_form(e2, A2 * e1) * d2.inv();
    const SpinVector f2 = coef * e2;

    const SpinMatrix P = columns(e1, f2);
    if (std::abs(P.det().normsq()) <= tol) continue;
    const double h11 = real_inner(e1, e1), h22 = real_inner(f2, f2);
    if (std::abs(h11 - 1) > 1e-6 || std::abs(h22 + a) > 1e-6) continue;

    const QuaternionA j12 = B.j1 * B.j2;
    const int sign = distance(spin_matrix(j12), spin_matrix(B.j3)) < 1e-6 ? 1 : -1;
    return {P, sign};
  }
  throw error(errc::degenerate_eigenvector, "every seed gives an isotropic normalization denominator");
}

/// Random orthonormal IQ basis, image of (i,j,k) under a rotation preserving
/// diag(-alpha,-alpha,1); reversed = true negates j3.
template <class Rng>
IQBasis random_iq_basis(Alpha al, Rng& rng, bool reversed = false) {
  std::uniform_real_distribution<double> ang(-M_PI, M_PI), rap(-1.5, 1.5);
  auto rot12 = [](double t) {
    Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
    r(0, 0) = std::cos(t), r(0, 1) = -std::sin(t), r(1, 0) = std::sin(t), r(1, 1) = std::cos(t);
    return r;
  };
  Eigen::Matrix3d R;
  if (al == Alpha::minus) {
    Eigen::Quaterniond q(Eigen::AngleAxisd(ang(rng), Eigen::Vector3d(ang(rng), ang(rng), ang(rng)).normalized()));
    R = q.toRotationMatrix();
  } else {
    auto boost = [](int p, double t) {
      Eigen::Matrix3d b = Eigen::Matrix3d::Identity();
      b(p, p) = b(2, 2) = std::cosh(t);
      b(p, 2) = b(2, p) = std::sinh(t);
      return b;
    };
    R = rot12(ang(rng)) * boost(0, rap(rng)) * boost(1, rap(rng)) * rot12(ang(rng));
  }
  auto col = [&](int c) { return QuaternionA::imaginary(R(0, c), R(1, c), R(2, c), al); };
  IQBasis B{col(0), col(1), col(2)};
  if (reversed) B.j3 = -B.j3;
  return B;
}

// ---- orbits of the quaternionic action on a real representation ----------

inline constexpr double rank_rel_tol = 1e-8;

/// Checks I^2 = J^2 = alpha id and IJ + JI = 0; returns alpha.
inline Alpha check_aq_pair(const Eigen::MatrixXd& I, const Eigen::MatrixXd& J, double tol = 1e-9) {
  const auto n = I.rows();
  if (I.cols() != n || J.rows() != n || J.cols() != n) throw error(errc::not_aq_structure, "I and J must be square and equal size");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const double scale = 1 + std::max(I.cwiseAbs().maxCoeff(), J.cwiseAbs().maxCoeff());
  const double t = tol * scale * scale;
  for (Alpha al : {Alpha::minus, Alpha::plus}) {
    if (((I * I) - value(al) * id).cwiseAbs().maxCoeff() < t) {
      if (((J * J) - value(al) * id).cwiseAbs().maxCoeff() >= t) throw error(errc::not_aq_structure, "J^2 != alpha id");
      if ((I * J + J * I).cwiseAbs().maxCoeff() >= t) throw error(errc::not_aq_structure, "IJ + JI != 0");
      return al;
    }
  }
  throw error(errc::not_aq_structure, "I^2 is not +-id");
}

/// Columns X, IX, JX, IJX.
inline Eigen::MatrixXd orbit_frame(const Eigen::MatrixXd& I, const Eigen::MatrixXd& J, const Eigen::VectorXd& X) {
  Eigen::MatrixXd F(X.size(), 4);
  F.col(0) = X;
  F.col(1) = I * X;
  F.col(2) = J * X;
  F.col(3) = I * (J * X);
  return F;
}

/// Real dimension of the orbit of X under the quaternion algebra spanned by id, I, J, IJ.
inline int orbit_dimension(const Eigen::MatrixXd& I, const Eigen::MatrixXd& J, const Eigen::VectorXd& X) {
  check_aq_pair(I, J);
  if (X.size() != I.rows()) throw error(errc::bad_input, "vector size does not match I");
  if (X.norm() == 0) throw error(errc::zero_vector, "orbit of the zero vector");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(orbit_frame(I, J, X));
  lu.setThreshold(rank_rel_tol);
  return static_cast<int>(lu.rank());
}

/// Quaternions a + bI + cJ + dIJ killing X (a basis of the annihilator).
/// Every nonzero annihilator is isotropic; empty iff the orbit is 4-dimensional.
inline std::vector<QuaternionA> annihilators(const Eigen::MatrixXd& I, const Eigen::MatrixXd& J,
                                             const Eigen::VectorXd& X) {
  const Alpha al = check_aq_pair(I, J);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(orbit_frame(I, J, X));
  lu.setThreshold(rank_rel_tol);
  const Eigen::MatrixXd K = lu.kernel();
  std::vector<QuaternionA> out;
  if (lu.rank() == 4) return out;
  for (int c = 0; c < K.cols(); ++c) out.emplace_back(K(0, c), K(1, c), K(2, c), K(3, c), al);
  return out;
}

}  // namespace aqlab
