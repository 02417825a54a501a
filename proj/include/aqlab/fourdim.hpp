#pragma once

/**
 * @file fourdim.hpp
 * @brief 2-forms on the model fibre R^4 with metric diag(1, -alpha, -alpha, 1).
 *
 * Components are stored as (w12, w13, w14, w23, w24, w34), lower indices.
 * The volume form has eta_1234 = +1; orientation -1 negates the Hodge star.
 */

#include <array>
#include <cmath>
#include <tuple>
#include <utility>

#include <Eigen/Dense>

#include "aqlab/scalars.hpp"

namespace aqlab {

using Endo4 = Eigen::Matrix4d;

/// Index pairs (i<j), 0-based, in storage order.
inline constexpr std::array<std::pair<int, int>, 6> form_pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct Metric4 {
  Alpha alpha = Alpha::minus;

  Eigen::Vector4d diag() const {
    const double a = value(alpha);
    return {1.0, -a, -a, 1.0};
  }
  Eigen::Matrix4d matrix() const { return diag().asDiagonal(); }
  /// Number of negative entries.
  int index() const { return 1 + static_cast<int>(alpha); }
  /// g_ii g_jj
  double epsilon(int i, int j) const { return diag()(i) * diag()(j); }
};

struct TwoForm4 {
  std::array<double, 6> w{};

  static TwoForm4 from_matrix(const Eigen::Matrix4d& m) {
    TwoForm4 f;
    for (int p = 0; p < 6; ++p) {
      auto [i, j] = form_pairs[p];
      f.w[p] = 0.5 * (m(i, j) - m(j, i));
    }
    return f;
  }

  /// Unit basis form e^i ^ e^j, 0-based indices with i < j.
  static TwoForm4 basis(int p) {
    TwoForm4 f;
    f.w[p] = 1.0;
    return f;
  }

  Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    for (int p = 0; p < 6; ++p) {
      auto [i, j] = form_pairs[p];
      m(i, j) = w[p];
      m(j, i) = -w[p];
    }
    return m;
  }

  double operator()(int i, int j) const { return matrix()(i, j); }

  friend TwoForm4 operator+(const TwoForm4& a, const TwoForm4& b) {
    TwoForm4 r;
    for (int p = 0; p < 6; ++p) r.w[p] = a.w[p] + b.w[p];
    return r;
  }
  friend TwoForm4 operator-(const TwoForm4& a, const TwoForm4& b) {
    TwoForm4 r;
    for (int p = 0; p < 6; ++p) r.w[p] = a.w[p] - b.w[p];
    return r;
  }
  friend TwoForm4 operator*(double s, const TwoForm4& a) {
    TwoForm4 r;
    for (int p = 0; p < 6; ++p) r.w[p] = s * a.w[p];
    return r;
  }
  double max_abs() const {
    double m = 0;
    for (double v : w) m = std::max(m, std::abs(v));
    return m;
  }
};

namespace detail {
/// Complementary pair (k,l) with (i,j,k,l) an even permutation of (0,1,2,3).
inline std::pair<int, int> complement(int i, int j) {
  static constexpr int comp[4][4][2] = {
      {{-1, -1}, {2, 3}, {3, 1}, {1, 2}},
      {{3, 2}, {-1, -1}, {0, 3}, {2, 0}},
      {{1, 3}, {3, 0}, {-1, -1}, {0, 1}},
      {{2, 1}, {0, 2}, {1, 0}, {-1, -1}},
  };
  return {comp[i][j][0], comp[i][j][1]};
}
}  // namespace detail

/// (*w)_ij = 1/2 eta_ijkl g^km g^ln w_mn
inline TwoForm4 hodge_star(const Metric4& g, const TwoForm4& f, int orientation = 1) {
  const Eigen::Vector4d gd = g.diag();
  const Eigen::Matrix4d m = f.matrix();
  TwoForm4 r;
  for (int p = 0; p < 6; ++p) {
    auto [i, j] = form_pairs[p];
    auto [k, l] = detail::complement(i, j);
    // g is diagonal and its own inverse
    r.w[p] = orientation * gd(k) * gd(l) * m(k, l);
  }
  return r;
}

/// Self-dual (+) and anti-self-dual (-) parts.
inline std::pair<TwoForm4, TwoForm4> sd_decompose(const Metric4& g, const TwoForm4& f, int orientation = 1) {
  const TwoForm4 s = hodge_star(g, f, orientation);
  return {0.5 * (f + s), 0.5 * (f - s)};
}

/// [[0,x,y,z],[-x,0,z,ay],[-y,-z,0,-ax],[-z,-ay,ax,0]]
inline TwoForm4 self_dual_form(const Metric4& g, double x, double y, double z) {
  const double a = value(g.alpha);
  return {{x, y, z, z, a * y, -a * x}};
}

/// [[0,x,y,z],[-x,0,-z,-ay],[-y,z,0,ax],[-z,ay,-ax,0]]
inline TwoForm4 anti_self_dual_form(const Metric4& g, double x, double y, double z) {
  const double a = value(g.alpha);
  return {{x, y, z, -z, -a * y, a * x}};
}

/// Coordinates (x, y, z) = (w12, w13, w14) of a (anti-)self-dual form.
inline std::array<double, 3> sd_coordinates(const TwoForm4& f) { return {f.w[0], f.w[1], f.w[2]}; }

/// J with w(X,Y) = <X, JY>, i.e. J = g^-1 w.
inline Endo4 form_to_endo(const Metric4& g, const TwoForm4& f) { return g.matrix() * f.matrix(); }

/// Inverse of form_to_endo; J is projected onto g-skew endomorphisms.
inline TwoForm4 endo_to_form(const Metric4& g, const Endo4& J) { return TwoForm4::from_matrix(g.matrix() * J); }

/// lambda^2 = -tr(J^2)/4
inline double lambda_sq(const Endo4& J) { return -0.25 * (J * J).trace(); }

/// <w, t> = 1/2 w_jk t^jk
inline double inner_lambda2(const Metric4& g, const TwoForm4& a, const TwoForm4& b) {
  const Eigen::Vector4d gd = g.diag();
  double s = 0;
  for (int p = 0; p < 6; ++p) {
    auto [i, j] = form_pairs[p];
    s += a.w[p] * b.w[p] * gd(i) * gd(j);
  }
  return s;
}

inline double norm_sq(const Metric4& g, const TwoForm4& a) { return inner_lambda2(g, a, a); }

/// Coefficient of e1^e2^e3^e4 in w ^ w.
inline double wedge_square(const TwoForm4& f) {
  const auto& w = f.w;
  return 2 * (w[0] * w[5] - w[1] * w[4] + w[2] * w[3]);
}

struct AQBasis4 {
  Endo4 J1, J2, J3;
  TwoForm4 w1, w2, w3;
};

/**
 * Quaternionic triple from an orthogonal basis of the (anti-)self-dual forms:
 * J1^2 = J2^2 = alpha id, J3 = J1 J2, J3^2 = -id.
 * orientation -1 uses the anti-self-dual forms.
 */
inline AQBasis4 canonical_aq_basis(const Metric4& g, int orientation = 1) {
  auto make = orientation >= 0 ? self_dual_form : anti_self_dual_form;
  AQBasis4 r;
  r.w1 = make(g, 1, 0, 0);
  r.w2 = make(g, 0, 1, 0);
  r.J1 = form_to_endo(g, r.w1);
  r.J2 = form_to_endo(g, r.w2);
  r.J3 = r.J1 * r.J2;
  r.w3 = endo_to_form(g, r.J3);
  return r;
}

}  // namespace aqlab
