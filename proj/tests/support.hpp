#pragma once

// Random inputs and independent oracles shared by the unit and acceptance tests.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "aqlab/liealg.hpp"
#include "aqlab/piaq.hpp"
#include "aqlab/quat.hpp"

namespace support {

using aqlab::Alpha;
using aqlab::Mat;
using aqlab::Vec;

using Rng = std::mt19937_64;

inline double uniform(Rng& r, double lo = -1, double hi = 1) { return std::uniform_real_distribution<double>(lo, hi)(r); }

inline Vec random_vec(Rng& r, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(r);
  return v;
}

inline aqlab::QuaternionA random_quat(Rng& r, Alpha al) {
  return {uniform(r), uniform(r), uniform(r), uniform(r), al};
}

inline aqlab::QuaternionA random_imaginary(Rng& r, Alpha al) {
  return aqlab::QuaternionA::imaginary(uniform(r), uniform(r), uniform(r), al);
}

// ---- quaternion product from the basis table ------------------------------

/// e_a e_b = sign * e_c in the basis (1, i, j, k), written out by hand.
struct TableEntry {
  int index;
  double coef;  // multiples of alpha are resolved at lookup
  bool times_alpha;
};

inline TableEntry table(int a, int b) {
  static const TableEntry t[4][4] = {
      {{0, 1, false}, {1, 1, false}, {2, 1, false}, {3, 1, false}},
      {{1, 1, false}, {0, 1, true}, {3, 1, false}, {2, 1, true}},
      {{2, 1, false}, {3, -1, false}, {0, 1, true}, {1, -1, true}},
      {{3, 1, false}, {2, -1, true}, {1, 1, true}, {0, -1, false}},
  };
  return t[a][b];
}

/// Matrix of left multiplication by p on (a, b, c, d) coordinates.
inline Eigen::Matrix4d left_mult_matrix(const aqlab::QuaternionA& p) {
  const auto pc = p.coeffs();
  const double al = aqlab::value(p.alpha());
  Eigen::Matrix4d L = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const TableEntry e = table(a, b);
      L(e.index, b) += pc[a] * e.coef * (e.times_alpha ? al : 1.0);
    }
  return L;
}

inline Eigen::Vector4d coeffs(const aqlab::QuaternionA& q) {
  const auto c = q.coeffs();
  return {c[0], c[1], c[2], c[3]};
}

// ---- rank oracle ------------------------------------------------------------

inline int svd_rank(const Mat& A, double rel = 1e-8) {
  Eigen::JacobiSVD<Mat> svd(A);
  const Vec s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

// ---- AQ pairs ----------------------------------------------------------------

inline Mat kron_identity(const Mat& A, int k) {
  Mat out = Mat::Zero(A.rows() * k, A.cols() * k);
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) out.block(i * k, j * k, k, k) = A(i, j) * Mat::Identity(k, k);
  return out;
}

/// Standard anticommuting pair on R^m: split (alpha=+1, m even) or quaternionic (alpha=-1, 4 | m).
inline std::pair<Mat, Mat> standard_pair(Alpha al, int m) {
  if (al == Alpha::plus) {
    Mat I0(2, 2), J0(2, 2);
    I0 << 1, 0, 0, -1;
    J0 << 0, 1, 1, 0;
    const int k = m / 2;
    return {kron_identity(I0, k), kron_identity(J0, k)};
  }
  Mat I0(4, 4), J0(4, 4);
  I0 << 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0;
  J0 << 0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0;
  const int k = m / 4;
  return {kron_identity(I0, k), kron_identity(J0, k)};
}

/// Orthogonal times mildly scaled orthogonal; condition number at most e^0.6.
inline Mat well_conditioned(Rng& r, int m) {
  Mat A(m, m), B(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A(i, j) = uniform(r), B(i, j) = uniform(r);
  const Mat U = Eigen::HouseholderQR<Mat>(A).householderQ();
  const Mat V = Eigen::HouseholderQR<Mat>(B).householderQ();
  Vec d(m);
  for (int i = 0; i < m; ++i) d(i) = std::exp(uniform(r, -0.3, 0.3));
  return U * d.asDiagonal() * V;
}

inline std::pair<Mat, Mat> random_pair(Rng& r, Alpha al, int m) {
  auto [I, J] = standard_pair(al, m);
  const Mat Q = well_conditioned(r, m), Qi = Q.inverse();
  return {Q * I * Qi, Q * J * Qi};
}

// ---- Lie models -------------------------------------------------------------

inline aqlab::LieAlgebraModel heisenberg() {
  aqlab::StructureConstants c(3);
  c.set(0, 1, 2, 1);
  return {c, "heisenberg"};
}

inline aqlab::LieAlgebraModel plus_abelian(const aqlab::LieAlgebraModel& A, int k) {
  return aqlab::catalog::direct_sum(A, aqlab::catalog::abelian(k));
}

/// Lie algebras of dimension divisible by 4 (usable for both alpha) or only even.
inline std::vector<aqlab::LieAlgebraModel> lie_pool(Alpha al) {
  using namespace aqlab::catalog;
  std::vector<aqlab::LieAlgebraModel> v = {
      plus_abelian(su2(), 1), plus_abelian(sl2r(), 1), plus_abelian(heisenberg(), 1),
      plus_abelian(direct_sum(su2(), su2()), 2), plus_abelian(so4(), 2), plus_abelian(direct_sum(sl2r(), su2()), 2)};
  if (al == Alpha::plus) {
    v.push_back(direct_sum(su2(), su2()));
    v.push_back(so4());
    v.push_back(direct_sum(sl2r(), heisenberg()));
  }
  return v;
}

/// Random model: a catalog Lie algebra in a random basis with a conjugated standard pair.
inline aqlab::PiAQModel random_lie_model(Rng& r, Alpha al) {
  const auto pool = lie_pool(al);
  const auto& A = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(r)];
  const int m = A.dim();
  const aqlab::LieAlgebraModel B = A.change_basis(well_conditioned(r, m));
  auto [I, J] = random_pair(r, al, m);
  return {B.constants(), I, J, al, A.name()};
}

/// Antisymmetric bracket with random constants; almost never Lie.
inline aqlab::StructureConstants random_bracket(Rng& r, int m) {
  aqlab::StructureConstants c(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k) c.set(i, j, k, uniform(r));
  return c;
}

}  // namespace support
