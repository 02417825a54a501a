#pragma once

/**
 * @file liealg.hpp
 * @brief Structure-constant algebras, Killing forms and the doubled model m (+) m.
 *
 * Convention: [e_i, e_j] = sum_k C(i,j,k) e_k. The matrix of ad e_i has
 * entries ad_i(k, j) = C(i,j,k), i.e. columns are images of basis vectors.
 */

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "aqlab/error.hpp"

namespace aqlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

namespace detail {
inline double inf(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
}  // namespace detail

/// Antisymmetric bilinear product on R^n given by structure constants.
/// Jacobi is not assumed here; see LieAlgebraModel.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int dim() const noexcept { return n_; }

  double operator()(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  double& at(int i, int j, int k) { return c_[idx(i, j, k)]; }

  /// Sets C(i,j,k) = v and C(j,i,k) = -v.
  void set(int i, int j, int k, double v) {
    at(i, j, k) = v;
    at(j, i, k) = -v;
  }

  double max_abs() const {
    double m = 0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec r = Vec::Zero(n_);
    for (int i = 0; i < n_; ++i) {
      if (x(i) == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const double xy = x(i) * y(j);
        if (xy == 0) continue;
        const double* row = &c_[idx(i, j, 0)];
        for (int k = 0; k < n_; ++k) r(k) += xy * row[k];
      }
    }
    return r;
  }

  /// Matrix of Y -> [e_i, Y].
  Mat ad_basis(int i) const {
    Mat a(n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) a(k, j) = (*this)(i, j, k);
    return a;
  }

  Mat ad(const Vec& x) const {
    Mat a = Mat::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
      if (x(i) != 0) a += x(i) * ad_basis(i);
    return a;
  }

  double antisymmetry_defect() const {
    double d = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) d = std::max(d, std::abs((*this)(i, j, k) + (*this)(j, i, k)));
    return d;
  }

  /// max over basis triples of |[[a,b],c] + [[b,c],a] + [[c,a],b]|
  double jacobi_defect() const {
    double d = 0;
    const Mat E = Mat::Identity(n_, n_);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        for (int c = b + 1; c < n_; ++c) {
          const Vec s = bracket(bracket(E.col(a), E.col(b)), E.col(c)) + bracket(bracket(E.col(b), E.col(c)), E.col(a)) +
                        bracket(bracket(E.col(c), E.col(a)), E.col(b));
          d = std::max(d, s.cwiseAbs().maxCoeff());
        }
    return d;
  }

  /// Constants in the basis f_i = sum_a P(a,i) e_a.
  StructureConstants change_basis(const Mat& P) const {
    const Mat Pi = P.inverse();
    StructureConstants out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const Vec b = Pi * bracket(P.col(i), P.col(j));
        for (int k = 0; k < n_; ++k) out.at(i, j, k) = b(k);
      }
    return out;
  }

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  std::vector<double> c_;
};

/// Block-diagonal sum: brackets between different summands vanish.
inline StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
  const int n = a.dim() + b.dim();
  StructureConstants out(n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) out.at(i, j, k) = a(i, j, k);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k) out.at(a.dim() + i, a.dim() + j, a.dim() + k) = b(i, j, k);
  return out;
}


inline constexpr double jacobi_tol = 1e-10;

/// Lie algebra: antisymmetric constants satisfying Jacobi (checked on construction).
class LieAlgebraModel {
 public:
  LieAlgebraModel() = default;
  LieAlgebraModel(StructureConstants c, std::string name) : c_(std::move(c)), name_(std::move(name)) {
    const double scale = std::max(1.0, c_.max_abs());
    if (c_.antisymmetry_defect() > jacobi_tol * scale) throw error(errc::invalid_algebra, name_ + ": constants not antisymmetric");
    const double jd = c_.jacobi_defect();
    if (jd > jacobi_tol * scale * scale) {
      std::ostringstream os;
      os << name_ << ": Jacobi identity fails (defect " << jd << ")";
      throw error(errc::invalid_algebra, os.str());
    }
  }

  int dim() const noexcept { return c_.dim(); }
  const std::string& name() const noexcept { return name_; }
  const StructureConstants& constants() const noexcept { return c_; }

  Vec bracket(const Vec& x, const Vec& y) const { return c_.bracket(x, y); }
  Mat ad(const Vec& x) const { return c_.ad(x); }

  LieAlgebraModel change_basis(const Mat& P) const { return {c_.change_basis(P), name_}; }

 private:
  StructureConstants c_;
  std::string name_;
};

/// K(X,Y) = -tr(ad X ad Y)
inline Mat killing_form(const LieAlgebraModel& A) {
  const int n = A.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(A.constants().ad_basis(i));
  Mat K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) K(i, j) = K(j, i) = -(ads[i] * ads[j]).trace();
  return K;
}

/// Counts of (positive, negative, zero) eigenvalues of a symmetric matrix.
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};

inline Inertia inertia(const Mat& S, double rel_tol = 1e-10) {
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  const Vec ev = es.eigenvalues();
  const double scale = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  Inertia r;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= rel_tol * std::max(scale, 1.0)) ++r.zero;
    else if (ev(i) > 0) ++r.pos;
    else ++r.neg;
  }
  return r;
}

inline bool is_semisimple(const LieAlgebraModel& A, double rel_tol = 1e-10) {
  return A.dim() > 0 && inertia(killing_form(A), rel_tol).zero == 0;
}

/// g^{ij} [[X, e_i], e_j] with the Killing metric; equals -X.
inline Vec lemma2_check(const LieAlgebraModel& A, const Vec& X) {
  if (!is_semisimple(A)) throw error(errc::not_semisimple, A.name() + ": Killing form is degenerate");
  const int n = A.dim();
  const Mat Ki = killing_form(A).inverse();
  const Mat E = Mat::Identity(n, n);
  Vec s = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    const Vec xi = A.bracket(X, E.col(i));
    for (int j = 0; j < n; ++j)
      if (Ki(i, j) != 0) s += Ki(i, j) * A.bracket(xi, E.col(j));
  }
  return s;
}

/// Basis change P (columns = new vectors) and signs eps with P^T S P = diag(eps).
struct PseudoOrthonormal {
  Mat P;
  Vec eps;
};

inline PseudoOrthonormal pseudo_orthonormalize(const Mat& S) {
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  const Vec ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  PseudoOrthonormal r{es.eigenvectors(), Vec(ev.size())};
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= 1e-10 * scale) throw error(errc::degenerate_inner, "metric has a zero eigenvalue");
    r.P.col(i) /= std::sqrt(std::abs(ev(i)));
    r.eps(i) = ev(i) > 0 ? 1.0 : -1.0;
  }
  return r;
}

/// ad-invariance defect of a symmetric form: max |S([Z,X],Y) + S(X,[Z,Y])|.
inline double ad_invariance_defect(const LieAlgebraModel& A, const Mat& S) {
  double d = 0;
  const int n = A.dim();
  for (int z = 0; z < n; ++z) {
    const Mat adz = A.constants().ad_basis(z);
    d = std::max(d, (adz.transpose() * S + S * adz).cwiseAbs().maxCoeff());
  }
  return d;
}

// ---- catalog --------------------------------------------------------------

namespace catalog {

/// [e_i, e_j] = eps_ijk e_k
inline LieAlgebraModel su2() {
  StructureConstants c(3);
  c.set(0, 1, 2, 1);
  c.set(1, 2, 0, 1);
  c.set(2, 0, 1, 1);
  return {c, "su2"};
}

/// Basis H, E, F with [H,E] = 2E, [H,F] = -2F, [E,F] = H.
inline LieAlgebraModel sl2r() {
  StructureConstants c(3);
  c.set(0, 1, 1, 2);
  c.set(0, 2, 2, -2);
  c.set(1, 2, 0, 1);
  return {c, "sl2r"};
}

/// Rotation generators E_ab = e_a e_b^T - e_b e_a^T, a < b, ordered 12,13,14,23,24,34.
inline LieAlgebraModel so4() {
  std::vector<Eigen::Matrix4d> gens;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
      m(a, b) = 1;
      m(b, a) = -1;
      gens.push_back(m);
    }
  StructureConstants c(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const Eigen::Matrix4d br = gens[i] * gens[j] - gens[j] * gens[i];
      // generators are orthogonal under the Frobenius product with norm^2 = 2
      for (int k = 0; k < 6; ++k) c.at(i, j, k) = 0.5 * (br.cwiseProduct(gens[k])).sum();
    }
  return {c, "so4"};
}

inline LieAlgebraModel abelian(int n) { return {StructureConstants(n), "abelian" + std::to_string(n)}; }

inline LieAlgebraModel direct_sum(const LieAlgebraModel& a, const LieAlgebraModel& b) {
  return {aqlab::direct_sum(a.constants(), b.constants()), a.name() + "+" + b.name()};
}

inline LieAlgebraModel by_name(const std::string& name) {
  if (name == "su2") return su2();
  if (name == "sl2r") return sl2r();
  if (name == "so4") return so4();
  throw error(errc::bad_input, "unknown catalog algebra '" + name + "' (expected su2, sl2r or so4)");
}

}  // namespace catalog

// ---- doubled model --------------------------------------------------------

/**
 * m (+) m with componentwise bracket and I(X,Y) = (X,-Y), J(X,Y) = (Y,X),
 * K = IJ, so K(X,Y) = (Y,-X). alpha = +1.
 */
class DoubledModel {
 public:
  DoubledModel(LieAlgebraModel base, Mat inner) : base_(std::move(base)), inner_(std::move(inner)) {
    const int n = base_.dim();
    if (inner_.rows() != n || inner_.cols() != n) throw error(errc::degenerate_inner, "inner product has wrong size");
    if ((inner_ - inner_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, inner_.cwiseAbs().maxCoeff()))
      throw error(errc::degenerate_inner, "inner product is not symmetric");
    if (inertia(inner_).zero != 0) throw error(errc::degenerate_inner, "inner product is degenerate");
    doubled_ = LieAlgebraModel(aqlab::direct_sum(base_.constants(), base_.constants()), base_.name() + "^2");
    const Mat Z = Mat::Zero(n, n), Id = Mat::Identity(n, n);
    I_.resize(2 * n, 2 * n);
    J_.resize(2 * n, 2 * n);
    I_ << Id, Z, Z, -Id;
    J_ << Z, Id, Id, Z;
    K_ = I_ * J_;
  }

  /// Killing base metric, in a Killing-pseudo-orthonormal basis of the base algebra.
  static DoubledModel killing(const LieAlgebraModel& base) {
    if (!is_semisimple(base)) throw error(errc::not_semisimple, base.name() + ": Killing form is degenerate");
    const PseudoOrthonormal po = pseudo_orthonormalize(killing_form(base));
    LieAlgebraModel nb = base.change_basis(po.P);
    return {nb, Mat(po.eps.asDiagonal())};
  }

  int n() const noexcept { return base_.dim(); }
  int dim() const noexcept { return 2 * base_.dim(); }
  const LieAlgebraModel& base() const noexcept { return base_; }
  const Mat& inner() const noexcept { return inner_; }
  const LieAlgebraModel& algebra() const noexcept { return doubled_; }

  const Mat& I() const noexcept { return I_; }
  const Mat& J() const noexcept { return J_; }
  const Mat& K() const noexcept { return K_; }

  Vec bracket2(const Vec& x, const Vec& y) const { return doubled_.bracket(x, y); }

  /// blockdiag(inner, inner)
  Mat product_metric() const {
    const int n = base_.dim();
    Mat G = Mat::Zero(2 * n, 2 * n);
    G.topLeftCorner(n, n) = inner_;
    G.bottomRightCorner(n, n) = inner_;
    return G;
  }

  /// (X,Y) + (IX,IY) + (JX,JY) + (KX,KY) evaluated on the product metric.
  Mat four_term_metric() const {
    const Mat G = product_metric();
    return G + I_.transpose() * G * I_ + J_.transpose() * G * J_ + K_.transpose() * G * K_;
  }

  Vec embed1(const Vec& x) const {
    Vec v = Vec::Zero(dim());
    v.head(n()) = x;
    return v;
  }
  Vec embed2(const Vec& y) const {
    Vec v = Vec::Zero(dim());
    v.tail(n()) = y;
    return v;
  }

 private:
  LieAlgebraModel base_;
  Mat inner_;
  LieAlgebraModel doubled_;
  Mat I_, J_, K_;
};

inline DoubledModel doubled(const LieAlgebraModel& A, const Mat& inner) { return {A, inner}; }

}  // namespace aqlab
