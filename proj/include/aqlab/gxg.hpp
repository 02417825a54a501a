#pragma once

/**
 * @file gxg.hpp
 * @brief The metrics <X,Y> = g(X,Y) + lambda g(X,IY) + mu g(X,JY) on m (+) m.
 *
 * g is the product of the base metric with itself. The literal four-term sum
 * (X,Y) + (IX,IY) + (JX,JY) + (KX,KY) equals 4g; four_term_metric() exposes it
 * for the compatibility identities, while the family uses g itself so that the
 * bi-invariant point has Ricci operator 1/4 id.
 *
 * Throughout d = 1 - lambda^2 - mu^2, a = (mu^2+mu)/(2d), b = lambda mu/(2d).
 * The base metric must be ad-invariant (e.g. Killing) for the closed forms.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "aqlab/liealg.hpp"

namespace aqlab {

inline constexpr double degenerate_tol = 1e-9;

/// Ricci closed-form coefficients.
struct RicciCoefficients {
  double A, B, C, D;
};

inline RicciCoefficients ricci_coefficients(double l, double m) {
  const double d = 1 - l * l - m * m;
  return {
      -(1 - l) / 4 + m * m * (m - l + 1) / (4 * d),
      -(1 + l) / 4 + m * m * (m + l + 1) / (4 * d),
      m * (-2 * m * m - l * l + 3 * l * m - 3 * m + 2 * l - 1) / (4 * d),
      -m * (2 * m * m + l * l + 3 * l * m + 3 * m + 2 * l + 1) / (4 * d),
  };
}

enum class Tensor { I, J, K, CalJ };

struct HermitianStructure {
  Mat calJ;
  int sign = 1;
  bool elliptic = true;  ///< calJ^2 = -id; otherwise +id
};

struct HermitianClasses {
  bool nearly_kahler = false, quasi_kahler = false, g1 = false;
  double nk_defect = 0, qk_defect = 0, g1_defect = 0;
};

class MetricFamily {
 public:
  MetricFamily(DoubledModel model, double lambda, double mu) : model_(std::move(model)), l_(lambda), m_(mu) {
    d_ = 1 - l_ * l_ - m_ * m_;
    if (std::abs(d_) <= degenerate_tol) throw error(errc::degenerate_metric, "lambda^2 + mu^2 = 1");
    a_ = (m_ * m_ + m_) / (2 * d_);
    b_ = l_ * m_ / (2 * d_);
    const Mat g = model_.product_metric();
    G_ = g + l_ * g * model_.I() + m_ * g * model_.J();
    Gi_ = G_.inverse();
  }

  const DoubledModel& model() const noexcept { return model_; }
  double lambda() const noexcept { return l_; }
  double mu() const noexcept { return m_; }
  double d() const noexcept { return d_; }
  int dim() const noexcept { return model_.dim(); }

  /// Matrix of <.,.> in the product basis.
  const Mat& metric() const noexcept { return G_; }
  const Mat& metric_inverse() const noexcept { return Gi_; }

  /// Block formula for the inverse: (1/d) [[(1-l) h^-1, -m h^-1], [-m h^-1, (1+l) h^-1]].
  Mat metric_inverse_closed() const {
    const int n = model_.n();
    const Mat hi = model_.inner().inverse();
    Mat r(2 * n, 2 * n);
    r << (1 - l_) * hi, -m_ * hi, -m_ * hi, (1 + l_) * hi;
    return r / d_;
  }

  double sheaf_metric(const Vec& X, const Vec& Y) const { return X.dot(G_ * Y); }

  Vec bracket(const Vec& x, const Vec& y) const { return model_.bracket2(x, y); }

  HermitianStructure hermitian_structure(int sign = 1) const {
    const Mat J = (m_ * model_.I() - l_ * model_.J() + model_.K()) / std::sqrt(std::abs(d_));
    return {sign * J, sign, d_ > 0};
  }

  /// nabla_X Y = 1/2[X,Y] + a([X,JY] - [JX,Y]) + b([KX,Y] - [X,KY])
  Vec levi_civita(const Vec& X, const Vec& Y) const {
    const Mat &J = model_.J(), &K = model_.K();
    return 0.5 * bracket(X, Y) + a_ * (bracket(X, J * Y) - bracket(J * X, Y)) + b_ * (bracket(K * X, Y) - bracket(X, K * Y));
  }

  /// Solves 2<nabla_X Y, Z> = <[X,Y],Z> + <[Z,X],Y> - <[Y,Z],X> for every basis Z.
  Vec levi_civita_koszul(const Vec& X, const Vec& Y) const {
    const int N = dim();
    const Mat E = Mat::Identity(N, N);
    Vec rhs(N);
    for (int z = 0; z < N; ++z) {
      const Vec Z = E.col(z);
      rhs(z) = sheaf_metric(bracket(X, Y), Z) + sheaf_metric(bracket(Z, X), Y) - sheaf_metric(bracket(Y, Z), X);
    }
    return 0.5 * (Gi_ * rhs);
  }

  /// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
  Vec curvature_compositional(const Vec& X, const Vec& Y, const Vec& Z) const {
    return levi_civita(X, levi_civita(Y, Z)) - levi_civita(Y, levi_civita(X, Z)) - levi_civita(bracket(X, Y), Z);
  }

  /// Expanded nested-bracket form of the curvature.
  Vec curvature(const Vec& X, const Vec& Y, const Vec& Z) const {
    const Mat &I = model_.I(), &J = model_.J();
    const double a = a_, b = b_;
    const double c1 = (2 * a * a - a - 2 * b * b) / 2, c2 = a * a + b * b;
    auto B = [&](const Vec& u, const Vec& v) { return bracket(u, v); };
    // {T(X,Y)} = T(X,Y) - T(Y,X)
    auto alt = [&](auto&& T) -> Vec { return T(X, Y) - T(Y, X); };
    const Vec JZ = J * Z;

    Vec r = -0.5 * B(B(X, Y), Z) - a * B(B(X, Y), JZ) + a * B(B(J * X, J * Y), Z);
    r += 0.25 * alt([&](const Vec& x, const Vec& y) { return B(B(x, Z), y); });
    r -= a / 2 * alt([&](const Vec& x, const Vec& y) { return B(B(x, Z), J * y); });
    r -= c1 * alt([&](const Vec& x, const Vec& y) { return B(B(x, JZ), y); });
    r -= c2 * alt([&](const Vec& x, const Vec& y) { return B(B(x, JZ), J * y); });
    r += c1 * alt([&](const Vec& x, const Vec& y) { return B(B(J * x, Z), y); });
    r += c2 * alt([&](const Vec& x, const Vec& y) { return B(B(J * x, Z), J * y); });
    r += a / 2 * alt([&](const Vec& x, const Vec& y) { return B(B(J * x, JZ), y); });

    Vec s = b * B(B(X, Y), JZ) - b * B(B(J * X, J * Y), Z);
    s += b / 2 * alt([&](const Vec& x, const Vec& y) { return B(B(x, Z), J * y); });
    s -= b / 2 * alt([&](const Vec& x, const Vec& y) { return B(B(x, JZ), y); });
    s += 2 * a * b * alt([&](const Vec& x, const Vec& y) { return B(B(x, JZ), J * y); });
    s += b / 2 * alt([&](const Vec& x, const Vec& y) { return B(B(J * x, Z), y); });
    s -= 2 * a * b * alt([&](const Vec& x, const Vec& y) { return B(B(J * x, Z), J * y); });
    s -= b / 2 * alt([&](const Vec& x, const Vec& y) { return B(B(J * x, JZ), y); });
    return r + I * s;
  }

  /// r(X) = g^{ij} R(X, e_i) e_j
  Vec ricci_trace(const Vec& X) const {
    const int N = dim();
    const Mat E = Mat::Identity(N, N);
    Vec r = Vec::Zero(N);
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        if (Gi_(i, j) == 0) continue;
        r += Gi_(i, j) * curvature(X, E.col(i), E.col(j));
      }
    }
    return r;
  }

  /// True when the base metric is the Killing form of the base algebra.
  bool has_killing_base(double tol = 1e-9) const {
    const Mat K = killing_form(model_.base());
    return (K - model_.inner()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, K.cwiseAbs().maxCoeff());
  }

  RicciCoefficients coefficients() const { return ricci_coefficients(l_, m_); }

  /// r(X1,X2) = -(1/d)(A X1 + C X2, B X2 + D X1); Killing base only.
  Vec ricci_closed(const Vec& X) const {
    require_killing();
    const int n = model_.n();
    const auto [A, B, C, D] = coefficients();
    Vec r(2 * n);
    r.head(n) = A * X.head(n) + C * X.tail(n);
    r.tail(n) = B * X.tail(n) + D * X.head(n);
    return -r / d_;
  }

  /// Ricci operator as a matrix (columns are images of basis vectors).
  Mat ricci_matrix(bool closed_form) const {
    const int N = dim();
    const Mat E = Mat::Identity(N, N);
    Mat R(N, N);
    for (int i = 0; i < N; ++i) R.col(i) = closed_form ? ricci_closed(E.col(i)) : ricci_trace(E.col(i));
    return R;
  }

  /// Definitional covariant derivative nabla_X(T)Y = nabla_X(TY) - T nabla_X Y.
  Vec nabla_tensor_oracle(const Mat& T, const Vec& X, const Vec& Y) const {
    return levi_civita(X, T * Y) - T * levi_civita(X, Y);
  }

  /// Closed-form covariant derivatives of I, J, K and calJ.
  Vec nabla_tensor(Tensor t, const Vec& X, const Vec& Y) const {
    const Mat &I = model_.I(), &J = model_.J(), &K = model_.K();
    auto B = [&](const Vec& u, const Vec& v) { return bracket(u, v); };
    const double p = a_, q = b_;
    switch (t) {
      case Tensor::I:
        return -2 * p * B(X, K * Y) + 2 * q * B(X, J * Y);
      case Tensor::J: {
        const Vec xy = B(X, Y);
        return 0.5 * (B(X, J * Y) - J * xy) + p * (xy - J * xy - B(J * X, Y) + B(X, J * Y)) +
               q * (-(I * xy) + K * xy - B(K * X, Y) + B(X, K * Y));
      }
      case Tensor::K: {
        const Vec xy = B(X, Y);
        return 0.5 * (B(X, K * Y) - K * xy) + p * (-(I * xy) - K * xy - B(K * X, Y) + B(X, K * Y)) +
               q * (xy + J * xy - B(J * X, Y) + B(X, J * Y));
      }
      case Tensor::CalJ:
        return (m_ * nabla_tensor(Tensor::I, X, Y) - l_ * nabla_tensor(Tensor::J, X, Y) + nabla_tensor(Tensor::K, X, Y)) /
               std::sqrt(std::abs(d_));
    }
    return {};
  }

  Mat tensor_matrix(Tensor t) const {
    switch (t) {
      case Tensor::I: return model_.I();
      case Tensor::J: return model_.J();
      case Tensor::K: return model_.K();
      case Tensor::CalJ: return hermitian_structure().calJ;
    }
    return {};
  }

  /// Unit probe vectors (e_a, +-e_{a+1 mod n})/sqrt 2 mixing the two factors.
  /// On product-basis vectors nabla_X(calJ)X vanishes for every (lambda, mu).
  std::vector<Vec> probe_frame() const {
    const int n = model_.n();
    std::vector<Vec> out;
    for (int a = 0; a < n; ++a)
      for (int s : {1, -1}) {
        Vec v = Vec::Zero(2 * n);
        v(a) = 1;
        v(n + (a + 1) % n) = s;
        out.push_back(v / std::sqrt(2.0));
      }
    return out;
  }

  /// max over the probe frame of |nabla_X(calJ)X|.
  double nearly_kahler_probe() const {
    double m = 0;
    for (const Vec& X : probe_frame()) m = std::max(m, nabla_tensor(Tensor::CalJ, X, X).norm());
    return m;
  }

  HermitianClasses hermitian_class_checks(double tol = 1e-10) const {
    if (d_ <= 0) throw error(errc::not_elliptic, "hermitian classes need lambda^2 + mu^2 < 1");
    const int N = dim();
    const Mat E = Mat::Identity(N, N);
    const Mat cJ = hermitian_structure().calJ;
    auto nJ = [&](const Vec& x, const Vec& y) { return nabla_tensor(Tensor::CalJ, x, y); };
    auto comp = [&](const Vec& x, const Vec& y) { return Vec(nJ(x, cJ * y) + nJ(cJ * x, y)); };
    HermitianClasses h;
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j) {
        const Vec X = E.col(i), Y = E.col(j);
        h.nk_defect = std::max(h.nk_defect, detail::inf(nJ(X, Y) + nJ(Y, X)));
        h.qk_defect = std::max({h.qk_defect, detail::inf(nJ(cJ * X, cJ * Y) + nJ(X, Y)),
                                detail::inf(nJ(cJ * Y, cJ * X) + nJ(Y, X))});
        h.g1_defect = std::max(h.g1_defect, detail::inf(comp(X, Y) + comp(Y, X)));
      }
    h.nearly_kahler = h.nk_defect <= tol;
    h.quasi_kahler = h.qk_defect <= tol;
    h.g1 = h.g1_defect <= tol;
    return h;
  }

 private:
  void require_killing() const {
    if (!is_semisimple(model_.base())) throw error(errc::not_semisimple, "closed-form Ricci needs a semisimple base");
    if (!has_killing_base()) throw error(errc::not_semisimple, "closed-form Ricci needs the Killing base metric");
  }

  DoubledModel model_;
  double l_, m_, d_, a_, b_;
  Mat G_, Gi_;
};

// ---- Einstein classification ----------------------------------------------

/// Deviation of the Ricci operator from a multiple of the identity, relative to its size.
struct EinsteinMeasure {
  double off = 0;    ///< max(|C|, |D|, |A - B|)/|d|
  double norm = 0;   ///< max(|A|, |B|, |C|, |D|)/|d|
  double eps = 0;    ///< -A/d
  double relative() const { return norm > 0 ? off / norm : off; }
};

inline EinsteinMeasure einstein_measure(double l, double m) {
  const double d = 1 - l * l - m * m;
  const auto [A, B, C, D] = ricci_coefficients(l, m);
  const double ad = std::abs(d);
  return {std::max({std::abs(C), std::abs(D), std::abs(A - B)}) / ad,
          std::max({std::abs(A), std::abs(B), std::abs(C), std::abs(D)}) / ad, -A / d};
}

inline constexpr double einstein_rel_tol = 1e-8;

/// epsilon with r = epsilon id, or nothing.
inline std::optional<double> einstein_check(const MetricFamily& F, bool closed_form = true, double rel_tol = einstein_rel_tol) {
  const Mat R = F.ricci_matrix(closed_form);
  const int N = F.dim();
  const double eps = R.trace() / N;
  const double dev = (R - eps * Mat::Identity(N, N)).cwiseAbs().maxCoeff();
  const double nrm = R.cwiseAbs().maxCoeff();
  if (dev <= rel_tol * std::max(nrm, 1e-300)) return eps;
  return std::nullopt;
}

struct EinsteinPoint {
  double lambda, mu, eps;
};

namespace detail {

/// Real roots of p2 x^2 + p1 x + p0.
inline std::vector<double> quadratic_roots(double p2, double p1, double p0) {
  if (std::abs(p2) < 1e-300) {
    if (std::abs(p1) < 1e-300) return {};
    return {-p0 / p1};
  }
  const double disc = p1 * p1 - 4 * p2 * p0;
  if (disc < 0) return {};
  const double s = std::sqrt(disc);
  // numerically stable pair
  const double q = -0.5 * (p1 + (p1 >= 0 ? s : -s));
  std::vector<double> r;
  if (q != 0) r.push_back(q / p2), r.push_back(p0 / q);
  else r.push_back(0.0);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end(), [](double x, double y) { return std::abs(x - y) < 1e-14; }), r.end());
  return r;
}

}  // namespace detail

/**
 * All (lambda, mu) off the degenerate circle where the Killing-base family is Einstein.
 *
 * C - D = lambda mu (3 mu + 2)/(2d), so one of lambda, mu, 3mu+2 vanishes:
 *   mu = 0:      C = D = 0 and A - B = lambda/2, so lambda = 0;
 *   lambda = 0:  C = -mu(2mu^2 + 3mu + 1)/(4d), so mu in {-1/2, -1}, and -1 is degenerate;
 *   mu = -2/3:   C numerator is the quadratic -lambda^2 + (3mu+2)lambda - (2mu^2+3mu+1) in lambda.
 * Every candidate is then confirmed with the numeric coefficients.
 */
inline std::vector<EinsteinPoint> classify_einstein_closed() {
  std::vector<std::pair<double, double>> cand;
  for (double l : detail::quadratic_roots(0, 0.5, 0)) cand.emplace_back(l, 0.0);
  for (double m : detail::quadratic_roots(-2, -3, -1)) cand.emplace_back(0.0, m);
  const double m3 = -2.0 / 3.0;
  for (double l : detail::quadratic_roots(-1, 3 * m3 + 2, -(2 * m3 * m3 + 3 * m3 + 1))) cand.emplace_back(l, m3);

  std::vector<EinsteinPoint> out;
  for (auto [l, m] : cand) {
    if (std::abs(1 - l * l - m * m) <= degenerate_tol) continue;
    const EinsteinMeasure em = einstein_measure(l, m);
    if (em.relative() > einstein_rel_tol) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const EinsteinPoint& p) {
      return std::abs(p.lambda - l) < 1e-12 && std::abs(p.mu - m) < 1e-12;
    });
    if (!dup) out.push_back({l == 0 ? 0.0 : l, m == 0 ? 0.0 : m, em.eps});
  }
  std::sort(out.begin(), out.end(), [](const EinsteinPoint& a, const EinsteinPoint& b) {
    return a.mu != b.mu ? a.mu > b.mu : a.lambda > b.lambda;
  });
  return out;
}

/// Classification for a concrete model: closed-form candidates, each confirmed
/// by the trace-path Ricci of that model.
inline std::vector<EinsteinPoint> classify_einstein(const DoubledModel& model) {
  if (!is_semisimple(model.base())) throw error(errc::not_semisimple, model.base().name() + ": Killing form is degenerate");
  std::vector<EinsteinPoint> out;
  for (const EinsteinPoint& p : classify_einstein_closed()) {
    const MetricFamily F(model, p.lambda, p.mu);
    const auto eps = einstein_check(F, false);
    if (eps && std::abs(*eps - p.eps) <= 1e-9 * std::max(1.0, std::abs(p.eps))) out.push_back(p);
  }
  return out;
}

struct SweepResult {
  double resolution = 0;
  std::size_t points = 0;
  std::vector<EinsteinPoint> einstein;   ///< grid hits plus refined minima
  double min_offgrid_measure = 0;        ///< smallest relative measure at grid points that are not Einstein
};

/**
 * Grid sweep of the open disc with the closed-form coefficients.
 * Grid points are Einstein when the relative off-diagonal measure is below
 * einstein_rel_tol. Every local minimum is refined by Gauss-Newton on
 * (C, D, A - B) to catch Einstein points between grid nodes.
 */
inline SweepResult einstein_sweep(double res) {
  if (!(res > 0) || res > 0.5) throw error(errc::bad_input, "sweep resolution must lie in (0, 0.5]");
  SweepResult out;
  out.resolution = res;
  out.min_offgrid_measure = std::numeric_limits<double>::infinity();
  const int K = static_cast<int>(std::floor(1.0 / res));
  auto inside = [](double l, double m) { return 1 - l * l - m * m > degenerate_tol; };
  auto measure = [&](int i, int j) {
    const double l = i * res, m = j * res;
    return inside(l, m) ? einstein_measure(l, m).relative() : std::numeric_limits<double>::infinity();
  };
  auto add = [&](double l, double m) {
    for (const auto& p : out.einstein)
      if (std::abs(p.lambda - l) < 1e-7 && std::abs(p.mu - m) < 1e-7) return;
    out.einstein.push_back({l, m, einstein_measure(l, m).eps});
  };
  auto refine = [&](double l, double m) -> std::optional<std::pair<double, double>> {
    auto resid = [](double x, double y) {
      const auto [A, B, C, D] = ricci_coefficients(x, y);
      return Eigen::Vector3d(C, D, A - B);
    };
    for (int it = 0; it < 60; ++it) {
      const Eigen::Vector3d r = resid(l, m);
      if (r.cwiseAbs().maxCoeff() < 1e-15) break;
      const double h = 1e-7;
      Eigen::Matrix<double, 3, 2> Jm;
      Jm.col(0) = (resid(l + h, m) - resid(l - h, m)) / (2 * h);
      Jm.col(1) = (resid(l, m + h) - resid(l, m - h)) / (2 * h);
      const Eigen::Vector2d step = Jm.colPivHouseholderQr().solve(-r);
      l += step(0);
      m += step(1);
      if (!inside(l, m)) return std::nullopt;
    }
    if (einstein_measure(l, m).relative() <= einstein_rel_tol) return std::make_pair(l, m);
    return std::nullopt;
  };

  for (int i = -K; i <= K; ++i)
    for (int j = -K; j <= K; ++j) {
      const double v = measure(i, j);
      if (!std::isfinite(v)) continue;
      ++out.points;
      if (v <= einstein_rel_tol) {
        add(i * res, j * res);
        continue;
      }
      out.min_offgrid_measure = std::min(out.min_offgrid_measure, v);
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di)
        for (int dj = -1; dj <= 1; ++dj)
          if ((di || dj) && measure(i + di, j + dj) < v) local_min = false;
      if (local_min)
        if (auto r = refine(i * res, j * res)) add(r->first, r->second);
    }
  std::sort(out.einstein.begin(), out.einstein.end(), [](const EinsteinPoint& a, const EinsteinPoint& b) {
    return a.mu != b.mu ? a.mu > b.mu : a.lambda > b.lambda;
  });
  return out;
}

}  // namespace aqlab
