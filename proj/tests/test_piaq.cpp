#include <gtest/gtest.h>

#include "aqlab/piaq.hpp"
#include "support.hpp"

using aqlab::Alpha;
using aqlab::DoubledModel;
using aqlab::ExtVec;
using aqlab::Mat;
using aqlab::PiAQModel;
using aqlab::ScalarKA;
using aqlab::Twistor;
using aqlab::Vec;
namespace catalog = aqlab::catalog;

namespace {

constexpr Alpha both[] = {Alpha::minus, Alpha::plus};

double inf(const Vec& v) { return v.cwiseAbs().maxCoeff(); }

PiAQModel doubled_su2() { return PiAQModel::from_doubled(DoubledModel::killing(catalog::su2())); }

PiAQModel abelian_model(Alpha al, int m) {
  auto [I, J] = support::standard_pair(al, m);
  return {aqlab::StructureConstants(m), I, J, al, "abelian"};
}

/// A model with a non-Lie random bracket; used as a negative control.
PiAQModel scrambled(support::Rng& r, Alpha al, int m) {
  auto [I, J] = support::random_pair(r, al, m);
  return {support::random_bracket(r, m), I, J, al, "scrambled"};
}

/// Largest violation of nabla F = 0 (F = I, J) and S(IX,Y) = S(X,IY) on basis pairs.
double compatibility_defect(const PiAQModel& M) {
  const int m = M.dim();
  const Mat E = Mat::Identity(m, m);
  double d = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vec X = E.col(i), Y = E.col(j);
      const Vec n = M.connection(X, Y);
      d = std::max({d, inf(M.connection(X, M.I() * Y) - M.I() * n), inf(M.connection(X, M.J() * Y) - M.J() * n),
                    inf(M.torsion(M.I() * X, Y) - M.torsion(X, M.I() * Y))});
    }
  return d;
}

TEST(Piaq, ModelValidation) {
  auto [I, J] = support::standard_pair(Alpha::plus, 4);
  EXPECT_THROW(PiAQModel(aqlab::StructureConstants(4), I, I, Alpha::plus), aqlab::error);
  EXPECT_THROW(PiAQModel(aqlab::StructureConstants(4), I, J, Alpha::minus), aqlab::error);
  EXPECT_THROW(PiAQModel(aqlab::StructureConstants(3), Mat::Identity(3, 3), Mat::Identity(3, 3), Alpha::plus), aqlab::error);
  EXPECT_NO_THROW(PiAQModel(aqlab::StructureConstants(4), I, J, Alpha::plus));
}

TEST(Piaq, ConnectionIsCompatible) {
  support::Rng r(51);
  for (Alpha al : both) {
    for (const auto& A : support::lie_pool(al)) {
      auto [I, J] = support::standard_pair(al, A.dim());
      const PiAQModel M(A.constants(), I, J, al, A.name());
      EXPECT_LT(compatibility_defect(M), 1e-10) << A.name();
    }
    for (int t = 0; t < 10; ++t) EXPECT_LT(compatibility_defect(support::random_lie_model(r, al)), 1e-10);
    // the identities are algebraic, so they also hold for a non-Lie bracket
    EXPECT_LT(compatibility_defect(scrambled(r, al, 4)), 1e-10);
  }
}

TEST(Piaq, ProjectorFormAgrees) {
  support::Rng r(52);
  for (Alpha al : both)
    for (int t = 0; t < 20; ++t) {
      const PiAQModel M = support::random_lie_model(r, al);
      for (int s = 0; s < 5; ++s) {
        const Vec X = support::random_vec(r, M.dim()), Y = support::random_vec(r, M.dim());
        const ExtVec p = M.connection_projector(X, Y);
        const Vec c = M.connection(X, Y);
        EXPECT_LT(inf(p.re - c), 1e-11 * (1 + inf(c)));
        EXPECT_LT(inf(p.im), 1e-11 * (1 + inf(c)));
      }
    }
}

TEST(Piaq, ConnectionIsBilinear) {
  support::Rng r(53);
  const PiAQModel M = support::random_lie_model(r, Alpha::minus);
  const Vec X = support::random_vec(r, M.dim()), Y = support::random_vec(r, M.dim()), Z = support::random_vec(r, M.dim());
  EXPECT_LT(inf(M.connection(2 * X + Z, Y) - 2 * M.connection(X, Y) - M.connection(Z, Y)), 1e-12);
  EXPECT_LT(inf(M.connection(X, 3 * Y - Z) - 3 * M.connection(X, Y) + M.connection(X, Z)), 1e-12);
}

TEST(Piaq, AbelianModelIsFlat) {
  for (Alpha al : both) {
    const PiAQModel M = abelian_model(al, 4);
    const Mat E = Mat::Identity(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(M.connection(E.col(i), E.col(j)), Vec::Zero(4));
    EXPECT_TRUE(is_integrable(M));
    EXPECT_TRUE(is_semiholonomic(M));
    EXPECT_TRUE(aqlab::is_isoclinic_geodesic_const_mu(M, 0.3));
    for (Twistor t : {Twistor::I, Twistor::J, Twistor::K}) {
      const int c = aqlab::twistor_square(M.twistor(t));
      if (c == -1 && al == Alpha::plus) continue;
      const ScalarKA lam = c == 1 ? ScalarKA::real(1, al) : ScalarKA::unit_i(al);
      EXPECT_TRUE(fundamental_involutive(M, t, lam).holds);
    }
  }
  EXPECT_TRUE(is_three_web(abelian_model(Alpha::plus, 2)));
}

TEST(Piaq, DoubledModelHasParallelStructure) {
  const PiAQModel M = doubled_su2();
  const int m = M.dim();
  const Mat E = Mat::Identity(m, m);
  bool nonzero = false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vec X = E.col(i), Y = E.col(j);
      EXPECT_EQ(inf(M.connection(X, Y)), 0.0);
      EXPECT_EQ(inf(M.torsion(X, Y) + M.bracket(X, Y)), 0.0);
      nonzero = nonzero || inf(M.bracket(X, Y)) > 0;
      for (int k = 0; k < m; ++k) EXPECT_EQ(inf(M.curvature(X, Y, E.col(k))), 0.0);
    }
  EXPECT_TRUE(nonzero);
  const auto v = aqlab::integrability(M);
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(v.witness.has_value());
}

TEST(Piaq, DoubledModelPredicates) {
  for (const auto& A : {catalog::su2(), catalog::sl2r(), catalog::so4()}) {
    const PiAQModel M = PiAQModel::from_doubled(DoubledModel::killing(A));
    EXPECT_TRUE(is_semiholonomic(M)) << A.name();
    EXPECT_TRUE(is_three_web(M)) << A.name();
    const ScalarKA one = ScalarKA::real(1, Alpha::plus);
    EXPECT_TRUE(fundamental_involutive(M, Twistor::I, one).holds);
    EXPECT_TRUE(fundamental_involutive(M, Twistor::I, -1.0 * one).holds);
    EXPECT_TRUE(fundamental_involutive(M, Twistor::J, one).holds);
    EXPECT_FALSE(fundamental_involutive(M, Twistor::J, -1.0 * one).holds);
    EXPECT_FALSE(aqlab::is_isoclinic_geodesic_const_mu(M, 0.5));
  }
}

TEST(Piaq, IsoclinicPreconditions) {
  const PiAQModel M = doubled_su2();
  for (double mu : {1.0, -1.0}) {
    try {
      (void)aqlab::isoclinic_geodesic_const_mu(M, mu);
      FAIL();
    } catch (const aqlab::error& e) {
      EXPECT_EQ(e.code(), aqlab::errc::invalid_mu);
    }
  }
  support::Rng r(54);
  EXPECT_THROW((void)aqlab::isoclinic_geodesic_const_mu(scrambled(r, Alpha::plus, 4), 0.5), aqlab::error);
}

TEST(Piaq, ThreeWebNeedsSplitSignature) {
  try {
    (void)aqlab::three_web(abelian_model(Alpha::minus, 4));
    FAIL();
  } catch (const aqlab::error& e) {
    EXPECT_EQ(e.code(), aqlab::errc::wrong_signature);
  }
}

TEST(Piaq, NegativeControls) {
  support::Rng r(55);
  for (int t = 0; t < 5; ++t) {
    const PiAQModel M = scrambled(r, Alpha::plus, 4);
    EXPECT_FALSE(M.is_lie());
    EXPECT_FALSE(is_semiholonomic(M));
    EXPECT_FALSE(is_three_web(M));
  }
}

TEST(Piaq, Eigenvalues) {
  const PiAQModel M = abelian_model(Alpha::plus, 4);
  EXPECT_THROW(aqlab::check_eigenvalue(M, M.K(), ScalarKA::unit_i(Alpha::plus)), aqlab::error);
  EXPECT_THROW(aqlab::check_eigenvalue(M, M.I(), ScalarKA::real(2, Alpha::plus)), aqlab::error);
  EXPECT_NO_THROW(aqlab::check_eigenvalue(M, M.I(), ScalarKA::real(-1, Alpha::plus)));
  const PiAQModel Q = abelian_model(Alpha::minus, 4);
  EXPECT_NO_THROW(aqlab::check_eigenvalue(Q, Q.J(), ScalarKA::unit_i(Alpha::minus)));
  EXPECT_NO_THROW(aqlab::check_eigenvalue(Q, Q.K(), -1.0 * ScalarKA::unit_i(Alpha::minus)));
  EXPECT_THROW(aqlab::check_eigenvalue(Q, Q.I(), ScalarKA::real(1, Alpha::minus)), aqlab::error);
  EXPECT_EQ(aqlab::principal_eigenvalue(Alpha::minus), ScalarKA::unit_i(Alpha::minus));
  try {
    (void)aqlab::twistor_square(2 * Mat::Identity(2, 2));
    FAIL();
  } catch (const aqlab::error& e) {
    EXPECT_EQ(e.code(), aqlab::errc::not_twistor);
  }
}

TEST(Piaq, EigenprojectorSplitsEigenspaces) {
  support::Rng r(56);
  for (Alpha al : both) {
    const PiAQModel M = support::random_lie_model(r, al);
    const ScalarKA lam = aqlab::principal_eigenvalue(al);
    const Vec v = support::random_vec(r, M.dim());
    const ExtVec p = aqlab::eigenprojector(M.I(), lam, ExtVec::real(v), 1);
    const ExtVec q = aqlab::eigenprojector(M.I(), lam, ExtVec::real(v), -1);
    EXPECT_LT((M.I() * p - aqlab::scale(lam, p)).max_abs(), 1e-10);
    EXPECT_LT((M.I() * q + aqlab::scale(lam, q)).max_abs(), 1e-10);
    EXPECT_LT((p + q - ExtVec::real(v)).max_abs(), 1e-12);
  }
}

TEST(Piaq, NijenhuisTorsionIdentity) {
  support::Rng r(57);
  for (Alpha al : both)
    for (int t = 0; t < 20; ++t) {
      const PiAQModel M = support::random_lie_model(r, al);
      for (Twistor tw : {Twistor::I, Twistor::J, Twistor::K}) {
        const Mat& F = M.twistor(tw);
        const Vec X = support::random_vec(r, M.dim()), Y = support::random_vec(r, M.dim());
        const Vec N = aqlab::nijenhuis(M, F, X, Y);
        EXPECT_LT(inf(N - aqlab::nijenhuis_from_torsion(M, F, X, Y)), 1e-10 * (1 + inf(N)));
        // F N_F(X,Y) + N_F(FX,Y) = 0
        EXPECT_LT(inf(F * N + aqlab::nijenhuis(M, F, F * X, Y)), 1e-10 * (1 + inf(N)));
      }
    }
}

TEST(Piaq, SemiholonomyMatchesNijenhuisOfI) {
  support::Rng r(58);
  for (int t = 0; t < 10; ++t) {
    const PiAQModel M = support::random_lie_model(r, Alpha::plus);
    const int m = M.dim();
    const Mat E = Mat::Identity(m, m);
    double nmax = 0, scale = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        nmax = std::max(nmax, inf(aqlab::nijenhuis(M, M.I(), E.col(i), E.col(j))));
        scale = std::max(scale, inf(M.bracket(E.col(i), E.col(j))));
      }
    EXPECT_EQ(is_semiholonomic(M, 1e-9), nmax <= 1e-9 * (1 + scale));
  }
  const PiAQModel D = doubled_su2();
  const Vec X = Vec::Ones(6), Y = Vec::LinSpaced(6, -1, 1);
  EXPECT_LT(inf(aqlab::nijenhuis(D, D.I(), X, Y)), 1e-12);
}

}  // namespace
