#include <gtest/gtest.h>

#include "aqlab/liealg.hpp"
#include "support.hpp"

using aqlab::DoubledModel;
using aqlab::LieAlgebraModel;
using aqlab::Mat;
using aqlab::StructureConstants;
using aqlab::Vec;
namespace catalog = aqlab::catalog;

namespace {

/// Killing form straight from the trace of ad(e_i) ad(e_j) with ad built from brackets.
Mat killing_oracle(const LieAlgebraModel& A) {
  const int n = A.dim();
  const Mat E = Mat::Identity(n, n);
  std::vector<Mat> ad(n, Mat(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ad[i].col(j) = A.bracket(E.col(i), E.col(j));
  Mat K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) K(i, j) = -(ad[i] * ad[j]).trace();
  return K;
}

std::vector<LieAlgebraModel> semisimple() { return {catalog::su2(), catalog::sl2r(), catalog::so4()}; }

TEST(LieAlg, CatalogSatisfiesJacobi) {
  for (const auto& A : {catalog::su2(), catalog::sl2r(), catalog::so4(), catalog::abelian(3), support::heisenberg()}) {
    EXPECT_LT(A.constants().jacobi_defect(), 1e-14) << A.name();
    EXPECT_LT(A.constants().antisymmetry_defect(), 1e-15) << A.name();
  }
}

TEST(LieAlg, Su2Brackets) {
  const auto A = catalog::su2();
  const Mat E = Mat::Identity(3, 3);
  EXPECT_EQ(A.bracket(E.col(0), E.col(1)), Vec(E.col(2)));
  EXPECT_EQ(A.bracket(E.col(1), E.col(2)), Vec(E.col(0)));
  EXPECT_EQ(A.bracket(E.col(2), E.col(0)), Vec(E.col(1)));
}

TEST(LieAlg, KillingForms) {
  EXPECT_LT((killing_form(catalog::su2()) - 2 * Mat::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(killing_form(catalog::abelian(4)), Mat::Zero(4, 4));
  const auto in = aqlab::inertia(killing_form(catalog::sl2r()));
  // K = -tr(ad ad) is negative on H and on E - F
  EXPECT_EQ(in.pos, 1);
  EXPECT_EQ(in.neg, 2);
  EXPECT_EQ(in.zero, 0);
  const auto so4 = aqlab::inertia(killing_form(catalog::so4()));
  EXPECT_EQ(so4.pos, 6);
  for (const auto& A : {catalog::su2(), catalog::sl2r(), catalog::so4(), support::heisenberg()})
    EXPECT_LT((killing_form(A) - killing_oracle(A)).cwiseAbs().maxCoeff(), 1e-13) << A.name();
}

TEST(LieAlg, Semisimplicity) {
  for (const auto& A : semisimple()) EXPECT_TRUE(is_semisimple(A)) << A.name();
  EXPECT_FALSE(is_semisimple(support::heisenberg()));
  EXPECT_FALSE(is_semisimple(catalog::abelian(2)));
  EXPECT_FALSE(is_semisimple(catalog::direct_sum(catalog::su2(), catalog::abelian(1))));
}

TEST(LieAlg, KillingIsAdInvariant) {
  support::Rng r(41);
  for (const auto& A : semisimple()) {
    const Mat K = killing_form(A);
    EXPECT_LT(aqlab::ad_invariance_defect(A, K), 1e-12);
    for (int t = 0; t < 100; ++t) {
      const Vec X = support::random_vec(r, A.dim()), Y = support::random_vec(r, A.dim()), Z = support::random_vec(r, A.dim());
      EXPECT_NEAR(A.bracket(Z, X).dot(K * Y) + X.dot(K * A.bracket(Z, Y)), 0, 1e-10);
    }
  }
  EXPECT_GT(aqlab::ad_invariance_defect(catalog::su2(), Mat(Vec::LinSpaced(3, 1, 3).asDiagonal())), 0.1);
}

TEST(LieAlg, CasimirIdentity) {
  const auto A = catalog::su2();
  const Mat E = Mat::Identity(3, 3);
  EXPECT_LT((lemma2_check(A, E.col(0)) + E.col(0)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(lemma2_check(A, Vec::Zero(3)), Vec::Zero(3));
  support::Rng r(42);
  for (const auto& B : semisimple())
    for (int t = 0; t < 100; ++t) {
      const Vec X = support::random_vec(r, B.dim());
      EXPECT_LT((lemma2_check(B, X) + X).cwiseAbs().maxCoeff(), 1e-10) << B.name();
    }
  EXPECT_THROW((void)lemma2_check(support::heisenberg(), Vec::Ones(3)), aqlab::error);
}

TEST(LieAlg, PseudoOrthonormalBasisSum) {
  support::Rng r(43);
  for (const auto& A : semisimple()) {
    const auto po = aqlab::pseudo_orthonormalize(killing_form(A));
    const Mat S = po.P.transpose() * killing_form(A) * po.P;
    EXPECT_LT((S - Mat(po.eps.asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
    for (int t = 0; t < 20; ++t) {
      const Vec X = support::random_vec(r, A.dim());
      Vec s = Vec::Zero(A.dim());
      for (int i = 0; i < A.dim(); ++i) s += po.eps(i) * A.bracket(A.bracket(X, po.P.col(i)), po.P.col(i));
      EXPECT_LT((s + X).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(LieAlg, ChangeOfBasisPreservesBrackets) {
  support::Rng r(44);
  const auto A = catalog::sl2r();
  const Mat P = support::well_conditioned(r, 3);
  const auto B = A.change_basis(P);
  for (int t = 0; t < 20; ++t) {
    const Vec x = support::random_vec(r, 3), y = support::random_vec(r, 3);
    EXPECT_LT((P * B.bracket(x, y) - A.bracket(P * x, P * y)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(LieAlg, InvalidAlgebraRejected) {
  StructureConstants c(3);
  c.set(0, 1, 0, 1);
  c.set(0, 2, 2, 1);
  c.set(1, 2, 0, 1);
  EXPECT_GT(c.jacobi_defect(), 1e-3);
  try {
    LieAlgebraModel bad(c, "bad");
    FAIL();
  } catch (const aqlab::error& e) {
    EXPECT_EQ(e.code(), aqlab::errc::invalid_algebra);
  }
  EXPECT_THROW((void)catalog::by_name("e8"), aqlab::error);
  EXPECT_EQ(catalog::by_name("so4").dim(), 6);
}

TEST(LieAlg, DoubledModelStructure) {
  const DoubledModel D = DoubledModel::killing(catalog::su2());
  const int N = D.dim();
  const Mat id = Mat::Identity(N, N);
  EXPECT_EQ(D.I() * D.I(), id);
  EXPECT_EQ(D.J() * D.J(), id);
  EXPECT_EQ(D.K() * D.K(), -id);
  EXPECT_EQ(D.I() * D.J() + D.J() * D.I(), Mat::Zero(N, N));
  EXPECT_EQ(D.four_term_metric(), 4 * D.product_metric());
  EXPECT_LT((killing_form(D.base()) - D.inner()).cwiseAbs().maxCoeff(), 1e-12);

  support::Rng r(45);
  const Vec x = support::random_vec(r, 3), y = support::random_vec(r, 3);
  EXPECT_EQ(D.bracket2(D.embed1(x), D.embed2(y)), Vec::Zero(N));
  for (int t = 0; t < 500; ++t) {
    const Vec X = support::random_vec(r, N), Y = support::random_vec(r, N);
    const Vec b = D.bracket2(X, Y);
    EXPECT_LT((D.bracket2(D.I() * X, Y) - D.I() * b).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((D.bracket2(X, D.I() * Y) - D.I() * b).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((D.bracket2(D.J() * X, D.J() * Y) - D.J() * b).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(LieAlg, DegenerateInnerRejected) {
  Mat h = Mat::Identity(3, 3);
  h(2, 2) = 0;
  try {
    (void)aqlab::doubled(catalog::su2(), h);
    FAIL();
  } catch (const aqlab::error& e) {
    EXPECT_EQ(e.code(), aqlab::errc::degenerate_inner);
  }
  EXPECT_THROW((void)DoubledModel::killing(support::heisenberg()), aqlab::error);
}

}  // namespace
