#include <gtest/gtest.h>

#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "vlogic/core.hpp"
#include "vlogic/operators.hpp"

using namespace vlogic;

TEST(Kron, MatchesEigenKroneckerProduct) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::MatrixXd a = Eigen::MatrixXd::Random(dim(rng), dim(rng));
    const Eigen::MatrixXd b = Eigen::MatrixXd::Random(dim(rng), dim(rng));
    const Eigen::MatrixXd expected = Eigen::kroneckerProduct(a, b);
    const Eigen::MatrixXd got = kron(a, b);
    ASSERT_EQ(got.rows(), expected.rows());
    ASSERT_EQ(got.cols(), expected.cols());
    EXPECT_LE((got - expected).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Kron, BasisProducts) {
  const Vector2<double> s = Basis<double>::s(), n = Basis<double>::n();
  EXPECT_EQ(kron(s, n), (Eigen::Vector4d() << 0, 1, 0, 0).finished());
  EXPECT_EQ(kron(n, s), (Eigen::Vector4d() << 0, 0, 1, 0).finished());
}

TEST(TruthVector, FromWeight) {
  const TruthVec u = TruthVec::from_weight(0.3);
  EXPECT_DOUBLE_EQ(u.vector()(0), 0.3);
  EXPECT_DOUBLE_EQ(u.vector()(1), 0.7);
  EXPECT_DOUBLE_EQ(scalar_project(u), 0.3);
  EXPECT_FALSE(u.is_binary());
  EXPECT_TRUE(TruthVec::truth().is_binary());
}

TEST(TruthVector, RejectsOutOfDomain) {
  for (double w : {-0.1, 1.2, std::nan("")}) {
    try {
      TruthVec::from_weight(w);
      FAIL() << w;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::domain);
    }
  }
  EXPECT_THROW(TruthVec::from_vector(Vector2<double>(0.6, 0.6)), Error);
  EXPECT_THROW(TruthVec::from_vector(Vector2<double>(1.5, -0.5)), Error);
}

TEST(TruthVector, FromVectorSnapsResidue) {
  const TruthVec u = TruthVec::from_vector(Vector2<double>(1.0 + 1e-14, -1e-14));
  EXPECT_EQ(u.weight(), 1.0);
  EXPECT_TRUE(u.is_binary());
}

TEST(LogicMatrix, ShapeChecked) {
  EXPECT_THROW(Gate(1, Gate::Matrix::Zero(2, 4)), Error);
  EXPECT_THROW(Gate(2, Gate::Matrix::Zero(2, 2)), Error);
  EXPECT_THROW(Gate(3, Gate::Matrix::Zero(2, 8)), Error);
}

TEST(Apply, ArityMismatch) {
  const TruthVec u = TruthVec::truth();
  try {
    apply(gate(GateName::C), u);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::arity);
  }
  EXPECT_THROW(apply(gate(GateName::N), u, u), Error);
  const std::vector<TruthVec> three(3, u);
  EXPECT_THROW(apply(gate(GateName::C), std::span<const TruthVec>(three)), Error);
}

TEST(VecEq, ToleranceMustBePositive) {
  const TruthVec u = TruthVec::from_weight(0.5);
  EXPECT_TRUE(vec_eq(u, TruthVec::from_weight(0.5 + 1e-13), 1e-12));
  EXPECT_FALSE(vec_eq(u, TruthVec::from_weight(0.6), 1e-12));
  EXPECT_THROW(vec_eq(u, u, 0.0), Error);
}

// Every gate maps Π (and Π ⊗ Π) into Π.
TEST(Closure, GatesPreserveProbabilisticVectors) {
  for (GateName g : kAllGates) {
    for (int i = 0; i <= 10; ++i) {
      const TruthVec u = TruthVec::from_weight(i / 10.0);
      if (gate_arity(g) == 1) {
        const Vector2<double> out = gate(g).entries() * u.vector();
        EXPECT_NEAR(out.sum(), 1.0, 1e-12);
        EXPECT_GE(out.minCoeff(), -1e-12);
        continue;
      }
      for (int j = 0; j <= 10; ++j) {
        const TruthVec v = TruthVec::from_weight(j / 10.0);
        const Vector2<double> out = gate(g).entries() * kron(u.vector(), v.vector());
        EXPECT_NEAR(out.sum(), 1.0, 1e-12);
        EXPECT_GE(out.minCoeff(), -1e-12);
      }
    }
  }
}
