#include "support.hpp"

#include <gtest/gtest.h>

using namespace hvf;
using hvf::testing::random_skew;
using hvf::testing::random_vec;

TEST(Inner, BasisVectors) {
  EXPECT_EQ(inner(Vec::Unit(3, 0), Vec::Unit(3, 0), Signature::spherical()), 1.0);
  EXPECT_EQ(inner(Vec::Unit(3, 2), Vec::Unit(3, 2), Signature::hyperbolic()), -1.0);
}

TEST(Inner, LorentzianSum) {
  const Vec x = (Vec(3) << 1, 2, 3).finished();
  const Vec y = (Vec(3) << 4, 5, 6).finished();
  EXPECT_DOUBLE_EQ(inner(x, y, Signature::hyperbolic()), -4.0);
  EXPECT_DOUBLE_EQ(inner(x, y, Signature::spherical()), 32.0);
}

TEST(Inner, DimensionMismatchThrows) {
  EXPECT_THROW(inner(Vec::Zero(3), Vec::Zero(4), Signature::spherical()), std::invalid_argument);
}

TEST(Signature, RejectsOtherIndicators) { EXPECT_THROW(Signature(0), std::invalid_argument); }

TEST(DualCovector, Examples) {
  const Signature S = Signature::spherical();
  const Signature H = Signature::hyperbolic();
  EXPECT_EQ(dual_covector_restriction(Vec::Unit(3, 2), Vec::Unit(3, 2), S), 1.0);
  EXPECT_EQ(dual_covector_restriction(Vec::Unit(3, 2), Vec::Unit(3, 0), S), 0.0);
  const Vec x = (Vec(3) << std::sinh(1.0), 0, std::cosh(1.0)).finished();
  EXPECT_NEAR(dual_covector_restriction(Vec::Unit(3, 2), x, H), -1.5430806348152437, 1e-15);
}

TEST(SkewOperator, RejectsNonSkew) {
  Mat m = Mat::Zero(3, 3);
  m(0, 1) = 1.0;
  EXPECT_THROW(SkewOperator(m, Signature::spherical()), std::invalid_argument);
  // Euclidean-antisymmetric is not eta-skew once a timelike index is involved.
  Mat b = Mat::Zero(3, 3);
  b(0, 2) = 1.0;
  b(2, 0) = -1.0;
  EXPECT_THROW(SkewOperator(b, Signature::hyperbolic()), std::invalid_argument);
  EXPECT_NO_THROW(SkewOperator(b * metric_matrix(3, Signature::hyperbolic()), Signature::hyperbolic()));
}

TEST(SkewOperator, SkewOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (Signature sig : {Signature::spherical(), Signature::hyperbolic()}) {
    for (int k = 0; k < 50; ++k) {
      const SkewOperator A = random_skew(5, sig, rng);
      const Vec x = random_vec(5, rng);
      const Vec y = random_vec(5, rng);
      EXPECT_NEAR(inner(A(x), y, sig) + inner(x, A(y), sig), 0.0, 1e-12 * (1 + x.norm() * y.norm() * 10));
    }
  }
}

TEST(LorentzAdjoint, EuclideanIsTranspose) {
  std::mt19937_64 rng(3);
  const Mat a = hvf::testing::random_matrix(4, rng);
  EXPECT_TRUE(lorentz_adjoint(a, Signature::spherical()).isApprox(a.transpose()));
  const Mat eta = metric_matrix(4, Signature::hyperbolic());
  EXPECT_TRUE(lorentz_adjoint(a, Signature::hyperbolic()).isApprox(eta * a.transpose() * eta));
}

TEST(OperatorNorm, Diagonal) {
  Vec d(3);
  d << 1, -4, 2;
  EXPECT_NEAR(operator_norm(d.asDiagonal().toDenseMatrix()), 4.0, 1e-14);
}

TEST(LorentzPairing, ZeroOperator) {
  std::mt19937_64 rng(5);
  const Signature H = Signature::hyperbolic();
  const SkewOperator A = random_skew(4, H, rng);
  EXPECT_EQ(lorentz_pairing(SkewOperator::zero(4, H), A), 0.0);
}

TEST(LorentzPairing, RotationMinusTranslation) {
  // Balanced rank-r rotation with twist omega plus a translation of speed tau at the vertex.
  const Signature H = Signature::hyperbolic();
  const int n = 5;
  const double omega = 0.7, tau = 1.3;
  const int r = 2;
  Mat a = Mat::Zero(n + 1, n + 1);
  for (int i = 0; i < r; ++i) {
    a(2 * i + 1, 2 * i) = omega;
    a(2 * i, 2 * i + 1) = -omega;
  }
  // T = v (eta w)^T - w (eta v)^T with w the vertex and v = tau e_5.
  const Vec w = Vec::Unit(n + 1, n);
  const Vec v = tau * Vec::Unit(n + 1, 4);
  const Mat eta = metric_matrix(n + 1, H);
  a += v * (eta * w).transpose() - w * (eta * v).transpose();
  const SkewOperator A(a, H);
  EXPECT_NEAR(lorentz_pairing(A, A), 2 * r * omega * omega - 2 * tau * tau, 1e-12);
}

TEST(LorentzPairing, FrameIndependent) {
  std::mt19937_64 rng(17);
  for (Signature sig : {Signature::spherical(), Signature::hyperbolic()}) {
    for (int k = 0; k < 20; ++k) {
      const SkewOperator A1 = random_skew(4, sig, rng);
      const SkewOperator A2 = random_skew(4, sig, rng);
      const Mat g = random_isometry(4, sig, rng);
      const double direct = lorentz_pairing(A1, A2);
      EXPECT_NEAR(lorentz_pairing_in_frame(A1, A2, g), direct, 1e-10 * (1 + std::abs(direct)));
      EXPECT_NEAR(lorentz_pairing(A1.conjugated(g), A2.conjugated(g)), direct, 1e-9 * (1 + std::abs(direct)));
    }
  }
}

TEST(Isometry, RandomDrawsAreIsometries) {
  std::mt19937_64 rng(23);
  for (Signature sig : {Signature::spherical(), Signature::hyperbolic()}) {
    for (int k = 0; k < 20; ++k) EXPECT_TRUE(is_isometry(random_isometry(5, sig, rng), sig));
  }
  Mat flip = Mat::Identity(3, 3);
  flip(2, 2) = -1;
  EXPECT_FALSE(is_isometry(flip, Signature::hyperbolic()));
  EXPECT_TRUE(is_isometry(flip, Signature::spherical()));
  EXPECT_FALSE(is_isometry(2.0 * Mat::Identity(3, 3), Signature::spherical()));
}

TEST(SymOperator, RejectsAsymmetric) {
  Mat m = Mat::Identity(3, 3);
  m(0, 1) = 0.5;
  EXPECT_THROW(SymOperator{m}, std::invalid_argument);
}
