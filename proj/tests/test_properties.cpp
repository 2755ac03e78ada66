#include "support.hpp"

#include <gtest/gtest.h>

using namespace hvf;
using hvf::testing::rel_err;
using hvf::testing::vec_rel_err;

namespace {

// Seeded generators; every property runs a fixed number of cases from one seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int sign() { return integer(0, 1) ? 1 : -1; }
  Vec vec(Eigen::Index dim, double scale = 1.0) { return hvf::testing::random_vec(dim, rng_, scale); }

  SpaceForm space(int n_lo, int n_hi) {
    const int n = integer(n_lo, n_hi);
    return sign() > 0 ? SpaceForm::sphere(n) : SpaceForm::hyperbolic(n);
  }

  /// k/d with |k| <= 2d, d in {1, 2, 4, 5}.
  QuadraticSurd rational() {
    static const int dens[] = {1, 2, 4, 5};
    const int d = dens[integer(0, 3)];
    return QuadraticSurd(Rational(integer(-2 * d, 2 * d)) / Rational(d));
  }

  QuadraticSurd nonneg_rational() {
    const QuadraticSurd v = rational();
    return v < QuadraticSurd(0) ? -v : v;
  }

  /// A Pythagorean (s, t) pair.
  std::pair<QuadraticSurd, QuadraticSurd> unit_pair() {
    static const int trip[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {0, 1, 1}, {1, 0, 1}};
    const auto& t = trip[integer(0, 4)];
    const int sa = sign(), sb = sign();
    return {QuadraticSurd(Rational(sa * t[0]) / Rational(t[2])), QuadraticSurd(Rational(sb * t[1]) / Rational(t[2]))};
  }

  ExactConformalParams conformal(int eps) {
    ExactConformalParams x;
    x.omega = nonneg_rational();
    x.tau = eps > 0 ? QuadraticSurd(0) : nonneg_rational();
    x.h = rational();
    x.rr = nonneg_rational();
    std::tie(x.s, x.t) = unit_pair();
    return x;
  }

  KillingField killing(const SpaceForm& M) {
    return KillingField(M, hvf::testing::random_skew(M.dim(), M.signature(), rng_));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Ambient algebra.

TEST(Property, InnerIsBilinearAndSymmetric) {
  Gen g(101);
  for (int k = 0; k < 1000; ++k) {
    const Signature sig = g.sign() > 0 ? Signature::spherical() : Signature::hyperbolic();
    const Eigen::Index d = g.integer(2, 7);
    const Vec x = g.vec(d), y = g.vec(d), z = g.vec(d);
    const double a = g.real(-3, 3), b = g.real(-3, 3);
    const double scale = 1 + (x.norm() + y.norm()) * z.norm() * 6;
    EXPECT_NEAR(inner(a * x + b * y, z, sig), a * inner(x, z, sig) + b * inner(y, z, sig), 1e-12 * scale);
    EXPECT_EQ(inner(x, y, sig), inner(y, x, sig));
  }
}

TEST(Property, EverySkewOperatorIsSkew) {
  Gen g(102);
  auto check = [&](const Mat& a, Signature sig) {
    for (int k = 0; k < 5; ++k) {
      const Vec x = g.vec(a.rows()), y = g.vec(a.rows());
      EXPECT_NEAR(inner(a * x, y, sig) + inner(x, a * y, sig), 0.0, 1e-12 * (1 + a.norm() * x.norm() * y.norm()));
    }
  };
  for (int k = 0; k < 50; ++k) {
    const SpaceForm M = g.space(2, 6);
    const Signature sig = M.signature();
    check(g.killing(M).op().matrix(), sig);
    check(elementary_killing_operator(g.vec(M.dim()), g.vec(M.dim()), sig).matrix(), sig);
    const int r = g.integer(1, M.is_spherical() ? (M.n() + 1) / 2 : M.n() / 2);
    check(hopf_field_operator(r, g.real(-2, 2), M).op().matrix(), sig);
    const Mat iso = random_isometry(M.dim(), sig, g.rng(), 1.0);
    check(g.killing(M).op().conjugated(iso).matrix(), sig);
    if (M.n() == 2) {
      const int eps = M.epsilon();
      check(make_conformal2d(eps, g.conformal(eps)).killing_matrix(), sig);
    }
  }
}

TEST(Property, PairingInvariantUnderConjugation) {
  Gen g(103);
  for (int k = 0; k < 100; ++k) {
    const SpaceForm M = g.space(2, 6);
    const SkewOperator A = g.killing(M).op(), B = g.killing(M).op();
    const Mat iso = random_isometry(M.dim(), M.signature(), g.rng(), 1.0);
    const double v = lorentz_pairing(A, B);
    EXPECT_NEAR(lorentz_pairing(A.conjugated(iso), B.conjugated(iso)), v, 1e-9 * (1 + std::abs(v)));
  }
}

// ---------------------------------------------------------------------------
// Random members of every family.

namespace {

FieldFamily random_field(Gen& g) {
  switch (g.integer(0, 5)) {
    case 0: {
      const SpaceForm M = g.space(2, 6);
      return ConformalGradientField(M, g.vec(M.dim()));
    }
    case 1:
      return g.killing(g.space(2, 6));
    case 2: {
      const SpaceForm M = g.space(2, 6);
      const int r = g.integer(1, M.n() / 2);
      Vec c = Vec::Zero(M.dim());
      c.tail(M.dim() - 2 * r) = g.vec(M.dim() - 2 * r);
      if (c.squaredNorm() < 1e-2) c(M.n()) = 1.0;
      if (!M.is_spherical() && std::abs(inner(c, c, M.signature())) < 1e-3) c(M.n()) += 0.5;
      return LoxodromicField::standard(M, r, g.real(0.2, 2.0), c);
    }
    case 3:
      return DipoleDeformationField::standard(g.space(2, 6), g.real(-2, 2), g.real(-2, 2));
    case 4: {
      const int eps = g.sign();
      return make_conformal2d(eps, g.conformal(eps));
    }
    default: {
      const int n = g.integer(2, 6);
      return QuadraticGradientField(SpaceForm::sphere(n), hvf::testing::random_sym(n + 1, g.rng()));
    }
  }
}

}  // namespace

TEST(Property, RandomFieldsAreTangentAndSatisfyIdentities) {
  Gen g(104);
  for (int k = 0; k < 120; ++k) {
    const FieldFamily f = random_field(g);
    const SpaceForm& M = space_of(f);
    for (const ManifoldPoint& x : sample_points(M, 10, 1000 + k, 2.0)) {
      const TensionIngredients ing = ingredients(f, x);
      const double s = 1 + x.coords().squaredNorm();
      EXPECT_LT(std::abs(inner(ing.sigma, x.coords(), M.signature())), 1e-10 * s * (1 + ing.sigma.norm()))
          << family_name(f);
      EXPECT_LT(weitzenbock_error(ing, M.signature()), 1e-8) << family_name(f);
      if (ing.spinnaker && std::sqrt(2 * ing.F) > 1e-6) {
        EXPECT_LT(vec_rel_err(ing.nabla_grad_F, *ing.spinnaker * ing.sigma), 1e-8) << family_name(f);
      }
    }
  }
}

TEST(Property, RandomFieldsMatchOracle) {
  Gen g(105);
  for (int k = 0; k < 40; ++k) {
    const FieldFamily f = random_field(g);
    const SpaceForm& M = space_of(f);
    const VectorFieldFn sig = as_function(f);
    for (const ManifoldPoint& x : sample_points(M, 3, 2000 + k, 1.0)) {
      const FieldPointData d = analyze(f, x);
      for (const TangentVector& E : orthonormal_frame(x, k).vectors) {
        EXPECT_LT(vec_rel_err(covariant_derivative_fd(sig, x, E).vec(), *d.nabla_sigma * E.vec()), 1e-5)
            << family_name(f);
      }
      EXPECT_LT(vec_rel_err(rough_laplacian_fd(sig, x).vec(), d.rough_lap), 1e-3) << family_name(f);
    }
  }
}

TEST(Property, CentralDifferencesAreSecondOrder) {
  // Doubling h multiplies the aggregated error by about 4.
  Gen g(106);
  double coarse = 0, fine = 0;
  for (int k = 0; k < 20; ++k) {
    const FieldFamily f = random_field(g);
    const SpaceForm& M = space_of(f);
    const VectorFieldFn sig = as_function(f);
    for (const ManifoldPoint& x : sample_points(M, 3, 3000 + k, 1.0)) {
      const Mat N = *analyze(f, x).nabla_sigma;
      for (const TangentVector& E : orthonormal_frame(x).vectors) {
        fine += (covariant_derivative_fd(sig, x, E, 1e-3).vec() - N * E.vec()).norm();
        coarse += (covariant_derivative_fd(sig, x, E, 2e-3).vec() - N * E.vec()).norm();
      }
    }
  }
  const double ratio = coarse / fine;
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(Property, IsometriesCommuteWithTension) {
  Gen g(107);
  for (int k = 0; k < 30; ++k) {
    const FieldFamily f = random_field(g);
    const SpaceForm& M = space_of(f);
    const Mat iso = random_isometry(M.dim(), M.signature(), g.rng(), 0.7);
    const MetricParams mp(g.real(-4, 6), g.real(-3, 2));
    EXPECT_LT(isometry_equivariance_check(f, iso, mp, sample_points(M, 8, 4000 + k, 1.5)), 1e-9) << family_name(f);
  }
}

TEST(Property, CircleActionCommutesWithTension) {
  Gen g(108);
  for (int k = 0; k < 30; ++k) {
    const int eps = g.sign();
    const FieldFamily f = make_conformal2d(eps, g.conformal(eps));
    const MetricParams mp(g.real(-4, 6), g.real(-3, 2));
    const SpaceForm& M = space_of(f);
    EXPECT_LT(circle_equivariance_check(f, g.real(-7, 7), mp, sample_points(M, 8, 5000 + k, 1.5)), 1e-9);
  }
}

TEST(Property, KillingPreharmonicIffBalanced) {
  Gen g(109);
  for (int k = 0; k < 40; ++k) {
    const int n = g.integer(3, 6);
    const SpaceForm M = SpaceForm::sphere(n);
    const int r = g.integer(1, (n + 1) / 2);
    const bool balanced = g.integer(0, 1) == 1;
    std::string tw;
    const double w = g.real(0.5, 1.5);
    for (int i = 0; i < r; ++i) tw += (i ? "," : "") + std::to_string(balanced ? w : w + 0.3 * i);
    const FieldFamily f = build_field({"killing", n, 1, {{"twists", tw}}});
    const Mat iso = random_isometry(M.dim(), M.signature(), g.rng());
    const FieldFamily moved = transformed(f, iso);
    EXPECT_EQ(preharmonic_check(moved, sample_points(M, 40, k)).preharmonic, balanced || r == 1) << tw;
  }
}

// ---------------------------------------------------------------------------
// Polynomial reduction.

TEST(Property, MultiplesOfTheQuadricAlwaysReduce) {
  Gen g(110);
  for (int k = 0; k < 200; ++k) {
    const int eps = g.sign();
    ExactPoly S;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b)
        for (int c = 0; a + b + c <= 2; ++c) S += ExactPoly::monomial(g.rational(), {a, b, c});
    const ExactPoly P = quadric<QuadraticSurd>(eps) * S;
    const auto res = vanishes_mod_quadric(P, eps);
    ASSERT_TRUE(res.vanishes);
    EXPECT_TRUE((P - quadric<QuadraticSurd>(eps) * *res.witness).is_zero());
  }
}

TEST(Property, WitnessIsAlwaysSound) {
  Gen g(111);
  int hits = 0;
  for (int k = 0; k < 300; ++k) {
    const int eps = g.sign();
    const QuadraticSurd q = g.rational();
    if (q.is_zero()) continue;
    const ExactConformalParams x = g.conformal(eps);
    const ExactPoly P = build_harmonicity_poly(eps, x, g.rational() + QuadraticSurd(2), q);
    const auto res = vanishes_mod_quadric(P, eps);
    if (res.vanishes) {
      ++hits;
      EXPECT_TRUE((P - quadric<QuadraticSurd>(eps) * *res.witness).is_zero());
    } else {
      EXPECT_GE(res.failing_grade, 2);
      EXPECT_LE(res.failing_grade, 4);
    }
  }
  EXPECT_LT(hits, 300);
}

TEST(Property, ExactVerdictMatchesNumericVerdict) {
  Gen g(112);
  int agree_true = 0;
  for (int k = 0; k < 60; ++k) {
    const int eps = -1;
    ExactConformalParams x = g.conformal(eps);
    QuadraticSurd p = g.rational() + QuadraticSurd(3);
    QuadraticSurd q = g.rational();
    if (k % 3 == 0) {
      // Plant an associate member.
      const auto [s, c] = g.unit_pair();
      x = ExactConformalParams{};
      x.omega = s < QuadraticSurd(0) ? -s : s;
      x.h = c < QuadraticSurd(0) ? -c : c;
      p = QuadraticSurd(3);
      q = QuadraticSurd(Rational(-1, 2));
    }
    if (q.is_zero()) q = QuadraticSurd(Rational(-1, 2));
    const Conformal2DField f = make_conformal2d(eps, x);
    if (f.killing_matrix().norm() == 0 && f.pole().norm() == 0) continue;
    const bool exact = vanishes_mod_quadric(build_harmonicity_poly(eps, x, p, q), eps).vanishes;
    VerifyOptions o;
    o.count = 200;
    const TensionReport rep = verify(f, MetricParams(p.to_double(), q.to_double()), o);
    if (exact) {
      ++agree_true;
      EXPECT_LT(rep.max_rel_residual, 1e-9);
    } else {
      EXPECT_GT(rep.max_rel_residual, 1e-4);
    }
  }
  EXPECT_GT(agree_true, 10);
}
