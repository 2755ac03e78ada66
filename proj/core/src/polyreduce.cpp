#include "hvf/polyreduce.hpp"

#include <cmath>
#include <stdexcept>

namespace hvf {

namespace {

template <class C>
struct Coefficients {
  C omega, tau, h, rr, s, t;
};

template <class C>
TriPoly<C> lin(const C& a, const C& b, const C& c) {
  return TriPoly<C>::monomial(a, {1, 0, 0}) + TriPoly<C>::monomial(b, {0, 1, 0}) +
         TriPoly<C>::monomial(c, {0, 0, 1});
}

// omega psi - eps tau beta and gamma = rr s alpha + rr t beta + h psi.
template <class C>
std::pair<TriPoly<C>, TriPoly<C>> rotation_and_pole_forms(int epsilon, const Coefficients<C>& k) {
  const C e(epsilon);
  const TriPoly<C> u = lin<C>(C(0), C(0) - e * k.tau, k.omega);
  const TriPoly<C> g = lin<C>(k.rr * k.s, k.rr * k.t, k.h);
  return {u, g};
}

template <class C>
TriPoly<C> spinnaker(int epsilon, const Coefficients<C>& k) {
  const auto [u, g] = rotation_and_pole_forms(epsilon, k);
  return u * u + g * g;
}

template <class C>
TriPoly<C> length_sq(int epsilon, const Coefficients<C>& k) {
  const C e(epsilon);
  const auto [u, g] = rotation_and_pole_forms(epsilon, k);
  const C c0 = k.tau * k.tau + k.rr * k.rr + e * (k.omega * k.omega + k.h * k.h);
  const C two(2);
  const TriPoly<C> linear = lin<C>(two * (k.omega * k.rr * k.t + e * k.tau * k.h),
                                   C(0) - two * k.rr * k.s * k.omega, C(0) - two * k.rr * k.s * k.tau);
  return TriPoly<C>::constant(c0) + linear - (u * u + g * g) * e;
}

template <class C>
TriPoly<C> harmonicity(int epsilon, const Coefficients<C>& k, const C& p, const C& q) {
  const C e(epsilon);
  const TriPoly<C> one = TriPoly<C>::constant(C(1));
  const TriPoly<C> L = length_sq(epsilon, k);
  const TriPoly<C> z = spinnaker(epsilon, k);
  return (one + L) * (one + L * q) * e + (L * (q * (p - C(2))) - TriPoly<C>::constant(C(2) * q)) * z;
}

Coefficients<QuadraticSurd> coefficients(const ExactConformalParams& x) {
  return {x.omega, x.tau, x.h, x.rr, x.s, x.t};
}

void check_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
}

void check_exact(int epsilon, const ExactConformalParams& x) {
  check_epsilon(epsilon);
  if (!(x.s * x.s + x.t * x.t - QuadraticSurd(1)).is_zero()) throw std::invalid_argument("s^2 + t^2 must equal 1");
}

template <class C, class IsZero>
QuadricReduction<C> reduce(const TriPoly<C>& P, int epsilon, IsZero zero) {
  check_epsilon(epsilon);
  if (P.degree() > 4) throw std::invalid_argument("vanishes_mod_quadric: degree above 4");
  const C e(epsilon);
  const TriPoly<C> Q2 = quadric<C>(epsilon).homogeneous_part(2);
  QuadricReduction<C> out;

  const TriPoly<C> S0 = P.homogeneous_part(0) * (C(0) - e);
  const TriPoly<C> S1 = P.homogeneous_part(1) * (C(0) - e);

  // P4 = Q2 S2: divide by Q2, whose leading monomial is alpha^2.
  TriPoly<C> rest = P.homogeneous_part(4);
  TriPoly<C> S2;
  TriPoly<C> rem;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().begin();
    if (m[0] < 2) {
      const TriPoly<C> lead = TriPoly<C>::monomial(c, m);
      rem += lead;
      rest -= lead;
      continue;
    }
    const TriPoly<C> t = TriPoly<C>::monomial(c, {m[0] - 2, m[1], m[2]});
    S2 += t;
    rest -= t * Q2;
  }
  if (!zero(rem)) {
    out.failing_grade = 4;
    out.obstruction = "P4 is not a multiple of alpha^2 + beta^2 + eps psi^2; remainder " + rem.to_string();
    return out;
  }
  const TriPoly<C> d3 = P.homogeneous_part(3) - Q2 * S1;
  if (!zero(d3)) {
    out.failing_grade = 3;
    out.obstruction = "P3 - Q2 S1 = " + d3.to_string() + " with S1 = -eps P1";
    return out;
  }
  const TriPoly<C> d2 = P.homogeneous_part(2) - (Q2 * S0 - S2 * e);
  if (!zero(d2)) {
    out.failing_grade = 2;
    out.obstruction = "P2 - (Q2 S0 - eps S2) = " + d2.to_string();
    return out;
  }
  const TriPoly<C> S = S2 + S1 + S0;
  if (!zero(P - quadric<C>(epsilon) * S)) {
    throw std::logic_error("vanishes_mod_quadric: witness fails P = Q S");
  }
  out.vanishes = true;
  out.witness = S;
  return out;
}

}  // namespace

Conformal2DField make_conformal2d(int epsilon, const ExactConformalParams& x) {
  check_exact(epsilon, x);
  const SpaceForm M(2, epsilon > 0 ? Signature::spherical() : Signature::hyperbolic());
  Conformal2DField::Params prm;
  prm.omega = x.omega.to_double();
  prm.tau = x.tau.to_double();
  prm.h = x.h.to_double();
  prm.rr = x.rr.to_double();
  prm.s = x.s.to_double();
  prm.t = x.t.to_double();
  return Conformal2DField::standard(M, prm);
}

ExactPoly length_sq_poly(int epsilon, const ExactConformalParams& params) {
  check_exact(epsilon, params);
  return length_sq(epsilon, coefficients(params));
}

ExactPoly spinnaker_poly(int epsilon, const ExactConformalParams& params) {
  check_exact(epsilon, params);
  return spinnaker(epsilon, coefficients(params));
}

ExactPoly build_harmonicity_poly(int epsilon, const ExactConformalParams& params, const QuadraticSurd& p,
                                 const QuadraticSurd& q) {
  check_exact(epsilon, params);
  if (q.is_zero()) throw std::invalid_argument("build_harmonicity_poly: q = 0 admits no harmonic conformal field");
  return harmonicity(epsilon, coefficients(params), p, q);
}

NumericPoly build_harmonicity_poly(const Conformal2DField& field, double p, double q) {
  if (q == 0.0) throw std::invalid_argument("build_harmonicity_poly: q = 0 admits no harmonic conformal field");
  const Conformal2DField::Params& x = field.params();
  const Coefficients<double> k{x.omega, x.tau, x.h, x.rr, x.s, x.t};
  return harmonicity(field.space().epsilon(), k, p, q);
}

QuadricReduction<QuadraticSurd> vanishes_mod_quadric(const ExactPoly& P, int epsilon) {
  return reduce(P, epsilon, [](const ExactPoly& x) { return x.is_zero(); });
}

QuadricReduction<double> vanishes_mod_quadric(const NumericPoly& P, int epsilon, double threshold) {
  const double thr = threshold * (1.0 + P.max_abs_coeff());
  QuadricReduction<double> out = reduce(P, epsilon, [thr](const NumericPoly& x) { return x.pruned(thr).is_zero(); });
  out.approximate = true;
  return out;
}

std::vector<EndpointSolution> solve_endpoint_constraints() {
  std::vector<EndpointSolution> out;
  // (1 + theta)(1 + q theta) = 0. First factor: theta = -1 and then 1 + 2q = 0.
  const Rational theta(-1);
  const Rational q = Rational(-1) / (theta + 3);
  out.push_back({theta, q});
  // Second factor: q = -1/theta, and 1 + (theta + 3) q = -3/theta never vanishes.
  return out;
}

template TriPoly<QuadraticSurd> quadric<QuadraticSurd>(int);
template TriPoly<double> quadric<double>(int);

}  // namespace hvf
