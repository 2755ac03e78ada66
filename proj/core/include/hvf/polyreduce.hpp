#pragma once

// Polynomials of degree <= 4 in the coordinates (alpha, beta, psi) of a 2-d
// space form, and the test for vanishing modulo the quadric
//
//   Q = alpha^2 + beta^2 + eps psi^2 - eps.
//
// Exact coefficients live in Q(sqrt d); a double instantiation serves scans
// over irrational parameters and is approximate.

#include "hvf/exact.hpp"
#include "hvf/fields.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hvf {

using Monomial = std::array<int, 3>;

/// Graded-lex order with alpha > beta > psi; maps iterate from the leading monomial.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a[0] + a[1] + a[2];
    const int db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

template <class C>
class TriPoly {
 public:
  using Terms = std::map<Monomial, C, GradedLexGreater>;

  TriPoly() = default;
  static TriPoly constant(const C& c) { return monomial(c, {0, 0, 0}); }
  static TriPoly monomial(const C& c, Monomial m);
  static TriPoly alpha() { return monomial(C(1), {1, 0, 0}); }
  static TriPoly beta() { return monomial(C(1), {0, 1, 0}); }
  static TriPoly psi() { return monomial(C(1), {0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  C coeff(const Monomial& m) const;
  TriPoly homogeneous_part(int k) const;

  TriPoly operator-() const;
  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const C& c);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(TriPoly a, const C& c) { return a *= c; }
  friend TriPoly operator*(const C& c, TriPoly a) { return a *= c; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b) { return a.times(b); }
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return (a - b).is_zero(); }

  /// Largest |coefficient|, as a double.
  double max_abs_coeff() const;
  /// Drops coefficients with |c| <= threshold (exact zeros only, for exact types).
  TriPoly pruned(double threshold) const;

  /// Canonical text in graded-lex order, e.g. "alpha^2 - 3*beta*psi + 1/2".
  std::string to_string() const;

 private:
  TriPoly times(const TriPoly& o) const;
  void add_term(const Monomial& m, const C& c);

  Terms terms_;
};

using ExactPoly = TriPoly<QuadraticSurd>;
using NumericPoly = TriPoly<double>;

template <class C>
TriPoly<C> quadric(int epsilon);

/// Parameters of a conformal field on M^2 in the frame (a, b, w):
/// sigma = omega R + tau T + C with pole c = rr (s a + t b) + h w.
struct ExactConformalParams {
  QuadraticSurd omega, tau, h, rr, s{1}, t{0};
};

/// The double field with the same parameters in the standard frame.
Conformal2DField make_conformal2d(int epsilon, const ExactConformalParams& params);

/// P = eps (1 + |sigma|^2)(1 + q |sigma|^2) + q ((p-2)|sigma|^2 - 2) zeta, with |sigma|^2
/// expanded in alpha, beta, psi and zeta = (omega psi - eps tau beta)^2 + gamma^2.
/// Throws std::invalid_argument when q = 0.
ExactPoly build_harmonicity_poly(int epsilon, const ExactConformalParams& params, const QuadraticSurd& p,
                                 const QuadraticSurd& q);
NumericPoly build_harmonicity_poly(const Conformal2DField& field, double p, double q);

/// |sigma|^2 and zeta as polynomials.
ExactPoly length_sq_poly(int epsilon, const ExactConformalParams& params);
ExactPoly spinnaker_poly(int epsilon, const ExactConformalParams& params);

template <class C>
struct QuadricReduction {
  bool vanishes = false;
  /// P = Q S when vanishes.
  std::optional<TriPoly<C>> witness;
  /// First homogeneous grade (4, 3 or 2) at which no S exists.
  int failing_grade = -1;
  std::string obstruction;
  bool approximate = false;
};

/// Decides P = Q S for a quadratic S, solving P4 = Q2 S2, P3 = Q2 S1,
/// P2 = Q2 S0 - eps S2, P1 = -eps S1, P0 = -eps S0 in that order. Polynomials
/// of degree above 4 are rejected with std::invalid_argument.
QuadricReduction<QuadraticSurd> vanishes_mod_quadric(const ExactPoly& P, int epsilon);
/// Coefficients with |c| <= 1e-10 (1 + max |P coefficient|) count as zero.
QuadricReduction<double> vanishes_mod_quadric(const NumericPoly& P, int epsilon, double threshold = 1e-10);

/// Remainder of P on division by Q, which has leading monomial alpha^2.
template <class C>
TriPoly<C> remainder_mod_quadric(const TriPoly<C>& P, int epsilon);

/// Solutions (theta, q) of 1 + (theta + 3) q = 0 and (1 + theta)(1 + q theta) = 0,
/// the constraints left for a hyperbolic conformal field with s = 0,
/// omega rr = tau h and p = 3, where theta = tau^2 - omega^2 + rr^2 - h^2.
struct EndpointSolution {
  Rational theta;
  Rational q;
};
std::vector<EndpointSolution> solve_endpoint_constraints();

}  // namespace hvf

#include "hvf/polyreduce_impl.hpp"
