#pragma once

// Exact arithmetic in Q(sqrt d): numbers a + b*sqrt(d) with a, b rational and d
// a squarefree integer > 1. All operands in one computation must share d; a
// purely rational value (b = 0) is compatible with any radicand.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace hvf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when two surds with different radicands meet.
class RadicandMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(long long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  /// a + b*sqrt(d). d is reduced to its squarefree part; d must be >= 0.
  QuadraticSurd(Rational a, Rational b, std::int64_t d);

  /// sqrt(v) for a non-negative rational v.
  static QuadraticSurd sqrt(const Rational& v);
  /// Accepts sums of terms like "3", "-2/5", "0.6", "sqrt(2)", "3/4*sqrt(8)", "sqrt(1/2)".
  static QuadraticSurd parse(const std::string& text);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  /// Squarefree radicand, or 1 for a rational value.
  std::int64_t radicand() const { return b_ == 0 ? 1 : d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  double to_double() const;
  /// Canonical form over a common denominator, e.g. "(-13 + sqrt(73))/8".
  std::string to_string() const;

  QuadraticSurd operator-() const;
  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  QuadraticSurd& operator/=(const QuadraticSurd& o);

  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
  friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }

 private:
  std::int64_t common_radicand(const QuadraticSurd& o) const;

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s);

/// Splits v = k^2 * d with d squarefree; returns {k, d}. v must be >= 0.
std::pair<BigInt, std::int64_t> squarefree_split(std::int64_t v);

/// Roots of c2*u^2 + c1*u + c0 with integer coefficients, in exact form.
/// The root of larger magnitude is formed first, the other from the product of
/// roots, which mirrors the stable floating-point formula.
struct QuadraticRoots {
  QuadraticSurd first;
  QuadraticSurd second;
  bool real = true;
};
QuadraticRoots solve_quadratic_exact(std::int64_t c2, std::int64_t c1, std::int64_t c0);

}  // namespace hvf
