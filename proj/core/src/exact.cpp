#include "hvf/exact.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hvf {

namespace {

int rational_sign(const Rational& r) { return r.sign(); }

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QuadraticSurd run() {
    QuadraticSurd v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse exact number \"" + s_ + "\": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadraticSurd expr() {
    QuadraticSurd v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  QuadraticSurd term() {
    if (eat('-')) return -term();
    if (eat('+')) return term();
    QuadraticSurd v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        QuadraticSurd d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  QuadraticSurd factor() {
    skip();
    if (eat('(')) {
      QuadraticSurd v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      QuadraticSurd v = expr();
      if (!eat(')')) fail("missing ')'");
      if (!v.is_rational()) fail("sqrt of an irrational value");
      if (v.rational_part() < 0) fail("sqrt of a negative value");
      return QuadraticSurd::sqrt(v.rational_part());
    }
    return number();
  }

  QuadraticSurd number() {
    skip();
    BigInt whole = 0;
    BigInt frac = 0;
    BigInt scale = 1;
    bool any = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      whole = whole * 10 + (s_[pos_++] - '0');
      any = true;
    }
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        frac = frac * 10 + (s_[pos_++] - '0');
        scale *= 10;
        any = true;
      }
    }
    if (!any) fail("expected a number");
    return QuadraticSurd(Rational(whole * scale + frac, scale));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::pair<BigInt, std::int64_t> squarefree_split(std::int64_t v) {
  if (v < 0) throw std::domain_error("squarefree_split: negative argument");
  if (v == 0) return {0, 1};
  BigInt k = 1;
  std::int64_t d = 1;
  std::int64_t rest = v;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) d *= p;
  }
  d *= rest;
  return {k, d};
}

QuadraticSurd::QuadraticSurd(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)) {
  if (d < 0) throw std::domain_error("QuadraticSurd: negative radicand");
  auto [k, sf] = squarefree_split(d);
  if (sf == 1) {
    a_ += b_ * Rational(k);
    b_ = 0;
    d_ = 1;
  } else {
    b_ *= Rational(k);
    d_ = sf;
  }
  if (b_ == 0) d_ = 1;
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& v) {
  if (v < 0) throw std::domain_error("QuadraticSurd::sqrt: negative argument");
  // sqrt(p/q) = sqrt(p*q)/q
  const BigInt p = boost::multiprecision::numerator(v);
  const BigInt q = boost::multiprecision::denominator(v);
  const BigInt pq = p * q;
  if (pq > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("QuadraticSurd::sqrt: argument too large");
  }
  return QuadraticSurd(0, Rational(1, q), static_cast<std::int64_t>(pq));
}

QuadraticSurd QuadraticSurd::parse(const std::string& text) { return Parser(text).run(); }

std::int64_t QuadraticSurd::common_radicand(const QuadraticSurd& o) const {
  if (b_ == 0) return o.d_;
  if (o.b_ == 0) return d_;
  if (d_ != o.d_) {
    throw RadicandMismatch("QuadraticSurd: radicands " + std::to_string(d_) + " and " + std::to_string(o.d_) +
                           " cannot be mixed");
  }
  return d_;
}

int QuadraticSurd::sign() const {
  const int sa = rational_sign(a_);
  const int sb = rational_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational diff = a_ * a_ - b_ * b_ * Rational(d_);
  return diff > 0 ? sa : (diff < 0 ? sb : 0);
}

double QuadraticSurd::to_double() const {
  const double a = a_.convert_to<double>();
  if (b_ == 0) return a;
  const double b = b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
  // Values like sqrt(73) - 7 lose digits when summed naively only if the
  // terms nearly cancel; rationalize in that case.
  if (a != 0 && (a > 0) != (b > 0) && std::abs(a + b) < 1e-3 * std::abs(a)) {
    const Rational num = a_ * a_ - b_ * b_ * Rational(d_);
    const double conj = a - b;
    return num.convert_to<double>() / conj;
  }
  return a + b;
}

std::string QuadraticSurd::to_string() const {
  const BigInt den = lcm(boost::multiprecision::denominator(a_), boost::multiprecision::denominator(b_));
  const BigInt A = boost::multiprecision::numerator(a_ * Rational(den));
  const BigInt B = boost::multiprecision::numerator(b_ * Rational(den));

  std::ostringstream num;
  int terms = 0;
  if (A != 0 || B == 0) {
    num << A;
    ++terms;
  }
  if (B != 0) {
    const BigInt mag = B < 0 ? BigInt(-B) : B;
    std::ostringstream root;
    if (mag != 1) root << mag << "*";
    root << "sqrt(" << d_ << ")";
    if (terms == 0) {
      num << (B < 0 ? "-" : "") << root.str();
    } else {
      num << (B < 0 ? " - " : " + ") << root.str();
    }
    ++terms;
  }
  if (den == 1) return num.str();
  std::ostringstream out;
  if (terms > 1) {
    out << "(" << num.str() << ")/" << den;
  } else {
    out << num.str() << "/" << den;
  }
  return out.str();
}

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) d_ = 1;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) { return *this += -o; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  const std::int64_t d = common_radicand(o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = b_ == 0 ? 1 : d;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
  if (o.is_zero()) throw std::domain_error("QuadraticSurd: division by zero");
  const std::int64_t d = common_radicand(o);
  // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d); the norm is nonzero for
  // squarefree d > 1.
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  QuadraticSurd conj;
  conj.a_ = o.a_ / norm;
  conj.b_ = -o.b_ / norm;
  conj.d_ = conj.b_ == 0 ? 1 : d;
  return *this *= conj;
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.to_string(); }

QuadraticRoots solve_quadratic_exact(std::int64_t c2, std::int64_t c1, std::int64_t c0) {
  QuadraticRoots out;
  if (c2 == 0) {
    if (c1 == 0) throw std::domain_error("solve_quadratic_exact: degenerate equation");
    out.first = QuadraticSurd(Rational(-c0) / Rational(c1));
    out.second = out.first;
    return out;
  }
  const BigInt disc = BigInt(c1) * c1 - BigInt(4) * c2 * c0;
  if (disc < 0) {
    out.real = false;
    return out;
  }
  if (disc > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("solve_quadratic_exact: discriminant too large");
  }
  const QuadraticSurd root = QuadraticSurd::sqrt(Rational(disc));
  const QuadraticSurd b(c1);
  // t = -(b + sign(b) sqrt(disc))/2
  const QuadraticSurd t = c1 >= 0 ? (b + root) / QuadraticSurd(-2) : (b - root) / QuadraticSurd(-2);
  out.first = t / QuadraticSurd(c2);
  out.second = t.is_zero() ? QuadraticSurd(0) : QuadraticSurd(c0) / t;
  return out;
}

}  // namespace hvf
