#pragma once

// Template definitions for polyreduce.hpp.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hvf {

namespace poly_detail {

inline bool is_zero(const QuadraticSurd& c) { return c.is_zero(); }
inline bool is_zero(double c) { return c == 0.0; }
inline bool is_negative(const QuadraticSurd& c) { return c.sign() < 0; }
inline bool is_negative(double c) { return c < 0.0; }
inline double magnitude(const QuadraticSurd& c) { return std::abs(c.to_double()); }
inline double magnitude(double c) { return std::abs(c); }

inline std::string format(const QuadraticSurd& c) {
  std::string s = c.to_string();
  if (s.find(' ') != std::string::npos && s.front() != '(') s = "(" + s + ")";
  return s;
}
inline std::string format(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

}  // namespace poly_detail

template <class C>
TriPoly<C> TriPoly<C>::monomial(const C& c, Monomial m) {
  TriPoly out;
  out.add_term(m, c);
  return out;
}

template <class C>
void TriPoly<C>::add_term(const Monomial& m, const C& c) {
  if (poly_detail::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (poly_detail::is_zero(it->second)) terms_.erase(it);
}

template <class C>
int TriPoly<C>::degree() const {
  if (terms_.empty()) return -1;
  const Monomial& m = terms_.begin()->first;
  return m[0] + m[1] + m[2];
}

template <class C>
C TriPoly<C>::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? C(0) : it->second;
}

template <class C>
TriPoly<C> TriPoly<C>::homogeneous_part(int k) const {
  TriPoly out;
  for (const auto& [m, c] : terms_) {
    if (m[0] + m[1] + m[2] == k) out.terms_.emplace(m, c);
  }
  return out;
}

template <class C>
TriPoly<C> TriPoly<C>::operator-() const {
  TriPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, C(0) - c);
  return out;
}

template <class C>
TriPoly<C>& TriPoly<C>::operator+=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

template <class C>
TriPoly<C>& TriPoly<C>::operator-=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, C(0) - c);
  return *this;
}

template <class C>
TriPoly<C>& TriPoly<C>::operator*=(const C& k) {
  if (poly_detail::is_zero(k)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c = c * k;
  return *this;
}

template <class C>
TriPoly<C> TriPoly<C>::times(const TriPoly& o) const {
  TriPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      out.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    }
  }
  return out;
}

template <class C>
double TriPoly<C>::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [mono, c] : terms_) m = std::max(m, poly_detail::magnitude(c));
  return m;
}

template <class C>
TriPoly<C> TriPoly<C>::pruned(double threshold) const {
  TriPoly out;
  for (const auto& [m, c] : terms_) {
    if (poly_detail::magnitude(c) > threshold) out.terms_.emplace(m, c);
  }
  return out;
}

template <class C>
std::string TriPoly<C>::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"alpha", "beta", "psi"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = poly_detail::is_negative(c);
    const C mag = neg ? C(0) - c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (any) mono << "*";
      mono << names[v];
      if (m[v] > 1) mono << "^" << m[v];
      any = true;
    }
    if (!any) {
      os << poly_detail::format(mag);
    } else if (mag == C(1)) {
      os << mono.str();
    } else {
      os << poly_detail::format(mag) << "*" << mono.str();
    }
  }
  return os.str();
}

template <class C>
TriPoly<C> quadric(int epsilon) {
  const C e(epsilon);
  return TriPoly<C>::monomial(C(1), {2, 0, 0}) + TriPoly<C>::monomial(C(1), {0, 2, 0}) +
         TriPoly<C>::monomial(e, {0, 0, 2}) + TriPoly<C>::constant(C(0) - e);
}

template <class C>
TriPoly<C> remainder_mod_quadric(const TriPoly<C>& P, int epsilon) {
  // alpha^2 = eps - beta^2 - eps psi^2 on the quadric.
  const C e(epsilon);
  const TriPoly<C> sub = TriPoly<C>::constant(e) - TriPoly<C>::monomial(C(1), {0, 2, 0}) -
                         TriPoly<C>::monomial(e, {0, 0, 2});
  TriPoly<C> rest = P;
  TriPoly<C> out;
  while (!rest.is_zero()) {
    auto it = rest.terms().begin();
    for (; it != rest.terms().end(); ++it) {
      if (it->first[0] >= 2) break;
    }
    if (it == rest.terms().end()) {
      out += rest;
      break;
    }
    const Monomial m = it->first;
    const C c = it->second;
    const TriPoly<C> cofactor = TriPoly<C>::monomial(c, {m[0] - 2, m[1], m[2]});
    rest -= TriPoly<C>::monomial(c, m);
    rest += cofactor * sub;
  }
  return out;
}

}  // namespace hvf
