#pragma once

#include "hvf/ambient.hpp"

namespace hvf::detail {

/// u - eps <u, x> x without the validation done by tangent_project.
inline Vec project(const Vec& u, const Vec& x, Signature sig) {
  return u - sig.epsilon() * inner(u, x, sig) * x;
}

/// Matrix of the tangential projection at x, so project(u) = P u.
inline Mat projector(const Vec& x, Signature sig) {
  const Mat eta = metric_matrix(x.size(), sig);
  return Mat::Identity(x.size(), x.size()) - sig.epsilon() * x * (eta * x).transpose();
}

/// The matrix of X -> <u, X> v.
inline Mat outer(const Vec& v, const Vec& u, Signature sig) {
  return v * (metric_matrix(u.size(), sig) * u).transpose();
}

inline double norm_sq(const Vec& v, Signature sig) { return inner(v, v, sig); }

}  // namespace hvf::detail
