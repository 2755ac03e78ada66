#pragma once

// The model space forms: the unit sphere S^n in Euclidean R^{n+1} and the
// upper sheet of the hyperboloid H^n in Lorentzian R^{n,1}.
//
// Besides point and tangent bookkeeping this module carries the
// finite-difference oracle used to cross-check closed-form derivatives. The
// oracle only ever samples a vector field at points of M; it never sees how
// the field was built.

#include "hvf/ambient.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hvf {

class SpaceForm {
 public:
  SpaceForm(int n, Signature sig);
  static SpaceForm sphere(int n) { return SpaceForm(n, Signature::spherical()); }
  static SpaceForm hyperbolic(int n) { return SpaceForm(n, Signature::hyperbolic()); }

  int n() const { return n_; }
  Eigen::Index dim() const { return n_ + 1; }
  Signature signature() const { return sig_; }
  int epsilon() const { return sig_.epsilon(); }
  bool is_spherical() const { return sig_.epsilon() > 0; }

  /// e_{n+1}: the north pole of S^n, the vertex of H^n.
  Vec base_coords() const;
  bool contains(const Vec& x, double tol = 1e-10) const;

  friend bool operator==(const SpaceForm& a, const SpaceForm& b) {
    return a.n_ == b.n_ && a.sig_ == b.sig_;
  }

 private:
  int n_;
  Signature sig_;
};

class ManifoldPoint {
 public:
  /// Throws std::invalid_argument if x is not on M (relative tolerance).
  ManifoldPoint(const SpaceForm& M, Vec x, double tol = 1e-10);
  static ManifoldPoint base(const SpaceForm& M) { return ManifoldPoint(M, M.base_coords()); }
  /// Rescales x back onto the quadric; for H^n also flips to the upper sheet.
  static ManifoldPoint normalized(const SpaceForm& M, const Vec& x);

  const Vec& coords() const { return x_; }
  const SpaceForm& space() const { return M_; }
  Signature signature() const { return M_.signature(); }
  int epsilon() const { return M_.epsilon(); }

 private:
  SpaceForm M_;
  Vec x_;
};

class TangentVector {
 public:
  TangentVector(ManifoldPoint base, Vec v, double tol = 1e-10);

  const ManifoldPoint& base() const { return base_; }
  const Vec& vec() const { return v_; }
  double norm_sq() const { return inner(v_, v_, base_.signature()); }
  double norm() const;

 private:
  ManifoldPoint base_;
  Vec v_;
};

struct TangentFrame {
  ManifoldPoint base;
  std::vector<TangentVector> vectors;

  /// Frame vectors as the columns of a (n+1) x n matrix.
  Mat matrix() const;
};

/// Riemannian length of an ambient vector assumed tangent to M.
double tangent_norm(const Vec& v, Signature sig);

/// u - eps <u, x> x.
TangentVector tangent_project(const ManifoldPoint& x, const Vec& u);

/// Unit-speed geodesic through x with initial velocity X (|X| = 1).
/// On H^n, |t| > 20 throws std::out_of_range.
ManifoldPoint geodesic(const ManifoldPoint& x, const TangentVector& X, double t);

/// Orthonormal basis of T_x M. Without a seed, Gram-Schmidt runs over the
/// standard basis; with one, over Gaussian draws from that seed.
TangentFrame orthonormal_frame(const ManifoldPoint& x, std::optional<std::uint64_t> seed = std::nullopt);

/// S^n: normalized Gaussians. H^n: geodesics from the vertex in a random unit
/// direction, arc length uniform on [0, max_radius].
std::vector<ManifoldPoint> sample_points(const SpaceForm& M, int count, std::uint64_t seed,
                                         double max_radius = 3.0);

// ---------------------------------------------------------------------------
// Finite-difference oracle.

using VectorFieldFn = std::function<Vec(const ManifoldPoint&)>;
using ScalarFieldFn = std::function<double(const ManifoldPoint&)>;

inline constexpr double kFirstDerivativeStep = 1e-4;
inline constexpr double kSecondDerivativeStep = 1e-3;

/// nabla_X sigma by central differences of sigma along the geodesic in the
/// direction of X, followed by the Gauss-formula correction. |X| < 1e-14
/// yields the zero vector.
TangentVector covariant_derivative_fd(const VectorFieldFn& sigma, const ManifoldPoint& x, const TangentVector& X,
                                      double h = kFirstDerivativeStep);

/// nabla^* nabla sigma = -sum_i nabla^2_{E_i,E_i} sigma from second
/// differences along the frame geodesics.
///
/// With Y(s) = sigma(gamma(s)) along a unit-speed geodesic, applying the Gauss
/// formula twice gives nabla^2_{E,E} sigma = tan(Y'') + eps <E, sigma> E.
TangentVector rough_laplacian_fd(const VectorFieldFn& sigma, const ManifoldPoint& x,
                                 double h = kSecondDerivativeStep);

/// grad f from first differences along the frame geodesics.
TangentVector gradient_fd(const ScalarFieldFn& f, const ManifoldPoint& x, double h = kFirstDerivativeStep);

/// The non-negative Laplacian Delta f = -div grad f = -sum_i (f o gamma_i)''(0).
double laplacian_fd(const ScalarFieldFn& f, const ManifoldPoint& x, double h = kSecondDerivativeStep);

}  // namespace hvf
