#include "hvf/spaceform.hpp"

#include <cmath>
#include <stdexcept>

namespace hvf {

namespace {

double point_defect(const Vec& x, Signature sig) {
  return std::abs(inner(x, x, sig) - sig.epsilon()) / (1.0 + x.squaredNorm());
}

}  // namespace

SpaceForm::SpaceForm(int n, Signature sig) : n_(n), sig_(sig) {
  if (n < 1) throw std::invalid_argument("SpaceForm: dimension must be at least 1");
}

Vec SpaceForm::base_coords() const {
  Vec e = Vec::Zero(dim());
  e(n_) = 1.0;
  return e;
}

bool SpaceForm::contains(const Vec& x, double tol) const {
  if (x.size() != dim()) return false;
  if (point_defect(x, sig_) > tol) return false;
  if (sig_.is_lorentzian() && x(n_) <= 0) return false;
  return true;
}

ManifoldPoint::ManifoldPoint(const SpaceForm& M, Vec x, double tol) : M_(M), x_(std::move(x)) {
  if (!M_.contains(x_, tol)) {
    throw std::invalid_argument("ManifoldPoint: coordinates do not lie on the space form");
  }
}

ManifoldPoint ManifoldPoint::normalized(const SpaceForm& M, const Vec& x) {
  const double q = M.epsilon() * inner(x, x, M.signature());
  if (!(q > 0)) throw std::invalid_argument("ManifoldPoint::normalized: vector has wrong causal type");
  Vec y = x / std::sqrt(q);
  if (M.signature().is_lorentzian() && y(M.n()) < 0) y = -y;
  return ManifoldPoint(M, std::move(y));
}

TangentVector::TangentVector(ManifoldPoint base, Vec v, double tol) : base_(std::move(base)), v_(std::move(v)) {
  const Vec& x = base_.coords();
  if (v_.size() != x.size()) throw std::invalid_argument("TangentVector: dimension mismatch");
  const double defect = std::abs(inner(v_, x, base_.signature()));
  if (defect > tol * (1.0 + v_.norm() * x.norm())) {
    throw std::invalid_argument("TangentVector: vector is not tangent at its base point");
  }
}

double TangentVector::norm() const { return tangent_norm(v_, base_.signature()); }

Mat TangentFrame::matrix() const {
  Mat m(base.coords().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectors[i].vec();
  return m;
}

double tangent_norm(const Vec& v, Signature sig) { return std::sqrt(std::max(0.0, inner(v, v, sig))); }

TangentVector tangent_project(const ManifoldPoint& x, const Vec& u) {
  const Vec& p = x.coords();
  Vec v = u - x.epsilon() * inner(u, p, x.signature()) * p;
  return TangentVector(x, std::move(v));
}

ManifoldPoint geodesic(const ManifoldPoint& x, const TangentVector& X, double t) {
  const Signature sig = x.signature();
  if (std::abs(X.norm_sq() - 1.0) > 1e-10) {
    throw std::invalid_argument("geodesic: initial velocity must be a unit vector");
  }
  Vec y;
  if (sig.is_lorentzian()) {
    if (std::abs(t) > 20.0) throw std::out_of_range("geodesic: |t| > 20 on H^n");
    y = std::cosh(t) * x.coords() + std::sinh(t) * X.vec();
  } else {
    y = std::cos(t) * x.coords() + std::sin(t) * X.vec();
  }
  return ManifoldPoint::normalized(x.space(), y);
}

TangentFrame orthonormal_frame(const ManifoldPoint& x, std::optional<std::uint64_t> seed) {
  const Signature sig = x.signature();
  const Eigen::Index dim = x.coords().size();
  const int n = x.space().n();

  std::vector<Vec> candidates;
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 4 * (n + 1); ++k) {
      Vec u(dim);
      for (Eigen::Index i = 0; i < dim; ++i) u(i) = gauss(rng);
      candidates.push_back(std::move(u));
    }
  }
  for (Eigen::Index i = 0; i < dim; ++i) candidates.push_back(Vec::Unit(dim, i));

  TangentFrame frame{x, {}};
  for (const Vec& c : candidates) {
    if (static_cast<int>(frame.vectors.size()) == n) break;
    Vec v = tangent_project(x, c).vec();
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (const TangentVector& e : frame.vectors) v -= inner(v, e.vec(), sig) * e.vec();
    }
    const double len = tangent_norm(v, sig);
    if (len < 1e-3 * (1.0 + c.norm())) continue;
    frame.vectors.emplace_back(x, v / len);
  }
  if (static_cast<int>(frame.vectors.size()) != n) {
    throw std::runtime_error("orthonormal_frame: failed to span the tangent space");
  }
  return frame;
}

std::vector<ManifoldPoint> sample_points(const SpaceForm& M, int count, std::uint64_t seed, double max_radius) {
  if (count < 1) throw std::invalid_argument("sample_points: count must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<ManifoldPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  const Eigen::Index dim = M.dim();
  if (M.is_spherical()) {
    while (static_cast<int>(out.size()) < count) {
      Vec u(dim);
      for (Eigen::Index i = 0; i < dim; ++i) u(i) = gauss(rng);
      if (u.norm() < 1e-12) continue;
      out.push_back(ManifoldPoint::normalized(M, u));
    }
    return out;
  }
  std::uniform_real_distribution<double> radius(0.0, max_radius);
  const ManifoldPoint o = ManifoldPoint::base(M);
  while (static_cast<int>(out.size()) < count) {
    Vec u = Vec::Zero(dim);
    for (int i = 0; i < M.n(); ++i) u(i) = gauss(rng);
    const double len = u.norm();
    if (len < 1e-12) continue;
    const TangentVector dir(o, u / len);
    out.push_back(geodesic(o, dir, radius(rng)));
  }
  return out;
}

TangentVector covariant_derivative_fd(const VectorFieldFn& sigma, const ManifoldPoint& x, const TangentVector& X,
                                      double h) {
  if (!(h > 0)) throw std::invalid_argument("covariant_derivative_fd: step must be positive");
  const double speed = X.norm();
  const Eigen::Index dim = x.coords().size();
  if (speed < 1e-14) return TangentVector(x, Vec::Zero(dim));
  const TangentVector unit(x, X.vec() / speed);
  const Vec plus = sigma(geodesic(x, unit, h));
  const Vec minus = sigma(geodesic(x, unit, -h));
  const Vec D = speed * (plus - minus) / (2.0 * h);
  const Vec s0 = sigma(x);
  const Vec corrected = D + x.epsilon() * inner(X.vec(), s0, x.signature()) * x.coords();
  // The correction cancels the normal part of D up to O(h^2); project the rest.
  return tangent_project(x, corrected);
}

TangentVector rough_laplacian_fd(const VectorFieldFn& sigma, const ManifoldPoint& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("rough_laplacian_fd: step must be positive");
  const Signature sig = x.signature();
  const TangentFrame frame = orthonormal_frame(x);
  const Vec s0 = sigma(x);
  Vec trace = Vec::Zero(s0.size());
  for (const TangentVector& E : frame.vectors) {
    const Vec plus = sigma(geodesic(x, E, h));
    const Vec minus = sigma(geodesic(x, E, -h));
    const Vec second = (plus - 2.0 * s0 + minus) / (h * h);
    trace += tangent_project(x, second).vec() + x.epsilon() * inner(E.vec(), s0, sig) * E.vec();
  }
  return tangent_project(x, -trace);
}

TangentVector gradient_fd(const ScalarFieldFn& f, const ManifoldPoint& x, double h) {
  const TangentFrame frame = orthonormal_frame(x);
  Vec g = Vec::Zero(x.coords().size());
  for (const TangentVector& E : frame.vectors) {
    const double d = (f(geodesic(x, E, h)) - f(geodesic(x, E, -h))) / (2.0 * h);
    g += d * E.vec();
  }
  return TangentVector(x, std::move(g));
}

double laplacian_fd(const ScalarFieldFn& f, const ManifoldPoint& x, double h) {
  const TangentFrame frame = orthonormal_frame(x);
  const double f0 = f(x);
  double trace = 0.0;
  for (const TangentVector& E : frame.vectors) {
    trace += (f(geodesic(x, E, h)) - 2.0 * f0 + f(geodesic(x, E, -h))) / (h * h);
  }
  return -trace;
}

}  // namespace hvf
