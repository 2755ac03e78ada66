#include "hvf/fields.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hvf {

namespace {

constexpr double kTwistClusterTol = 1e-8;
constexpr double kCubicTol = 1e-10;
constexpr double kTypeTol = 1e-9;

// Twists of a Euclidean-skew matrix: square roots of the eigenvalues of -M^2,
// which come in equal pairs.
std::vector<double> twists_of(const Mat& m) {
  std::vector<double> out;
  if (m.size() == 0) return out;
  const Mat s = -(m * m);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (s + s.transpose()), Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.rbegin(), ev.rend());
  const double top = std::max(1.0, ev.front());
  for (std::size_t i = 0; i + 1 < ev.size(); i += 2) {
    if (ev[i] <= kTwistClusterTol * top) break;
    out.push_back(std::sqrt(0.5 * (ev[i] + ev[i + 1])));
  }
  return out;
}

}  // namespace

KillingField::KillingField(const SpaceForm& M, SkewOperator A, std::optional<Vec> base)
    : M_(M), A_(std::move(A)), w_(base ? *base : M.base_coords()) {
  if (A_.dim() != M_.dim() || !(A_.signature() == M_.signature())) {
    throw std::invalid_argument("KillingField: operator does not match the space form");
  }
  if (!M_.contains(w_)) throw std::invalid_argument("KillingField: base point is not on M");
  const Signature sig = M_.signature();
  const Mat& a = A_.matrix();
  norm_sq_L_ = lorentz_pairing(A_, A_);
  invariant_ = 0.5 * norm_sq_L_;

  if (M_.is_spherical()) {
    twists_ = twists_of(a);
  } else {
    const Vec v = a * w_;
    tau_ = tangent_norm(v, sig);
    const Mat eta = metric_matrix(M_.dim(), sig);
    const Mat R = a + v * (eta * w_).transpose() - w_ * (eta * v).transpose();
    const TangentFrame frame = orthonormal_frame(ManifoldPoint(M_, w_));
    const Mat E = frame.matrix();
    twists_ = twists_of(E.transpose() * eta * R * E);
  }

  // A^3 = lambda A, lambda fitted in the Frobenius sense.
  const double aa = a.squaredNorm();
  if (aa == 0.0) {
    lambda_ = 0.0;
  } else {
    const Mat a3 = a * a * a;
    const double lambda = (a3.array() * a.array()).sum() / aa;
    const double scale = std::max(operator_norm(a3), std::abs(lambda) * operator_norm(a));
    if (operator_norm(a3 - lambda * a) <= kCubicTol * std::max(scale, 1e-300)) lambda_ = lambda;
  }
}

bool KillingField::balanced() const {
  if (twists_.empty()) return true;
  return twists_.front() - twists_.back() <= kTwistClusterTol * std::max(1.0, twists_.front());
}

KillingType KillingField::type() const {
  if (M_.is_spherical()) return KillingType::Rotation;
  const double scale = std::max(1.0, A_.matrix().squaredNorm());
  if (invariant_ > kTypeTol * scale) return KillingType::Rotation;
  if (invariant_ < -kTypeTol * scale) return KillingType::Translation;
  return KillingType::Parabolic;
}

FieldPointData KillingField::analyze(const ManifoldPoint& x) const {
  const Signature sig = M_.signature();
  const int eps = M_.epsilon();
  const int n = M_.n();
  const Mat& a = A_.matrix();
  const Vec& p = x.coords();

  FieldPointData d{x, a * p, 0.0, Vec(), 0.0, Vec(), Vec(), std::nullopt, std::nullopt};
  const double s2 = inner(d.sigma, d.sigma, sig);
  const Vec a2x = a * d.sigma;
  const Vec a3x = a * a2x;
  d.F = 0.5 * s2;
  d.grad_F = -a2x - eps * s2 * p;
  d.lap_F = eps * (n + 1) * s2 - norm_sq_L_;
  d.rough_lap = eps * (n - 1) * d.sigma;
  d.nabla_grad_F = -a3x - eps * s2 * d.sigma;
  if (lambda_) d.spinnaker = -(*lambda_ + eps * s2);
  d.nabla_sigma = Mat(detail::projector(p, sig) * a);
  return d;
}

KillingField GeneralizedHopfField::field() const { return hopf_field_operator(r, scale, M); }

KillingField hopf_field_operator(int r, double scale, const SpaceForm& M) {
  const int dim = static_cast<int>(M.dim());
  if (r < 0) throw std::invalid_argument("hopf_field_operator: rank must be non-negative");
  if (M.is_spherical() ? 2 * r > dim : 2 * r >= dim) {
    throw std::invalid_argument("hopf_field_operator: rank " + std::to_string(r) + " too large for n = " +
                                std::to_string(M.n()));
  }
  Mat a = Mat::Zero(dim, dim);
  for (int i = 0; i < r; ++i) {
    a(2 * i + 1, 2 * i) = scale;
    a(2 * i, 2 * i + 1) = -scale;
  }
  return KillingField(M, SkewOperator(a, M.signature()));
}

SkewOperator elementary_killing_operator(const Vec& a, const Vec& b, Signature sig) {
  if (a.size() != b.size()) throw std::invalid_argument("elementary_killing: dimension mismatch");
  return SkewOperator(detail::outer(b, a, sig) - detail::outer(a, b, sig), sig, 1e-10);
}

KillingField elementary_killing(const Vec& a, const Vec& b, const SpaceForm& M) {
  if (a.size() != M.dim()) throw std::invalid_argument("elementary_killing: dimension mismatch");
  return KillingField(M, elementary_killing_operator(a, b, M.signature()));
}

}  // namespace hvf
