#include "hvf/fields.hpp"

#include "detail.hpp"

#include <cmath>
#include <stdexcept>

namespace hvf {

QuadraticGradientField::QuadraticGradientField(const SpaceForm& M, SymOperator Q) : M_(M), Q_(std::move(Q)) {
  if (!M_.is_spherical()) throw std::invalid_argument("QuadraticGradientField: spheres only");
  if (Q_.dim() != M_.dim()) throw std::invalid_argument("QuadraticGradientField: operator has wrong dimension");
  const Mat& q = Q_.matrix();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (q + q.transpose()), Eigen::EigenvaluesOnly);
  eig_ = es.eigenvalues();
  const double scale = std::max(1.0, eig_.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < eig_.size(); ++i) {
    if (distinct_.empty() || eig_(i) - distinct_.back() > 1e-8 * scale) distinct_.push_back(eig_(i));
  }
}

double QuadraticGradientField::sup_norm() const { return 0.5 * (eig_(eig_.size() - 1) - eig_(0)); }

Vec QuadraticGradientField::sigma(const ManifoldPoint& x) const {
  const Vec qx = Q_(x.coords());
  return qx - qx.dot(x.coords()) * x.coords();
}

FieldPointData QuadraticGradientField::analyze(const ManifoldPoint& x) const {
  const int n = M_.n();
  const Mat& q = Q_.matrix();
  const Vec& p = x.coords();
  const Vec q1 = q * p;
  const Vec q2 = q * q1;
  const Vec q3 = q * q2;
  const double xi = q1.dot(p);
  const double xi2 = q2.dot(p);
  const Vec s1 = q1 - xi * p;
  const Vec s2 = q2 - xi2 * p;
  const Vec s3 = q3 - q3.dot(p) * p;
  const double trQ = q.trace();
  const double trQ2 = (q * q).trace();

  FieldPointData d{x, s1, 0.0, Vec(), 0.0, Vec(), Vec(), std::nullopt, std::nullopt};
  const double len2 = xi2 - xi * xi;
  d.F = 0.5 * len2;
  d.grad_F = s2 - 2.0 * xi * s1;
  d.lap_F = -trQ2 + (n + 1) * xi2 + 2.0 * xi * trQ - 2.0 * (n + 1) * xi * xi + 4.0 * len2;
  d.rough_lap = (n + 3) * s1;
  d.nabla_grad_F = s3 - 3.0 * xi * s2 + (4.0 * xi * xi - xi2) * s1;
  if (distinct_.size() == 2) {
    const double g = distinct_[0] + distinct_[1] - 2.0 * xi;
    d.spinnaker = g * g;
  } else if (distinct_.size() == 1) {
    d.spinnaker = 0.0;
  }
  // nabla_X sigma = Q X - <Q x, X> x - xi X.
  const Eigen::Index dim = p.size();
  d.nabla_sigma = Mat(q - p * q1.transpose() - xi * Mat::Identity(dim, dim));
  return d;
}

}  // namespace hvf
