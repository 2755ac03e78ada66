#include "hvf/fields.hpp"

#include "detail.hpp"

#include <stdexcept>

namespace hvf {

ConformalGradientField::ConformalGradientField(const SpaceForm& M, Vec pole) : M_(M), a_(std::move(pole)) {
  if (a_.size() != M_.dim()) throw std::invalid_argument("ConformalGradientField: pole has wrong dimension");
  mu_ = inner(a_, a_, M_.signature());
}

Vec ConformalGradientField::sigma(const ManifoldPoint& x) const {
  const double alpha = inner(a_, x.coords(), M_.signature());
  return a_ - M_.epsilon() * alpha * x.coords();
}

FieldPointData ConformalGradientField::analyze(const ManifoldPoint& x) const {
  const int eps = M_.epsilon();
  const int n = M_.n();
  const Eigen::Index dim = M_.dim();
  const double alpha = inner(a_, x.coords(), M_.signature());

  FieldPointData d{x, sigma(x), 0.0, Vec(), 0.0, Vec(), Vec(), std::nullopt, std::nullopt};
  d.F = 0.5 * (mu_ - eps * alpha * alpha);
  d.grad_F = -eps * alpha * d.sigma;
  d.lap_F = eps * (2.0 * (n + 1) * d.F - n * mu_);
  d.rough_lap = eps * d.sigma;
  d.nabla_grad_F = alpha * alpha * d.sigma;
  d.spinnaker = eps * (mu_ - 2.0 * d.F);
  d.nabla_sigma = Mat(-eps * alpha * Mat::Identity(dim, dim));
  return d;
}

}  // namespace hvf
