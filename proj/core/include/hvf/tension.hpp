#pragma once

// The harmonic-section operator for the generalized Cheeger-Gromoll metrics
// h_{p,q}:
//
//   tau_{p,q}(sigma) = (1 + |sigma|^2) nabla^* nabla sigma + 2p nabla_{grad F} sigma - phi sigma,
//   phi = p |nabla sigma|^2 - p q |grad F|^2 - q (1 + |sigma|^2) Delta F,
//
// together with the checks built on it.

#include "hvf/fields.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hvf {

struct MetricParams {
  double p = 0.0;
  double q = 0.0;

  MetricParams() = default;
  MetricParams(double p_, double q_);
};

enum class DerivativePath { ClosedForm, FiniteDifference };
std::string to_string(DerivativePath path);

struct TensionIngredients {
  Vec sigma;
  double F = 0.0;
  Vec grad_F;
  double lap_F = 0.0;
  Vec rough_lap;
  Vec nabla_grad_F;
  /// |nabla sigma|^2.
  double nabla_sigma_sq = 0.0;
  std::optional<double> spinnaker;
  DerivativePath path = DerivativePath::ClosedForm;
};

/// h <= 0 selects the oracle's default steps.
TensionIngredients ingredients(const FieldFamily& field, const ManifoldPoint& x,
                               DerivativePath path = DerivativePath::ClosedForm, double h = 0.0);

struct TensionValue {
  Vec tau;
  double phi = 0.0;
  /// (1 + |sigma|^2)(1 + |rough_lap| + |nabla_{grad F} sigma| + |phi| |sigma|).
  double scale = 1.0;
};
TensionValue tension_value(const TensionIngredients& ing, const MetricParams& mp, Signature sig);

Vec tension(const FieldFamily& field, const ManifoldPoint& x, const MetricParams& mp);

/// (p + q + 2qF) Delta F + 2p (1 + qF) zeta + nu (1 + 2(1-p) F).
/// Throws std::domain_error unless the field is a preharmonic eigenfield.
double reduced_pde_residual(const FieldFamily& field, const ManifoldPoint& x, const MetricParams& mp);

struct PreharmonicCheck {
  bool preharmonic = true;
  /// max |nabla_{grad F} sigma - zeta sigma| relative to its scale.
  double max_err = 0.0;
  /// max error of |sigma|^2 zeta = |grad F|^2.
  double identity_err = 0.0;
};

/// Uses the family's spinnaker when it has one, and otherwise the only
/// candidate |grad F|^2 / |sigma|^2. Points with |sigma| <= 1e-6 are skipped.
PreharmonicCheck preharmonic_check(const FieldFamily& field, const std::vector<ManifoldPoint>& samples,
                                   double tol = 1e-8);

/// q |sigma|^2 >= -1 at every sample, or |sigma| constant over the samples.
bool q_riemannian_check(const FieldFamily& field, double q, const std::vector<ManifoldPoint>& samples);

/// Relative error of <rough_lap, sigma> = |nabla sigma|^2 + Delta F.
double weitzenbock_error(const TensionIngredients& ing, Signature sig);

struct VerifyOptions {
  int count = 200;
  std::uint64_t seed = 42;
  DerivativePath path = DerivativePath::ClosedForm;
  /// Finite-difference step; <= 0 means the oracle defaults.
  double h_fd = 0.0;
  /// Harmonic verdict threshold on the relative residual.
  double tol = 1e-7;
  int threads = 1;
};

struct PointResidual {
  Vec x;
  double residual_norm = 0.0;
  double scale = 1.0;
};

struct TensionReport {
  std::string family;
  MetricParams mp;
  int n = 0;
  int epsilon = 0;
  std::uint64_t seed = 0;
  int count = 0;
  DerivativePath path = DerivativePath::ClosedForm;
  double tol = 1e-7;
  std::vector<PointResidual> per_point;
  double max_rel_residual = 0.0;
  double weitzenbock_max_err = 0.0;
  double spinnaker_max_err = 0.0;
  bool harmonic = false;
  bool preharmonic = false;
  bool q_riemannian = false;
};

TensionReport verify(const FieldFamily& field, const MetricParams& mp, const VerifyOptions& opts = {});

/// max over samples of |g tau(sigma)(x) - tau(g.sigma)(g x)| / scale.
double isometry_equivariance_check(const FieldFamily& field, const Mat& g, const MetricParams& mp,
                                   const std::vector<ManifoldPoint>& samples);

/// max over samples of |e^{it} tau(sigma)(x) - tau(e^{it}.sigma)(x)| / scale.
double circle_equivariance_check(const FieldFamily& field, double t, const MetricParams& mp,
                                 const std::vector<ManifoldPoint>& samples);

}  // namespace hvf
