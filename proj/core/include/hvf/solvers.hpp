#pragma once

// Closed-form solutions of the parameter equations that single out harmonic
// fields, the resulting classifications, and the bound chains they satisfy.

#include "hvf/exact.hpp"
#include "hvf/fields.hpp"
#include "hvf/tension.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hvf {

/// A proven non-existence result, as opposed to an input error.
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MuSign { Positive, Zero, Negative };

struct ExactMetricParams {
  QuadraticSurd p;
  QuadraticSurd q;
  MetricParams numeric() const { return MetricParams(p.to_double(), q.to_double()); }
};

struct Classification {
  std::string family;  // confgrad, killing, quadratic, loxodromic
  int n = 0;
  int epsilon = 0;
  int r = 0;
  /// omega0 (killing), lambda0 (quadratic), mu (confgrad), omega^2 - mu (loxodromic).
  std::string scale_name;
  double scale = 0.0;
  /// Exact value of scale^2 for killing/quadratic, of scale itself otherwise.
  QuadraticSurd scale_exact;
  std::vector<ExactMetricParams> metric_params;
  bool metrically_unique = true;

  double omega0_sq() const;   // killing only
  double lambda0_sq() const;  // quadratic only
};

/// omega0^2: the positive root of 2ck u^2 + eps(2nk - c) u + 1 - n = 0 with
/// c = n+1-2r, k = r-1.
double twist_roots(int n, int r, int epsilon);
QuadraticSurd twist_roots_exact(int n, int r, int epsilon);

Classification killing_classification(int n, int r, int epsilon);
Classification conformal_gradient_classification(int n, int epsilon, MuSign mu_sign);
Classification quadratic_classification(int n);
Classification loxodromic_classification();

struct BoundCheck {
  std::string name;
  std::string inequality;
  bool holds = false;
  /// Slack of the inequality; positive when it holds.
  double margin = 0.0;
};

std::vector<BoundCheck> bounds_report(const Classification& c);

/// A field realizing the classification: omega0 Sigma_r, lambda0 Sigma_r,
/// a conformal gradient with the right mu, or the member of the associate
/// family with (sin t, cos t) = (3/5, 4/5).
FieldFamily representative_field(const Classification& c);

/// sin(t) sigma_0 + cos(t) sigma_1 on H^2, with sigma_0 = Sigma_1 and sigma_1
/// the conformal gradient with pole e_3. Requires sin t, cos t > 0.
LoxodromicField associate_member(double sin_t, double cos_t);

struct CatalogueEntry {
  std::string label;
  FieldFamily field;
  MetricParams mp;
  /// Fields of constant length are harmonic at a whole line of (p, q).
  bool constant_length = false;
};

/// Every harmonic field with the metric parameters at which it is harmonic.
std::vector<CatalogueEntry> catalogue();

}  // namespace hvf
