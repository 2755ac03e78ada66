#pragma once

#include "hvf/fields.hpp"
#include "hvf/polyreduce.hpp"
#include "hvf/solvers.hpp"
#include "hvf/tension.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace hvf::testing {

inline double rel_err(double a, double b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

inline double vec_rel_err(const Vec& a, const Vec& b) {
  return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm()));
}

inline Mat random_matrix(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = g(rng);
  }
  return m;
}

/// eta-skew: A = B eta with B antisymmetric.
inline SkewOperator random_skew(Eigen::Index dim, Signature sig, std::mt19937_64& rng) {
  const Mat b = random_matrix(dim, rng);
  return SkewOperator((b - b.transpose()) * metric_matrix(dim, sig) * 0.5, sig, 1e-10);
}

inline SymOperator random_sym(Eigen::Index dim, std::mt19937_64& rng) {
  const Mat b = random_matrix(dim, rng);
  return SymOperator(0.5 * (b + b.transpose()));
}

inline Vec random_vec(Eigen::Index dim, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = g(rng);
  return v;
}

struct NamedField {
  std::string name;
  FieldFamily field;
};

/// One or more instances of every family, on both space forms where defined.
inline std::vector<NamedField> family_zoo() {
  std::vector<NamedField> z;
  const SpaceForm S2 = SpaceForm::sphere(2), S3 = SpaceForm::sphere(3), S4 = SpaceForm::sphere(4);
  const SpaceForm H2 = SpaceForm::hyperbolic(2), H3 = SpaceForm::hyperbolic(3), H4 = SpaceForm::hyperbolic(4);
  z.push_back({"confgrad S3", ConformalGradientField(S3, (Vec(4) << 0.3, -0.2, 0.5, 0.8).finished())});
  z.push_back({"confgrad H3 timelike", ConformalGradientField(H3, (Vec(4) << 0.2, 0.1, -0.3, 1.1).finished())});
  z.push_back({"confgrad H2 spacelike", ConformalGradientField(H2, (Vec(3) << 1.2, 0.3, 0.4).finished())});
  std::mt19937_64 rng(7);
  z.push_back({"killing S4 generic", KillingField(S4, random_skew(5, S4.signature(), rng))});
  z.push_back({"killing H3 generic", KillingField(H3, random_skew(4, H3.signature(), rng))});
  z.push_back({"hopf S3", hopf_field_operator(2, 1.0, S3)});
  z.push_back({"loxodromic S4", LoxodromicField::standard(S4, 2, 0.7, (Vec(5) << 0, 0, 0, 0, 0.9).finished())});
  z.push_back({"loxodromic H2", LoxodromicField::standard(H2, 1, 0.8, (Vec(3) << 0, 0, 0.6).finished())});
  z.push_back({"loxodromic H3", LoxodromicField::standard(H3, 1, 0.5, (Vec(4) << 0, 0, 0.4, 0.3).finished())});
  z.push_back({"dipole S3", DipoleDeformationField::standard(S3, 0.7, 0.4)});
  z.push_back({"dipole H2", DipoleDeformationField::standard(H2, 0.6, 0.9)});
  z.push_back({"conformal2d S2",
               Conformal2DField::standard(S2, Conformal2DField::Params{0.8, 0.0, 0.5, 0.6, 0.6, 0.8})});
  z.push_back({"conformal2d H2",
               Conformal2DField::standard(H2, Conformal2DField::Params{0.7, 0.4, 0.3, 0.5, 0.8, -0.6})});
  z.push_back({"quadratic S4 generic", QuadraticGradientField(S4, random_sym(5, rng))});
  {
    Vec ev(4);
    ev << 0.9, 0.9, -0.3, -0.3;
    z.push_back({"quadratic S3 two eigenvalues", QuadraticGradientField(S3, SymOperator(ev.asDiagonal().toDenseMatrix()))});
  }
  (void)H4;
  return z;
}

/// The harmonic fields named in the acceptance list, with their metric parameters.
inline std::vector<CatalogueEntry> acceptance_catalogue() {
  std::vector<CatalogueEntry> out;
  auto add = [&](const std::string& label, const Classification& c, bool constant_length) {
    for (const ExactMetricParams& e : c.metric_params) {
      out.push_back({label + " at (" + e.p.to_string() + ", " + e.q.to_string() + ")", representative_field(c),
                     e.numeric(), constant_length});
    }
  };
  for (int n : {3, 4, 5}) {
    add("confgrad S^" + std::to_string(n), conformal_gradient_classification(n, 1, MuSign::Positive), false);
  }
  for (int n : {3, 4}) {
    add("confgrad H^" + std::to_string(n) + " mu=-1", conformal_gradient_classification(n, -1, MuSign::Negative),
        false);
  }
  const MetricParams lox(3.0, -0.5);
  out.push_back({"sigma0 H^2 at (3, -1/2)", hopf_field_operator(1, 1.0, SpaceForm::hyperbolic(2)), lox, false});
  add("sigma1 H^2", conformal_gradient_classification(2, -1, MuSign::Negative), false);
  out.push_back({"associate (3/5, 4/5)", associate_member(0.6, 0.8), lox, false});
  out.push_back({"associate (1/sqrt2, 1/sqrt2)", associate_member(std::sqrt(0.5), std::sqrt(0.5)), lox, false});
  out.push_back({"associate (5/13, 12/13)", associate_member(5.0 / 13, 12.0 / 13), lox, false});
  for (const auto& [n, r, e] : std::vector<std::tuple<int, int, int>>{
           {4, 2, 1}, {4, 2, -1}, {5, 2, 1}, {5, 2, -1}, {2, 1, -1}, {3, 1, -1}}) {
    add(std::string("killing ") + (e > 0 ? "S^" : "H^") + std::to_string(n) + " r=" + std::to_string(r),
        killing_classification(n, r, e), false);
  }
  for (int n : {5, 7, 9}) add("quadratic S^" + std::to_string(n), quadratic_classification(n), false);
  out.push_back({"hopf S^3 at (2, 0.7)", hopf_field_operator(2, 1.0, SpaceForm::sphere(3)), MetricParams(2.0, 0.7),
                 true});
  return out;
}

}  // namespace hvf::testing
