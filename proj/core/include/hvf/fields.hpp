#pragma once

// The six field families on S^n / H^n and their closed-form pointwise analysis.
//
// Families: conformal gradients, Killing fields (with generalized Hopf fields
// as a special case), loxodromic fields R + C, dipole deformations tau T + r A,
// conformal fields on M^2, and quadratic gradient fields on spheres.

#include "hvf/ambient.hpp"
#include "hvf/spaceform.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hvf {

struct FieldPointData {
  ManifoldPoint point;
  Vec sigma;
  double F = 0.0;
  Vec grad_F;
  double lap_F = 0.0;
  Vec rough_lap;
  /// nabla_{grad F} sigma.
  Vec nabla_grad_F;
  /// Present exactly when the family is preharmonic.
  std::optional<double> spinnaker;
  /// Ambient matrix N with nabla_X sigma = N X for X tangent at the point.
  std::optional<Mat> nabla_sigma;

  /// |nabla sigma|^2 = sum_i |N E_i|^2, from the closed form.
  double nabla_sigma_norm_sq() const;
};

class ConformalGradientField {
 public:
  ConformalGradientField(const SpaceForm& M, Vec pole);

  const SpaceForm& space() const { return M_; }
  const Vec& pole() const { return a_; }
  double mu() const { return mu_; }

  Vec sigma(const ManifoldPoint& x) const;
  FieldPointData analyze(const ManifoldPoint& x) const;

 private:
  SpaceForm M_;
  Vec a_;
  double mu_;
};

enum class KillingType { Rotation, Translation, Parabolic };

class KillingField {
 public:
  /// `base` is the point w used for the hyperbolic decomposition A = R_w + T_w;
  /// it defaults to e_{n+1}. Ignored on S^n.
  KillingField(const SpaceForm& M, SkewOperator A, std::optional<Vec> base = std::nullopt);

  const SpaceForm& space() const { return M_; }
  const SkewOperator& op() const { return A_; }
  const Vec& base() const { return w_; }

  /// Twists in decreasing order; their count is the rotational rank.
  const std::vector<double>& twists() const { return twists_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  /// All twists equal to within the clustering tolerance (vacuous for rank 0).
  bool balanced() const;
  /// |T_w|; zero on S^n.
  double translation_speed() const { return tau_; }
  /// sum omega_i^2 - tau^2 = |A|_L^2 / 2, independent of w.
  double congruence_invariant() const { return invariant_; }
  KillingType type() const;
  /// lambda with A^3 = lambda A, when it exists.
  const std::optional<double>& cubic_lambda() const { return lambda_; }

  Vec sigma(const ManifoldPoint& x) const { return A_(x.coords()); }
  FieldPointData analyze(const ManifoldPoint& x) const;

 private:
  SpaceForm M_;
  SkewOperator A_;
  Vec w_;
  std::vector<double> twists_;
  double tau_ = 0.0;
  double invariant_ = 0.0;
  double norm_sq_L_ = 0.0;
  std::optional<double> lambda_;
};

/// omega Sigma_r: rotation by `scale` in each of the coordinate planes
/// (e_1,e_2), ..., (e_{2r-1},e_{2r}).
struct GeneralizedHopfField {
  int r;
  double scale;
  SpaceForm M;

  KillingField field() const;
};

/// Throws std::invalid_argument unless 2r <= n+1 (S^n) or 2r < n+1 (H^n).
KillingField hopf_field_operator(int r, double scale, const SpaceForm& M);

/// The operator x -> <a,x> b - <b,x> a.
SkewOperator elementary_killing_operator(const Vec& a, const Vec& b, Signature sig);
KillingField elementary_killing(const Vec& a, const Vec& b, const SpaceForm& M);

/// sigma = omega sum_i K(a_i, b_i) + C_c with spacelike orthonormal planes
/// (a_i, b_i) and a pole c orthogonal to all of them.
class LoxodromicField {
 public:
  LoxodromicField(const SpaceForm& M, std::vector<std::pair<Vec, Vec>> planes, double omega, Vec pole);
  /// Planes (e_1,e_2), ..., (e_{2r-1},e_{2r}).
  static LoxodromicField standard(const SpaceForm& M, int r, double omega, Vec pole);

  const SpaceForm& space() const { return M_; }
  const std::vector<std::pair<Vec, Vec>>& planes() const { return planes_; }
  double omega() const { return omega_; }
  const Vec& pole() const { return c_; }
  double mu() const { return mu_; }
  int rank() const { return static_cast<int>(planes_.size()); }
  bool properly_loxodromic() const { return M_.n() == 2 * rank(); }
  KillingField rotation_part() const;
  ConformalGradientField conformal_part() const { return ConformalGradientField(M_, c_); }

  Vec sigma(const ManifoldPoint& x) const;
  FieldPointData analyze(const ManifoldPoint& x) const;

 private:
  SpaceForm M_;
  std::vector<std::pair<Vec, Vec>> planes_;
  double omega_;
  Vec c_;
  double mu_;
  Mat R_;
};

/// sigma = tau T + r A with T = alpha W - psi A, A and W the conformal
/// gradients with poles a and w.
class DipoleDeformationField {
 public:
  DipoleDeformationField(const SpaceForm& M, Vec w, Vec a, double tau, double r);
  static DipoleDeformationField standard(const SpaceForm& M, double tau, double r);

  const SpaceForm& space() const { return M_; }
  const Vec& w() const { return w_; }
  const Vec& a() const { return a_; }
  double tau() const { return tau_; }
  double r() const { return r_; }

  Vec sigma(const ManifoldPoint& x) const;
  FieldPointData analyze(const ManifoldPoint& x) const;

 private:
  SpaceForm M_;
  Vec w_;
  Vec a_;
  double tau_;
  double r_;
};

/// sigma = omega R + tau T + C on M^2 with R = alpha B - beta A,
/// T = alpha W - psi A and pole c = rr s a + rr t b + h w.
class Conformal2DField {
 public:
  struct Params {
    double omega = 0.0;
    double tau = 0.0;
    double h = 0.0;
    double rr = 0.0;
    double s = 1.0;
    double t = 0.0;
  };

  Conformal2DField(const SpaceForm& M, Vec w, Vec a, Vec b, Params params);
  /// Frame w = e_3, a = e_1, b = e_2.
  static Conformal2DField standard(const SpaceForm& M, Params params);

  const SpaceForm& space() const { return M_; }
  const Vec& w() const { return w_; }
  const Vec& a() const { return a_; }
  const Vec& b() const { return b_; }
  const Params& params() const { return p_; }
  Vec pole() const;
  /// The ambient skew matrix of omega R + tau T.
  Mat killing_matrix() const;

  Vec sigma(const ManifoldPoint& x) const;
  FieldPointData analyze(const ManifoldPoint& x) const;

 private:
  SpaceForm M_;
  Vec w_;
  Vec a_;
  Vec b_;
  Params p_;
};

/// sigma = Q(x) - xi(x) x with xi(x) = <Q x, x>; spheres only.
class QuadraticGradientField {
 public:
  QuadraticGradientField(const SpaceForm& M, SymOperator Q);

  const SpaceForm& space() const { return M_; }
  const SymOperator& op() const { return Q_; }
  /// Ascending.
  const Vec& eigenvalues() const { return eig_; }
  /// Eigenvalues after clustering at relative tolerance 1e-8.
  const std::vector<double>& distinct_eigenvalues() const { return distinct_; }
  /// max |sigma| = (lambda_max - lambda_min)/2.
  double sup_norm() const;

  Vec sigma(const ManifoldPoint& x) const;
  FieldPointData analyze(const ManifoldPoint& x) const;

 private:
  SpaceForm M_;
  SymOperator Q_;
  Vec eig_;
  std::vector<double> distinct_;
};

using FieldFamily = std::variant<ConformalGradientField, KillingField, LoxodromicField, DipoleDeformationField,
                                 Conformal2DField, QuadraticGradientField>;

FieldPointData analyze(const FieldFamily& field, const ManifoldPoint& x);
Vec evaluate(const FieldFamily& field, const ManifoldPoint& x);
const SpaceForm& space_of(const FieldFamily& field);
std::string family_name(const FieldFamily& field);
VectorFieldFn as_function(const FieldFamily& field);

/// nu with rough_lap = nu sigma identically, when the family guarantees one.
std::optional<double> rough_laplacian_eigenvalue(const FieldFamily& field);

/// The field s * sigma, kept inside its own family.
FieldFamily scaled(const FieldFamily& field, double s);

/// The push-forward x -> g sigma(g^{-1} x) under an isometry g of M.
/// Throws std::invalid_argument if g is not an isometry.
FieldFamily transformed(const FieldFamily& field, const Mat& g);

/// The complex structure on M^2: rotation by +pi/2, J v = eta (x cross v).
Vec complex_structure(const ManifoldPoint& x, const Vec& v);

/// e^{it}.sigma = cos(t) sigma + sin(t) J sigma. Requires n = 2.
Conformal2DField circle_action(const Conformal2DField& field, double t);
/// Throws std::domain_error when the rotated field leaves the loxodromic
/// family (its rotation or conformal part vanishes).
LoxodromicField circle_action(const LoxodromicField& field, double t);
FieldFamily circle_action(const FieldFamily& field, double t);

/// A loxodromic field on M^2 written as a conformal field.
Conformal2DField to_conformal2d(const LoxodromicField& field);

// ---------------------------------------------------------------------------
// Declarative construction.

struct FieldDescription {
  std::string family;
  int n = 0;
  int epsilon = 0;
  std::map<std::string, std::string> params;
};

/// Builds a field from a description; throws std::invalid_argument with a
/// readable message on unknown families, missing keys or inconsistent values.
///
/// family      keys
/// confgrad    pole=x1,...,x_{n+1} | mu=
/// killing     hopf_rank= scale= | twists=w1,w2,... [translation=tau] | matrix=row-major entries
/// loxodromic  rank= omega= (pole=... | mu=)
/// dipole      tau= r=
/// conformal2d omega= tau= h= rr= s= t=
/// quadratic   eigenvalues=l1,... | hopf_rank= scale=
FieldFamily build_field(const FieldDescription& desc);

/// Parses a real number, accepting exact forms such as "3/5" or "sqrt(2)/2".
double parse_real(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

}  // namespace hvf
