#include "hvf/fields.hpp"

#include "detail.hpp"

#include <cmath>
#include <stdexcept>

namespace hvf {

namespace {

constexpr double kFrameTol = 1e-10;

void require_unit_spacelike(const Vec& v, Signature sig, const char* what) {
  if (std::abs(inner(v, v, sig) - 1.0) > kFrameTol) {
    throw std::invalid_argument(std::string(what) + " must be a spacelike unit vector");
  }
}

void require_orthogonal(const Vec& u, const Vec& v, Signature sig, const char* what) {
  if (std::abs(inner(u, v, sig)) > kFrameTol * (1.0 + u.norm() * v.norm())) {
    throw std::invalid_argument(std::string(what) + " must be orthogonal");
  }
}

// k with B = eta [k]_x, so B x = eta (k cross x).
Vec axis_of(const Mat& B, Signature sig) {
  const Mat m = metric_matrix(3, sig) * B;
  Vec k(3);
  k << m(2, 1), m(0, 2), m(1, 0);
  return k;
}

Vec cross(const Vec& u, const Vec& v) {
  Vec out(3);
  out << u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0);
  return out;
}

// Least-squares coefficients of B in the span of M1, M2 (Frobenius).
std::pair<double, double> fit2(const Mat& B, const Mat& M1, const Mat& M2) {
  Eigen::Matrix2d G;
  Eigen::Vector2d rhs;
  G << (M1.array() * M1.array()).sum(), (M1.array() * M2.array()).sum(), (M1.array() * M2.array()).sum(),
      (M2.array() * M2.array()).sum();
  rhs << (B.array() * M1.array()).sum(), (B.array() * M2.array()).sum();
  const Eigen::Vector2d sol = G.ldlt().solve(rhs);
  return {sol(0), sol(1)};
}

// A unit tangent vector at w orthogonal to the tangent vector u.
Vec tangent_complement(const ManifoldPoint& w, const Vec& u) {
  Vec c = complex_structure(w, u);
  return c / tangent_norm(c, w.signature());
}

Conformal2DField assemble_conformal2d(const SpaceForm& M, const Mat& B, const Vec& c, const Vec& w_hint,
                                      const Vec& b_hint) {
  const Signature sig = M.signature();
  const int eps = M.epsilon();
  const Vec k = axis_of(B, sig);
  const double tol = 1e-13 * (1.0 + B.norm());

  Vec w = w_hint;
  if (M.is_spherical() && k.norm() > tol) w = k / k.norm();
  const ManifoldPoint wp(M, w);

  Vec b = detail::project(b_hint, w, sig);
  if (!M.is_spherical()) {
    const Vec u = detail::project(k, w, sig);
    if (tangent_norm(u, sig) > tol) b = u;
  }
  if (tangent_norm(b, sig) < 1e-12) b = orthonormal_frame(wp).vectors.front().vec();
  b /= tangent_norm(b, sig);
  Vec a = tangent_complement(wp, b);

  const Mat MR = elementary_killing_operator(a, b, sig).matrix();
  const Mat MT = elementary_killing_operator(a, w, sig).matrix();
  double omega = 0.0;
  double tau = 0.0;
  if (M.is_spherical()) {
    omega = (B.array() * MR.array()).sum() / MR.squaredNorm();
  } else {
    std::tie(omega, tau) = fit2(B, MR, MT);
  }
  if ((B - omega * MR - tau * MT).norm() > 1e-9 * (1.0 + B.norm())) {
    throw std::logic_error("circle_action: Killing part does not fit the normal form");
  }
  if (tau < 0) {
    a = -a;
    omega = -omega;
    tau = -tau;
  }
  if (omega < 0) {
    b = -b;
    omega = -omega;
  }
  Conformal2DField::Params p;
  p.omega = omega;
  p.tau = M.is_spherical() ? 0.0 : tau;
  const double x = inner(c, a, sig);
  const double y = inner(c, b, sig);
  p.h = eps * inner(c, w, sig);
  p.rr = std::hypot(x, y);
  if (p.rr > 0) {
    p.s = x / p.rr;
    p.t = y / p.rr;
  } else {
    p.s = 1.0;
    p.t = 0.0;
  }
  return Conformal2DField(M, w, a, b, p);
}

void require_surface(const SpaceForm& M) {
  if (M.n() != 2) throw std::invalid_argument("circle action is defined on M^2 only");
}

}  // namespace

// ---------------------------------------------------------------------------
// Loxodromic fields.

LoxodromicField::LoxodromicField(const SpaceForm& M, std::vector<std::pair<Vec, Vec>> planes, double omega,
                                 Vec pole)
    : M_(M), planes_(std::move(planes)), omega_(omega), c_(std::move(pole)) {
  const Signature sig = M_.signature();
  if (planes_.empty()) throw std::invalid_argument("LoxodromicField: rotation part must be non-trivial");
  if (!(omega_ > 0)) throw std::invalid_argument("LoxodromicField: common twist must be positive");
  if (c_.size() != M_.dim()) throw std::invalid_argument("LoxodromicField: pole has wrong dimension");
  if (c_.norm() == 0.0) throw std::invalid_argument("LoxodromicField: conformal part must be non-trivial");
  if (2 * static_cast<int>(planes_.size()) > M_.n()) {
    throw std::invalid_argument("LoxodromicField: too many rotation planes");
  }
  std::vector<Vec> basis;
  for (const auto& [a, b] : planes_) {
    if (a.size() != M_.dim() || b.size() != M_.dim()) {
      throw std::invalid_argument("LoxodromicField: plane vector has wrong dimension");
    }
    basis.push_back(a);
    basis.push_back(b);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_unit_spacelike(basis[i], sig, "LoxodromicField: plane vectors");
    for (std::size_t j = 0; j < i; ++j) require_orthogonal(basis[i], basis[j], sig, "LoxodromicField: plane vectors");
    require_orthogonal(basis[i], c_, sig, "LoxodromicField: pole and rotation planes");
  }
  mu_ = inner(c_, c_, sig);
  R_ = Mat::Zero(M_.dim(), M_.dim());
  for (const auto& [a, b] : planes_) R_ += omega_ * elementary_killing_operator(a, b, sig).matrix();
}

LoxodromicField LoxodromicField::standard(const SpaceForm& M, int r, double omega, Vec pole) {
  std::vector<std::pair<Vec, Vec>> planes;
  for (int i = 0; i < r; ++i) planes.emplace_back(Vec::Unit(M.dim(), 2 * i), Vec::Unit(M.dim(), 2 * i + 1));
  return LoxodromicField(M, std::move(planes), omega, std::move(pole));
}

KillingField LoxodromicField::rotation_part() const {
  return KillingField(M_, SkewOperator(R_, M_.signature(), 1e-10));
}

Vec LoxodromicField::sigma(const ManifoldPoint& x) const {
  const Signature sig = M_.signature();
  const double gamma = inner(c_, x.coords(), sig);
  return R_ * x.coords() + c_ - M_.epsilon() * gamma * x.coords();
}

FieldPointData LoxodromicField::analyze(const ManifoldPoint& x) const {
  const Signature sig = M_.signature();
  const int eps = M_.epsilon();
  const int n = M_.n();
  const int r = rank();
  const Vec& p = x.coords();
  const double w2 = omega_ * omega_;

  const double gamma = inner(c_, p, sig);
  const Vec C = c_ - eps * gamma * p;
  const Vec R = R_ * p;

  double rho = 0.0;  // sum alpha_i^2 + beta_i^2
  Vec G = Vec::Zero(p.size());
  Mat N = -eps * gamma * Mat::Identity(p.size(), p.size());
  for (const auto& [a, b] : planes_) {
    const double al = inner(a, p, sig);
    const double be = inner(b, p, sig);
    const Vec A = a - eps * al * p;
    const Vec B = b - eps * be * p;
    rho += al * al + be * be;
    G += al * A + be * B;
    N += omega_ * (detail::outer(B, a, sig) - detail::outer(A, b, sig));
  }

  FieldPointData d{x, R + C, 0.0, Vec(), 0.0, Vec(), Vec(), std::nullopt, std::nullopt};
  const double s2 = w2 * rho + mu_ - eps * gamma * gamma;
  d.F = 0.5 * s2;
  d.grad_F = w2 * G - eps * gamma * C;
  d.lap_F = eps * (n + 1) * s2 - 2.0 * r * w2 - eps * n * mu_;
  d.rough_lap = eps * (n - 1) * R + eps * C;
  d.nabla_grad_F = N * d.grad_F;
  if (n == 2) d.spinnaker = eps * (mu_ + eps * w2 - s2);
  d.nabla_sigma = std::move(N);
  return d;
}

// ---------------------------------------------------------------------------
// Dipole deformations.

DipoleDeformationField::DipoleDeformationField(const SpaceForm& M, Vec w, Vec a, double tau, double r)
    : M_(M), w_(std::move(w)), a_(std::move(a)), tau_(tau), r_(r) {
  const Signature sig = M_.signature();
  if (!M_.contains(w_)) throw std::invalid_argument("DipoleDeformationField: w is not on M");
  if (a_.size() != M_.dim()) throw std::invalid_argument("DipoleDeformationField: a has wrong dimension");
  if (std::abs(inner(a_, w_, sig)) > 1e-12 * (1.0 + a_.norm() * w_.norm()) ||
      std::abs(inner(a_, a_, sig) - 1.0) > 1e-12) {
    throw std::invalid_argument("DipoleDeformationField: a must be a unit tangent vector at w");
  }
}

DipoleDeformationField DipoleDeformationField::standard(const SpaceForm& M, double tau, double r) {
  return DipoleDeformationField(M, M.base_coords(), Vec::Unit(M.dim(), 0), tau, r);
}

Vec DipoleDeformationField::sigma(const ManifoldPoint& x) const {
  const Signature sig = M_.signature();
  const int eps = M_.epsilon();
  const Vec& p = x.coords();
  const double psi = inner(w_, p, sig);
  const double alpha = inner(a_, p, sig);
  const Vec W = w_ - eps * psi * p;
  const Vec A = a_ - eps * alpha * p;
  return tau_ * (alpha * W - psi * A) + r_ * A;
}

FieldPointData DipoleDeformationField::analyze(const ManifoldPoint& x) const {
  const Signature sig = M_.signature();
  const int eps = M_.epsilon();
  const int n = M_.n();
  const Vec& p = x.coords();
  const double psi = inner(w_, p, sig);
  const double alpha = inner(a_, p, sig);
  const Vec W = w_ - eps * psi * p;
  const Vec A = a_ - eps * alpha * p;
  const Vec T = alpha * W - psi * A;
  const double tr = tau_ * tau_ - r_ * r_;
  const double lin = tau_ * psi - r_;

  FieldPointData d{x, tau_ * T + r_ * A, 0.0, Vec(), 0.0, Vec(), Vec(), std::nullopt, std::nullopt};
  const double s2 = lin * lin + eps * tr * alpha * alpha;
  d.F = 0.5 * s2;
  d.grad_F = tau_ * lin * W + eps * tr * alpha * A;
  d.lap_F = eps * n * tau_ * psi * lin - eps * tau_ * tau_ * (1.0 - psi * psi) + (n + 1) * tr * alpha * alpha -
            eps * tr;
  d.rough_lap = eps * ((n - 1) * tau_ * T + r_ * A);
  Mat N = tau_ * (detail::outer(W, a_, sig) - detail::outer(A, w_, sig)) -
          eps * r_ * alpha * Mat::Identity(p.size(), p.size());
  d.nabla_grad_F = N * d.grad_F;
  if (n == 2) d.spinnaker = eps * (r_ * r_ + tau_ * tau_ - 2.0 * r_ * tau_ * psi - s2);
  d.nabla_sigma = std::move(N);
  return d;
}

// ---------------------------------------------------------------------------
// Conformal fields on M^2.

Conformal2DField::Conformal2DField(const SpaceForm& M, Vec w, Vec a, Vec b, Params params)
    : M_(M), w_(std::move(w)), a_(std::move(a)), b_(std::move(b)), p_(params) {
  const Signature sig = M_.signature();
  if (M_.n() != 2) throw std::invalid_argument("Conformal2DField: requires n = 2");
  if (!M_.contains(w_)) throw std::invalid_argument("Conformal2DField: w is not on M");
  if (a_.size() != 3 || b_.size() != 3) throw std::invalid_argument("Conformal2DField: frame has wrong dimension");
  require_unit_spacelike(a_, sig, "Conformal2DField: a");
  require_unit_spacelike(b_, sig, "Conformal2DField: b");
  require_orthogonal(a_, b_, sig, "Conformal2DField: a and b");
  require_orthogonal(a_, w_, sig, "Conformal2DField: a and w");
  require_orthogonal(b_, w_, sig, "Conformal2DField: b and w");
  if (p_.omega < 0 || p_.tau < 0) throw std::invalid_argument("Conformal2DField: omega and tau must be >= 0");
  if (p_.rr < 0) throw std::invalid_argument("Conformal2DField: rr must be >= 0");
  if (std::abs(p_.s * p_.s + p_.t * p_.t - 1.0) > 1e-12) {
    throw std::invalid_argument("Conformal2DField: s^2 + t^2 must equal 1");
  }
  if (M_.is_spherical() && p_.tau != 0.0) {
    throw std::invalid_argument("Conformal2DField: on S^2 the axis is chosen so that tau = 0");
  }
}

Conformal2DField Conformal2DField::standard(const SpaceForm& M, Params params) {
  return Conformal2DField(M, M.base_coords(), Vec::Unit(3, 0), Vec::Unit(3, 1), params);
}

Vec Conformal2DField::pole() const { return p_.rr * p_.s * a_ + p_.rr * p_.t * b_ + p_.h * w_; }

Mat Conformal2DField::killing_matrix() const {
  const Signature sig = M_.signature();
  return p_.omega * elementary_killing_operator(a_, b_, sig).matrix() +
         p_.tau * elementary_killing_operator(a_, w_, sig).matrix();
}

Vec Conformal2DField::sigma(const ManifoldPoint& x) const {
  const Vec c = pole();
  const double gamma = inner(c, x.coords(), M_.signature());
  return killing_matrix() * x.coords() + c - M_.epsilon() * gamma * x.coords();
}

FieldPointData Conformal2DField::analyze(const ManifoldPoint& x) const {
  const Signature sig = M_.signature();
  const double eps = M_.epsilon();
  const Vec& p = x.coords();
  const auto& [omega, tau, h, rr, s, t] = p_;

  const double alpha = inner(a_, p, sig);
  const double beta = inner(b_, p, sig);
  const double psi = inner(w_, p, sig);
  const Vec c = pole();
  const double gamma = inner(c, p, sig);
  const Vec A = a_ - eps * alpha * p;
  const Vec B = b_ - eps * beta * p;
  const Vec W = w_ - eps * psi * p;
  const Vec C = c - eps * gamma * p;
  const Vec R = alpha * B - beta * A;
  const Vec T = alpha * W - psi * A;
  const double eta = omega * psi - eps * tau * beta;

  FieldPointData d{x, omega * R + tau * T + C, 0.0, Vec(), 0.0, Vec(), Vec(), std::nullopt, std::nullopt};
  const double s2 = tau * tau + rr * rr + eps * (omega * omega + h * h) + 2.0 * (omega * rr * t + eps * tau * h) * alpha -
                    2.0 * rr * s * (omega * beta + tau * psi) - eps * eta * eta - eps * gamma * gamma;
  const double zeta = eta * eta + gamma * gamma;
  d.F = 0.5 * s2;
  d.grad_F = (omega * rr * t + eps * tau * h) * A - rr * s * (omega * B + tau * W) -
             eps * eta * (omega * W - eps * tau * B) - eps * gamma * C;
  d.lap_F = 2.0 * (eps * d.F - zeta);
  d.rough_lap = eps * d.sigma;
  Mat N = omega * (detail::outer(B, a_, sig) - detail::outer(A, b_, sig)) +
          tau * (detail::outer(W, a_, sig) - detail::outer(A, w_, sig)) - eps * gamma * Mat::Identity(3, 3);
  d.nabla_grad_F = N * d.grad_F;
  d.spinnaker = zeta;
  d.nabla_sigma = std::move(N);
  return d;
}

// ---------------------------------------------------------------------------
// Complex structure and the circle action.

Vec complex_structure(const ManifoldPoint& x, const Vec& v) {
  require_surface(x.space());
  return metric_matrix(3, x.signature()) * cross(x.coords(), v);
}

Conformal2DField circle_action(const Conformal2DField& field, double t) {
  const SpaceForm& M = field.space();
  const Signature sig = M.signature();
  require_surface(M);
  // J K_k = C_k and J C_c = K_{-c}, where K_k x = eta (k cross x).
  const Vec k = axis_of(field.killing_matrix(), sig);
  const Vec c = field.pole();
  const double ct = std::cos(t);
  const double st = std::sin(t);
  const Vec k2 = ct * k - st * c;
  const Vec c2 = ct * c + st * k;
  Mat cross_k(3, 3);
  cross_k << 0, -k2(2), k2(1), k2(2), 0, -k2(0), -k2(1), k2(0), 0;
  const Mat B = metric_matrix(3, sig) * cross_k;
  return assemble_conformal2d(M, B, c2, field.w(), field.b());
}

LoxodromicField circle_action(const LoxodromicField& field, double t) {
  const SpaceForm& M = field.space();
  const Signature sig = M.signature();
  require_surface(M);
  const Mat R = field.rotation_part().op().matrix();
  const Vec k = axis_of(R, sig);
  const Vec& c = field.pole();
  const double ct = std::cos(t);
  const double st = std::sin(t);
  const Vec k2 = ct * k - st * c;
  const Vec c2 = ct * c + st * k;

  auto [a, b] = field.planes().front();
  const Vec k_unit = axis_of(elementary_killing_operator(a, b, sig).matrix(), sig);
  // k and c are both normal to the rotation plane, so k2 = omega2 * k_unit.
  const double omega2 = k2.dot(k_unit) / k_unit.squaredNorm();
  const double size = 1.0 + k.norm() + c.norm();
  if (std::abs(omega2) < 1e-12 * size || c2.norm() < 1e-12 * size) {
    throw std::domain_error("circle_action: rotated field is not loxodromic");
  }
  if (omega2 < 0) std::swap(a, b);
  return LoxodromicField(M, {{a, b}}, std::abs(omega2), c2);
}

FieldFamily circle_action(const FieldFamily& field, double t) {
  if (const auto* f = std::get_if<Conformal2DField>(&field)) return circle_action(*f, t);
  if (const auto* f = std::get_if<LoxodromicField>(&field)) return circle_action(*f, t);
  throw std::invalid_argument("circle_action: needs a conformal 2-D or loxodromic field on M^2");
}

Conformal2DField to_conformal2d(const LoxodromicField& field) {
  const SpaceForm& M = field.space();
  require_surface(M);
  const Signature sig = M.signature();
  const auto& [a, b] = field.planes().front();
  Vec w = metric_matrix(3, sig) * cross(a, b);
  w /= std::sqrt(std::abs(inner(w, w, sig)));
  if (!M.is_spherical() && w(2) < 0) w = -w;
  Conformal2DField::Params p;
  p.omega = field.omega();
  p.h = M.epsilon() * inner(field.pole(), w, sig);
  return Conformal2DField(M, w, a, b, p);
}

}  // namespace hvf
