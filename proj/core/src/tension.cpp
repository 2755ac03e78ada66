#include "hvf/tension.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace hvf {

namespace {

constexpr double kSmallSigma = 1e-6;

double len(const Vec& v, Signature sig) { return tangent_norm(v, sig); }

}  // namespace

MetricParams::MetricParams(double p_, double q_) : p(p_), q(q_) {
  if (!std::isfinite(p) || !std::isfinite(q)) throw std::invalid_argument("metric parameters must be finite");
}

std::string to_string(DerivativePath path) {
  return path == DerivativePath::ClosedForm ? "closed-form" : "finite-difference";
}

TensionIngredients ingredients(const FieldFamily& field, const ManifoldPoint& x, DerivativePath path, double h) {
  TensionIngredients ing;
  ing.path = path;
  const FieldPointData d = analyze(field, x);
  ing.spinnaker = d.spinnaker;
  if (path == DerivativePath::ClosedForm) {
    ing.sigma = d.sigma;
    ing.F = d.F;
    ing.grad_F = d.grad_F;
    ing.lap_F = d.lap_F;
    ing.rough_lap = d.rough_lap;
    ing.nabla_grad_F = d.nabla_grad_F;
    ing.nabla_sigma_sq = d.nabla_sigma_norm_sq();
    return ing;
  }

  const Signature sig = x.signature();
  const VectorFieldFn sigma = as_function(field);
  const ScalarFieldFn F = [&](const ManifoldPoint& y) {
    const Vec s = sigma(y);
    return 0.5 * inner(s, s, sig);
  };
  const double h1 = h > 0 ? h : kFirstDerivativeStep;
  const double h2 = h > 0 ? h : kSecondDerivativeStep;
  ing.sigma = sigma(x);
  ing.F = 0.5 * inner(ing.sigma, ing.sigma, sig);
  ing.grad_F = gradient_fd(F, x, h1).vec();
  ing.lap_F = laplacian_fd(F, x, h2);
  ing.rough_lap = rough_laplacian_fd(sigma, x, h2).vec();
  ing.nabla_grad_F = covariant_derivative_fd(sigma, x, TangentVector(x, ing.grad_F, 1e-8), h1).vec();
  for (const TangentVector& E : orthonormal_frame(x).vectors) {
    const Vec v = covariant_derivative_fd(sigma, x, E, h1).vec();
    ing.nabla_sigma_sq += inner(v, v, sig);
  }
  return ing;
}

TensionValue tension_value(const TensionIngredients& ing, const MetricParams& mp, Signature sig) {
  const double s2 = 2.0 * ing.F;
  const double gf2 = inner(ing.grad_F, ing.grad_F, sig);
  TensionValue out;
  out.phi = mp.p * ing.nabla_sigma_sq - mp.p * mp.q * gf2 - mp.q * (1.0 + s2) * ing.lap_F;
  out.tau = (1.0 + s2) * ing.rough_lap + 2.0 * mp.p * ing.nabla_grad_F - out.phi * ing.sigma;
  out.scale = (1.0 + s2) * (1.0 + len(ing.rough_lap, sig) + len(ing.nabla_grad_F, sig) +
                            std::abs(out.phi) * len(ing.sigma, sig));
  return out;
}

Vec tension(const FieldFamily& field, const ManifoldPoint& x, const MetricParams& mp) {
  return tension_value(ingredients(field, x), mp, x.signature()).tau;
}

double reduced_pde_residual(const FieldFamily& field, const ManifoldPoint& x, const MetricParams& mp) {
  const std::optional<double> nu = rough_laplacian_eigenvalue(field);
  const FieldPointData d = analyze(field, x);
  if (!nu || !d.spinnaker) {
    throw std::domain_error("reduced_pde_residual: " + family_name(field) + " field is not a preharmonic eigenfield");
  }
  const double F = d.F;
  const double p = mp.p;
  const double q = mp.q;
  return (p + q + 2.0 * q * F) * d.lap_F + 2.0 * p * (1.0 + q * F) * *d.spinnaker + *nu * (1.0 + 2.0 * (1.0 - p) * F);
}

PreharmonicCheck preharmonic_check(const FieldFamily& field, const std::vector<ManifoldPoint>& samples, double tol) {
  PreharmonicCheck out;
  for (const ManifoldPoint& x : samples) {
    const Signature sig = x.signature();
    const FieldPointData d = analyze(field, x);
    const double s2 = 2.0 * d.F;
    if (std::sqrt(std::max(0.0, s2)) <= kSmallSigma) continue;
    const double gf2 = inner(d.grad_F, d.grad_F, sig);
    const double zeta = d.spinnaker ? *d.spinnaker : gf2 / s2;
    const Vec defect = d.nabla_grad_F - zeta * d.sigma;
    const double scale = 1.0 + len(d.nabla_grad_F, sig) + std::abs(zeta) * len(d.sigma, sig);
    out.max_err = std::max(out.max_err, len(defect, sig) / scale);
    if (d.spinnaker) {
      const double id = std::abs(s2 * zeta - gf2) / (1.0 + std::abs(s2 * zeta) + gf2);
      out.identity_err = std::max(out.identity_err, id);
    }
  }
  out.preharmonic = out.max_err < tol && out.identity_err < tol;
  return out;
}

bool q_riemannian_check(const FieldFamily& field, double q, const std::vector<ManifoldPoint>& samples) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  bool ok = true;
  for (const ManifoldPoint& x : samples) {
    const Vec s = evaluate(field, x);
    const double s2 = inner(s, s, x.signature());
    lo = std::min(lo, s2);
    hi = std::max(hi, s2);
    if (q * s2 < -1.0 - 1e-12) ok = false;
  }
  if (ok) return true;
  return hi - lo <= 1e-10 * (1.0 + hi);
}

double weitzenbock_error(const TensionIngredients& ing, Signature sig) {
  const double lhs = inner(ing.rough_lap, ing.sigma, sig);
  const double rhs = ing.nabla_sigma_sq + ing.lap_F;
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + ing.nabla_sigma_sq + std::abs(ing.lap_F));
}

TensionReport verify(const FieldFamily& field, const MetricParams& mp, const VerifyOptions& opts) {
  if (opts.count < 1) throw std::invalid_argument("verify: count must be positive");
  const SpaceForm& M = space_of(field);
  const Signature sig = M.signature();
  TensionReport rep;
  rep.family = family_name(field);
  rep.mp = mp;
  rep.n = M.n();
  rep.epsilon = M.epsilon();
  rep.seed = opts.seed;
  rep.count = opts.count;
  rep.path = opts.path;
  rep.tol = opts.tol;

  const std::vector<ManifoldPoint> pts = sample_points(M, opts.count, opts.seed);
  struct Slot {
    PointResidual res;
    double weitz = 0.0;
    double spin = 0.0;
  };
  std::vector<Slot> slots(pts.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const TensionIngredients ing = ingredients(field, pts[i], opts.path, opts.h_fd);
      const TensionValue tv = tension_value(ing, mp, sig);
      Slot& s = slots[i];
      s.res = {pts[i].coords(), len(tv.tau, sig), tv.scale};
      s.weitz = weitzenbock_error(ing, sig);
      const double s2 = 2.0 * ing.F;
      if (ing.spinnaker && std::sqrt(std::max(0.0, s2)) > kSmallSigma) {
        const double gf2 = inner(ing.grad_F, ing.grad_F, sig);
        s.spin = std::abs(s2 * *ing.spinnaker - gf2) / (1.0 + std::abs(s2 * *ing.spinnaker) + gf2);
      }
    }
  };
  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(pts.size())));
  if (threads == 1) {
    work(0, pts.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pts.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t b = t * chunk;
      const std::size_t e = std::min(pts.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (std::thread& th : pool) th.join();
  }

  for (const Slot& s : slots) {
    rep.per_point.push_back(s.res);
    rep.max_rel_residual = std::max(rep.max_rel_residual, s.res.residual_norm / s.res.scale);
    rep.weitzenbock_max_err = std::max(rep.weitzenbock_max_err, s.weitz);
    rep.spinnaker_max_err = std::max(rep.spinnaker_max_err, s.spin);
  }
  rep.harmonic = rep.max_rel_residual < opts.tol;
  rep.preharmonic = preharmonic_check(field, pts).preharmonic;
  rep.q_riemannian = q_riemannian_check(field, mp.q, pts);
  return rep;
}

double isometry_equivariance_check(const FieldFamily& field, const Mat& g, const MetricParams& mp,
                                   const std::vector<ManifoldPoint>& samples) {
  const SpaceForm& M = space_of(field);
  if (!is_isometry(g, M.signature(), 1e-9)) throw std::invalid_argument("isometry_equivariance_check: not an isometry");
  const FieldFamily moved = transformed(field, g);
  double worst = 0.0;
  for (const ManifoldPoint& x : samples) {
    const TensionValue before = tension_value(ingredients(field, x), mp, x.signature());
    const ManifoldPoint gx = ManifoldPoint::normalized(M, g * x.coords());
    const TensionValue after = tension_value(ingredients(moved, gx), mp, x.signature());
    // The isometry may stretch ambient coordinates; measure in the tangent norm at g x.
    const double err = len(g * before.tau - after.tau, x.signature());
    worst = std::max(worst, err / std::max(before.scale, after.scale));
  }
  return worst;
}

double circle_equivariance_check(const FieldFamily& field, double t, const MetricParams& mp,
                                 const std::vector<ManifoldPoint>& samples) {
  const FieldFamily rotated = circle_action(field, t);
  double worst = 0.0;
  for (const ManifoldPoint& x : samples) {
    const TensionValue before = tension_value(ingredients(field, x), mp, x.signature());
    const TensionValue after = tension_value(ingredients(rotated, x), mp, x.signature());
    const Vec turned = std::cos(t) * before.tau + std::sin(t) * complex_structure(x, before.tau);
    const double err = len(turned - after.tau, x.signature());
    worst = std::max(worst, err / std::max(before.scale, after.scale));
  }
  return worst;
}

}  // namespace hvf
