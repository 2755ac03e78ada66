#include "hvf/solvers.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hvf {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

// lo < x < hi style checks; margin is the smaller slack.
BoundCheck less(std::string name, std::string ineq, double lhs, double rhs) {
  return {std::move(name), std::move(ineq) + "  [" + num(lhs) + " < " + num(rhs) + "]", lhs < rhs, rhs - lhs};
}

BoundCheck at_most(std::string name, std::string ineq, double lhs, double rhs) {
  return {std::move(name), std::move(ineq) + "  [" + num(lhs) + " <= " + num(rhs) + "]", lhs <= rhs, rhs - lhs};
}

BoundCheck between(std::string name, std::string ineq, double lo, double x, double hi) {
  const double m = std::min(x - lo, hi - x);
  return {std::move(name), std::move(ineq) + "  [" + num(lo) + " < " + num(x) + " < " + num(hi) + "]", m > 0, m};
}

// Under |p| <= 1, or p > 1 with |sigma| <= 1/sqrt(p - 1), a compact harmonic
// field that is not parallel has q < 0, and q < 1 - p/2 once p >= 2.
BoundCheck compact_necessary(double p, double q, double sup_sq) {
  BoundCheck b;
  b.name = "compact-necessary";
  const bool small_p = std::abs(p) <= 1.0;
  const double premise_slack = p > 1.0 ? 1.0 / (p - 1.0) - sup_sq : -std::numeric_limits<double>::infinity();
  if (!small_p && premise_slack < 0) {
    b.inequality = "premise fails: sup|sigma|^2 = " + num(sup_sq) + " > 1/(p-1) = " + num(1.0 / (p - 1.0));
    b.holds = true;
    b.margin = -premise_slack;
    return b;
  }
  double bound = 0.0;
  b.inequality = "q < 0";
  if (p >= 2) {
    bound = 1.0 - p / 2.0;
    b.inequality = "q < 1 - p/2";
  }
  b.inequality += "  [" + num(q) + " < " + num(bound) + "]";
  b.margin = bound - q;
  b.holds = q < bound;
  return b;
}

void require_killing_range(int n, int r, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  if (n < 2) throw std::invalid_argument("killing: n must be at least 2");
  if (r < 1 || 2 * r > n) {
    throw std::invalid_argument("killing: rank r must satisfy 1 <= r and 2r < n+1 (got n = " + std::to_string(n) +
                                ", r = " + std::to_string(r) + ")");
  }
}

}  // namespace

double Classification::omega0_sq() const {
  if (family != "killing") throw std::logic_error("omega0_sq: not a Killing classification");
  return scale * scale;
}

double Classification::lambda0_sq() const {
  if (family != "quadratic") throw std::logic_error("lambda0_sq: not a quadratic classification");
  return scale * scale;
}

double twist_roots(int n, int r, int epsilon) {
  require_killing_range(n, r, epsilon);
  const double c = n + 1 - 2 * r;
  const double k = r - 1;
  const double a2 = 2 * c * k;
  const double a1 = epsilon * (2 * n * k - c);
  const double a0 = 1 - n;
  if (a2 == 0) {
    const double u = -a0 / a1;
    if (u <= 0) throw NoSolution("no harmonic Killing field of rank 1 on S^" + std::to_string(n));
    return u;
  }
  const double disc = a1 * a1 - 4 * a2 * a0;
  // a2 > 0 > a0, so the roots are real with opposite signs.
  const double t = -0.5 * (a1 + std::copysign(std::sqrt(disc), a1));
  const double u1 = t / a2;
  const double u2 = a0 / t;
  return u1 > 0 ? u1 : u2;
}

QuadraticSurd twist_roots_exact(int n, int r, int epsilon) {
  require_killing_range(n, r, epsilon);
  const std::int64_t c = n + 1 - 2 * r;
  const std::int64_t k = r - 1;
  const QuadraticRoots roots = solve_quadratic_exact(2 * c * k, epsilon * (2 * n * k - c), 1 - n);
  if (roots.first.sign() > 0) return roots.first;
  if (roots.second.sign() > 0) return roots.second;
  throw NoSolution("no harmonic Killing field of rank " + std::to_string(r) + " on " +
                   (epsilon > 0 ? "S^" : "H^") + std::to_string(n));
}

Classification killing_classification(int n, int r, int epsilon) {
  const QuadraticSurd u = twist_roots_exact(n, r, epsilon);
  Classification c;
  c.family = "killing";
  c.n = n;
  c.epsilon = epsilon;
  c.r = r;
  c.scale_name = "omega0";
  c.scale_exact = u;
  c.scale = std::sqrt(twist_roots(n, r, epsilon));
  const QuadraticSurd p(n + 1);
  QuadraticSurd q = r == 1 ? QuadraticSurd(Rational(1 - n, 2))
                           : QuadraticSurd(2 * (1 - r)) * u / (u + QuadraticSurd(epsilon));
  c.metric_params.push_back({p, q});
  return c;
}

Classification conformal_gradient_classification(int n, int epsilon, MuSign mu_sign) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  if (n < 2) throw std::invalid_argument("confgrad: n must be at least 2");
  Classification c;
  c.family = "confgrad";
  c.n = n;
  c.epsilon = epsilon;
  c.scale_name = "mu";
  const std::string where = (epsilon > 0 ? "S^" : "H^") + std::to_string(n);
  if (mu_sign == MuSign::Negative) {
    if (epsilon > 0) throw std::invalid_argument("confgrad: mu < 0 is impossible on S^n");
    c.scale_exact = QuadraticSurd(-1);
    c.scale = -1.0;
    if (n == 2) {
      c.metric_params.push_back({QuadraticSurd(3), QuadraticSurd(Rational(-1, 2))});
    } else {
      c.metric_params.push_back({QuadraticSurd(n + 1), QuadraticSurd(Rational(1 - n) + Rational(1, n))});
      c.metric_params.push_back({QuadraticSurd(Rational(-1, n - 2)), QuadraticSurd(0)});
      c.metrically_unique = false;
    }
    return c;
  }
  if (mu_sign == MuSign::Zero) throw NoSolution("no harmonic conformal gradient field with mu = 0 on " + where);
  if (n == 2) throw NoSolution("no harmonic conformal gradient field with mu > 0 on " + where);
  c.scale_exact = QuadraticSurd(Rational(1, n - 2));
  c.scale = 1.0 / (n - 2);
  c.metric_params.push_back({QuadraticSurd(n + 1), QuadraticSurd(2 - n)});
  return c;
}

Classification quadratic_classification(int n) {
  if (n < 2) throw std::invalid_argument("quadratic: n must be at least 2");
  if (n % 2 == 0 || n < 5) {
    throw NoSolution("no harmonic quadratic gradient field on S^" + std::to_string(n) + " (needs odd n >= 5)");
  }
  const int r = (n + 1) / 2;
  const QuadraticRoots roots = solve_quadratic_exact(r - 2, 2 * (r * r - 5), -8 * (r + 1));
  const QuadraticSurd u = roots.first.sign() > 0 ? roots.first : roots.second;
  Classification c;
  c.family = "quadratic";
  c.n = n;
  c.epsilon = 1;
  c.r = r;
  c.scale_name = "lambda0";
  c.scale_exact = u;
  c.scale = std::sqrt(u.to_double());
  const QuadraticSurd q =
      QuadraticSurd((2 - r) * (1 + r)) / (QuadraticSurd(2) * (QuadraticSurd(1 + r) + u / QuadraticSurd(4)));
  c.metric_params.push_back({QuadraticSurd(r + 1), q});
  return c;
}

Classification loxodromic_classification() {
  Classification c;
  c.family = "loxodromic";
  c.n = 2;
  c.epsilon = -1;
  c.r = 1;
  c.scale_name = "omega^2 - mu";
  c.scale_exact = QuadraticSurd(1);
  c.scale = 1.0;
  c.metric_params.push_back({QuadraticSurd(3), QuadraticSurd(Rational(-1, 2))});
  return c;
}

std::vector<BoundCheck> bounds_report(const Classification& c) {
  std::vector<BoundCheck> out;
  if (c.metric_params.empty()) return out;
  const MetricParams mp = c.metric_params.front().numeric();
  const double p = mp.p;
  const double q = mp.q;
  const double n = c.n;
  const double r = c.r;

  if (c.family == "killing") {
    const double u = c.scale_exact.to_double();
    const double cc = n + 1 - 2 * r;
    out.push_back(less("q-negative", "q < 0", q, 0.0));
    if (c.r == 1) return out;
    if (c.epsilon > 0) {
      out.push_back(less("twist-upper", "omega0^2 < 1/(2(r-1))", u, 1.0 / (2 * (r - 1))));
      out.push_back(between("twist-window", "1/n < omega0^2 < 1/(2r-2)", 1.0 / n, u, 1.0 / (2 * r - 2)));
      out.push_back(less("q-lower", "-(2r-2)/(2r-1) < q", -(2 * r - 2) / (2 * r - 1), q));
      out.push_back(less("q-riemannian-margin", "-1/(2r-1) < q omega0^2", -1.0 / (2 * r - 1), q * u));
      out.push_back(compact_necessary(p, q, u));
    } else {
      const double delta = (n + cc) / (n - cc);
      out.push_back(less("twist-lower", "(n+c)/(2c) < omega0^2", (n + cc) / (2 * cc), u));
      out.push_back(between("q-window", "2 delta (1-r) < q < 2(1-r)", 2 * delta * (1 - r), q, 2 * (1 - r)));
    }
    return out;
  }

  if (c.family == "quadratic") {
    const double u = c.scale_exact.to_double();
    out.push_back(less("lambda-upper", "lambda0^2 < 4/(r-2)", u, 4.0 / (r - 2)));
    if (c.r >= 4) out.push_back(less("lambda-lower", "3/(r-2) < lambda0^2", 3.0 / (r - 2), u));
    out.push_back(between("lambda-window", "4/r < lambda0^2 < 4/(r-2)", 4.0 / r, u, 4.0 / (r - 2)));
    out.push_back(less("q-lower", "2 - r < 2q", 2 - r, 2 * q));
    out.push_back(less("q-above-1-p/2", "1 - p/2 < q", 1 - p / 2, q));
    out.push_back(less("q-upper", "q < (4 - 2(r-1)^2)/(4r)", q, (4 - 2 * (r - 1) * (r - 1)) / (4 * r)));
    if (c.r >= 4) {
      out.push_back(less("q-lower-refined", "(3 - 2(r-1)^2)/(4r) < q", (3 - 2 * (r - 1) * (r - 1)) / (4 * r), q));
    }
    out.push_back(less("q-riemannian-margin", "-1/2 < q sup|sigma|^2", -0.5, q * u / 4));
    out.push_back(compact_necessary(p, q, u / 4));
    return out;
  }

  if (c.family == "confgrad") {
    if (c.epsilon > 0) {
      out.push_back(at_most("q-at-most-minus-one", "q <= -1", q, -1.0));
      out.push_back(compact_necessary(p, q, c.scale));
    } else {
      for (const ExactMetricParams& e : c.metric_params) {
        const MetricParams m = e.numeric();
        out.push_back(at_most("q-nonpositive", "q <= 0", m.q, 0.0));
      }
    }
    return out;
  }

  if (c.family == "loxodromic") out.push_back(less("q-negative", "q < 0", q, 0.0));
  return out;
}

LoxodromicField associate_member(double sin_t, double cos_t) {
  if (!(sin_t > 0) || !(cos_t > 0)) throw std::invalid_argument("associate_member: need sin t > 0 and cos t > 0");
  if (std::abs(sin_t * sin_t + cos_t * cos_t - 1.0) > 1e-12) {
    throw std::invalid_argument("associate_member: sin^2 t + cos^2 t must be 1");
  }
  const SpaceForm H2 = SpaceForm::hyperbolic(2);
  return LoxodromicField::standard(H2, 1, sin_t, cos_t * Vec::Unit(3, 2));
}

FieldFamily representative_field(const Classification& c) {
  const SpaceForm M(c.n, c.epsilon > 0 ? Signature::spherical() : Signature::hyperbolic());
  if (c.family == "killing") return hopf_field_operator(c.r, c.scale, M);
  if (c.family == "quadratic") {
    Vec ev = Vec::Zero(M.dim());
    ev.head(c.r).setConstant(c.scale);
    return QuadraticGradientField(M, SymOperator(ev.asDiagonal().toDenseMatrix()));
  }
  if (c.family == "confgrad") {
    Vec a = Vec::Zero(M.dim());
    if (c.scale >= 0) {
      a(0) = std::sqrt(c.scale);
    } else {
      a(c.n) = std::sqrt(-c.scale);
    }
    return ConformalGradientField(M, a);
  }
  if (c.family == "loxodromic") return associate_member(0.6, 0.8);
  throw std::invalid_argument("representative_field: unknown family " + c.family);
}

std::vector<CatalogueEntry> catalogue() {
  std::vector<CatalogueEntry> out;
  auto add = [&](const std::string& label, const Classification& c, bool constant_length) {
    for (const ExactMetricParams& e : c.metric_params) {
      const MetricParams m = e.numeric();
      out.push_back({label + " (p,q)=(" + e.p.to_string() + ", " + e.q.to_string() + ")", representative_field(c), m,
                     constant_length});
    }
  };
  for (int n : {3, 4, 5, 6}) {
    add("confgrad S^" + std::to_string(n), conformal_gradient_classification(n, 1, MuSign::Positive), false);
  }
  for (int n : {3, 4, 5}) add("confgrad H^" + std::to_string(n) + " mu>0", conformal_gradient_classification(n, -1, MuSign::Positive), false);
  for (int n : {2, 3, 4}) add("confgrad H^" + std::to_string(n) + " mu=-1", conformal_gradient_classification(n, -1, MuSign::Negative), false);
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    const std::string tag = " r=" + std::to_string(r);
    add("killing S^" + std::to_string(n) + tag, killing_classification(n, r, 1), false);
    add("killing H^" + std::to_string(n) + tag, killing_classification(n, r, -1), false);
  }
  for (int n : {2, 3, 4}) add("killing H^" + std::to_string(n) + " r=1", killing_classification(n, 1, -1), false);
  for (int n : {5, 7, 9, 11}) add("quadratic S^" + std::to_string(n), quadratic_classification(n), false);

  const MetricParams lox(3.0, -0.5);
  const double h = std::sqrt(0.5);
  out.push_back({"associate H^2 (sin t, cos t)=(3/5, 4/5)", associate_member(0.6, 0.8), lox, false});
  out.push_back({"associate H^2 (sin t, cos t)=(sqrt(2)/2, sqrt(2)/2)", associate_member(h, h), lox, false});
  out.push_back({"associate H^2 (sin t, cos t)=(5/13, 12/13)", associate_member(5.0 / 13, 12.0 / 13), lox, false});

  // Hopf fields of unit length are harmonic for p = 2 and every q.
  const SpaceForm S3 = SpaceForm::sphere(3);
  out.push_back({"hopf S^3 (p,q)=(2, 7/10)", hopf_field_operator(2, 1.0, S3), MetricParams(2.0, 0.7), true});
  out.push_back({"hopf S^5 (p,q)=(2, -1/4)", hopf_field_operator(3, 1.0, SpaceForm::sphere(5)), MetricParams(2.0, -0.25), true});
  return out;
}

}  // namespace hvf
