#include "hvf/fields.hpp"

#include "hvf/exact.hpp"

#include "detail.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hvf {

double FieldPointData::nabla_sigma_norm_sq() const {
  if (!nabla_sigma) throw std::logic_error("FieldPointData: no closed-form derivative");
  const TangentFrame frame = orthonormal_frame(point);
  double s = 0.0;
  for (const TangentVector& E : frame.vectors) {
    const Vec v = *nabla_sigma * E.vec();
    s += inner(v, v, point.signature());
  }
  return s;
}

FieldPointData analyze(const FieldFamily& field, const ManifoldPoint& x) {
  return std::visit([&](const auto& f) { return f.analyze(x); }, field);
}

Vec evaluate(const FieldFamily& field, const ManifoldPoint& x) {
  return std::visit([&](const auto& f) { return f.sigma(x); }, field);
}

const SpaceForm& space_of(const FieldFamily& field) {
  return std::visit([](const auto& f) -> const SpaceForm& { return f.space(); }, field);
}

std::string family_name(const FieldFamily& field) {
  struct Namer {
    std::string operator()(const ConformalGradientField&) const { return "confgrad"; }
    std::string operator()(const KillingField&) const { return "killing"; }
    std::string operator()(const LoxodromicField&) const { return "loxodromic"; }
    std::string operator()(const DipoleDeformationField&) const { return "dipole"; }
    std::string operator()(const Conformal2DField&) const { return "conformal2d"; }
    std::string operator()(const QuadraticGradientField&) const { return "quadratic"; }
  };
  return std::visit(Namer{}, field);
}

VectorFieldFn as_function(const FieldFamily& field) {
  return [field](const ManifoldPoint& x) { return evaluate(field, x); };
}

std::optional<double> rough_laplacian_eigenvalue(const FieldFamily& field) {
  const SpaceForm& M = space_of(field);
  const double eps = M.epsilon();
  const int n = M.n();
  struct Eigen_ {
    double eps;
    int n;
    std::optional<double> operator()(const ConformalGradientField&) const { return eps; }
    std::optional<double> operator()(const KillingField&) const { return eps * (n - 1); }
    std::optional<double> operator()(const LoxodromicField&) const {
      return n == 2 ? std::optional<double>(eps) : std::nullopt;
    }
    std::optional<double> operator()(const DipoleDeformationField& f) const {
      if (n == 2 || f.tau() == 0.0) return eps;
      if (f.r() == 0.0) return eps * (n - 1);
      return std::nullopt;
    }
    std::optional<double> operator()(const Conformal2DField&) const { return eps; }
    std::optional<double> operator()(const QuadraticGradientField&) const { return n + 3.0; }
  };
  return std::visit(Eigen_{eps, n}, field);
}

FieldFamily scaled(const FieldFamily& field, double s) {
  struct Scaler {
    double s;
    FieldFamily operator()(const ConformalGradientField& f) const {
      return ConformalGradientField(f.space(), s * f.pole());
    }
    FieldFamily operator()(const KillingField& f) const {
      return KillingField(f.space(), f.op().scaled(s), f.base());
    }
    FieldFamily operator()(const LoxodromicField& f) const {
      if (s == 0.0) throw std::domain_error("scaled: the zero multiple of a loxodromic field is not loxodromic");
      auto planes = f.planes();
      if (s < 0) {
        for (auto& [a, b] : planes) std::swap(a, b);
      }
      return LoxodromicField(f.space(), std::move(planes), std::abs(s) * f.omega(), s * f.pole());
    }
    FieldFamily operator()(const DipoleDeformationField& f) const {
      return DipoleDeformationField(f.space(), f.w(), f.a(), s * f.tau(), s * f.r());
    }
    FieldFamily operator()(const Conformal2DField& f) const {
      Conformal2DField::Params p = f.params();
      const double m = std::abs(s);
      p.omega *= m;
      p.tau *= m;
      p.rr *= m;
      p.h *= s;
      if (s < 0) {
        // Flipping a negates R and T; the pole follows from c -> -c.
        p.t = -p.t;
        return Conformal2DField(f.space(), f.w(), -f.a(), f.b(), p);
      }
      return Conformal2DField(f.space(), f.w(), f.a(), f.b(), p);
    }
    FieldFamily operator()(const QuadraticGradientField& f) const {
      return QuadraticGradientField(f.space(), SymOperator(s * f.op().matrix()));
    }
  };
  return std::visit(Scaler{s}, field);
}

FieldFamily transformed(const FieldFamily& field, const Mat& g) {
  const SpaceForm& M = space_of(field);
  if (g.rows() != M.dim() || !is_isometry(g, M.signature(), 1e-9)) {
    throw std::invalid_argument("transformed: matrix is not an isometry of M");
  }
  struct Mover {
    const Mat& g;
    FieldFamily operator()(const ConformalGradientField& f) const {
      return ConformalGradientField(f.space(), g * f.pole());
    }
    FieldFamily operator()(const KillingField& f) const {
      Vec w = g * f.base();
      return KillingField(f.space(), f.op().conjugated(g), ManifoldPoint::normalized(f.space(), w).coords());
    }
    FieldFamily operator()(const LoxodromicField& f) const {
      auto planes = f.planes();
      for (auto& [a, b] : planes) {
        a = g * a;
        b = g * b;
      }
      return LoxodromicField(f.space(), std::move(planes), f.omega(), g * f.pole());
    }
    FieldFamily operator()(const DipoleDeformationField& f) const {
      return DipoleDeformationField(f.space(), ManifoldPoint::normalized(f.space(), g * f.w()).coords(), g * f.a(),
                                    f.tau(), f.r());
    }
    FieldFamily operator()(const Conformal2DField& f) const {
      return Conformal2DField(f.space(), ManifoldPoint::normalized(f.space(), g * f.w()).coords(), g * f.a(),
                              g * f.b(), f.params());
    }
    FieldFamily operator()(const QuadraticGradientField& f) const {
      const Mat q = g * f.op().matrix() * g.transpose();
      return QuadraticGradientField(f.space(), SymOperator(0.5 * (q + q.transpose())));
    }
  };
  return std::visit(Mover{g}, field);
}

// ---------------------------------------------------------------------------
// Declarative construction.

double parse_real(const std::string& text) {
  try {
    return QuadraticSurd::parse(text).to_double();
  } catch (const std::exception&) {
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: \"" + text + "\"");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) throw std::invalid_argument("not a number: \"" + text + "\"");
  return v;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_real(item));
  }
  return out;
}

namespace {

class Params {
 public:
  Params(const FieldDescription& d) : d_(d) {}  // NOLINT(google-explicit-constructor)

  bool has(const std::string& key) const { return d_.params.count(key) > 0; }
  const std::string& raw(const std::string& key) const {
    auto it = d_.params.find(key);
    if (it == d_.params.end()) {
      throw std::invalid_argument("family '" + d_.family + "' needs parameter '" + key + "'");
    }
    return it->second;
  }
  double real(const std::string& key) const { return parse_real(raw(key)); }
  double real_or(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }
  int integer(const std::string& key) const {
    const double v = real(key);
    if (v != std::floor(v)) throw std::invalid_argument("parameter '" + key + "' must be an integer");
    return static_cast<int>(v);
  }
  Vec vector(const std::string& key, Eigen::Index size) const {
    const std::vector<double> v = parse_real_list(raw(key));
    if (static_cast<Eigen::Index>(v.size()) != size) {
      throw std::invalid_argument("parameter '" + key + "' needs " + std::to_string(size) + " entries");
    }
    return Eigen::Map<const Vec>(v.data(), size);
  }

 private:
  const FieldDescription& d_;
};

Mat block_rotations(const std::vector<double>& twists, Eigen::Index dim) {
  Mat a = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < twists.size(); ++i) {
    const auto j = static_cast<Eigen::Index>(2 * i);
    a(j + 1, j) = twists[i];
    a(j, j + 1) = -twists[i];
  }
  return a;
}

}  // namespace

FieldFamily build_field(const FieldDescription& desc) {
  if (desc.n < 1) throw std::invalid_argument("n must be a positive integer");
  if (desc.epsilon != 1 && desc.epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  const SpaceForm M(desc.n, Signature(desc.epsilon));
  const Signature sig = M.signature();
  const Eigen::Index dim = M.dim();
  const int n = desc.n;
  const Params P(desc);

  if (desc.family == "confgrad") {
    if (P.has("pole")) return ConformalGradientField(M, P.vector("pole", dim));
    const double mu = P.real("mu");
    Vec a = Vec::Zero(dim);
    if (mu > 0) {
      a(0) = std::sqrt(mu);
    } else if (mu < 0) {
      if (M.is_spherical()) throw std::invalid_argument("confgrad: mu < 0 is impossible on S^n");
      a(n) = std::sqrt(-mu);
    } else if (!M.is_spherical()) {
      a(0) = 1.0;
      a(n) = 1.0;
    }
    return ConformalGradientField(M, a);
  }

  if (desc.family == "killing") {
    if (P.has("matrix")) {
      const std::vector<double> m = parse_real_list(P.raw("matrix"));
      if (static_cast<Eigen::Index>(m.size()) != dim * dim) {
        throw std::invalid_argument("killing: matrix needs (n+1)^2 entries");
      }
      Mat a(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = m[static_cast<std::size_t>(i * dim + j)];
      return KillingField(M, SkewOperator(a, sig, 1e-10));
    }
    if (P.has("hopf_rank")) return hopf_field_operator(P.integer("hopf_rank"), P.real_or("scale", 1.0), M);
    const std::vector<double> twists = P.has("twists") ? parse_real_list(P.raw("twists")) : std::vector<double>{};
    const double tau = P.real_or("translation", 0.0);
    const auto r = static_cast<Eigen::Index>(twists.size());
    if (M.is_spherical() ? 2 * r > dim : 2 * r > n) {
      throw std::invalid_argument("killing: too many twists for n = " + std::to_string(n));
    }
    Mat a = block_rotations(twists, dim);
    if (tau != 0.0) {
      if (M.is_spherical()) throw std::invalid_argument("killing: translations exist on H^n only");
      if (2 * r >= n) throw std::invalid_argument("killing: no spatial direction left for the translation");
      const Vec w = M.base_coords();
      const Vec v = tau * Vec::Unit(dim, 2 * r);
      a += M.epsilon() * elementary_killing_operator(w, v, sig).matrix();
    }
    if (twists.empty() && tau == 0.0 && !P.has("twists") && !P.has("translation")) {
      throw std::invalid_argument("killing: give matrix, hopf_rank, twists or translation");
    }
    return KillingField(M, SkewOperator(a, sig, 1e-10));
  }

  if (desc.family == "loxodromic") {
    const int r = P.integer("rank");
    const double omega = P.real("omega");
    if (r < 1 || 2 * r > n) throw std::invalid_argument("loxodromic: need 1 <= rank <= n/2");
    Vec c;
    if (P.has("pole")) {
      c = P.vector("pole", dim);
    } else {
      const double mu = P.real("mu");
      c = Vec::Zero(dim);
      if (mu < 0) {
        if (M.is_spherical()) throw std::invalid_argument("loxodromic: mu < 0 is impossible on S^n");
        c(n) = std::sqrt(-mu);
      } else if (mu > 0) {
        if (!M.is_spherical() && 2 * r >= n) {
          throw std::invalid_argument("loxodromic: a spacelike pole needs 2 rank < n on H^n");
        }
        c(2 * r) = std::sqrt(mu);
      } else {
        throw std::invalid_argument("loxodromic: mu must be nonzero");
      }
    }
    return LoxodromicField::standard(M, r, omega, c);
  }

  if (desc.family == "dipole") {
    if (n < 1 || dim < 2) throw std::invalid_argument("dipole: n too small");
    return DipoleDeformationField::standard(M, P.real("tau"), P.real("r"));
  }

  if (desc.family == "conformal2d") {
    if (n != 2) throw std::invalid_argument("conformal2d: requires n = 2");
    Conformal2DField::Params p;
    p.omega = P.real_or("omega", 0.0);
    p.tau = P.real_or("tau", 0.0);
    p.h = P.real_or("h", 0.0);
    p.rr = P.real_or("rr", 0.0);
    p.s = P.real_or("s", 1.0);
    p.t = P.real_or("t", 0.0);
    return Conformal2DField::standard(M, p);
  }

  if (desc.family == "quadratic") {
    if (!M.is_spherical()) throw std::invalid_argument("quadratic: spheres only");
    if (P.has("eigenvalues")) {
      const Vec ev = P.vector("eigenvalues", dim);
      return QuadraticGradientField(M, SymOperator(ev.asDiagonal().toDenseMatrix()));
    }
    const int r = P.integer("hopf_rank");
    if (r < 0 || r > dim) throw std::invalid_argument("quadratic: hopf_rank out of range");
    Vec ev = Vec::Zero(dim);
    ev.head(r).setConstant(P.real_or("scale", 1.0));
    return QuadraticGradientField(M, SymOperator(ev.asDiagonal().toDenseMatrix()));
  }

  throw std::invalid_argument("unknown field family '" + desc.family +
                              "' (expected confgrad, killing, loxodromic, dipole, conformal2d or quadratic)");
}

}  // namespace hvf
