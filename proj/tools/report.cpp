#include "cli.hpp"

#include <cstdio>
#include <sstream>

namespace hvf::cli {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument(key + " must be an integer, got '" + v + "'");
  return out;
}

}  // namespace

std::string dec(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void set_spec_key(FieldSpecDoc& doc, const std::string& key, const std::string& value) {
  if (key.empty()) throw std::invalid_argument("empty key in field spec");
  if (key == "family") {
    doc.field.family = value;
  } else if (key == "n") {
    doc.field.n = parse_int("n", value);
  } else if (key == "epsilon") {
    doc.field.epsilon = parse_int("epsilon", value);
  } else if (key == "p") {
    doc.p = parse_real(value);
  } else if (key == "q") {
    doc.q = parse_real(value);
  } else {
    doc.field.params[key] = value;
  }
}

FieldSpecDoc parse_spec_doc(const std::string& text) {
  FieldSpecDoc doc;
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ';') c = '\n';
  }
  int lineno = 0;
  for (const std::string& raw : split(normalized, '\n')) {
    ++lineno;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("field spec line " + std::to_string(lineno) + ": expected key = value");
    }
    set_spec_key(doc, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return doc;
}

nlohmann::ordered_json report_to_json(const TensionReport& rep, const FieldDescription& desc) {
  nlohmann::ordered_json j;
  j["family"] = rep.family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : desc.params) params[k] = v;
  j["params"] = params;
  j["p"] = rep.mp.p;
  j["q"] = rep.mp.q;
  j["n"] = rep.n;
  j["epsilon"] = rep.epsilon;
  j["seed"] = rep.seed;
  j["count"] = rep.count;
  j["derivative_path"] = to_string(rep.path);
  j["tol"] = rep.tol;
  j["max_rel_residual"] = rep.max_rel_residual;
  j["weitzenbock_max_err"] = rep.weitzenbock_max_err;
  j["spinnaker_max_err"] = rep.spinnaker_max_err;
  j["verdicts"] = {{"harmonic", rep.harmonic}, {"preharmonic", rep.preharmonic}, {"q_riemannian", rep.q_riemannian}};
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const PointResidual& r : rep.per_point) {
    nlohmann::ordered_json pt;
    pt["x"] = std::vector<double>(r.x.data(), r.x.data() + r.x.size());
    pt["residual_norm"] = r.residual_norm;
    pt["scale"] = r.scale;
    pts.push_back(pt);
  }
  j["per_point"] = pts;
  return j;
}

std::string report_to_csv(const TensionReport& rep) {
  std::ostringstream os;
  const std::size_t dim = rep.per_point.empty() ? 0 : static_cast<std::size_t>(rep.per_point.front().x.size());
  os << "index";
  for (std::size_t i = 0; i < dim; ++i) os << ",x" << i;
  os << ",residual_norm,scale,relative\n";
  for (std::size_t k = 0; k < rep.per_point.size(); ++k) {
    const PointResidual& r = rep.per_point[k];
    os << k;
    for (Eigen::Index i = 0; i < r.x.size(); ++i) os << "," << g17(r.x(i));
    os << "," << g17(r.residual_norm) << "," << g17(r.scale) << "," << g17(r.residual_norm / r.scale) << "\n";
  }
  return os.str();
}

nlohmann::ordered_json classification_to_json(const Classification& c, const std::vector<BoundCheck>& bounds) {
  nlohmann::ordered_json j;
  j["family"] = c.family;
  j["n"] = c.n;
  j["epsilon"] = c.epsilon;
  j["r"] = c.r;
  j["scale_name"] = c.scale_name;
  j["scale"] = c.scale;
  j["scale_exact"] = c.scale_exact.to_string();
  nlohmann::ordered_json mps = nlohmann::ordered_json::array();
  for (const ExactMetricParams& m : c.metric_params) {
    mps.push_back({{"p", m.p.to_double()}, {"q", m.q.to_double()}, {"p_exact", m.p.to_string()},
                   {"q_exact", m.q.to_string()}});
  }
  j["metric_params"] = mps;
  j["metrically_unique"] = c.metrically_unique;
  nlohmann::ordered_json bs = nlohmann::ordered_json::array();
  for (const BoundCheck& b : bounds) {
    bs.push_back({{"name", b.name}, {"inequality", b.inequality}, {"holds", b.holds}, {"margin", b.margin}});
  }
  j["bounds"] = bs;
  return j;
}

std::vector<Table7Row> table7_rows(const std::vector<int>& ns) {
  std::vector<Table7Row> rows;
  for (int n : ns) {
    const Classification c = quadratic_classification(n);
    rows.push_back({n, c.r, c.metric_params[0].p, c.metric_params[0].q, c.scale_exact / QuadraticSurd(4)});
  }
  return rows;
}

std::string table7_csv(const std::vector<Table7Row>& rows) {
  std::ostringstream os;
  os << "n,r,p,q,lambda0_sq_over_4,q_exact,lambda0_sq_over_4_exact\n";
  for (const Table7Row& r : rows) {
    os << r.n << "," << r.r << "," << r.p.to_string() << "," << g17(r.q.to_double()) << ","
       << g17(r.lambda_sq_over_4.to_double()) << ",\"" << r.q.to_string() << "\",\"" << r.lambda_sq_over_4.to_string()
       << "\"\n";
  }
  return os.str();
}

ScanGrid default_grid(int epsilon) {
  ScanGrid g;
  if (epsilon > 0) {
    g.omega = g.rr = g.h = {"1/2", "1", "2"};
    g.tau = {"0"};
    g.st = {"0:1"};
    for (int k = 0; k <= 6; ++k) g.p.push_back(std::to_string(4 + k) + "/2");
    for (int k = 20; k >= 1; --k) g.q.push_back("-" + std::to_string(k) + "/10");
  } else {
    g.omega = {"0", "3/5", "1"};
    g.tau = {"0"};
    g.h = {"0", "4/5", "1"};
    g.rr = {"0", "1/2", "1"};
    g.st = {"3/5:4/5"};
    g.p = {"3"};
    g.q = {"-1/2"};
  }
  return g;
}

ScanGrid parse_grid(const std::string& text, const ScanGrid& defaults) {
  ScanGrid g = defaults;
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == '\n') c = ';';
  }
  for (const std::string& item : split(normalized, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("grid: expected axis=values, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    std::vector<std::string> values;
    for (const std::string& v : split(item.substr(eq + 1), ',')) {
      if (!v.empty()) values.push_back(v);
    }
    if (key == "omega") {
      g.omega = values;
    } else if (key == "tau") {
      g.tau = values;
    } else if (key == "h") {
      g.h = values;
    } else if (key == "rr" || key == "r") {
      g.rr = values;
    } else if (key == "st") {
      g.st = values;
    } else if (key == "p") {
      g.p = values;
    } else if (key == "q") {
      g.q = values;
    } else {
      throw std::invalid_argument("grid: unknown axis '" + key + "' (expected omega, tau, h, rr, st, p, q)");
    }
  }
  return g;
}

std::vector<ScanPoint> run_scan(int epsilon, const ScanGrid& grid, bool exact) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  std::vector<ScanPoint> out;
  for (const std::string& st : grid.st) {
    const auto colon = st.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("grid: st entries look like s:t, got '" + st + "'");
    const std::string s = trim(st.substr(0, colon));
    const std::string t = trim(st.substr(colon + 1));
    for (const std::string& omega : grid.omega) {
      for (const std::string& tau : grid.tau) {
        for (const std::string& h : grid.h) {
          for (const std::string& rr : grid.rr) {
            ExactConformalParams x{QuadraticSurd::parse(omega), QuadraticSurd::parse(tau), QuadraticSurd::parse(h),
                                   QuadraticSurd::parse(rr), QuadraticSurd::parse(s), QuadraticSurd::parse(t)};
            if (x.omega.is_zero() && x.tau.is_zero() && x.h.is_zero() && x.rr.is_zero()) continue;
            const Conformal2DField field = make_conformal2d(epsilon, x);
            for (const std::string& p : grid.p) {
              for (const std::string& q : grid.q) {
                ScanPoint pt{omega, tau, h, rr, s, t, p, q};
                if (exact) {
                  const auto red = vanishes_mod_quadric(
                      build_harmonicity_poly(epsilon, x, QuadraticSurd::parse(p), QuadraticSurd::parse(q)), epsilon);
                  pt.vanishes = red.vanishes;
                  pt.failing_grade = red.failing_grade;
                } else {
                  const auto red =
                      vanishes_mod_quadric(build_harmonicity_poly(field, parse_real(p), parse_real(q)), epsilon);
                  pt.vanishes = red.vanishes;
                  pt.failing_grade = red.failing_grade;
                }
                out.push_back(pt);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::string scan_csv(const std::vector<ScanPoint>& points) {
  std::ostringstream os;
  os << "omega,tau,h,rr,s,t,p,q,vanishes,failing_grade\n";
  for (const ScanPoint& p : points) {
    os << p.omega << "," << p.tau << "," << p.h << "," << p.rr << "," << p.s << "," << p.t << "," << p.p << "," << p.q
       << "," << (p.vanishes ? "true" : "false") << "," << p.failing_grade << "\n";
  }
  return os.str();
}

}  // namespace hvf::cli
