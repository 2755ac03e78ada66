#include "cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hvf::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string space_name(int n, int epsilon) { return (epsilon > 0 ? "S^" : "H^") + std::to_string(n); }

std::string exact_and_decimal(const QuadraticSurd& v) {
  const std::string e = v.to_string();
  const std::string d = dec(v.to_double());
  return e == d ? e : e + " = " + d;
}

struct VerifyArgs {
  std::string spec_file;
  std::vector<std::string> pairs;
  std::string family;
  std::optional<int> n;
  std::optional<int> epsilon;
  std::optional<std::string> p;
  std::optional<std::string> q;
  int points = 200;
  std::uint64_t seed = 42;
  double h_fd = 0.0;
  double tol = 1e-7;
  std::string path = "closed";
  int threads = 1;
  std::string json;
  std::string csv;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  FieldSpecDoc doc = a.spec_file.empty() ? FieldSpecDoc{} : parse_spec_doc(read_file(a.spec_file));
  for (const std::string& kv : a.pairs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + kv + "'");
    set_spec_key(doc, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!a.family.empty()) doc.field.family = a.family;
  if (a.n) doc.field.n = *a.n;
  if (a.epsilon) doc.field.epsilon = *a.epsilon;
  if (a.p) doc.p = parse_real(*a.p);
  if (a.q) doc.q = parse_real(*a.q);
  if (doc.field.family.empty()) throw std::invalid_argument("verify: no field family given");
  if (!doc.p || !doc.q) throw std::invalid_argument("verify: metric parameters p and q are required");

  const FieldFamily field = build_field(doc.field);
  VerifyOptions opts;
  opts.count = a.points;
  opts.seed = a.seed;
  opts.h_fd = a.h_fd;
  opts.tol = a.tol;
  opts.threads = a.threads;
  if (a.path == "closed") {
    opts.path = DerivativePath::ClosedForm;
  } else if (a.path == "fd") {
    opts.path = DerivativePath::FiniteDifference;
  } else {
    throw std::invalid_argument("--path must be closed or fd");
  }
  const TensionReport rep = verify(field, MetricParams(*doc.p, *doc.q), opts);

  out << "family        " << rep.family << "\n";
  out << "space         " << space_name(rep.n, rep.epsilon) << "\n";
  out << "metric        p = " << dec(rep.mp.p) << ", q = " << dec(rep.mp.q) << "\n";
  out << "points        " << rep.count << " (seed " << rep.seed << ", " << to_string(rep.path) << ")\n";
  out << "max residual  " << dec(rep.max_rel_residual) << " (tol " << dec(rep.tol) << ")\n";
  out << "weitzenbock   " << dec(rep.weitzenbock_max_err) << "\n";
  out << "spinnaker     " << dec(rep.spinnaker_max_err) << "\n";
  out << "preharmonic   " << (rep.preharmonic ? "yes" : "no") << "\n";
  out << "q-riemannian  " << (rep.q_riemannian ? "yes" : "no") << "\n";
  out << "verdict       " << (rep.harmonic ? "harmonic" : "not harmonic") << "\n";
  if (!a.json.empty()) write_file(a.json, report_to_json(rep, doc.field).dump(2) + "\n");
  if (!a.csv.empty()) write_file(a.csv, report_to_csv(rep));
  return rep.harmonic ? kConfirmed : kRefuted;
}

struct SolveArgs {
  std::string family;
  int n = 0;
  int r = 0;
  int epsilon = 1;
  std::string mu = "positive";
  std::string json;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  Classification c;
  if (a.family == "killing") {
    c = killing_classification(a.n, a.r, a.epsilon);
  } else if (a.family == "confgrad") {
    MuSign s = MuSign::Positive;
    if (a.mu == "zero") {
      s = MuSign::Zero;
    } else if (a.mu == "negative") {
      s = MuSign::Negative;
    } else if (a.mu != "positive") {
      throw std::invalid_argument("--mu must be positive, zero or negative");
    }
    c = conformal_gradient_classification(a.n, a.epsilon, s);
  } else if (a.family == "quadratic") {
    if (a.epsilon != 1) throw std::invalid_argument("quadratic gradient fields live on spheres");
    c = quadratic_classification(a.n);
  } else if (a.family == "loxodromic") {
    if (a.n != 0 && a.n != 2) throw NoSolution("harmonic loxodromic fields exist on H^2 only");
    if (a.epsilon != -1) throw NoSolution("harmonic loxodromic fields exist on H^2 only");
    c = loxodromic_classification();
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "' (expected killing, confgrad, quadratic, loxodromic)");
  }
  const std::vector<BoundCheck> bounds = bounds_report(c);

  out << "family        " << c.family << "\n";
  out << "space         " << space_name(c.n, c.epsilon) << "\n";
  if (c.family == "killing" || c.family == "quadratic") {
    out << "rank          " << c.r << "\n";
    out << c.scale_name << "^2" << std::string(c.scale_name.size() < 12 ? 12 - c.scale_name.size() : 1, ' ')
        << exact_and_decimal(c.scale_exact) << "\n";
    out << c.scale_name << std::string(c.scale_name.size() < 14 ? 14 - c.scale_name.size() : 1, ' ')
        << dec(c.scale) << "\n";
  } else {
    out << c.scale_name << std::string(c.scale_name.size() < 14 ? 14 - c.scale_name.size() : 1, ' ')
        << exact_and_decimal(c.scale_exact) << "\n";
  }
  for (std::size_t k = 0; k < c.metric_params.size(); ++k) {
    const ExactMetricParams& m = c.metric_params[k];
    const std::string tag = c.metric_params.size() > 1 ? std::to_string(k + 1) : " ";
    out << "p" << tag << "            " << exact_and_decimal(m.p) << "\n";
    out << "q" << tag << "            " << exact_and_decimal(m.q) << "\n";
  }
  out << "unique (p,q)  " << (c.metrically_unique ? "yes" : "no") << "\n";
  bool all = true;
  if (!bounds.empty()) out << "bounds\n";
  for (const BoundCheck& b : bounds) {
    out << "  " << (b.holds ? "ok   " : "FAIL ") << b.name << ": " << b.inequality << "\n";
    all = all && b.holds;
  }
  if (!a.json.empty()) write_file(a.json, classification_to_json(c, bounds).dump(2) + "\n");
  return all ? kConfirmed : kRefuted;
}

int cmd_table(const std::string& which, const std::vector<int>& rows, const std::string& csv, std::ostream& out) {
  if (which != "table7") throw std::invalid_argument("unknown table '" + which + "' (expected table7)");
  const std::vector<Table7Row> t = table7_rows(rows);
  std::vector<std::array<std::string, 5>> cells{{"n", "r", "p", "q", "lambda0^2/4"}};
  for (const Table7Row& r : t) {
    cells.push_back({std::to_string(r.n), std::to_string(r.r), r.p.to_string(), exact_and_decimal(r.q),
                     exact_and_decimal(r.lambda_sq_over_4)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
    }
    out << line << "\n";
  }
  if (!csv.empty()) write_file(csv, table7_csv(t));
  return kConfirmed;
}

int cmd_scan2d(int epsilon, const std::string& grid_text, const std::string& grid_file, bool exact,
               const std::string& csv, std::ostream& out) {
  ScanGrid grid = default_grid(epsilon);
  if (!grid_file.empty()) grid = parse_grid(read_file(grid_file), grid);
  if (!grid_text.empty()) grid = parse_grid(grid_text, grid);
  const std::vector<ScanPoint> pts = run_scan(epsilon, grid, exact);
  std::size_t hits = 0;
  for (const ScanPoint& p : pts) hits += p.vanishes ? 1 : 0;
  out << "space         " << space_name(2, epsilon) << "\n";
  out << "arithmetic    " << (exact ? "exact" : "double (approximate, zero threshold 1e-10)") << "\n";
  out << "grid points   " << pts.size() << "\n";
  out << "hits          " << hits << "\n";
  for (const ScanPoint& p : pts) {
    if (!p.vanishes) continue;
    out << "  omega=" << p.omega << " tau=" << p.tau << " h=" << p.h << " rr=" << p.rr << " s=" << p.s
        << " t=" << p.t << " p=" << p.p << " q=" << p.q << "\n";
  }
  if (!csv.empty()) write_file(csv, scan_csv(pts));
  return kConfirmed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hvf: harmonic vector fields on space forms"};
  app.require_subcommand(1);

  VerifyArgs va;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check the harmonic-section equation on sample points");
  verify_cmd->add_option("pairs", va.pairs, "field spec entries key=value");
  verify_cmd->add_option("--spec", va.spec_file, "field spec file of key = value lines");
  verify_cmd->add_option("--family", va.family, "confgrad, killing, loxodromic, dipole, conformal2d, quadratic");
  verify_cmd->add_option("--n", va.n, "dimension");
  verify_cmd->add_option("--epsilon", va.epsilon, "+1 sphere, -1 hyperbolic space");
  verify_cmd->add_option("--p", va.p, "metric parameter p");
  verify_cmd->add_option("--q", va.q, "metric parameter q");
  verify_cmd->add_option("--points", va.points, "sample points")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", va.seed, "sampling seed");
  verify_cmd->add_option("--h-fd", va.h_fd, "finite-difference step (fd path)");
  verify_cmd->add_option("--tol", va.tol, "verdict threshold on the relative residual");
  verify_cmd->add_option("--path", va.path, "closed or fd");
  verify_cmd->add_option("--threads", va.threads, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--json", va.json, "write the report as JSON");
  verify_cmd->add_option("--csv", va.csv, "write per-point residuals as CSV");

  SolveArgs sa;
  CLI::App* solve_cmd = app.add_subcommand("solve", "classify harmonic fields of a family");
  solve_cmd->add_option("--family", sa.family, "killing, confgrad, quadratic, loxodromic")->required();
  solve_cmd->add_option("--n", sa.n, "dimension");
  solve_cmd->add_option("--r", sa.r, "rotational rank (killing)");
  solve_cmd->add_option("--epsilon", sa.epsilon, "+1 sphere, -1 hyperbolic space");
  solve_cmd->add_option("--mu", sa.mu, "sign of mu for confgrad: positive, zero, negative");
  solve_cmd->add_option("--json", sa.json, "write the classification as JSON");

  std::string which = "table7";
  std::vector<int> rows{5, 7, 9};
  std::string table_csv;
  CLI::App* table_cmd = app.add_subcommand("table", "print the quadratic gradient table");
  table_cmd->add_option("--which", which, "table7");
  table_cmd->add_option("--rows", rows, "odd dimensions n >= 5")->delimiter(',');
  table_cmd->add_option("--csv", table_csv, "write the table as CSV");

  int scan_eps = -1;
  std::string grid_text;
  std::string grid_file;
  bool exact = false;
  std::string scan_csv_path;
  CLI::App* scan_cmd = app.add_subcommand("scan2d", "sweep conformal fields on M^2 through the quadric test");
  scan_cmd->add_option("--epsilon", scan_eps, "+1 or -1")->required();
  scan_cmd->add_option("--grid", grid_text, "axes, e.g. \"omega=0,1; h=1; st=0:1; p=3; q=-1/2\"");
  scan_cmd->add_option("--grid-file", grid_file, "axes in a file, one per line");
  scan_cmd->add_flag("--exact", exact, "exact arithmetic");
  scan_cmd->add_option("--csv", scan_csv_path, "write every grid point as CSV");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kConfirmed;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kConfirmed;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(va, out);
    if (solve_cmd->parsed()) return cmd_solve(sa, out);
    if (table_cmd->parsed()) return cmd_table(which, rows, table_csv, out);
    if (scan_cmd->parsed()) return cmd_scan2d(scan_eps, grid_text, grid_file, exact, scan_csv_path, out);
  } catch (const NoSolution& e) {
    out << "no solution: " << e.what() << "\n";
    return kNoSolution;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hvf::cli
