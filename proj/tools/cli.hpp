#pragma once

#include "hvf/polyreduce.hpp"
#include "hvf/solvers.hpp"
#include "hvf/tension.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hvf::cli {

enum ExitCode { kConfirmed = 0, kRefuted = 1, kInputError = 2, kNoSolution = 3 };

/// A field description plus optional metric parameters, read from
/// "key = value" lines (or ';'-separated pairs). '#' starts a comment.
/// Reserved keys: family, n, epsilon, p, q; the rest are family parameters.
struct FieldSpecDoc {
  FieldDescription field;
  std::optional<double> p;
  std::optional<double> q;
};

FieldSpecDoc parse_spec_doc(const std::string& text);
/// Merges key=value into a document, with the same key rules.
void set_spec_key(FieldSpecDoc& doc, const std::string& key, const std::string& value);

nlohmann::ordered_json report_to_json(const TensionReport& rep, const FieldDescription& desc);
nlohmann::ordered_json classification_to_json(const Classification& c, const std::vector<BoundCheck>& bounds);
std::string report_to_csv(const TensionReport& rep);

struct Table7Row {
  int n = 0;
  int r = 0;
  QuadraticSurd p;
  QuadraticSurd q;
  QuadraticSurd lambda_sq_over_4;
};
std::vector<Table7Row> table7_rows(const std::vector<int>& ns);
std::string table7_csv(const std::vector<Table7Row>& rows);

/// Axes for scan2d. Values are exact strings; `st` holds "s:t" pairs.
struct ScanGrid {
  std::vector<std::string> omega, tau, h, rr, st, p, q;
};
/// "omega=0,3/5,1; h=0,1; st=3/5:4/5; p=3; q=-1/2". Unlisted axes keep the defaults.
ScanGrid parse_grid(const std::string& text, const ScanGrid& defaults);
ScanGrid default_grid(int epsilon);

struct ScanPoint {
  std::string omega, tau, h, rr, s, t, p, q;
  bool vanishes = false;
  int failing_grade = -1;
};
/// Every grid point except the zero field. Exact mode uses Q(sqrt d)
/// coefficients, otherwise double coefficients with a 1e-10 zero threshold.
std::vector<ScanPoint> run_scan(int epsilon, const ScanGrid& grid, bool exact);
std::string scan_csv(const std::vector<ScanPoint>& points);

/// Runs `hvf <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Decimal rendering used in text output: 10 significant digits.
std::string dec(double v);

}  // namespace hvf::cli
