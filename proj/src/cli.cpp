#include "eccwheel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "eccwheel/closedform.hpp"
#include "eccwheel/errors.hpp"
#include "eccwheel/graphs.hpp"

namespace eccwheel::cli {

namespace {

using json = nlohmann::ordered_json;
namespace cf = closedform;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json vector_json(const VectorQ& v) {
  json arr = json::array();
  for (const auto& x : v.entries()) arr.push_back(x.to_fraction_string());
  return arr;
}

json matrix_json(const MatrixQ& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row_vector(i)));
  return rows;
}

std::string csv_row(const VectorQ& v) {
  std::string line;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) line += ',';
    line += v[i].to_fraction_string();
  }
  return line + "\n";
}

std::string pretty_rows(const std::vector<VectorQ>& rows) {
  std::size_t width = 1;
  for (const auto& r : rows) {
    for (const auto& x : r.entries()) width = std::max(width, x.to_string().size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const std::string s = r[j].to_string();
      if (j) line += "  ";
      line += std::string(width - s.size(), ' ') + s;
    }
    out += line + "\n";
  }
  return out;
}

std::string render_matrix(const MatrixQ& m, Format format) {
  switch (format) {
    case Format::json: return matrix_json(m).dump() + "\n";
    case Format::csv: {
      std::string out;
      for (std::size_t i = 0; i < m.rows(); ++i) out += csv_row(m.row_vector(i));
      return out;
    }
    default: {
      std::vector<VectorQ> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
      return pretty_rows(rows);
    }
  }
}

std::string render_vectors(const std::vector<VectorQ>& vs, Format format) {
  switch (format) {
    case Format::json: {
      if (vs.size() == 1) return vector_json(vs[0]).dump() + "\n";
      json arr = json::array();
      for (const auto& v : vs) arr.push_back(vector_json(v));
      return arr.dump() + "\n";
    }
    case Format::csv: {
      std::string out;
      for (const auto& v : vs) out += csv_row(v);
      return out;
    }
    default: return pretty_rows(vs);
  }
}

std::string render_edges(const graphs::Graph& g, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (auto [i, j] : g.edges()) arr.push_back(json::array({i, j}));
    return arr.dump() + "\n";
  }
  if (format == Format::csv) {
    std::string out;
    for (auto [i, j] : g.edges()) out += std::to_string(i) + "," + std::to_string(j) + "\n";
    return out;
  }
  return graphs::edge_list(g);
}

std::string generate(const std::string& object, int n, Format format) {
  if (object == "E") return render_matrix(cf::ecc_matrix_wheel(n), format);
  if (object == "D") return render_matrix(cf::distance_matrix_wheel(n), format);
  if (object == "E_minus_edge") return render_matrix(cf::ecc_matrix_wheel_minus_edge(n), format);
  if (object == "Ltilde") return render_matrix(cf::laplacian_tilde(n), format);
  if (object == "Lhat") return render_matrix(cf::laplacian_hat(n), format);
  if (object == "inverse") return render_matrix(cf::inverse_E_closed(n), format);
  if (object == "pinv") return render_matrix(cf::pinv_E_closed(n), format);
  if (object == "quotient") return render_matrix(cf::quotient_matrix(n), format);
  if (object == "w") return render_vectors({cf::weight_w(n)}, format);
  if (object == "nullvecs") {
    auto [x, y] = cf::null_vectors(n);
    return render_vectors({x, y}, format);
  }
  if (object == "edges") return render_edges(graphs::build_wheel(n), format);
  if (object == "edges_minus_edge") {
    return render_edges(graphs::delete_cycle_edge(graphs::build_wheel(n)), format);
  }
  throw UsageError("unknown object '" + object + "'");
}

json report_json(const report::VerificationReport& rep, bool timings) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["status"] = report::status_name(c.status);
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    if (!c.note.empty()) j["note"] = c.note;
    if (timings) j["wall_ms"] = c.wall_ms;
    checks.push_back(std::move(j));
  }
  json out;
  out["n"] = rep.n;
  out["passed"] = rep.passed();
  out["checks"] = std::move(checks);
  if (!rep.oracle_values.empty()) {
    json oracle = json::object();
    for (const auto& [k, v] : rep.oracle_values) oracle[k] = v;
    out["oracle"] = std::move(oracle);
  }
  return out;
}

std::string csv_header() { return "n,check,status,expected,actual,note\n"; }

std::string csv_rows(const report::VerificationReport& rep, bool timings) {
  std::string out;
  for (const auto& c : rep.checks) {
    out += std::to_string(rep.n) + "," + csv_field(c.name) + "," + report::status_name(c.status) + "," +
           csv_field(c.expected) + "," + csv_field(c.actual) + "," + csv_field(c.note);
    if (timings) {
      std::ostringstream ms;
      ms << c.wall_ms;
      out += "," + ms.str();
    }
    out += "\n";
  }
  for (const auto& [k, v] : rep.oracle_values) {
    out += std::to_string(rep.n) + ",oracle:" + csv_field(k) + ",info,," + csv_field(v) + ",\n";
  }
  return out;
}

std::string pretty_report(const report::VerificationReport& rep, bool timings) {
  std::size_t width = 0;
  for (const auto& c : rep.checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  os << "n = " << rep.n << ": " << rep.count(report::Status::pass) << " pass, "
     << rep.count(report::Status::fail) << " fail, " << rep.count(report::Status::skip) << " skip\n";
  for (const auto& c : rep.checks) {
    os << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << report::status_name(c.status);
    if (c.status != report::Status::skip) os << "  expected " << c.expected << ", actual " << c.actual;
    if (!c.note.empty()) os << "  [" << c.note << "]";
    if (timings) os << "  " << c.wall_ms << " ms";
    os << "\n";
  }
  for (const auto& [k, v] : rep.oracle_values) os << "  oracle " << k << " = " << v << "\n";
  return os.str();
}

Format parse_format(const std::string& s) {
  static const std::map<std::string, Format> table = {
      {"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};
  return table.at(s);
}

void guard_n(int n, bool override_limit) {
  if (n > kMaxDefaultN && !override_limit) {
    throw UsageError("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxDefaultN) +
                     "; pass --max-n-override to allow it");
  }
}

}  // namespace

const std::vector<std::string>& gen_objects() {
  static const std::vector<std::string> objects = {
      "E", "D", "E_minus_edge", "Ltilde", "Lhat", "inverse", "pinv",
      "w", "nullvecs", "quotient", "edges", "edges_minus_edge"};
  return objects;
}

std::string render_report(const report::VerificationReport& rep, Format format, bool timings) {
  switch (format) {
    case Format::json: return report_json(rep, timings).dump(2) + "\n";
    case Format::csv: return csv_header() + csv_rows(rep, timings);
    default: return pretty_report(rep, timings);
  }
}

std::string render_sweep(const report::SweepResult& result, Format format, bool timings) {
  const auto& s = result.summary;
  switch (format) {
    case Format::json: {
      json reports = json::array();
      for (const auto& rep : result.reports) reports.push_back(report_json(rep, timings));
      json summary;
      summary["n_min"] = s.n_min;
      summary["n_max"] = s.n_max;
      summary["reports"] = s.reports;
      summary["passed"] = s.passed;
      summary["failed"] = s.failed;
      summary["skipped"] = s.skipped;
      if (timings) summary["max_wall_ms"] = s.max_wall_ms;
      summary["first_failure"] =
          s.has_failure ? json{{"n", s.first_failure_n}, {"check", s.first_failure_check}} : json(nullptr);
      json out;
      out["reports"] = std::move(reports);
      out["summary"] = std::move(summary);
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = csv_header();
      for (const auto& rep : result.reports) out += csv_rows(rep, timings);
      return out;
    }
    default: {
      std::string out;
      for (const auto& rep : result.reports) out += pretty_report(rep, timings);
      std::ostringstream os;
      os << "summary: n = " << s.n_min << ".." << s.n_max << ", " << s.reports << " reports, " << s.passed
         << " pass, " << s.failed << " fail, " << s.skipped << " skip";
      if (s.has_failure) os << ", first failure " << s.first_failure_check << " at n = " << s.first_failure_n;
      if (timings) os << ", max " << s.max_wall_ms << " ms";
      return out + os.str() + "\n";
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of closed forms for eccentricity matrices of wheel graphs", "eccwheel"};
  app.require_subcommand(1);

  std::string format_name = "json";
  unsigned jobs = 1;
  bool override_limit = false;
  bool timings = false;
  double tol = 1e-8;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads for sweep")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--max-n-override", override_limit, "Allow n above " + std::to_string(kMaxDefaultN));
  app.add_option("--tol", tol, "Tolerance for the floating-point spectral checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--timings", timings, "Include per-check wall times (output is then not reproducible)");

  std::string object;
  int gen_n = 0;
  auto* gen = app.add_subcommand("gen", "Print a closed-form object");
  gen->add_option("object", object, "Object to print")->required()->check(CLI::IsMember(gen_objects()));
  gen->add_option("n", gen_n, "Number of vertices")->required();

  int verify_n = 0;
  auto* verify = app.add_subcommand("verify", "Check every closed form against the oracles for one n");
  verify->add_option("n", verify_n, "Number of vertices")->required();

  int n_min = 0;
  int n_max = 0;
  auto* sweep = app.add_subcommand("sweep", "Verify every n in a range");
  sweep->add_option("nmin", n_min, "Smallest n")->required();
  sweep->add_option("nmax", n_max, "Largest n")->required();

  for (auto* sub : {gen, verify, sweep}) sub->fallthrough();

  std::vector<const char*> argv{"eccwheel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = parse_format(format_name);
  const report::VerifyOptions options{tol};
  try {
    if (*gen) {
      guard_n(gen_n, override_limit);
      out << generate(object, gen_n, format);
      return kExitOk;
    }
    if (*verify) {
      guard_n(verify_n, override_limit);
      if (verify_n < 4) throw UsageError("verify needs n >= 4");
      const auto rep = report::verify(verify_n, options);
      out << render_report(rep, format, timings);
      return rep.passed() ? kExitOk : kExitFailure;
    }
    guard_n(n_max, override_limit);
    if (n_min < 5 || n_min > n_max) throw UsageError("sweep needs 5 <= nmin <= nmax");
    const auto result = report::sweep(n_min, n_max, jobs, options);
    out << render_sweep(result, format, timings);
    return result.summary.has_failure ? kExitFailure : kExitOk;
  } catch (const UsageError& e) {
    err << "eccwheel: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "eccwheel: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "eccwheel: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace eccwheel::cli
