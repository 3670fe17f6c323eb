// betalog: command-line front end for the beta-logistic information
// geometry library. Subcommands map one-to-one onto library operations;
// results are emitted as CSV or JSON with full floating-point precision.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "betalog/distribution.hpp"
#include "betalog/geodesics.hpp"
#include "betalog/geometry.hpp"
#include "betalog/inference.hpp"
#include "betalog/quadrature.hpp"
#include "betalog/verification.hpp"

using json = nlohmann::ordered_json;
using namespace betalog;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitVerifyFailed = 3;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << body;
}

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::time_reached: return "time_reached";
    case Termination::domain_boundary: return "domain_boundary";
    case Termination::step_underflow: return "step_underflow";
  }
  return "unknown";
}

ThetaPoint parse_theta_pair(const std::string& text) {
  std::istringstream in(text);
  double a = 0.0, b = 0.0;
  char comma = '\0';
  if (!(in >> a >> comma >> b) || comma != ',') {
    throw std::domain_error("expected a pair like 1,0 but got '" + text + "'");
  }
  return {a, b};
}

std::vector<double> read_observations(const std::string& path, int csv_column) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::domain_error("cannot open input file: " + path);
    in = &file;
  }
  std::vector<double> xs;
  std::string line;
  long line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string field = line;
    if (csv_column >= 1) {
      std::istringstream ls(line);
      std::string cell;
      for (int c = 0; c < csv_column; ++c) {
        if (!std::getline(ls, cell, ',')) {
          throw std::domain_error("line " + std::to_string(line_no) +
                                  " has no column " + std::to_string(csv_column));
        }
      }
      field = cell;
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(field, &used);
      xs.push_back(v);
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // tolerate a header line
      throw std::domain_error("unparseable number on line " +
                              std::to_string(line_no) + ": '" + field + "'");
    }
  }
  if (xs.empty()) throw std::domain_error("no observations in input");
  return xs;
}

// Shared per-subcommand output options.
struct OutputOpts {
  std::string path;
  std::string format;  // "csv" or "json"

  void attach(CLI::App* cmd, const std::string& default_format) {
    format = default_format;
    cmd->add_option("-o,--output", path, "Output file (default: stdout)");
    cmd->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
};

// Rows of named doubles render to either format.
std::string render_table(const OutputOpts& opts,
                         const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  if (opts.format == "csv") {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << columns[c];
    }
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << fmt17(row[c]);
      }
      out << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t c = 0; c < row.size(); ++c) obj[columns[c]] = row[c];
      arr.push_back(obj);
    }
    out << arr.dump(2) << "\n";
  }
  return out.str();
}

std::string render_object(const OutputOpts& opts, const json& obj) {
  if (opts.format == "csv") {
    std::ostringstream out;
    out << "key,value\n";
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it->is_number_float()) {
        out << it.key() << "," << fmt17(it->get<double>()) << "\n";
      } else {
        out << it.key() << "," << it->dump() << "\n";
      }
    }
    return out.str();
  }
  return obj.dump(2) + "\n";
}

std::string render_paths_csv(const std::vector<GeodesicPath>& paths,
                             bool with_path_column) {
  std::ostringstream out;
  if (with_path_column) out << "path,";
  out << "t,theta1,theta2,dtheta1,dtheta2,speed\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (const GeodesicState& s : paths[i].states) {
      const double speed =
          std::sqrt(metric_speed_squared(s.theta, s.velocity));
      if (with_path_column) out << i << ",";
      out << fmt17(s.t) << "," << fmt17(s.theta.theta1) << ","
          << fmt17(s.theta.theta2) << "," << fmt17(s.velocity[0]) << ","
          << fmt17(s.velocity[1]) << "," << fmt17(speed) << "\n";
    }
    if (with_path_column) {
      out << "# path " << i
          << " termination: " << termination_name(paths[i].termination) << "\n";
    } else {
      out << "# termination: " << termination_name(paths[i].termination)
          << "\n";
    }
  }
  return out.str();
}

json path_to_json(const GeodesicPath& path) {
  json states = json::array();
  for (const GeodesicState& s : path.states) {
    states.push_back({{"t", s.t},
                      {"theta1", s.theta.theta1},
                      {"theta2", s.theta.theta2},
                      {"dtheta1", s.velocity[0]},
                      {"dtheta2", s.velocity[1]},
                      {"speed",
                       std::sqrt(metric_speed_squared(s.theta, s.velocity))}});
  }
  return json{{"termination", termination_name(path.termination)},
              {"states", std::move(states)}};
}

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::relative: return "relative";
    case CheckKind::absolute: return "absolute";
    case CheckKind::bound: return "bound";
    case CheckKind::flag: return "flag";
  }
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "beta-logistic distribution toolkit: density, Fisher geometry, "
      "geodesics, priors, and MAP estimation"};
  app.require_subcommand(1);

  int exit_code = 0;

  // ---- pdf ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("pdf", "Evaluate the density at points");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto xs = std::make_shared<std::vector<double>>();
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--theta1", *t1, "Shape exponent")->required();
    cmd->add_option("--theta2", *t2, "Tilt")->required();
    cmd->add_option("--x", *xs, "Evaluation points")->required()->expected(-1);
    opts->attach(cmd, "json");
    cmd->callback([=]() {
      const ThetaPoint p{*t1, *t2};
      require_domain(p);
      std::vector<std::vector<double>> rows;
      for (double x : *xs) rows.push_back({x, pdf(p, x), log_pdf(p, x)});
      write_output(opts->path, render_table(*opts, {"x", "pdf", "log_pdf"}, rows));
    });
  }

  // ---- sample -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("sample", "Draw i.i.d. samples");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto n = std::make_shared<std::size_t>();
    auto seed = std::make_shared<std::uint64_t>();
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--theta1", *t1)->required();
    cmd->add_option("--theta2", *t2)->required();
    cmd->add_option("--n", *n, "Number of draws")->required();
    cmd->add_option("--seed", *seed, "RNG seed (required for reproducibility)")
        ->required();
    opts->attach(cmd, "csv");
    cmd->callback([=]() {
      const auto draws = sample({*t1, *t2}, *n, *seed);
      if (opts->format == "csv") {
        std::ostringstream out;
        out << "x\n";
        for (double x : draws) out << fmt17(x) << "\n";
        write_output(opts->path, out.str());
      } else {
        json arr = json::array();
        for (double x : draws) arr.push_back(x);
        write_output(opts->path, arr.dump() + "\n");
      }
    });
  }

  // ---- moments ------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("moments", "E[X^k] by adaptive quadrature");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto ks = std::make_shared<std::vector<int>>(std::vector<int>{0, 1, 2});
    auto opts = std::make_shared<OutputOpts>();
    auto scheme = std::make_shared<std::string>("tanh-sinh");
    cmd->add_option("--theta1", *t1)->required();
    cmd->add_option("--theta2", *t2)->required();
    cmd->add_option("--k", *ks, "Moment orders (default 0 1 2)")->expected(-1);
    cmd->add_option("--scheme", *scheme, "tanh-sinh or gauss-kronrod")
        ->check(CLI::IsMember({"tanh-sinh", "gauss-kronrod"}));
    opts->attach(cmd, "json");
    cmd->callback([=]() {
      QuadratureSpec spec;
      spec.scheme = (*scheme == "gauss-kronrod") ? QuadScheme::gauss_kronrod
                                                 : QuadScheme::tanh_sinh;
      std::vector<std::vector<double>> rows;
      for (int k : *ks) {
        if (k < 0) throw std::domain_error("moment order must be >= 0");
        rows.push_back({static_cast<double>(k), moment({*t1, *t2}, k, spec)});
      }
      write_output(opts->path, render_table(*opts, {"k", "value"}, rows));
    });
  }

  // ---- bernoulli-check / euler-check ---------------------------------
  for (const bool bernoulli : {true, false}) {
    auto* cmd = app.add_subcommand(
        bernoulli ? "bernoulli-check" : "euler-check",
        bernoulli ? "Bernoulli polynomials: moment quadrature vs recurrence"
                  : "Euler polynomials: moment quadrature vs recurrence");
    auto n_max = std::make_shared<int>(12);
    auto xs = std::make_shared<std::vector<double>>(
        std::vector<double>{0.0, 0.25, 0.5, 1.0});
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--n-max", *n_max, "Highest polynomial order (<= 20)");
    cmd->add_option("--x", *xs, "Evaluation points")->expected(-1);
    opts->attach(cmd, "csv");
    cmd->callback([=, &exit_code]() {
      std::vector<std::vector<double>> rows;
      bool failed = false;
      for (int n = 0; n <= *n_max; ++n) {
        for (double x : *xs) {
          const MomentResult m = bernoulli ? bernoulli_poly_via_moments(n, x)
                                           : euler_poly_via_moments(n, x);
          const double reference = bernoulli ? bernoulli_polynomial(n, x)
                                             : euler_polynomial(n, x);
          const double abs_err = std::fabs(m.value_real - reference);
          const bool ok = abs_err <= 1e-8 && std::fabs(m.value_imag) <= 1e-10;
          failed = failed || !ok;
          rows.push_back({static_cast<double>(n), x, m.value_real, reference,
                          abs_err, std::fabs(m.value_imag), ok ? 1.0 : 0.0});
        }
      }
      write_output(opts->path,
                   render_table(*opts,
                                {"n", "x", "quadrature", "recurrence",
                                 "abs_error", "imag_abs", "pass"},
                                rows));
      if (failed) exit_code = kExitVerifyFailed;
    });
  }

  // ---- metric -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("metric", "Fisher information matrix");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--theta1", *t1)->required();
    cmd->add_option("--theta2", *t2)->required();
    opts->attach(cmd, "json");
    cmd->callback([=]() {
      const FisherMatrix g = fisher({*t1, *t2});
      write_output(opts->path,
                   render_object(*opts, json{{"theta1", *t1},
                                             {"theta2", *t2},
                                             {"g11", g.g11},
                                             {"g12", g.g12},
                                             {"g22", g.g22},
                                             {"det", g.det},
                                             {"inv11", g.inv11},
                                             {"inv12", g.inv12},
                                             {"inv22", g.inv22},
                                             {"cond", g.cond}}));
    });
  }

  // ---- connection ----------------------------------------------------
  {
    auto* cmd =
        app.add_subcommand("connection", "alpha-connection coefficients");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto alpha = std::make_shared<double>();
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--theta1", *t1)->required();
    cmd->add_option("--theta2", *t2)->required();
    cmd->add_option("--alpha", *alpha)->required();
    opts->attach(cmd, "json");
    cmd->callback([=]() {
      const ConnectionField c = connection({*t1, *t2}, *alpha);
      write_output(opts->path,
                   render_object(*opts, json{{"alpha", c.alpha},
                                             {"lower111", c.lower111},
                                             {"lower112", c.lower112},
                                             {"lower122", c.lower122},
                                             {"lower222", c.lower222},
                                             {"raised1_11", c.raised1_11},
                                             {"raised1_12", c.raised1_12},
                                             {"raised1_22", c.raised1_22},
                                             {"raised2_11", c.raised2_11},
                                             {"raised2_12", c.raised2_12},
                                             {"raised2_22", c.raised2_22}}));
    });
  }

  // ---- curvature -----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("curvature", "alpha-curvature report");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto alpha = std::make_shared<double>();
    auto route = std::make_shared<std::string>("closed-form");
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--theta1", *t1)->required();
    cmd->add_option("--theta2", *t2)->required();
    cmd->add_option("--alpha", *alpha)->required();
    cmd->add_option("--route", *route,
                    "closed-form or contraction (independent cross-check)")
        ->check(CLI::IsMember({"closed-form", "contraction"}));
    opts->attach(cmd, "json");
    cmd->callback([=]() {
      const CurvatureReport r = (*route == "contraction")
                                    ? curvature_via_t_tensor({*t1, *t2}, *alpha)
                                    : curvature({*t1, *t2}, *alpha);
      write_output(opts->path,
                   render_object(*opts, json{{"alpha", r.alpha},
                                             {"r1212", r.r1212},
                                             {"ricci11", r.ricci11},
                                             {"ricci12", r.ricci12},
                                             {"ricci22", r.ricci22},
                                             {"scalar", r.scalar},
                                             {"gaussian", r.gaussian}}));
    });
  }

  // ---- geodesic ------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("geodesic", "Integrate one geodesic");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto v1 = std::make_shared<double>();
    auto v2 = std::make_shared<double>();
    auto t_end = std::make_shared<double>();
    auto rel = std::make_shared<double>(1e-9);
    auto abs = std::make_shared<double>(1e-12);
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--theta1", *t1)->required();
    cmd->add_option("--theta2", *t2)->required();
    cmd->add_option("--v1", *v1, "Initial d theta1/dt")->required();
    cmd->add_option("--v2", *v2, "Initial d theta2/dt")->required();
    cmd->add_option("--t-end", *t_end)->required();
    cmd->add_option("--rel-tol", *rel);
    cmd->add_option("--abs-tol", *abs);
    opts->attach(cmd, "csv");
    cmd->callback([=]() {
      GeodesicState start;
      start.theta = {*t1, *t2};
      start.velocity = {*v1, *v2};
      const GeodesicPath path = integrate_geodesic(start, *t_end, *rel, *abs);
      if (opts->format == "csv") {
        write_output(opts->path, render_paths_csv({path}, false));
      } else {
        write_output(opts->path, path_to_json(path).dump(2) + "\n");
      }
    });
  }

  // ---- bundle --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "bundle", "Unit-speed geodesics in uniformly spaced directions");
    auto origin = std::make_shared<std::string>();
    auto count = std::make_shared<int>(16);
    auto t_end = std::make_shared<double>(5.0);
    auto rel = std::make_shared<double>(1e-9);
    auto abs = std::make_shared<double>(1e-12);
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--origin", *origin, "Start point as theta1,theta2")
        ->required();
    cmd->add_option("--count", *count, "Number of directions");
    cmd->add_option("--t-end", *t_end);
    cmd->add_option("--rel-tol", *rel);
    cmd->add_option("--abs-tol", *abs);
    opts->attach(cmd, "csv");
    cmd->callback([=]() {
      const ThetaPoint p = parse_theta_pair(*origin);
      const auto paths = geodesic_bundle(p, *count, *t_end, *rel, *abs);
      if (opts->format == "csv") {
        write_output(opts->path, render_paths_csv(paths, true));
      } else {
        json arr = json::array();
        for (const auto& path : paths) arr.push_back(path_to_json(path));
        write_output(opts->path, arr.dump(2) + "\n");
      }
    });
  }

  // ---- spread --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "spread", "Metric separation of two nearby geodesics over time");
    auto origin = std::make_shared<std::string>();
    auto angle = std::make_shared<double>(0.5);
    auto perturbation = std::make_shared<double>(1e-4);
    auto t_end = std::make_shared<double>(5.0);
    auto rel = std::make_shared<double>(1e-9);
    auto abs = std::make_shared<double>(1e-12);
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--origin", *origin, "Start point as theta1,theta2")
        ->required();
    cmd->add_option("--angle", *angle,
                    "Base direction (radians, metric frame)");
    cmd->add_option("--perturbation", *perturbation, "Angle offset (radians)");
    cmd->add_option("--t-end", *t_end);
    cmd->add_option("--rel-tol", *rel);
    cmd->add_option("--abs-tol", *abs);
    opts->attach(cmd, "csv");
    cmd->callback([=]() {
      const ThetaPoint p = parse_theta_pair(*origin);
      const SpreadReport r =
          spread_diagnostic(p, *angle, *perturbation, *t_end, *rel, *abs);
      std::vector<std::vector<double>> rows;
      for (std::size_t i = 0; i < r.times.size(); ++i) {
        rows.push_back({r.times[i], r.separations[i]});
      }
      write_output(opts->path, render_table(*opts, {"t", "separation"}, rows));
    });
  }

  // ---- prior ---------------------------------------------------------
  {
    auto* cmd =
        app.add_subcommand("prior", "alpha-parallel prior density (log)");
    auto t1 = std::make_shared<double>();
    auto t2 = std::make_shared<double>();
    auto alpha = std::make_shared<double>();
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--theta1", *t1)->required();
    cmd->add_option("--theta2", *t2)->required();
    cmd->add_option("--alpha", *alpha)->required();
    opts->attach(cmd, "json");
    cmd->callback([=]() {
      const ThetaPoint p{*t1, *t2};
      write_output(
          opts->path,
          render_object(*opts,
                        json{{"alpha", *alpha},
                             {"log_prior", alpha_prior_log(p, *alpha)},
                             {"det_g", fisher(p).det}}));
    });
  }

  // ---- fit -----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "fit", "Maximum-a-posteriori estimate from observations");
    auto input = std::make_shared<std::string>();
    auto csv_column = std::make_shared<int>(0);
    auto alpha = std::make_shared<double>(0.0);
    auto grad_tol = std::make_shared<double>(1e-8);
    auto max_iter = std::make_shared<int>(200);
    auto init = std::make_shared<std::string>();
    auto opts = std::make_shared<OutputOpts>();
    cmd->add_option("--input", *input,
                    "Observation file, one value per line ('-' for stdin)")
        ->required();
    cmd->add_option("--csv-column", *csv_column,
                    "1-based CSV column holding the observations");
    cmd->add_option("--alpha", *alpha,
                    "Prior index (1 = flat/MLE, 0 = Jeffreys)");
    cmd->add_option("--grad-tol", *grad_tol);
    cmd->add_option("--max-iter", *max_iter);
    cmd->add_option("--init", *init, "Starting point as theta1,theta2");
    opts->attach(cmd, "json");
    cmd->callback([=, &exit_code]() {
      const auto xs = read_observations(*input, *csv_column);
      const SufficientStats stats = suff_stats(xs);
      SolverConfig cfg;
      cfg.grad_tol = *grad_tol;
      cfg.max_iter = *max_iter;
      if (!init->empty()) cfg.init = parse_theta_pair(*init);
      const MapEstimate est = map_estimate(stats, *alpha, cfg);
      json out{{"theta1", est.theta_hat.theta1},
               {"theta2", est.theta_hat.theta2},
               {"alpha", est.alpha},
               {"converged", est.converged},
               {"iterations", est.iterations},
               {"grad_norm", est.grad_norm},
               {"log_post_unnorm", est.log_post_unnorm},
               {"degenerate_data", est.degenerate_data},
               {"n", stats.n},
               {"log_a", stats.log_a},
               {"b", stats.b}};
      write_output(opts->path, render_object(*opts, out));
      if (!est.converged) exit_code = kExitNonConvergence;
    });
  }

  // ---- verify --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "verify", "Run the full closed-form and behavioral check table");
    auto opts = std::make_shared<OutputOpts>();
    auto quiet = std::make_shared<bool>(false);
    cmd->add_flag("--quiet", *quiet, "Suppress per-row lines");
    opts->attach(cmd, "json");
    cmd->callback([=, &exit_code]() {
      const VerificationReport report = run_verification();
      if (!*quiet) {
        for (const CheckRow& row : report.rows) {
          std::printf("[%s] (%s) %s: observed=%s expected=%s tol=%s %s\n",
                      row.passed ? "PASS" : "FAIL", row.criterion.c_str(),
                      row.name.c_str(), fmt17(row.observed).c_str(),
                      fmt17(row.expected).c_str(), fmt17(row.tolerance).c_str(),
                      kind_name(row.kind));
        }
      }
      for (const CriterionSummary& s : report.summaries()) {
        std::printf("[%s] criterion %s: %s\n", s.passed ? "PASS" : "FAIL",
                    s.criterion.c_str(), s.title.c_str());
      }
      std::printf("%zu checks, %s\n", report.rows.size(),
                  report.all_passed ? "all passed" : "FAILURES");

      json rows = json::array();
      for (const CheckRow& row : report.rows) {
        rows.push_back({{"criterion", row.criterion},
                        {"name", row.name},
                        {"observed", row.observed},
                        {"expected", row.expected},
                        {"tolerance", row.tolerance},
                        {"kind", kind_name(row.kind)},
                        {"passed", row.passed}});
      }
      const json doc{{"all_passed", report.all_passed}, {"rows", rows}};
      // Machine-readable report: written to --output when given, otherwise
      // printed as the final line.
      if (!opts->path.empty()) {
        write_output(opts->path, doc.dump(2) + "\n");
      } else {
        std::printf("%s\n", doc.dump().c_str());
      }
      if (!report.all_passed) exit_code = kExitVerifyFailed;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  } catch (const NonConvergenceError& e) {
    std::cerr << "error (non-convergence): " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::domain_error& e) {
    std::cerr << "error (domain): " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return exit_code;
}
