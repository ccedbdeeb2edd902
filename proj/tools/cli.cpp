// Copyright 2026 The levyexit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

#include "figures.hpp"
#include "levyexit/parallel.hpp"

namespace levyexit::cli {

namespace {

using nlohmann::json;

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

json problem_json(const ProblemSpec& spec) {
  return {{"alpha", spec.stable.alpha}, {"beta", spec.stable.beta}, {"d", spec.d},
          {"eps", spec.eps},            {"b", spec.b},              {"drift", spec.drift.to_string()},
          {"kind", to_string(spec.kind)}};
}

json stats_json(const SolveStats& stats) {
  return {{"method", to_string(stats.method)},
          {"iterations", stats.iterations},
          {"final_residual", stats.final_residual},
          {"converged", stats.converged}};
}

json estimate_json(const McEstimate& est) {
  return {{"mean", est.mean},
          {"stderr", est.std_error},
          {"n_effective", est.n_effective},
          {"censored_fraction", est.censored_fraction},
          {"warning", est.warning}};
}

// Options shared by the solver subcommands.
struct ProblemOptions {
  double alpha = 1.5;
  double beta = 0.0;
  double d = 0.0;
  double eps = 1.0;
  double b = 1.0;
  std::string drift = "zero";

  ProblemSpec to_spec(ProblemKind kind) const {
    ProblemSpec spec;
    spec.stable.alpha = alpha;
    spec.stable.beta = beta;
    spec.d = d;
    spec.eps = eps;
    spec.b = b;
    spec.drift = DriftSpec::parse(drift);
    spec.kind = kind;
    spec.validate();
    return spec;
  }
};

struct NumericOptions {
  int J = 320;
  double tol = 1e-10;
  int restart = 50;
  int max_iters = 0;
  std::string solver = "gmres";
  bool jacobi = false;
  bool no_fallback = false;

  SolverOptions to_solver(int jobs) const {
    if (!(tol > 0.0)) {
      throw std::invalid_argument("--tol must be positive");
    }
    if (restart < 1) {
      throw std::invalid_argument("--restart must be at least 1");
    }
    if (max_iters < 0) {
      throw std::invalid_argument("--max-iters must be nonnegative");
    }
    SolverOptions options;
    options.method = solver == "direct" ? SolveMethod::direct : SolveMethod::gmres;
    options.gmres.tol = tol;
    options.gmres.restart = restart;
    options.gmres.jacobi = jacobi;
    options.gmres.max_iters = max_iters;
    options.direct_fallback = !no_fallback;
    options.jobs = jobs;
    return options;
  }
};

struct Settings {
  ProblemOptions problem;
  NumericOptions numeric;
  std::string out;
  std::string format = "csv";
  std::string mc_format = "json";
  std::string config;
  int jobs = 1;

  // mc
  double x0 = 0.0;
  std::uint64_t paths = 10000;
  double dt = 1e-3;
  std::uint64_t seed = 1;
  double tmax = 1e3;

  // verification
  std::vector<int> J_list;
  int J_ref = 1280;
  double probe = -0.5;

  // sweep
  std::string sweep_kind = "met";
  std::string sweep_param;
  std::vector<std::string> sweep_values;

  std::string figure_id;
};

void add_problem_options(CLI::App* app, ProblemOptions& p) {
  app->add_option("--alpha", p.alpha, "Index of stability, 0 < alpha < 2")->capture_default_str();
  app->add_option("--beta", p.beta, "Skewness, -1 <= beta <= 1")->capture_default_str();
  app->add_option("--d", p.d, "Gaussian noise intensity")->capture_default_str();
  app->add_option("--eps", p.eps, "Levy noise intensity")->capture_default_str();
  app->add_option("--b", p.b, "Domain half-width, D = (-b, b)")->capture_default_str();
  app->add_option("--drift", p.drift, "zero | linear:<k> | poly:<c0,c1,...>")->capture_default_str();
}

void add_numeric_options(CLI::App* app, NumericOptions& n, bool with_J) {
  if (with_J) {
    app->add_option("--J", n.J, "Grid resolution (2J intervals)")->capture_default_str();
  }
  app->add_option("--tol", n.tol, "GMRES relative residual tolerance")->capture_default_str();
  app->add_option("--restart", n.restart, "GMRES restart length")->capture_default_str();
  app->add_option("--solver", n.solver, "gmres | direct")
      ->check(CLI::IsMember({"gmres", "direct"}))
      ->capture_default_str();
  app->add_option("--max-iters", n.max_iters, "GMRES iteration cap (0: 10 x unknowns)")->capture_default_str();
  app->add_flag("--jacobi", n.jacobi, "Diagonal preconditioning for GMRES");
  app->add_flag("--no-fallback", n.no_fallback, "Fail instead of retrying with a direct solve");
}

void add_common_options(CLI::App* app, Settings& s, std::string& format) {
  app->add_option("--out", s.out, "Output path (stdout when omitted)");
  app->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app->add_option("--config", s.config, "key = value file; flags override it");
  app->add_option("--jobs", s.jobs, "Worker threads (default LEVY_EXIT_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
}

void emit(const Settings& s, const std::string& contents, std::ostream& out) {
  if (s.out.empty()) {
    out << contents;
  } else {
    write_file_atomic(s.out, contents);
  }
}

std::string sanitize(std::string text) {
  for (char& c : text) {
    if (c == ':' || c == ',' || c == '/' || c == ' ') {
      c = '_';
    }
  }
  return text;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("invalid value '" + text + "' for " + what);
  }
  return value;
}

void apply_sweep_value(ProblemOptions& p, const std::string& param, const std::string& value) {
  if (param == "alpha") {
    p.alpha = parse_real(value, param);
  } else if (param == "beta") {
    p.beta = parse_real(value, param);
  } else if (param == "d") {
    p.d = parse_real(value, param);
  } else if (param == "eps") {
    p.eps = parse_real(value, param);
  } else if (param == "b") {
    p.b = parse_real(value, param);
  } else if (param == "drift") {
    p.drift = value;
  } else {
    throw std::invalid_argument("unknown sweep parameter '" + param + "'");
  }
}

int run_solve(const Settings& s, ProblemKind kind, std::ostream& out) {
  const ProblemSpec spec = s.problem.to_spec(kind);
  const SolutionProfile profile = solve(spec, s.numeric.J, s.numeric.to_solver(s.jobs));
  emit(s, emit_profile(profile, parse_format(s.format)), out);
  return kExitOk;
}

int run_mc(const Settings& s, std::ostream& out, std::ostream& err) {
  const ProblemSpec spec = s.problem.to_spec(ProblemKind::met);
  McConfig config;
  config.n_paths = s.paths;
  config.dt = s.dt;
  config.seed = s.seed;
  config.t_max = s.tmax;
  config.jobs = s.jobs;
  const McExitEstimate estimate = estimate_exit(spec, s.x0, config);
  if (estimate.met.warning) {
    err << "warning: " << format_number(100.0 * estimate.met.censored_fraction)
        << "% of paths reached t_max and were censored\n";
  }
  emit(s, emit_mc(spec, s.x0, config, estimate, parse_format(s.mc_format)), out);
  return kExitOk;
}

int run_verify_manufactured(const Settings& s, std::ostream& out) {
  const std::vector<int> J_list = s.J_list.empty() ? std::vector<int>{20, 40, 80, 160} : s.J_list;
  const ConvergenceReport report = manufactured_study(s.problem.alpha, s.problem.beta, J_list, s.probe,
                                                      s.numeric.to_solver(s.jobs));
  emit(s, emit_report(report, parse_format(s.format)), out);
  return kExitOk;
}

int run_verify_convergence(const Settings& s, std::ostream& out) {
  const std::vector<int> J_list = s.J_list.empty() ? std::vector<int>{10, 20, 40, 80, 160} : s.J_list;
  const ProblemSpec spec = s.problem.to_spec(ProblemKind::met);
  const ConvergenceReport report =
      self_convergence_study(spec, J_list, s.J_ref, s.probe, s.numeric.to_solver(s.jobs));
  emit(s, emit_report(report, parse_format(s.format)), out);
  return kExitOk;
}

int run_sweep(const Settings& s) {
  const ProblemKind kind = parse_problem_kind(s.sweep_kind);
  const OutputFormat format = parse_format(s.format);
  // validate every point before any solve starts
  std::vector<ProblemSpec> specs;
  for (const std::string& value : s.sweep_values) {
    ProblemOptions p = s.problem;
    apply_sweep_value(p, s.sweep_param, value);
    specs.push_back(p.to_spec(kind));
  }
  const std::filesystem::path dir = s.out.empty() ? std::filesystem::path(".") : std::filesystem::path(s.out);
  std::filesystem::create_directories(dir);
  const SolverOptions options = s.numeric.to_solver(1);
  const std::string ext = format == OutputFormat::csv ? ".csv" : ".json";
  parallel_for(specs.size(), s.jobs, [&](std::size_t i) {
    const SolutionProfile profile = solve(specs[i], s.numeric.J, options);
    const std::string name = to_string(kind) + "_" + s.sweep_param + "_" + sanitize(s.sweep_values[i]) + ext;
    write_file_atomic(dir / name, emit_profile(profile, format));
  });
  return kExitOk;
}

int run_figure(const Settings& s, std::ostream& out) {
  const std::filesystem::path dir = s.out.empty() ? std::filesystem::path(".") : std::filesystem::path(s.out);
  std::filesystem::create_directories(dir);
  const OutputFormat format = parse_format(s.format);
  const std::vector<FigurePanel> panels = figure_panels(s.figure_id);
  const SolverOptions options = s.numeric.to_solver(1);
  std::vector<std::vector<SolutionProfile>> solved(panels.size());
  for (std::size_t p = 0; p < panels.size(); ++p) {
    solved[p].resize(panels[p].curves.size());
  }
  std::vector<std::pair<std::size_t, std::size_t>> jobs_list;
  for (std::size_t p = 0; p < panels.size(); ++p) {
    for (std::size_t c = 0; c < panels[p].curves.size(); ++c) {
      jobs_list.emplace_back(p, c);
    }
  }
  parallel_for(jobs_list.size(), s.jobs, [&](std::size_t i) {
    const auto [p, c] = jobs_list[i];
    solved[p][c] = solve(panels[p].curves[c].spec, s.numeric.J, options);
  });
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const std::string ext = format == OutputFormat::csv ? ".csv" : ".json";
    const std::filesystem::path path = dir / (panels[p].name + ext);
    write_file_atomic(path, emit_panel(panels[p], solved[p], format));
    out << path.string() << '\n';
  }
  return kExitOk;
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Inserts `--key value` pairs from --config for keys not given on the command line.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty() || args.empty()) {
    return args;
  }
  std::vector<std::string> expanded{args.front()};
  for (const auto& [key, value] : read_config_file(config_path)) {
    if (key == "config") {
      throw std::invalid_argument("config file may not reference another config file");
    }
    if (!has_flag(args, key)) {
      expanded.push_back("--" + key);
      if (!value.empty()) {
        expanded.push_back(value);
      }
    }
  }
  expanded.insert(expanded.end(), args.begin() + 1, args.end());
  return expanded;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") {
    return OutputFormat::csv;
  }
  if (text == "json") {
    return OutputFormat::json;
  }
  throw std::invalid_argument("unknown output format '" + text + "' (expected csv or json)");
}

std::string emit_profile(const SolutionProfile& profile, OutputFormat format) {
  const bool escape = profile.spec.kind == ProblemKind::escape_right;
  const char* value_name = escape ? "p" : "u";
  if (format == OutputFormat::csv) {
    std::string text = std::string("x,") + value_name + "\n";
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
      text += format_number(profile.x_nodes[i]) + "," + format_number(profile.values[i]) + "\n";
    }
    return text;
  }
  json doc;
  doc["x"] = profile.x_nodes;
  doc[value_name] = profile.values;
  doc["problem"] = problem_json(profile.spec);
  doc["J"] = profile.J;
  doc["solver"] = stats_json(profile.stats);
  doc["left_interior_limit"] = profile.left_interior_limit;
  doc["right_interior_limit"] = profile.right_interior_limit;
  doc["exterior"] = {{"left", 0.0}, {"right", escape ? 1.0 : 0.0}};
  return doc.dump(2) + "\n";
}

std::string emit_report(const ConvergenceReport& report, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string text = "J,error,order\n";
    for (std::size_t i = 0; i < report.J_list.size(); ++i) {
      text += std::to_string(report.J_list[i]) + "," + format_number(report.errors[i]) + ",";
      if (i < report.observed_orders.size()) {
        text += format_number(report.observed_orders[i]);
      }
      text += "\n";
    }
    return text;
  }
  json doc = {{"reference", to_string(report.reference)},
              {"probe_x", report.probe_x},
              {"J", report.J_list},
              {"errors", report.errors},
              {"observed_orders", report.observed_orders}};
  return doc.dump(2) + "\n";
}

std::string emit_mc(const ProblemSpec& spec, double x0, const McConfig& config, const McExitEstimate& estimate,
                    OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string text = "quantity,mean,stderr,n_effective,censored_fraction\n";
    const std::pair<const char*, const McEstimate*> rows[] = {{"met", &estimate.met},
                                                              {"escape_right", &estimate.escape_right}};
    for (const auto& [name, est] : rows) {
      text += std::string(name) + "," + format_number(est->mean) + "," + format_number(est->std_error) + "," +
              std::to_string(est->n_effective) + "," + format_number(est->censored_fraction) + "\n";
    }
    return text;
  }
  json doc = {{"problem", problem_json(spec)},
              {"x0", x0},
              {"config",
               {{"paths", config.n_paths}, {"dt", config.dt}, {"seed", config.seed}, {"t_max", config.t_max}}},
              {"met", estimate_json(estimate.met)},
              {"escape_right", estimate_json(estimate.escape_right)}};
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    file << contents;
    file.flush();
    if (!file) {
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot read config file '" + path.string() + "'");
  }
  const auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      return std::string();
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  while (std::getline(file, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(number) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) {
      key.erase(0, 2);
    }
    if (key.empty()) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(number) + ": empty key");
    }
    entries.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return entries;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Settings s;
  s.jobs = default_jobs();

  CLI::App app{"Mean exit time and escape probability for SDEs with asymmetric stable Levy noise", "levy_exit"};
  app.require_subcommand(1);

  auto* met = app.add_subcommand("met", "Solve for the mean first exit time");
  auto* escape = app.add_subcommand("escape", "Solve for the probability of first landing in [b, inf)");
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate at one starting point");
  auto* verify_m = app.add_subcommand("verify-manufactured", "Convergence against u = (1 - x^2)_+");
  auto* verify_c = app.add_subcommand("verify-convergence", "Self-convergence against a fine-grid solve");
  auto* sweep = app.add_subcommand("sweep", "Solve once per value of one parameter, one file each");
  auto* figure = app.add_subcommand("figure", "Regenerate parameter-study data (fig5 .. fig13)");

  for (CLI::App* sub : {met, escape, sweep}) {
    add_problem_options(sub, s.problem);
    add_numeric_options(sub, s.numeric, true);
    add_common_options(sub, s, s.format);
  }
  add_problem_options(mc, s.problem);
  add_common_options(mc, s, s.mc_format);
  mc->add_option("--x0", s.x0, "Starting point")->capture_default_str();
  mc->add_option("--paths", s.paths, "Number of sample paths")->capture_default_str();
  mc->add_option("--dt", s.dt, "Euler-Maruyama step")->capture_default_str();
  mc->add_option("--seed", s.seed, "Random seed")->capture_default_str();
  mc->add_option("--tmax", s.tmax, "Censoring time")->capture_default_str();

  verify_m->add_option("--alpha", s.problem.alpha, "Index of stability")->capture_default_str();
  verify_m->add_option("--beta", s.problem.beta, "Skewness")->capture_default_str();
  for (CLI::App* sub : {verify_m, verify_c}) {
    if (sub == verify_c) {
      add_problem_options(sub, s.problem);
      sub->add_option("--J-ref", s.J_ref, "Reference resolution")->capture_default_str();
    }
    add_numeric_options(sub, s.numeric, false);
    add_common_options(sub, s, s.format);
    sub->add_option("--J-list", s.J_list, "Resolutions, each double the previous");
    sub->add_option("--probe", s.probe, "Probe point, a node of every grid")->capture_default_str();
  }

  sweep->add_option("--kind", s.sweep_kind, "met | escape")->check(CLI::IsMember({"met", "escape"}));
  sweep->add_option("--param", s.sweep_param, "alpha | beta | d | eps | b | drift")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "d", "eps", "b", "drift"}));
  sweep->add_option("--values", s.sweep_values, "Values of the swept parameter")->required()->expected(1, -1);

  figure->add_option("id", s.figure_id, "Figure id")->required()->check(CLI::IsMember(figure_ids()));
  add_numeric_options(figure, s.numeric, true);
  add_common_options(figure, s, s.format);

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (met->parsed()) {
      return run_solve(s, ProblemKind::met, out);
    }
    if (escape->parsed()) {
      return run_solve(s, ProblemKind::escape_right, out);
    }
    if (mc->parsed()) {
      return run_mc(s, out, err);
    }
    if (verify_m->parsed()) {
      return run_verify_manufactured(s, out);
    }
    if (verify_c->parsed()) {
      return run_verify_convergence(s, out);
    }
    if (sweep->parsed()) {
      return run_sweep(s);
    }
    if (figure->parsed()) {
      return run_figure(s, out);
    }
  } catch (const ConvergenceError& e) {
    err << "solver failure: " << e.what() << " (residual " << format_number(e.best().stats.final_residual)
        << ")\n";
    return kExitSolver;
  } catch (const SingularMatrixError& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace levyexit::cli
