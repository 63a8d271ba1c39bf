#include "jwalk/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include "jwalk/analysis.hpp"
#include "jwalk/errors.hpp"
#include "jwalk/evolution.hpp"
#include "jwalk/output.hpp"
#include "jwalk/reduced_model.hpp"

namespace jwalk::cli {
namespace {

constexpr std::size_t kDefaultSimulateSteps = 1000;
constexpr std::size_t kDefaultVerifySteps = 200;

std::string command_name(Command c) {
  switch (c) {
    case Command::Simulate:
      return "simulate";
    case Command::SweepGamma:
      return "sweep-gamma";
    case Command::CriticalGamma:
      return "critical-gamma";
    case Command::Spectrum:
      return "spectrum";
    case Command::Verify:
      return "verify";
    case Command::AnalyzePt:
      return "analyze-pt";
  }
  return "?";
}

// k = 3 has a closed form; otherwise search numerically.
double default_gamma(const JohnsonParams& params) {
  if (params.k() == 3) return gamma_c_formula_k3(params.n()).gamma;
  return gamma_c_numeric(params).gamma;
}

double gamma_or_default(const RunConfig& c, const JohnsonParams& p) { return c.gamma ? *c.gamma : default_gamma(p); }

// Sends output to the configured file, or to `out` when none was given.
void emit(const RunConfig& config, std::ostream& out, const std::string& payload) {
  if (config.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw IoError("cannot open '" + config.output + "' for writing");
  file << payload;
  file.flush();
  if (!file) throw IoError("write to '" + config.output + "' failed");
}

std::string to_string(const CsvTable& table) {
  std::ostringstream s;
  write_csv(table, s);
  return s.str();
}

int run_simulate(const RunConfig& c, std::ostream& out) {
  const JohnsonParams params(c.n, c.k);
  const double gamma = gamma_or_default(c, params);
  const double t_max = c.t_max ? *c.t_max : 1.5 * predicted_peak_time(params);
  const std::size_t steps = c.steps.value_or(kDefaultSimulateSteps);
  const ReducedModel model = search_hamiltonian(params, gamma);
  const TimeSeries curve = success_curve(model.hamiltonian, initial_state(params), model.marked_index, t_max, steps);

  if (c.format == Format::Svg) {
    std::ostringstream title;
    title.precision(6);
    title << "J(" << c.n << "," << c.k << "), gamma = " << gamma;
    PlotSpec plot{title.str(), "time", "success probability", {{"p(t)", curve.times, curve.probabilities}}};
    emit(c, out, render_svg(plot));
    return kExitOk;
  }
  CsvTable table{{"time", "probability"}, {}};
  table.rows.reserve(curve.size());
  for (std::size_t j = 0; j < curve.size(); ++j) table.rows.push_back({curve.times[j], curve.probabilities[j]});
  emit(c, out, to_string(table));
  return kExitOk;
}

// Grid points are evaluated concurrently; results land by grid index.
std::vector<std::vector<OverlapRecord>> sweep(const JohnsonParams& params, const std::vector<double>& gammas) {
  std::vector<std::vector<OverlapRecord>> results(gammas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < gammas.size(); i = next++) {
      try {
        const ReducedModel model = search_hamiltonian(params, gammas[i]);
        results[i] = overlap_spectrum(model.hamiltonian, initial_state(params), model.marked_index);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), gammas.size()));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return results;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  const JohnsonParams params(c.n, c.k);
  const double kn = static_cast<double>(c.k) * c.n;
  const double lo = c.gamma_min.value_or(0.5 / kn);
  const double hi = c.gamma_max.value_or(1.5 / kn);
  std::vector<double> gammas(c.points);
  for (std::size_t i = 0; i < c.points; ++i) {
    gammas[i] = c.points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(c.points - 1);
  }
  const auto results = sweep(params, gammas);

  if (c.format == Format::Svg) {
    const std::size_t dim = static_cast<std::size_t>(c.k) + 1;
    PlotSpec plot{"J(" + std::to_string(c.n) + "," + std::to_string(c.k) + ") overlaps with the initial state",
                  "gamma",
                  "|<s|psi_i>|^2",
                  {}};
    for (std::size_t e = 0; e < dim; ++e) {
      PlotSeries s{"psi_" + std::to_string(e), gammas, std::vector<double>(gammas.size())};
      for (std::size_t i = 0; i < gammas.size(); ++i) s.y[i] = results[i][e].overlap_s;
      plot.series.push_back(std::move(s));
    }
    emit(c, out, render_svg(plot));
    return kExitOk;
  }
  CsvTable table{{"gamma", "eig_index", "energy", "overlap_s", "overlap_w"}, {}};
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t e = 0; e < results[i].size(); ++e) {
      const auto& r = results[i][e];
      table.rows.push_back({gammas[i], static_cast<std::int64_t>(e), r.energy, r.overlap_s, r.overlap_w});
    }
  }
  emit(c, out, to_string(table));
  return kExitOk;
}

int run_critical(const RunConfig& c, std::ostream& out) {
  const JohnsonParams params(c.n, c.k);
  CsvTable table{{"method", "gamma", "residual", "bracket_width"}, {}};
  if (c.k == 3) {
    const auto f = gamma_c_formula_k3(c.n);
    table.rows.push_back({std::string("formula_k3"), f.gamma, f.residual, f.bracket_width});
  }
  const auto num = gamma_c_numeric(params);
  table.rows.push_back({std::string("numeric"), num.gamma, num.residual, num.bracket_width});
  emit(c, out, to_string(table));
  return kExitOk;
}

int run_spectrum(const RunConfig& c, std::ostream& out) {
  const JohnsonParams params(c.n, c.k);
  const double gamma = gamma_or_default(c, params);
  const ReducedModel model = search_hamiltonian(params, gamma);
  const auto records = overlap_spectrum(model.hamiltonian, initial_state(params), model.marked_index);
  CsvTable table{{"eig_index", "energy", "overlap_s", "overlap_w"}, {}};
  for (std::size_t e = 0; e < records.size(); ++e) {
    table.rows.push_back({static_cast<std::int64_t>(e), records[e].energy, records[e].overlap_s, records[e].overlap_w});
  }
  emit(c, out, to_string(table));
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const JohnsonParams params(c.n, c.k);
  const double gamma = gamma_or_default(c, params);
  const double t_max =
      c.t_max ? *c.t_max : 2.0 * std::numbers::pi * std::sqrt(static_cast<double>(params.vertex_count()));
  const std::size_t steps = c.steps.value_or(kDefaultVerifySteps);
  const auto result = run_verification(params, gamma, t_max, steps, c.cap);
  CsvTable table{{"key", "value"}, {}};
  table.rows.push_back({std::string("n"), std::int64_t{c.n}});
  table.rows.push_back({std::string("k"), std::int64_t{c.k}});
  table.rows.push_back({std::string("gamma"), gamma});
  table.rows.push_back({std::string("t_max"), t_max});
  table.rows.push_back({std::string("steps"), static_cast<std::int64_t>(steps)});
  table.rows.push_back({std::string("vertices"), static_cast<std::int64_t>(result.vertex_count)});
  table.rows.push_back({std::string("max_deviation"), result.max_deviation});
  emit(c, out, to_string(table));
  if (!(result.max_deviation <= kVerifyThreshold)) {
    err << "verify: full and reduced success curves differ by " << format_real(result.max_deviation)
        << " (threshold " << format_real(kVerifyThreshold) << ")\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_analyze(const RunConfig& c, std::ostream& out) {
  const double gamma = c.gamma ? *c.gamma : gamma_c_formula_k3(c.n).gamma;
  const PerturbationReport r = perturbation_report(c.n, gamma);
  CsvTable table{{"key", "value"}, {}};
  auto add = [&](const std::string& key, CsvCell value) { table.rows.push_back({key, std::move(value)}); };
  add("n", std::int64_t{r.n});
  add("gamma", r.gamma);
  add("cubic_c3", r.cubic_coefficients[0]);
  add("cubic_c2", r.cubic_coefficients[1]);
  add("cubic_c1", r.cubic_coefficients[2]);
  add("cubic_c0", r.cubic_coefficients[3]);
  add("lambda_u", r.lambda_u);
  add("e_r", r.e_r);
  add("u_d0", r.u[0]);
  add("u_r1", r.u[1]);
  add("u_r2", r.u[2]);
  add("h_rr", r.effective(0, 0));
  add("h_ru", r.effective(0, 1));
  add("h_ur", r.effective(1, 0));
  add("h_uu", r.effective(1, 1));
  add("e_plus", r.e_plus);
  add("e_minus", r.e_minus);
  add("predicted_gap", r.predicted_gap);
  add("predicted_runtime", r.predicted_runtime);
  emit(c, out, to_string(table));
  return kExitOk;
}

bool finite_nonneg(const std::optional<double>& v) { return !v || (std::isfinite(*v) && *v >= 0.0); }

}  // namespace

void validate(const RunConfig& c) {
  const std::string name = command_name(c.command);
  std::optional<JohnsonParams> params;
  try {
    params.emplace(c.n, c.k);
  } catch (const DomainError& e) {
    throw UsageError(name + ": " + e.what());
  }
  if (!params->supports_reduced_model()) {
    throw UsageError(name + ": the distance-basis model needs n >= 2k");
  }
  if (c.command == Command::AnalyzePt && c.k != 3) throw UsageError("analyze-pt: only k = 3 is supported");
  if (!finite_nonneg(c.gamma)) throw UsageError(name + ": --gamma must be finite and >= 0");
  if (c.command == Command::AnalyzePt && c.gamma && *c.gamma == 0.0) {
    throw UsageError("analyze-pt: --gamma must be > 0");
  }
  if (!finite_nonneg(c.t_max)) throw UsageError(name + ": --t-max must be finite and >= 0");
  if (c.steps && *c.steps < 2) throw UsageError(name + ": --steps must be at least 2");
  if (c.command == Command::SweepGamma) {
    if (c.points < 1) throw UsageError("sweep-gamma: --points must be at least 1");
    if (!finite_nonneg(c.gamma_min) || !finite_nonneg(c.gamma_max)) {
      throw UsageError("sweep-gamma: gamma bounds must be finite and >= 0");
    }
    const double kn = static_cast<double>(c.k) * c.n;
    if (c.gamma_min.value_or(0.5 / kn) > c.gamma_max.value_or(1.5 / kn)) {
      throw UsageError("sweep-gamma: --gamma-min exceeds --gamma-max");
    }
  }
  if (c.format == Format::Svg && c.command != Command::Simulate && c.command != Command::SweepGamma) {
    throw UsageError(name + ": --format svg is only available for simulate and sweep-gamma");
  }
  if (c.command == Command::Verify) {
    if (c.cap < 1) throw UsageError("verify: --cap must be positive");
    if (params->vertex_count() > c.cap) {
      throw UsageError("verify: J(" + std::to_string(c.n) + "," + std::to_string(c.k) + ") has " +
                       std::to_string(params->vertex_count()) + " vertices, above --cap " + std::to_string(c.cap));
    }
  }
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Simulate:
      return run_simulate(c, out);
    case Command::SweepGamma:
      return run_sweep(c, out);
    case Command::CriticalGamma:
      return run_critical(c, out);
    case Command::Spectrum:
      return run_spectrum(c, out);
    case Command::Verify:
      return run_verify(c, out, err);
    case Command::AnalyzePt:
      return run_analyze(c, out);
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-time quantum walk search on Johnson graphs J(n,k)", "johnson-walk"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"svg", Format::Svg}};

  struct Sub {
    Command command;
    const char* description;
  };
  const std::vector<Sub> subs{
      {Command::Simulate, "Success probability over time (CSV time,probability or SVG)"},
      {Command::SweepGamma, "Eigen-energies and overlaps across a jumping-rate grid"},
      {Command::CriticalGamma, "Critical jumping rate: closed form (k=3) and numeric search"},
      {Command::Spectrum, "Eigenvalues and overlaps at one jumping rate"},
      {Command::Verify, "Compare full-graph and reduced-model success curves"},
      {Command::AnalyzePt, "Perturbation-theory quantities for k=3 as key,value CSV"},
  };
  std::vector<std::pair<CLI::App*, Command>> registered;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(command_name(s.command), s.description);
    sub->add_option("--n", config.n, "Number of symbols")->required();
    sub->add_option("--k", config.k, "Subset size")->required();
    sub->add_option("--output", config.output, "Output path (default stdout)");
    const bool plots = s.command == Command::Simulate || s.command == Command::SweepGamma;
    sub->add_option("--format", format, plots ? "csv or svg" : "csv")
        ->transform(CLI::IsMember(formats))
        ->default_val("csv");
    if (s.command != Command::CriticalGamma && s.command != Command::SweepGamma) {
      sub->add_option("--gamma", config.gamma, "Jumping rate (default: critical value)");
    }
    if (s.command == Command::Simulate || s.command == Command::Verify) {
      sub->add_option("--t-max", config.t_max, "End of the time grid");
      sub->add_option("--steps", config.steps, "Number of grid points");
    }
    if (s.command == Command::SweepGamma) {
      sub->add_option("--gamma-min", config.gamma_min, "Lower end of the gamma grid (default 0.5/(kn))");
      sub->add_option("--gamma-max", config.gamma_max, "Upper end of the gamma grid (default 1.5/(kn))");
      sub->add_option("--points", config.points, "Number of gamma grid points")->default_val(101);
    }
    if (s.command == Command::Verify) {
      sub->add_option("--cap", config.cap, "Brute-force vertex cap")->default_val(kDefaultVertexCap);
    }
    registered.emplace_back(sub, s.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }
  for (const auto& [sub, command] : registered) {
    if (sub->parsed()) config.command = command;
  }
  config.format = formats.at(format);

  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return dispatch(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace jwalk::cli
