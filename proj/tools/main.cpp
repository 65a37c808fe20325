// casimir-rough: CLI front end for the roughness-corrected Casimir force
// library. Emits human-readable summaries, JSON, and plot-ready CSV.

#include "CLI11.hpp"
#include "json.hpp"

#include "casimir/constants.hpp"
#include "casimir/correction.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/mirror.hpp"
#include "casimir/oracle.hpp"
#include "casimir/response.hpp"
#include "casimir/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

// Shortest round-trip double formatting, shared by text, CSV and JSON modes
// so all three report bit-identical values.
std::string num(double x) { return json(x).dump(); }

casimir::MirrorSpec make_mirror(double lambda_p_nm) {
  return lambda_p_nm == 0.0 ? casimir::MirrorSpec::perfect()
                            : casimir::MirrorSpec::plasma(lambda_p_nm);
}

casimir::RoughnessSpectrum parse_spectrum(const std::string& spec,
                                          const std::string& file) {
  if (!file.empty()) return casimir::RoughnessSpectrum::load_csv(file);
  const std::string prefix = "gaussian:";
  if (spec.rfind(prefix, 0) != 0)
    throw std::domain_error(
        "spectrum must be 'gaussian:a=<nm>,lc=<nm>' or --spectrum-file <csv>");
  double a = std::nan(""), lc = std::nan("");
  std::string body = spec.substr(prefix.size());
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    std::string kv = body.substr(pos, end - pos);
    std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("malformed spectrum term '" + kv + "'");
    std::string key = kv.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::domain_error("malformed spectrum value in '" + kv + "'");
    }
    if (key == "a") a = value;
    else if (key == "lc") lc = value;
    else throw std::domain_error("unknown spectrum key '" + key + "'");
    pos = end + 1;
  }
  if (!(a > 0.0) || !(lc > 0.0))
    throw std::domain_error("spectrum needs a > 0 and lc > 0");
  return casimir::RoughnessSpectrum::gaussian(a * a, lc);
}

casimir::ResponseModel parse_model_or_throw(const std::string& name) {
  auto model = casimir::parse_response_model(name);
  if (!model)
    throw std::domain_error("unknown model '" + name +
                            "' (pfa|high_k|perfect|stitched)");
  return *model;
}

double rho_value(casimir::ResponseModel model, double k, double L,
                 const casimir::MirrorSpec& mirror, double tol) {
  switch (model) {
    case casimir::ResponseModel::pfa:
      return 1.0;
    case casimir::ResponseModel::high_k:
      return casimir::rho_high_k(k, L, mirror, tol);
    case casimir::ResponseModel::perfect_reflector:
      return casimir::rho_perfect(k * L, tol);
    case casimir::ResponseModel::stitched:
      return casimir::rho_estimate(k, L, mirror, tol).rho;
  }
  return 1.0;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::domain_error("range must satisfy 0 < min < max");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = lo * std::pow(hi / lo, double(i) / double(points - 1));
  return grid;
}

unsigned thread_budget(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("CASIMIR_THREADS")) {
    char* rest = nullptr;
    long cap = std::strtol(env, &rest, 10);
    if (rest != env && cap >= 1) n = std::min<long>(n, cap);
  }
  return unsigned(std::min<std::size_t>(n, jobs));
}

// Evaluates fn(i) for i in [0, jobs) across a capped thread pool. Results are
// index-addressed so the caller's output order is deterministic. The first
// exception wins and is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t jobs, Fn&& fn) {
  unsigned threads = thread_budget(jobs);
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

// ---- subcommand state -----------------------------------------------------

struct EnergyArgs {
  double L = 0.0, lambda_p = 0.0, tol = 1e-6;
  double R = 0.0;
  bool has_R = false;
  bool json_out = false;
};

struct RhoArgs {
  double L = 0.0, lambda_p = 0.0, k_min = 0.0, k_max = 0.0, tol = 1e-6;
  int points = 50;
  std::string model = "stitched";
  bool json_out = false;
};

struct AlphaArgs {
  double lambda_p = 0.0, L_min = 0.0, L_max = 0.0, tol = 1e-6;
  int points = 50;
  bool json_out = false;
};

struct DeltaArgs {
  double L = 0.0, lambda_p = 0.0, tol = 1e-6;
  std::string spectrum, spectrum_file, model = "auto";
  bool json_out = false;
};

struct SweepArgs {
  std::string axis;
  double min = 0.0, max = 0.0;
  int points = 20;
  double L = 0.0, lambda_p = 0.0, tol = 1e-6;
  std::string spectrum, spectrum_file, model = "auto", output;
  bool json_out = false;
};

struct OracleArgs {
  std::string quantity;
  double Kp = 0.0, q = 0.0, K_max = 40.0, step = 1.0;
  int n = 256;
  unsigned long long seed = 1;
  std::string spectrum, spectrum_file;
  bool json_out = false;
};

int run_energy(const EnergyArgs& a) {
  auto mirror = make_mirror(a.lambda_p);
  auto reduced = casimir::reduced_energy(mirror, a.L, a.tol);
  auto derivs = casimir::energy_derivatives(a.L, mirror, a.tol);
  double ratio = casimir::pfa_curvature_ratio(a.L, mirror, a.tol);

  json out;
  out["L_nm"] = a.L;
  out["lambda_p_nm"] = a.lambda_p;
  if (!mirror.is_perfect()) out["Kp"] = mirror.reduced_plasma(a.L);
  out["reduced_energy"] = reduced.e;
  out["reduction_factor"] = reduced.e / casimir::constants::ideal_reduced_energy;
  out["energy_per_area_J_m2"] = derivs.energy;
  out["dE_dL_J_m3"] = derivs.first;
  out["d2E_dL2_J_m4"] = derivs.second;
  out["curvature_ratio"] = ratio;
  std::vector<std::string> warnings;
  if (a.has_R) {
    auto force = casimir::plane_sphere_force(a.L, a.R, mirror, a.tol);
    out["sphere_radius_nm"] = a.R;
    out["plane_sphere_force_N"] = force.force_newton;
    warnings = force.warnings;
  }
  out["warnings"] = warnings;

  if (a.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto it = out.begin(); it != out.end(); ++it) {
      if (it.key() == "warnings") continue;
      std::cout << it.key() << " = " << it.value().dump() << "\n";
    }
    for (const auto& w : warnings) std::cout << "# warning: " << w << "\n";
  }
  return 0;
}

int run_rho(const RhoArgs& a) {
  auto mirror = make_mirror(a.lambda_p);
  auto model = parse_model_or_throw(a.model);
  auto grid = log_grid(a.k_min, a.k_max, a.points);
  std::vector<double> rho(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    rho[i] = rho_value(model, grid[i], a.L, mirror, a.tol);
  });

  const std::string model_name = casimir::to_string(model);
  if (a.json_out) {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
      rows.push_back({{"k_nm_inv", grid[i]},
                      {"q", grid[i] * a.L},
                      {"rho", rho[i]},
                      {"model", model_name}});
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "# rho sweep: L_nm=" << num(a.L)
              << " lambda_p_nm=" << num(a.lambda_p) << "\n";
    std::cout << "k_nm_inv,q,rho,model\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      std::cout << num(grid[i]) << "," << num(grid[i] * a.L) << ","
                << num(rho[i]) << "," << model_name << "\n";
  }
  return 0;
}

int run_alpha(const AlphaArgs& a) {
  if (!(a.lambda_p > 0.0))
    throw std::domain_error(
        "alpha requires a plasma mirror (lambda-p > 0); the perfect-mirror "
        "high-k coefficient is not defined");
  auto mirror = make_mirror(a.lambda_p);
  auto grid = log_grid(a.L_min, a.L_max, a.points);
  std::vector<double> alpha_nm(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    alpha_nm[i] = casimir::alpha(mirror.reduced_plasma(grid[i]), a.tol) * grid[i];
  });

  if (a.json_out) {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
      rows.push_back({{"L_nm", grid[i]}, {"alpha_nm", alpha_nm[i]}});
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "# alpha sweep: lambda_p_nm=" << num(a.lambda_p) << "\n";
    std::cout << "L_nm,alpha_nm\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      std::cout << num(grid[i]) << "," << num(alpha_nm[i]) << "\n";
  }
  return 0;
}

int run_delta(const DeltaArgs& a) {
  auto mirror = make_mirror(a.lambda_p);
  auto spectrum = parse_spectrum(a.spectrum, a.spectrum_file);
  casimir::ResponseModel model =
      a.model == "auto" ? casimir::choose_model(a.L, mirror, spectrum)
                        : parse_model_or_throw(a.model);
  auto result = casimir::delta(a.L, mirror, spectrum, model, a.tol);

  json out;
  out["L_nm"] = a.L;
  out["lambda_p_nm"] = a.lambda_p;
  out["model"] = casimir::to_string(result.model);
  out["regime"] = casimir::to_string(result.regime);
  out["delta"] = result.delta;
  out["quad_error"] = result.quad_error;
  if (result.regime != casimir::Regime::crossover && !spectrum.empty()) {
    double closed = casimir::scaling_delta(result.regime, a.L, a.lambda_p,
                                           spectrum.correlation_length(),
                                           spectrum.variance());
    out["scaling_law_delta"] = closed;
  }
  out["warnings"] = result.warnings;

  if (a.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto it = out.begin(); it != out.end(); ++it) {
      if (it.key() == "warnings") continue;
      std::cout << it.key() << " = " << it.value().dump() << "\n";
    }
    for (const auto& w : result.warnings) std::cout << "# warning: " << w << "\n";
  }
  return 0;
}

int run_sweep(const SweepArgs& a) {
  if (a.axis != "L" && a.axis != "k" && a.axis != "lc")
    throw std::domain_error("axis must be one of L|k|lc");
  auto mirror = make_mirror(a.lambda_p);
  auto spectrum = parse_spectrum(a.spectrum, a.spectrum_file);
  auto grid = log_grid(a.min, a.max, a.points);

  std::vector<double> deltas(grid.size());
  std::vector<std::string> models(grid.size()), regimes(grid.size());

  if (a.axis == "k") {
    // Single-mode correction per row: the spectrum integrand's normalization
    // Delta_k = curvature_ratio * rho(k) * a^2 / L^2, with the spectrum
    // supplying the overall amplitude a^2.
    casimir::ResponseModel model =
        a.model == "auto" ? casimir::choose_model(a.L, mirror, spectrum)
                          : parse_model_or_throw(a.model);
    const double ratio = casimir::pfa_curvature_ratio(a.L, mirror, a.tol);
    const double a2 = spectrum.variance();
    const auto regime = casimir::classify_regime(
        a.L, mirror.is_perfect() ? 0.0 : mirror.lambda_p_nm(),
        spectrum.correlation_length());
    parallel_for(grid.size(), [&](std::size_t i) {
      deltas[i] = ratio * rho_value(model, grid[i], a.L, mirror, a.tol) * a2 /
                  (a.L * a.L);
      models[i] = casimir::to_string(model);
      regimes[i] = casimir::to_string(regime);
    });
  } else {
    parallel_for(grid.size(), [&](std::size_t i) {
      double L = a.axis == "L" ? grid[i] : a.L;
      casimir::RoughnessSpectrum spec =
          a.axis == "lc" ? casimir::RoughnessSpectrum::gaussian(
                               spectrum.variance(), grid[i])
                         : spectrum;
      casimir::ResponseModel model =
          a.model == "auto" ? casimir::choose_model(L, mirror, spec)
                            : parse_model_or_throw(a.model);
      auto result = casimir::delta(L, mirror, spec, model, a.tol);
      deltas[i] = result.delta;
      models[i] = casimir::to_string(result.model);
      regimes[i] = casimir::to_string(result.regime);
    });
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!a.output.empty() && a.output != "-") {
    file.open(a.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot open output path '" << a.output << "'\n";
      return 1;
    }
    out = &file;
  }

  if (a.json_out) {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
      rows.push_back({{"axis_value", grid[i]},
                      {"delta", deltas[i]},
                      {"model", models[i]},
                      {"regime", regimes[i]}});
    *out << rows.dump(2) << "\n";
  } else {
    *out << "# sweep axis=" << a.axis;
    if (a.axis != "L") *out << " L_nm=" << num(a.L);
    *out << " lambda_p_nm=" << num(a.lambda_p) << "\n";
    *out << "axis_value,delta,model,regime\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      *out << num(grid[i]) << "," << num(deltas[i]) << "," << models[i] << ","
           << regimes[i] << "\n";
  }
  if (out == &file && !file.good()) {
    std::cerr << "error: write failed for '" << a.output << "'\n";
    return 1;
  }
  return 0;
}

int run_oracle(const OracleArgs& a) {
  json out;
  out["quantity"] = a.quantity;
  if (a.quantity == "energy") {
    out["value"] = casimir::oracle::trapezoid_energy(a.Kp, a.n, a.n, a.K_max);
  } else if (a.quantity == "energy-perfect") {
    out["value"] = casimir::oracle::trapezoid_energy_perfect(a.n, a.n, a.K_max);
  } else if (a.quantity == "g0") {
    out["value"] = casimir::oracle::trapezoid_g0(a.Kp, a.n, a.K_max);
  } else if (a.quantity == "alpha") {
    out["value"] = casimir::oracle::trapezoid_alpha(a.Kp, a.n, a.K_max);
  } else if (a.quantity == "g-perfect") {
    out["value"] = casimir::oracle::trapezoid_g_perfect(a.q, a.n, a.n, a.K_max);
  } else if (a.quantity == "surface") {
    auto spectrum = parse_spectrum(a.spectrum, a.spectrum_file);
    auto field = casimir::oracle::synthesize_surface(spectrum, a.n, a.step,
                                                     a.seed);
    out["n"] = field.n;
    out["step_nm"] = field.step_nm;
    out["mean"] = casimir::oracle::sample_mean(field);
    out["value"] = casimir::oracle::sample_variance(field);
  } else {
    throw std::domain_error(
        "quantity must be energy|energy-perfect|g0|alpha|g-perfect|surface");
  }
  if (a.json_out) std::cout << out.dump(2) << "\n";
  else std::cout << out["quantity"].get<std::string>() << " = "
                 << out["value"].dump() << "\n";
  return 0;
}

// Expands `--config FILE` (or `--config=FILE`) by appending `--key value`
// for each `key = value` line in FILE that was not already given on the
// command line, so explicit flags always win. `key = true` becomes a bare
// flag. Comments (#) and [section] headers are ignored.
std::vector<std::string> expand_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);

  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string{};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
  };
  auto given = [&args](const std::string& flag) {
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config file " + path + " line " +
                                  std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config file " + path + " line " +
                                  std::to_string(line_no) + ": empty key");
    }
    const std::string flag = "--" + key;
    if (given(flag)) continue;
    args.push_back(flag);
    if (value != "true") args.push_back(value);
  }
  return args;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roughness-corrected Casimir force calculator"};
  app.require_subcommand(1);

  EnergyArgs energy_args;
  RhoArgs rho_args;
  AlphaArgs alpha_args;
  DeltaArgs delta_args;
  SweepArgs sweep_args;
  OracleArgs oracle_args;

  auto add_tol = [](CLI::App* cmd, double& tol) {
    cmd->add_option("--tol", tol, "relative quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--config", "plain key=value config file; explicit flags "
                                "override file values");
  };
  auto add_mirror = [](CLI::App* cmd, double& lambda_p) {
    cmd->add_option("--lambda-p", lambda_p,
                    "plasma wavelength in nm; 0 selects the perfect mirror")
        ->check(CLI::NonNegativeNumber)
        ->required();
  };

  auto* energy_cmd = app.add_subcommand(
      "energy", "plane-plane Casimir energy and PFA derivatives");
  energy_cmd->add_option("--L", energy_args.L, "plate separation in nm")
      ->check(CLI::PositiveNumber)
      ->required();
  add_mirror(energy_cmd, energy_args.lambda_p);
  auto* r_opt = energy_cmd->add_option("--R", energy_args.R,
                                       "sphere radius in nm (plane-sphere PFA)")
                    ->check(CLI::PositiveNumber);
  add_tol(energy_cmd, energy_args.tol);
  energy_cmd->add_flag("--json", energy_args.json_out, "emit JSON");

  auto* rho_cmd = app.add_subcommand(
      "rho", "deviation-from-PFA response factor over a k grid");
  rho_cmd->add_option("--L", rho_args.L, "plate separation in nm")
      ->check(CLI::PositiveNumber)
      ->required();
  add_mirror(rho_cmd, rho_args.lambda_p);
  rho_cmd->add_option("--k-min", rho_args.k_min, "lowest k in nm^-1")
      ->check(CLI::PositiveNumber)
      ->required();
  rho_cmd->add_option("--k-max", rho_args.k_max, "highest k in nm^-1")
      ->check(CLI::PositiveNumber)
      ->required();
  rho_cmd->add_option("--points", rho_args.points, "grid size")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  rho_cmd->add_option("--model", rho_args.model,
                      "pfa|high_k|perfect|stitched")
      ->capture_default_str();
  add_tol(rho_cmd, rho_args.tol);
  rho_cmd->add_flag("--json", rho_args.json_out, "emit JSON");

  auto* alpha_cmd = app.add_subcommand(
      "alpha", "high-k angular coefficient alpha(L) in nm");
  add_mirror(alpha_cmd, alpha_args.lambda_p);
  alpha_cmd->add_option("--L-min", alpha_args.L_min, "lowest L in nm")
      ->check(CLI::PositiveNumber)
      ->required();
  alpha_cmd->add_option("--L-max", alpha_args.L_max, "highest L in nm")
      ->check(CLI::PositiveNumber)
      ->required();
  alpha_cmd->add_option("--points", alpha_args.points, "grid size")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  add_tol(alpha_cmd, alpha_args.tol);
  alpha_cmd->add_flag("--json", alpha_args.json_out, "emit JSON");

  auto* delta_cmd = app.add_subcommand(
      "delta", "relative roughness correction for a spectrum");
  delta_cmd->add_option("--L", delta_args.L, "plate separation in nm")
      ->check(CLI::PositiveNumber)
      ->required();
  add_mirror(delta_cmd, delta_args.lambda_p);
  delta_cmd->add_option("--spectrum", delta_args.spectrum,
                        "gaussian:a=<nm>,lc=<nm>");
  delta_cmd->add_option("--spectrum-file", delta_args.spectrum_file,
                        "tabulated spectrum CSV (k_nm_inv,sigma_nm4)")
      ->check(CLI::ExistingFile);
  delta_cmd->add_option("--model", delta_args.model,
                        "auto|pfa|high_k|perfect|stitched")
      ->capture_default_str();
  add_tol(delta_cmd, delta_args.tol);
  delta_cmd->add_flag("--json", delta_args.json_out, "emit JSON");

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "grid evaluation of the correction along one axis");
  sweep_cmd->add_option("--axis", sweep_args.axis, "L|k|lc")->required();
  sweep_cmd->add_option("--min", sweep_args.min, "axis lower bound")
      ->check(CLI::PositiveNumber)
      ->required();
  sweep_cmd->add_option("--max", sweep_args.max, "axis upper bound")
      ->check(CLI::PositiveNumber)
      ->required();
  sweep_cmd->add_option("--points", sweep_args.points, "grid size")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  sweep_cmd->add_option("--L", sweep_args.L, "fixed separation in nm")
      ->check(CLI::PositiveNumber);
  add_mirror(sweep_cmd, sweep_args.lambda_p);
  sweep_cmd->add_option("--spectrum", sweep_args.spectrum,
                        "gaussian:a=<nm>,lc=<nm>");
  sweep_cmd->add_option("--spectrum-file", sweep_args.spectrum_file,
                        "tabulated spectrum CSV")
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--model", sweep_args.model,
                        "auto|pfa|high_k|perfect|stitched")
      ->capture_default_str();
  sweep_cmd->add_option("--output", sweep_args.output,
                        "output file path ('-' for stdout)")
      ->capture_default_str();
  add_tol(sweep_cmd, sweep_args.tol);
  sweep_cmd->add_flag("--json", sweep_args.json_out, "emit JSON rows");

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "fixed-grid brute-force reference values");
  oracle_cmd->group(""); // hidden: diagnostic cross-checks, not user surface
  oracle_cmd->add_option("--quantity", oracle_args.quantity,
                         "energy|energy-perfect|g0|alpha|g-perfect|surface")
      ->required();
  oracle_cmd->add_option("--Kp", oracle_args.Kp, "reduced plasma frequency");
  oracle_cmd->add_option("--q", oracle_args.q, "reduced wavevector k L");
  oracle_cmd->add_option("--n", oracle_args.n, "grid size")
      ->capture_default_str();
  oracle_cmd->add_option("--K-max", oracle_args.K_max, "grid cutoff")
      ->capture_default_str();
  oracle_cmd->add_option("--step", oracle_args.step, "surface step in nm")
      ->capture_default_str();
  oracle_cmd->add_option("--seed", oracle_args.seed, "surface RNG seed")
      ->capture_default_str();
  oracle_cmd->add_option("--spectrum", oracle_args.spectrum,
                         "gaussian:a=<nm>,lc=<nm>");
  oracle_cmd->add_option("--spectrum-file", oracle_args.spectrum_file,
                         "tabulated spectrum CSV")
      ->check(CLI::ExistingFile);
  oracle_cmd->add_flag("--json", oracle_args.json_out, "emit JSON");

  try {
    auto args = expand_config_args(argc, argv);
    std::reverse(args.begin(), args.end()); // CLI11 consumes back-to-front
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  energy_args.has_R = r_opt->count() > 0;

  try {
    if (energy_cmd->parsed()) return run_energy(energy_args);
    if (rho_cmd->parsed()) return run_rho(rho_args);
    if (alpha_cmd->parsed()) return run_alpha(alpha_args);
    if (delta_cmd->parsed()) return run_delta(delta_args);
    if (sweep_cmd->parsed()) return run_sweep(sweep_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
  } catch (const casimir::SpectrumParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
