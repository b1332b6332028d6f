// casimir -- Lifshitz free-energy sweeps, entropy scans, family comparisons,
// mode spectra and skin-effect reports, with deterministic CSV/JSON output.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/engine.hpp"
#include "casimir/material_io.hpp"
#include "casimir/modes.hpp"
#include "casimir/thermo.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

constexpr double kMinSeparation = 1e-9;
constexpr double kMaxSeparation = 1e-3;
constexpr double kMinTemperature = 1.0;
constexpr double kMaxTemperature = 1000.0;

using Row = std::vector<std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(int v) { return std::to_string(v); }

unsigned thread_cap() {
  if (const char* env = std::getenv("CASIMIR_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Index-ordered parallel map; results land by index so output assembly is
// deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned threads = std::min<std::size_t>(thread_cap(), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::string& command, const Table& t) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.header[i]] = row[i];
    doc["rows"].push_back(obj);
  }
  return doc.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output file: " + tmp);
    out << data;
    if (!out) throw std::runtime_error("failed writing: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

struct OutputOptions {
  std::string path;    // empty -> stdout
  std::string format = "csv";
};

void emit(const std::string& command, const Table& table, const OutputOptions& out) {
  const std::string data = out.format == "json" ? to_json(command, table) : to_csv(table);
  if (out.path.empty()) {
    std::cout << data;
    std::cerr << command << ": " << table.rows.size() << " row(s)\n";
  } else {
    write_atomic(out.path, data);
    std::cout << command << ": wrote " << table.rows.size() << " row(s) to "
              << out.path << "\n";
  }
}

casimir::CoefficientFamily make_family(const std::string& name,
                                       const casimir::MaterialModel& m) {
  if (name == "dielectric") return casimir::dielectric_family(m);
  if (name == "impedance") return casimir::impedance_family(m);
  throw std::invalid_argument("family must be 'dielectric' or 'impedance'");
}

void check_separation(double a) {
  if (!(a >= kMinSeparation && a <= kMaxSeparation))
    throw std::invalid_argument("separation outside [1e-9, 1e-3] m");
}

void check_temperature(double T) {
  if (!(T >= kMinTemperature && T <= kMaxTemperature))
    throw std::invalid_argument("temperature outside [1, 1000] K");
}

void check_ascending(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw std::invalid_argument(std::string(what) + ": empty sweep");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1]))
      throw std::invalid_argument(std::string(what) + ": sweep values must ascend");
}

// ---------------------------------------------------------------- commands

struct CommonArgs {
  std::vector<double> a_list;
  std::vector<double> T_list;
  std::string material = "gold";
  std::string family = "impedance";
  casimir::QuadratureSpec spec;
  OutputOptions out;
};

int run_free_energy(const CommonArgs& args) {
  check_ascending(args.a_list, "--a");
  check_ascending(args.T_list, "--T");
  for (double a : args.a_list) check_separation(a);
  for (double T : args.T_list) check_temperature(T);
  const auto material = casimir::resolve_material(args.material);
  const auto fam = make_family(args.family, material);

  struct Point {
    double a, T;
    casimir::FreeEnergyResult r;
  };
  std::vector<Point> points;
  for (double a : args.a_list)
    for (double T : args.T_list) points.push_back({a, T, {}});
  parallel_for(points.size(), [&](std::size_t i) {
    points[i].r = casimir::free_energy(casimir::PlateSystem(points[i].a, points[i].T),
                                       fam, args.spec);
  });

  Table t;
  t.header = {"a_m", "T_K", "family", "material", "free_energy_J_per_m2",
              "terms_used", "est_error_J_per_m2"};
  for (const auto& p : points)
    t.rows.push_back({fmt(p.a), fmt(p.T), args.family, material.label(),
                      fmt(p.r.value), fmt(p.r.terms_used), fmt(p.r.est_error)});
  emit("free-energy", t, args.out);
  return 0;
}

int run_entropy_scan(const CommonArgs& args, const std::vector<double>& T_grid,
                     const std::string& method_name) {
  if (args.a_list.size() != 1)
    throw std::invalid_argument("entropy-scan: exactly one --a value");
  const double a = args.a_list.front();
  check_separation(a);
  for (double T : T_grid) check_temperature(T);
  const auto material = casimir::resolve_material(args.material);
  const auto fam = make_family(args.family, material);
  const auto method = method_name == "richardson"
                          ? casimir::ExtrapolationMethod::Richardson
                          : casimir::ExtrapolationMethod::Linear;

  const auto scan = casimir::nernst_scan(a, fam, args.spec, T_grid, method);

  Table t;
  t.header = {"a_m", "T_K", "family", "material", "entropy_J_per_K_m2",
              "fd_pair_diff_J_per_K_m2", "terms_used", "est_error_J_per_m2",
              "extrapolated_S0_J_per_K_m2", "extrapolation_method",
              "fit_residual_J_per_K_m2"};
  for (std::size_t i = 0; i < scan.temperatures.size(); ++i)
    t.rows.push_back({fmt(a), fmt(scan.temperatures[i]), args.family, material.label(),
                      fmt(scan.entropy[i]), fmt(scan.pair_difference[i]),
                      fmt(scan.terms_used[i]), fmt(scan.engine_error[i]),
                      fmt(scan.extrapolated_S0),
                      method == casimir::ExtrapolationMethod::Linear ? "linear"
                                                                     : "richardson",
                      fmt(scan.residual)});
  emit("entropy-scan", t, args.out);
  return 0;
}

int run_compare(const CommonArgs& args) {
  if (args.a_list.size() != 1 || args.T_list.size() != 1)
    throw std::invalid_argument("compare: exactly one --a and one --T");
  const double a = args.a_list.front();
  const double T = args.T_list.front();
  check_separation(a);
  check_temperature(T);
  const auto material = casimir::resolve_material(args.material);
  const casimir::PlateSystem sys(a, T);

  // one row per family plus the ideal baseline, computed concurrently
  std::vector<casimir::CoefficientFamily> fams = {
      casimir::dielectric_family(material), casimir::impedance_family(material),
      casimir::impedance_family(casimir::MaterialModel::ideal_metal())};
  const std::vector<std::string> labels = {"dielectric", "impedance", "ideal"};
  const std::vector<std::string> mats = {material.label(), material.label(), "ideal"};
  std::vector<casimir::ThermalCorrection> tc(fams.size());
  parallel_for(fams.size(), [&](std::size_t i) {
    tc[i] = casimir::thermal_correction(sys, fams[i], args.spec);
  });

  Table t;
  t.header = {"a_m", "T_K", "family", "material", "free_energy_J_per_m2",
              "zero_T_energy_J_per_m2", "thermal_correction_J_per_m2",
              "correction_ratio", "terms_used", "est_error_J_per_m2"};
  for (std::size_t i = 0; i < fams.size(); ++i)
    t.rows.push_back({fmt(a), fmt(T), labels[i], mats[i], fmt(tc[i].free_energy),
                      fmt(tc[i].zero_point_energy), fmt(tc[i].correction),
                      fmt(tc[i].ratio), fmt(tc[i].terms_used), fmt(tc[i].est_error)});
  emit("compare", t, args.out);
  return 0;
}

int run_modes(double a, double k_perp, double z, int n, const OutputOptions& out) {
  check_separation(a);
  if (k_perp < 0.0) throw std::invalid_argument("--kperp must be >= 0");

  Table t;
  t.header = {"a_m", "kperp_inv_m", "Z_imag", "polarization", "n", "omega_rad_s"};
  for (auto pol : {casimir::Polarization::Parallel, casimir::Polarization::Perpendicular}) {
    const auto spectrum = casimir::eigenfrequencies(a, k_perp, z, pol, n);
    const char* pname = pol == casimir::Polarization::Parallel ? "parallel"
                                                               : "perpendicular";
    for (std::size_t i = 0; i < spectrum.frequencies.size(); ++i)
      t.rows.push_back({fmt(a), fmt(k_perp), fmt(z), pname,
                        fmt(static_cast<int>(i + 1)), fmt(spectrum.frequencies[i])});
  }
  emit("modes", t, out);
  return 0;
}

int run_regime(const std::string& material_name, double omega, const OutputOptions& out) {
  const auto material = casimir::resolve_material(material_name);
  const auto regime = casimir::classify_regime(material, omega);

  Table t;
  t.header = {"material", "omega_rad_s", "delta_n_m", "ratio_l_over_delta_n",
              "ratio_l_omega_over_vF", "within_skin_depth", "within_field_period",
              "regime"};
  t.rows.push_back(
      {material.label(), fmt(omega), fmt(regime.penetration_depth),
       fmt(regime.ratio_mean_free_path), fmt(regime.ratio_ballistic),
       regime.within_skin_depth ? "true" : "false",
       regime.within_field_period ? "true" : "false",
       regime.value == casimir::SkinRegime::Value::NormalSkin ? "normal-skin"
                                                              : "outside-normal-skin"});
  emit("regime", t, out);
  return 0;
}

// -------------------------------------------------------------- app wiring

struct ConfigFile {
  nlohmann::json doc;
  bool loaded = false;
};

void load_config(ConfigFile& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  in >> cfg.doc;
  cfg.loaded = true;
}

template <typename T>
void config_default(const ConfigFile& cfg, CLI::App* cmd, const std::string& flag,
                    const char* key, T& value) {
  if (!cfg.loaded || !cfg.doc.contains(key)) return;
  if (cmd->count(flag) > 0) return;  // flags override the file
  value = cfg.doc.at(key).get<T>();
}

void config_quadrature(const ConfigFile& cfg, CLI::App* cmd,
                       casimir::QuadratureSpec& spec) {
  if (!cfg.loaded || !cfg.doc.contains("quadrature")) return;
  const auto& q = cfg.doc.at("quadrature");
  if (cmd->count("--rel-tol") == 0 && q.contains("rel_tol"))
    spec.rel_tol = q.at("rel_tol").get<double>();
  if (cmd->count("--max-nodes") == 0 && q.contains("max_nodes_per_term"))
    spec.max_nodes_per_term = q.at("max_nodes_per_term").get<int>();
  if (cmd->count("--term-cutoff") == 0 && q.contains("term_cutoff"))
    spec.term_cutoff = q.at("term_cutoff").get<double>();
  if (cmd->count("--max-l") == 0 && q.contains("max_matsubara_index"))
    spec.max_matsubara_index = q.at("max_matsubara_index").get<long>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal Casimir/van der Waals free energy between parallel metal "
               "plates: dielectric vs Leontovich-impedance reflection coefficients"};
  app.require_subcommand(1);

  std::string config_path;
  CommonArgs args;
  std::vector<double> T_grid;
  std::string method = "linear";
  double kperp = 0.0, z_imag = 0.0, omega = 0.0;
  int n_modes = 1;

  auto add_quadrature = [&](CLI::App* cmd) {
    cmd->add_option("--rel-tol", args.spec.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--max-nodes", args.spec.max_nodes_per_term,
                    "node budget per Matsubara term");
    cmd->add_option("--term-cutoff", args.spec.term_cutoff,
                    "relative Matsubara truncation threshold");
    cmd->add_option("--max-l", args.spec.max_matsubara_index, "Matsubara index cap");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", args.out.path, "output file (atomic write)");
    cmd->add_option("--format", args.out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", config_path, "JSON config file (flags override)");
  };

  auto* fe = app.add_subcommand("free-energy", "Lifshitz free energy sweep");
  fe->add_option("--a", args.a_list, "separation(s) [m]")->delimiter(',');
  fe->add_option("--T", args.T_list, "temperature(s) [K]")->delimiter(',');
  fe->add_option("--material", args.material, "preset name or JSON path");
  fe->add_option("--family", args.family, "dielectric or impedance");
  add_quadrature(fe);
  add_output(fe);

  auto* es = app.add_subcommand("entropy-scan", "entropy over a descending T grid");
  es->add_option("--a", args.a_list, "separation [m]")->delimiter(',');
  es->add_option("--T-grid", T_grid, "descending temperatures [K]")->delimiter(',');
  es->add_option("--material", args.material, "preset name or JSON path");
  es->add_option("--family", args.family, "dielectric or impedance");
  es->add_option("--method", method, "linear or richardson")
      ->check(CLI::IsMember({"linear", "richardson"}));
  add_quadrature(es);
  add_output(es);

  auto* cp = app.add_subcommand("compare", "family comparison incl. ideal baseline");
  cp->add_option("--a", args.a_list, "separation [m]")->delimiter(',');
  cp->add_option("--T", args.T_list, "temperature [K]")->delimiter(',');
  cp->add_option("--material", args.material, "preset name or JSON path");
  add_quadrature(cp);
  add_output(cp);

  auto* md = app.add_subcommand("modes", "photon eigenfrequencies (real spectrum)");
  md->add_option("--a", args.a_list, "separation [m]")->delimiter(',');
  md->add_option("--kperp", kperp, "transverse momentum [1/m]");
  md->add_option("--Z", z_imag, "pure-imaginary impedance magnitude, [0,1)");
  md->add_option("--n", n_modes, "number of modes per polarization");
  add_output(md);

  auto* rg = app.add_subcommand("regime", "skin-effect regime classification");
  rg->add_option("--material", args.material, "preset name or JSON path");
  rg->add_option("--omega", omega, "real frequency [rad/s]");
  add_output(rg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kExitValidation;
  }

  try {
    ConfigFile cfg;
    if (!config_path.empty()) load_config(cfg, config_path);
    CLI::App* active = app.get_subcommands().front();
    config_default(cfg, active, "--a", "a_m", args.a_list);
    config_default(cfg, active, "--material", "material", args.material);
    if (active == fe || active == cp)
      config_default(cfg, active, "--T", "T_K", args.T_list);
    if (active == fe || active == es)
      config_default(cfg, active, "--family", "family", args.family);
    if (active == es) {
      config_default(cfg, active, "--T-grid", "T_grid_K", T_grid);
      config_default(cfg, active, "--method", "method", method);
    }
    if (active == md) {
      config_default(cfg, active, "--kperp", "kperp_inv_m", kperp);
      config_default(cfg, active, "--Z", "Z_imag", z_imag);
      config_default(cfg, active, "--n", "n_modes", n_modes);
    }
    if (active == rg) config_default(cfg, active, "--omega", "omega_rad_s", omega);
    config_default(cfg, active, "--out", "out", args.out.path);
    config_default(cfg, active, "--format", "format", args.out.format);
    config_quadrature(cfg, active, args.spec);
    args.spec.validate();

    if (active == fe) return run_free_energy(args);
    if (active == es) return run_entropy_scan(args, T_grid, method);
    if (active == cp) return run_compare(args);
    if (active == md) {
      if (args.a_list.size() != 1)
        throw std::invalid_argument("modes: exactly one --a value");
      return run_modes(args.a_list.front(), kperp, z_imag, n_modes, args.out);
    }
    if (active == rg) {
      if (!(omega > 0.0)) throw std::invalid_argument("regime: --omega must be > 0");
      return run_regime(args.material, omega, args.out);
    }
    throw std::logic_error("no command dispatched");
  } catch (const casimir::QuadratureError& e) {
    std::cerr << "numerical error: " << e.what() << " (last estimate "
              << e.last_estimate << ", previous " << e.previous_estimate << ")\n";
    return kExitNumerical;
  } catch (const casimir::ConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const casimir::ModeSolverError& e) {
    std::cerr << "numerical error: " << e.what() << " in [" << e.interval_lo << ", "
              << e.interval_hi << "]\n";
    return kExitNumerical;
  } catch (const casimir::ModeSumGridError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
