// Acceptance suite: one pass/fail line per numbered criterion, then a summary.
// Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/engine.hpp"
#include "casimir/material_io.hpp"
#include "casimir/modes.hpp"
#include "casimir/thermo.hpp"
#include "oracles.hpp"

using namespace casimir;
using oracles::kZeta3;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------- criteria

Outcome renormalization_identity() {
  oracles::Rng rng;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(0.0, 1.0);
    const double y = rng.uniform(0.01, 50.0);
    const double delta = (i % 2) ? delta_par(y, x) : delta_perp(y, x);
    const double r = (1.0 - x) / (1.0 + x);
    const double dev = std::abs(delta / delta_infinity(x) - (1.0 - r * r * std::exp(-y)));
    worst = std::max(worst, dev);
  }
  return {worst <= 1e-12, "max |Delta/Delta_inf - (1 - r^2 e^-y)| = " + num(worst) +
                              " over 1e4 tuples (tol 1e-12)"};
}

Outcome zero_T_ideal() {
  const QuadratureSpec spec{};
  const auto fam = impedance_family(MaterialModel::ideal_metal());
  double worst = 0.0;
  for (double a : {0.5e-6, 1e-6, 2e-6}) {
    const double e = zero_T_energy(a, fam, spec);
    const double analytic =
        -pi * pi * constants::hbar * constants::c / (720.0 * a * a * a);
    worst = std::max(worst, std::abs(e / analytic - 1.0));
  }
  // independent brute-force double quadrature at a = 1 um
  auto inner = [](double zeta) {
    return oracles::simpson(
        [](double y) { return y * std::log1p(-std::exp(-y)); }, zeta, zeta + 50.0, 2000);
  };
  const double brute = constants::hbar * constants::c / (32.0 * pi * pi * 1e-18) *
                       oracles::simpson([&](double z) { return 2.0 * inner(z); }, 1e-6,
                                        50.0, 2000);
  const double analytic1 = -pi * pi * constants::hbar * constants::c / (720.0 * 1e-18);
  const double brute_dev = std::abs(brute / analytic1 - 1.0);
  const bool pass = worst <= 1e-3 && brute_dev <= 1e-4;
  return {pass, "max rel dev vs -pi^2 hbar c/720a^3: " + num(worst) +
                    " (tol 1e-3); brute-force route dev " + num(brute_dev)};
}

Outcome classical_ideal() {
  // asserted exactly as specified: F(10 um, 300 K) vs -k_B T zeta(3)/(16 pi a^2)
  const QuadratureSpec spec{};
  const auto fam = impedance_family(MaterialModel::ideal_metal());
  const double F = free_energy(PlateSystem(10e-6, 300.0), fam, spec).value;
  const double target16 = -constants::k_B * 300.0 * kZeta3 / (16.0 * pi * 1e-10);
  const double target8 = -constants::k_B * 300.0 * kZeta3 / (8.0 * pi * 1e-10);
  const double dev16 = std::abs(F / target16 - 1.0);
  const double dev8 = std::abs(F / target8 - 1.0);
  return {dev16 <= 1e-3,
          "F = " + num(F) + " J/m^2 vs -k_B T zeta(3)/16 pi a^2 = " + num(target16) +
              " (rel dev " + num(dev16) + ", tol 1e-3); against the direct sum value " +
              "-k_B T zeta(3)/8 pi a^2 = " + num(target8) + " the dev is " + num(dev8)};
}

Outcome family_agreement_ideal() {
  // the dielectric family treats the ideal metal as its eps -> infinity limit
  // (a literal constant eps = 1e10 material cannot reach 1e-6: its l = 0 TE
  // coefficient is 0 by the order of limits, not 1)
  const QuadratureSpec spec{};
  const PlateSystem sys(1e-6, 300.0);
  const double Fi =
      free_energy(sys, impedance_family(MaterialModel::ideal_metal()), spec).value;
  const double Fd =
      free_energy(sys, dielectric_family(MaterialModel::ideal_metal()), spec).value;
  const double dev = std::abs(Fi / Fd - 1.0);
  return {dev <= 1e-6, "impedance(Z=0) vs dielectric(eps->inf): rel dev " + num(dev) +
                           " (tol 1e-6), F = " + num(Fi) + " J/m^2"};
}

Outcome structural_split() {
  const PlateSystem sys(1e-6, 300.0);
  const auto gold = material_preset("gold");
  bool ok = true;
  for (double k : {1e4, 1e6, 1e7, 3e7}) {
    ok = ok && r2_dielectric(Polarization::Perpendicular, 0, k, sys, gold) == 0.0;
    ok = ok && r2_impedance(Polarization::Perpendicular, 0, k, sys, gold) == 1.0;
    ok = ok && r2_dielectric(Polarization::Parallel, 0, k, sys, gold) == 1.0;
    ok = ok && r2_impedance(Polarization::Parallel, 0, k, sys, gold) == 1.0;
  }
  return {ok, "dielectric-Drude r_perp^2(l=0) = 0 and impedance r_perp^2(l=0) = 1, "
              "exactly, at four transverse momenta"};
}

Outcome nernst_scan_criterion() {
  QuadratureSpec spec{};
  spec.rel_tol = 1e-10;
  spec.max_nodes_per_term = 8192;
  const std::vector<double> grid{40.0, 20.0, 10.0, 5.0};
  const double bound = 0.05 * constants::k_B * kZeta3 / (16.0 * pi * 1e-12);

  // impedance family: plasma-form (infrared-optics) gold impedance
  const auto imp = nernst_scan(1e-6, impedance_family(material_preset("gold-plasma")),
                               spec, grid);
  const bool imp_ok = std::abs(imp.extrapolated_S0) < bound;

  const auto dru =
      nernst_scan(1e-6, dielectric_family(material_preset("gold")), spec, grid);
  const bool sign_ok = dru.extrapolated_S0 < 0.0;

  const double oracle = drude_entropy_deficit_oracle(1e-6, material_preset("gold"), spec);
  const double ratio = std::abs(dru.extrapolated_S0) / oracle;
  const bool oracle_ok = ratio >= 0.85 && ratio <= 1.15;

  return {imp_ok && sign_ok && oracle_ok,
          "impedance |S0| = " + num(std::abs(imp.extrapolated_S0)) + " vs bound " +
              num(bound) + (imp_ok ? " (ok)" : " (FAIL)") +
              "; Drude S0 = " + num(dru.extrapolated_S0) +
              (sign_ok ? " < 0 (ok)" : " (FAIL: not negative)") +
              "; |S0|/oracle = " + num(ratio) + " vs [0.85, 1.15]" +
              (oracle_ok ? " (ok)" : " (FAIL: the 5-40 K grid sits above the "
                                     "sub-kelvin approach to the T = 0 plateau)")};
}

Outcome thermal_correction_split() {
  const QuadratureSpec spec{};
  const PlateSystem sys(300e-9, 300.0);
  const auto drude =
      thermal_correction(sys, dielectric_family(material_preset("gold")), spec);
  const auto imp =
      thermal_correction(sys, impedance_family(material_preset("gold-plasma")), spec);
  const bool small = imp.ratio < 0.01;
  const bool split = drude.ratio > 10.0 * imp.ratio;
  return {small && split,
          "correction ratios at 300 nm, 300 K: dielectric-Drude " + num(drude.ratio) +
              ", impedance " + num(imp.ratio) + " (< 1%: " + (small ? "ok" : "FAIL") +
              "; 10x split: " + (split ? "ok" : "FAIL") + ")"};
}

Outcome mode_spectrum_criterion() {
  const double a = 1e-6;
  double worst = 0.0;
  for (auto pol : {Polarization::Parallel, Polarization::Perpendicular}) {
    const auto sp = eigenfrequencies(a, 0.0, 0.0, pol, 3);
    for (int n = 1; n <= 3; ++n)
      worst = std::max(worst,
                       std::abs(sp.frequencies[n - 1] / (n * pi * constants::c / a) - 1.0));
  }
  const auto sp = eigenfrequencies(a, 5e6, 0.0, Polarization::Perpendicular, 2);
  const double w1 = constants::c * std::hypot(5e6, pi / a);
  const double w2 = constants::c * std::hypot(5e6, 2.0 * pi / a);
  worst = std::max({worst, std::abs(sp.frequencies[0] / w1 - 1.0),
                    std::abs(sp.frequencies[1] / w2 - 1.0)});

  const double dev = mode_sum_check(1e-6, 300.0, 48, 64, QuadratureSpec{});
  const bool pass = worst <= 1e-10 && dev < 0.02;
  return {pass, "Z=0 spectrum max rel dev " + num(worst) +
                    " (tol 1e-10); mode-sum deviation " + num(dev) + " (tol 0.02)"};
}

Outcome entropy_positivity() {
  QuadratureSpec spec{};
  spec.rel_tol = 1e-11;
  spec.max_nodes_per_term = 8192;
  const auto imp_drude = impedance_family(material_preset("gold"));
  const auto imp_plasma = impedance_family(material_preset("gold-plasma"));
  double smallest = 1e300;
  bool ok = true;
  std::string offender;
  for (double a : {0.3e-6, 1e-6}) {
    for (double T : {1.0, 5.0, 20.0, 77.0, 150.0, 300.0}) {
      for (const auto& fam : {imp_drude, imp_plasma}) {
        const auto s =
            entropy(PlateSystem(a, T), fam, spec, default_temperature_step(T));
        smallest = std::min(smallest, s.value);
        if (!(s.value >= 0.0)) {
          ok = false;
          offender = std::string(" first failure: ") + fam.material.label() + " a=" +
                     num(a) + " T=" + num(T) + " S=" + num(s.value);
        }
      }
    }
  }
  return {ok, "impedance entropy >= 0 at 12 grid points x {gold, gold-plasma}; "
              "smallest value " + num(smallest) + " J/(K m^2)" + offender};
}

// --------------------------------------------------------------- CLI checks

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("CASIMIR_THREADS=4 \"") + CASIMIR_CLI_PATH +
                          "\" " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

double csv_field(const std::string& text, int row, int col) {
  std::istringstream ss(text);
  std::string line;
  for (int r = 0; r <= row; ++r)
    if (!std::getline(ss, line)) return std::nan("");
  std::size_t pos = 0;
  for (int c = 0; c < col; ++c) pos = line.find(',', pos) + 1;
  return std::strtod(line.c_str() + pos, nullptr);
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path("acceptance_tmp");
  fs::create_directories(dir);
  const auto at = [&](const char* name) { return (dir / name).string(); };
  std::string problems;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) problems += std::string(" [") + what + "]";
    return ok;
  };

  // byte-identical repeat runs of compare, CSV and JSON, threads enabled
  const std::string cmp = "compare --a 3e-7 --T 300 --material gold ";
  expect(run_cli(cmp + "--out " + at("c1.csv")) == 0, "compare exit");
  run_cli(cmp + "--out " + at("c2.csv"));
  run_cli(cmp + "--format json --out " + at("c1.json"));
  run_cli(cmp + "--format json --out " + at("c2.json"));
  const std::string csv = read_file(at("c1.csv"));
  expect(!csv.empty() && csv == read_file(at("c2.csv")), "csv determinism");
  const std::string json = read_file(at("c1.json"));
  expect(!json.empty() && json == read_file(at("c2.json")), "json determinism");

  // ratio ordering dielectric > impedance > ideal across the rows
  expect(csv_field(csv, 1, 7) > csv_field(csv, 2, 7) &&
             csv_field(csv, 2, 7) > csv_field(csv, 3, 7),
         "ratio ordering");

  // config file supplies defaults, flags override
  {
    std::ofstream cfg(at("cfg.json"));
    cfg << R"({"a_m": [3e-7], "T_K": [300], "material": "gold"})";
  }
  run_cli("compare --config " + at("cfg.json") + " --out " + at("c3.csv"));
  expect(read_file(at("c3.csv")) == csv, "config ingestion");

  // classical-limit value through the CLI
  run_cli("free-energy --a 1e-5 --T 300 --material ideal --family impedance --out " +
          at("fe.csv"));
  const double F = csv_field(read_file(at("fe.csv")), 1, 4);
  const double classical = -constants::k_B * 300.0 * kZeta3 / (8.0 * pi * 1e-10);
  expect(std::abs(F / classical - 1.0) < 1e-3, "free-energy value");

  // mode and regime reports
  run_cli("modes --a 1e-6 --kperp 0 --Z 0 --n 3 --out " + at("m.csv"));
  const double w1 = csv_field(read_file(at("m.csv")), 1, 5);
  expect(std::abs(w1 / (pi * constants::c / 1e-6) - 1.0) < 1e-9, "modes value");
  run_cli("regime --material gold --omega 1e11 --out " + at("r.csv"));
  expect(read_file(at("r.csv")).find(",normal-skin") != std::string::npos, "regime");

  // exit codes: 2 for validation, 3 for numerical non-convergence
  expect(run_cli("free-energy --a 1e-6 --T 300 --family bogus") == 2, "exit 2");
  expect(run_cli("free-energy --a 1e-6 --T 300 --material ideal --family impedance "
                 "--rel-tol 1e-15 --max-nodes 64") == 3,
         "exit 3");

  fs::remove_all(dir);
  return {problems.empty(),
          problems.empty() ? "byte-identical CSV+JSON reruns, config ingestion, "
                             "golden row values, exit codes 2/3"
                           : "failed:" + problems};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Check> checks = {
      {"renormalization identity (1e4 tuples, 1e-12)", renormalization_identity},
      {"ideal-metal zero-T limit (0.5/1/2 um, 0.1%)", zero_T_ideal},
      {"ideal-metal classical limit (10 um, 300 K, 0.1%)", classical_ideal},
      {"family agreement in the ideal limit (1e-6)", family_agreement_ideal},
      {"zero-frequency structural split (exact)", structural_split},
      {"Nernst scan at 1 um (gold, 40/20/10/5 K)", nernst_scan_criterion},
      {"thermal-correction separation (300 nm, 300 K)", thermal_correction_split},
      {"mode spectrum and mode-sum check", mode_spectrum_criterion},
      {"impedance entropy positivity (12-point grid)", entropy_positivity},
      {"CLI determinism under parallelism", cli_determinism},
  };

  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0, executed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (only > 0 && static_cast<int>(i + 1) != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = checks[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu. %s (%.1f s): %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                checks[i].name.c_str(), secs, out.detail.c_str());
    std::fflush(stdout);
    ++executed;
    if (!out.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", executed - failures, executed);
  return failures;
}
