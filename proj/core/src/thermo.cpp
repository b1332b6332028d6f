#include "casimir/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/material_io.hpp"

namespace casimir {

namespace {

// Richardson combination of two central differences at step h and h/2.
struct DerivativePair {
  double refined;
  double pair_difference;
};

DerivativePair refine(double d_h, double d_h2) {
  return {(4.0 * d_h2 - d_h) / 3.0, std::abs(d_h2 - d_h)};
}

void guard_divergence(double d_h, double d_h2, double noise_floor, const char* what) {
  const double scale = std::max(std::abs(d_h), std::abs(d_h2));
  if (scale > noise_floor && std::abs(d_h - d_h2) > 0.1 * scale)
    throw ConvergenceError(std::string(what) +
                           ": finite-difference estimates differ by more than 10%; "
                           "the step is too large or too small for the tolerance");
}

double linear_fit_intercept(const std::vector<double>& x, const std::vector<double>& y,
                            double* rms_residual) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / n;
  if (rms_residual) {
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (intercept + slope * x[i]);
      ss += r * r;
    }
    *rms_residual = std::sqrt(ss / n);
  }
  return intercept;
}

}  // namespace

double default_temperature_step(double T) { return std::max(0.5, 0.02 * T); }

double default_separation_step(double a) { return 0.005 * a; }

EntropyResult entropy(const PlateSystem& sys, const CoefficientFamily& fam,
                      const QuadratureSpec& spec, double dT) {
  if (!(dT > 0.0) || !(sys.temperature - dT > 0.0))
    throw std::invalid_argument("entropy: need 0 < dT < T");
  int terms = 0;
  double engine_err = 0.0;
  auto S = [&](double h) {
    const auto fp =
        free_energy(PlateSystem(sys.separation, sys.temperature + h), fam, spec);
    const auto fm =
        free_energy(PlateSystem(sys.separation, sys.temperature - h), fam, spec);
    terms = std::max({terms, fp.terms_used, fm.terms_used});
    engine_err = std::max({engine_err, fp.est_error, fm.est_error});
    return -(fp.value - fm.value) / (2.0 * h);
  };
  const double s1 = S(dT);
  const double s2 = S(0.5 * dT);
  const double floor = 1e-6 * constants::k_B / (sys.separation * sys.separation);
  guard_divergence(s1, s2, floor, "entropy");
  const auto r = refine(s1, s2);
  return {r.refined, r.pair_difference, terms, engine_err};
}

EntropyScan nernst_scan(double separation, const CoefficientFamily& fam,
                        const QuadratureSpec& spec, const std::vector<double>& T_grid,
                        ExtrapolationMethod method) {
  if (T_grid.size() < 3)
    throw std::invalid_argument("nernst_scan: need at least three temperatures");
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    if (!(T_grid[i] >= 1.0))
      throw std::invalid_argument("nernst_scan: temperatures must be >= 1 K");
    if (i > 0 && !(T_grid[i] < T_grid[i - 1]))
      throw std::invalid_argument("nernst_scan: grid must be strictly descending");
  }

  EntropyScan scan;
  scan.temperatures = T_grid;
  scan.method = method;
  for (double T : T_grid) {
    const auto s = entropy(PlateSystem(separation, T), fam, spec,
                           default_temperature_step(T));
    scan.entropy.push_back(s.value);
    scan.pair_difference.push_back(s.pair_difference);
    scan.terms_used.push_back(s.terms_used);
    scan.engine_error.push_back(s.engine_error);
  }

  const std::vector<double> t3(T_grid.end() - 3, T_grid.end());
  const std::vector<double> s3(scan.entropy.end() - 3, scan.entropy.end());
  if (method == ExtrapolationMethod::Linear) {
    scan.extrapolated_S0 = linear_fit_intercept(t3, s3, &scan.residual);
  } else {
    // three-point elimination of the T and T^2 terms; exact on a {4T,2T,T} grid
    const double S4 = s3[0], S2 = s3[1], S1 = s3[2];
    scan.extrapolated_S0 = (8.0 * S1 - 6.0 * S2 + S4) / 3.0;
    scan.residual = 0.0;
  }
  return scan;
}

double drude_entropy_deficit_oracle(double separation, const MaterialModel& m,
                                    const QuadratureSpec& spec) {
  if (m.kind() != MaterialKind::Drude)
    throw std::invalid_argument("drude_entropy_deficit_oracle: material must be Drude");
  spec.validate();
  const double w = 2.0 * separation * m.omega_p() / constants::c;
  auto f = [w](double u) {
    const double yt = std::hypot(u, w);
    const double rt = (yt - u) / (yt + u);
    return u * std::abs(std::log1p(-rt * rt * std::exp(-u)));
  };
  const auto r = integrate_adaptive(f, 0.0, 60.0, spec.rel_tol,
                                    std::max(spec.max_nodes_per_term, 4096));
  return constants::k_B /
         (16.0 * std::numbers::pi * separation * separation) * r.value;
}

ThermalCorrection thermal_correction(const PlateSystem& sys,
                                     const CoefficientFamily& fam,
                                     const QuadratureSpec& spec) {
  const auto F = free_energy(sys, fam, spec);
  const double E0 = zero_T_energy(sys.separation, fam, spec);
  const double d = F.value - E0;
  return {F.value, E0, d, std::abs(d) / std::abs(E0), F.terms_used, F.est_error};
}

ComparisonReport compare_families(const PlateSystem& sys, const MaterialModel& m,
                                  const QuadratureSpec& spec) {
  ComparisonReport rep;
  rep.separation = sys.separation;
  rep.temperature = sys.temperature;
  rep.models.push_back(
      {"dielectric", m.label(), thermal_correction(sys, dielectric_family(m), spec)});
  rep.models.push_back(
      {"impedance", m.label(), thermal_correction(sys, impedance_family(m), spec)});
  rep.models.push_back(
      {"ideal", "ideal",
       thermal_correction(sys, impedance_family(MaterialModel::ideal_metal()), spec)});
  return rep;
}

double pressure(const PlateSystem& sys, const CoefficientFamily& fam,
                const QuadratureSpec& spec, double da) {
  if (!(da > 0.0) || !(sys.separation - da > 0.0))
    throw std::invalid_argument("pressure: need 0 < da < a");
  auto P = [&](double h) {
    const double fp =
        free_energy(PlateSystem(sys.separation + h, sys.temperature), fam, spec).value;
    const double fm =
        free_energy(PlateSystem(sys.separation - h, sys.temperature), fam, spec).value;
    return -(fp - fm) / (2.0 * h);
  };
  const double p1 = P(da);
  const double p2 = P(0.5 * da);
  const double floor = 1e-9 * constants::k_B * std::max(sys.temperature, 1.0) /
                       (sys.separation * sys.separation * sys.separation);
  guard_divergence(p1, p2, floor, "pressure");
  return refine(p1, p2).refined;
}

}  // namespace casimir
