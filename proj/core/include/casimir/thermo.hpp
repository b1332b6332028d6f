#pragma once

#include <string>
#include <vector>

#include "casimir/engine.hpp"

namespace casimir {

enum class ExtrapolationMethod { Linear, Richardson };

/// Entropy S = -dF/dT by central differences with one Richardson refinement.
struct EntropyResult {
  double value;            ///< J/(K m^2), Richardson-refined
  double pair_difference;  ///< |S_dT - S_dT/2|, error proxy
  int terms_used;          ///< max Matsubara terms over the four engine calls
  double engine_error;     ///< max engine est_error [J/m^2]
};

struct EntropyScan {
  std::vector<double> temperatures;  ///< K, strictly descending
  std::vector<double> entropy;       ///< J/(K m^2)
  std::vector<double> pair_difference;
  std::vector<int> terms_used;
  std::vector<double> engine_error;
  double extrapolated_S0;            ///< T -> 0 extrapolation
  ExtrapolationMethod method;
  double residual;                   ///< rms fit residual (Linear) or 0
};

struct ThermalCorrection {
  double free_energy;        ///< F(a,T) [J/m^2]
  double zero_point_energy;  ///< E_0(a) [J/m^2]
  double correction;         ///< F(a,T) - E_0(a)
  double ratio;              ///< |correction| / |E_0|
  int terms_used;
  double est_error;
};

struct ComparisonReport {
  double separation;
  double temperature;
  struct Row {
    std::string family;    ///< "dielectric" / "impedance" / "ideal"
    std::string material;
    ThermalCorrection tc;
  };
  std::vector<Row> models;
};

/// Default finite-difference step: max(0.5 K, 0.02 T).
double default_temperature_step(double T);

/// Central difference -[F(T+dT) - F(T-dT)]/(2 dT) at dT and dT/2, Richardson
/// combined. Throws ConvergenceError when the two estimates disagree by more
/// than 10% (bad dT), unless both sit below a noise floor of
/// 1e-6 k_B / a^2.
EntropyResult entropy(const PlateSystem& sys, const CoefficientFamily& fam,
                      const QuadratureSpec& spec, double dT);

/// Entropy over a descending temperature grid (min 1 K) with a T -> 0
/// extrapolation from the three smallest temperatures.
EntropyScan nernst_scan(double separation, const CoefficientFamily& fam,
                        const QuadratureSpec& spec,
                        const std::vector<double>& T_grid,
                        ExtrapolationMethod method = ExtrapolationMethod::Linear);

/// Independent oracle for the Nernst-violation magnitude of the dielectric
/// Drude family: its l = 0 TE term is identically zero while the plasma
/// counterpart with the same omega_p contributes a term linear in T, so
///   -lim_{T->0} [S_drude - S_plasma]
///     = (k_B / 16 pi a^2) Int_0^inf u |ln(1 - r_TE^2(u) e^{-u})| du,
/// with r_TE the plasma-model zero-frequency TE coefficient. Tends to
/// k_B zeta(3) / (16 pi a^2) as omega_p -> infinity.
double drude_entropy_deficit_oracle(double separation, const MaterialModel& m,
                                    const QuadratureSpec& spec);

/// F(a,T) - E_0(a) and |difference|/|E_0| within one family.
ThermalCorrection thermal_correction(const PlateSystem& sys,
                                     const CoefficientFamily& fam,
                                     const QuadratureSpec& spec);

/// Rows for both coefficient families of the given material plus an
/// ideal-metal baseline.
ComparisonReport compare_families(const PlateSystem& sys, const MaterialModel& m,
                                  const QuadratureSpec& spec);

/// Default separation step for the pressure derivative: 0.005 a.
double default_separation_step(double a);

/// Pressure P = -dF/da (attractive = negative), central difference with one
/// Richardson refinement and the same divergence guard as entropy.
double pressure(const PlateSystem& sys, const CoefficientFamily& fam,
                const QuadratureSpec& spec, double da);

}  // namespace casimir
