#pragma once

#include <utility>
#include <vector>

#include "casimir/quadrature.hpp"
#include "casimir/reflection.hpp"
#include "casimir/system.hpp"

namespace casimir {

/// Numerical controls for the Matsubara sum and transverse-momentum
/// quadrature.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  int max_nodes_per_term = 2048;
  double term_cutoff = 1e-12;        ///< relative tail threshold
  long max_matsubara_index = 1000000;

  void validate() const;
};

struct FreeEnergyResult {
  double value;      ///< J/m^2, < 0 for reflective plates
  int terms_used;    ///< Matsubara terms evaluated (l = 0 included)
  double est_error;  ///< J/m^2, quadrature + truncation estimate
  std::vector<std::pair<int, double>> per_term;  ///< (l, unweighted term)
};

/// One Matsubara term of the free energy per unit area,
///   (k_B T / 2 pi) Int_0^inf k dk [ln(1 - r_par^2 e^{-2 a q_l})
///                                  + ln(1 - r_perp^2 e^{-2 a q_l})],
/// evaluated in the dimensionless form
///   (k_B T / 8 pi a^2) Int_{zeta_l}^{zeta_l + 60} y [...] dy.
/// The integrand is bounded by e^{-y}, so the truncated tail is below 1e-26
/// relative. The l = 0 term is returned UNWEIGHTED; the 1/2 prime weight is
/// applied by the summer.
double matsubara_term(int l, const PlateSystem& sys, const CoefficientFamily& fam,
                      const QuadratureSpec& spec);

/// Free energy per unit area: 1/2 term(0) + sum_{l>=1} term(l), truncated when
/// three consecutive terms fall below term_cutoff relative to the running sum.
/// Requires T > 0 (use zero_T_energy for T = 0). Deterministic for a fixed spec.
FreeEnergyResult free_energy(const PlateSystem& sys, const CoefficientFamily& fam,
                             const QuadratureSpec& spec);

/// T = 0 limit of the sum (k_B T sum_l' -> (hbar/2 pi) Int dxi):
///   (hbar c / 32 pi^2 a^3) Int_0^inf dzeta Int_zeta^inf dy y [...].
double zero_T_energy(double separation, const CoefficientFamily& fam,
                     const QuadratureSpec& spec);

}  // namespace casimir
