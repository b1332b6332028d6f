#pragma once

#include <stdexcept>
#include <vector>

#include "casimir/engine.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

/// Photon eigenfrequencies of the gap at fixed transverse momentum, on the
/// propagating branch omega > c k_perp.
struct ModeSpectrum {
  double k_perp;
  Polarization polarization;
  std::vector<double> frequencies;  ///< rad/s, strictly ascending
  int count_requested;
};

class ModeSolverError : public std::runtime_error {
 public:
  ModeSolverError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), interval_lo(lo), interval_hi(hi) {}
  double interval_lo;
  double interval_hi;
};

class ModeSumGridError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Free energy of a single oscillator, k_B T ln(2 sinh(hbar w / 2 k_B T));
/// exactly hbar w / 2 at T = 0 and numerically stable up to
/// hbar w / k_B T ~ 1e4 (log-sum-exp form).
double oscillator_free_energy(double omega, double temperature);

/// Roots of the mode condition on the propagating branch for a pure imaginary
/// impedance i z_imag, 0 <= z_imag < 1 (the real-spectrum case). With
/// p = sqrt(omega^2/c^2 - k_perp^2) the condition reduces to
///   a p = n pi + 2 atan(x),  x = z_imag omega/(c p)  (parallel)
///                            x = z_imag c p / omega  (perpendicular),
/// so roots are bracketed by scanning the phase on the asymptotic spacing
/// pi c / a and bisected to 1e-12 relative. z_imag = 0 reduces to the
/// sin-type spectrum omega_n = c sqrt(k_perp^2 + (n pi/a)^2).
ModeSpectrum eigenfrequencies(double separation, double k_perp, double z_imag,
                              Polarization pol, int n_max);

/// Cross-validation of the engine against the oscillator picture for ideal
/// metals (Z = 0): the renormalized mode free energy is assembled from the
/// (k_perp, n) grid -- thermal part as the discrete sum minus the a -> inf
/// continuum (a/pi) dp per polarization, zero-point part via the
/// sum-minus-integral remainder -- and compared against free_energy.
/// Returns the relative deviation. Throws ModeSumGridError when the result
/// does not stabilize under grid refinement (k_panels, n_max doubled).
double mode_sum_check(double separation, double temperature, int k_panels,
                      int n_max, const QuadratureSpec& spec);

}  // namespace casimir
