#include "casimir/modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/material_io.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

using constants::c;
using constants::hbar;
using constants::k_B;
constexpr double pi = std::numbers::pi;

// Propagating-branch momentum p = sqrt(omega^2/c^2 - k_perp^2).
double branch_p(double omega, double k_perp) {
  return std::sqrt((omega - c * k_perp) * (omega + c * k_perp)) / c;
}

// Phase whose nth-pi levels are the mode condition roots:
// Delta = 0  <=>  a p = n pi + 2 atan(x).
double mode_phase(double omega, double a, double k_perp, double z, Polarization pol) {
  const double p = branch_p(omega, k_perp);
  double x;
  if (pol == Polarization::Parallel) {
    x = p > 0.0 ? z * omega / (c * p) : std::numeric_limits<double>::infinity();
  } else {
    x = z * c * p / omega;
  }
  return a * p - 2.0 * std::atan(x);
}

double bisect_phase_level(double a, double k_perp, double z, Polarization pol,
                          double level, double lo, double hi) {
  double flo = mode_phase(lo, a, k_perp, z, pol) - level;
  double fhi = mode_phase(hi, a, k_perp, z, pol) - level;
  if (flo >= 0.0 || fhi <= 0.0)
    throw ModeSolverError("mode root bracketing failed", lo, hi);
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = mode_phase(mid, a, k_perp, z, pol) - level;
    if (fm == 0.0) return mid;
    if (fm < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double g_thermal(double omega, double T) {
  const double x = hbar * omega / (k_B * T);
  if (x > 700.0) return 0.0;
  return k_B * T * std::log1p(-std::exp(-x));
}

}  // namespace

double oscillator_free_energy(double omega, double temperature) {
  if (!(omega > 0.0))
    throw std::invalid_argument("oscillator_free_energy: omega must be > 0");
  if (temperature < 0.0)
    throw std::invalid_argument("oscillator_free_energy: T must be >= 0");
  const double zero_point = 0.5 * hbar * omega;
  if (temperature == 0.0) return zero_point;
  const double x = hbar * omega / (k_B * temperature);
  if (x > 700.0) return zero_point;
  // k_B T ln(2 sinh(x/2)) = hbar w/2 + k_B T ln(1 - e^{-x})
  return zero_point + k_B * temperature * std::log1p(-std::exp(-x));
}

ModeSpectrum eigenfrequencies(double separation, double k_perp, double z_imag,
                              Polarization pol, int n_max) {
  if (!(separation > 0.0))
    throw std::invalid_argument("eigenfrequencies: separation must be > 0");
  if (k_perp < 0.0) throw std::invalid_argument("eigenfrequencies: k_perp must be >= 0");
  if (!(z_imag >= 0.0 && z_imag < 1.0))
    throw std::invalid_argument("eigenfrequencies: need 0 <= z_imag < 1 (real spectrum)");
  if (n_max < 1) throw std::invalid_argument("eigenfrequencies: n_max must be >= 1");

  const double a = separation;
  const double omega_th = c * k_perp;
  auto omega_at_p = [&](double p) { return c * std::hypot(k_perp, p); };

  // Does a root below the first pi level exist? The phase leaves the
  // threshold negative for the parallel polarization (and for k_perp = 0)
  // whenever z > 0; for the perpendicular one only when a k_perp < 2 z.
  bool has_n0;
  if (z_imag == 0.0) {
    has_n0 = false;
  } else if (k_perp == 0.0) {
    has_n0 = true;
  } else {
    has_n0 = (pol == Polarization::Parallel) || (a * k_perp < 2.0 * z_imag);
  }

  std::vector<double> roots;
  int n = has_n0 ? 0 : 1;
  double lo = 0.0;
  if (has_n0) {
    // find a strictly-negative phase point to anchor the first bracket
    bool found = false;
    if (pol == Polarization::Parallel || k_perp == 0.0) {
      lo = omega_at_p(1e-9 * pi / a);
      found = mode_phase(lo, a, k_perp, z_imag, pol) < 0.0;
    }
    if (!found) {
      for (int i = 0; i < 2048 && !found; ++i) {
        const double p = (2.0 * pi / a) * std::pow(10.0, -13.0 * (1.0 - i / 2047.0));
        lo = omega_at_p(p);
        found = mode_phase(lo, a, k_perp, z_imag, pol) < 0.0;
      }
    }
    if (!found)
      throw ModeSolverError("no sign change found below the first level",
                            omega_th, omega_at_p(2.0 * pi / a));
  } else {
    lo = omega_at_p(1e-9 * pi / a);
  }

  while (static_cast<int>(roots.size()) < n_max) {
    const double level = n * pi;
    // a p(hi) - pi <= phase(hi); p = (n+2) pi / a guarantees phase > level
    const double hi = omega_at_p((n + 2) * pi / a);
    const double root = bisect_phase_level(a, k_perp, z_imag, pol, level, lo, hi);
    roots.push_back(root);
    lo = root;
    ++n;
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const bool ascending = i == 0 || roots[i] > roots[i - 1];
    if (!(roots[i] > omega_th) || !ascending)
      throw ModeSolverError("mode spectrum failed the ordering check",
                            i == 0 ? omega_th : roots[i - 1], roots[i]);
  }
  return {k_perp, pol, std::move(roots), n_max};
}

namespace {

// Renormalized per-k_perp free-energy density for ideal plates. The
// zero-point half is the (sum minus continuum) remainder
//   2 (sum' - int) hbar omega/2 = -(2 hbar c pi/a) int_A^inf
//        sqrt(t^2 - A^2) / (e^{2 pi t} - 1) dt,  A = a k_perp / pi,
// and the thermal half is the literal finite grid: the TM n = 0 mode plus
// both polarizations for n = 1..N minus the continuum (a/pi) dp per branch.
double mode_line_density(double k_perp, double a, double T, int n_max,
                         double rel_tol) {
  const double A = a * k_perp / pi;
  // substitution t = A + u^2 removes the sqrt cusp at the branch point
  auto ap_integrand = [A](double u) {
    const double u2 = u * u;
    return 2.0 * u2 * std::sqrt(2.0 * A + u2) / std::expm1(2.0 * pi * (A + u2));
  };
  const auto zp_int =
      integrate_adaptive(ap_integrand, 0.0, std::sqrt(30.0), rel_tol, 4096);
  const double zp = -(2.0 * hbar * c * pi / a) * zp_int.value;

  const double s = pi / a;
  double th = g_thermal(c * k_perp, T);
  for (int n = 1; n <= n_max; ++n) th += 2.0 * g_thermal(c * std::hypot(k_perp, n * s), T);

  const double pmax = (n_max + 0.5) * s;
  const double cut2 = std::pow(45.0 * k_B * T / (hbar * c), 2) - k_perp * k_perp;
  const double pupper = cut2 > 0.0 ? std::min(pmax, std::sqrt(cut2)) : 0.0;
  if (pupper > 0.0) {
    auto gt = [&](double p) { return g_thermal(c * std::hypot(k_perp, p), T); };
    const auto th_int = integrate_adaptive(gt, 0.0, pupper, rel_tol, 4096);
    th -= (2.0 * a / pi) * th_int.value;
  }
  return zp + th;
}

double mode_sum_free_energy(double a, double T, int k_panels, int n_max,
                            double rel_tol) {
  const double k_max = std::max(25.0 / a, 45.0 * k_B * T / (hbar * c));
  double total = 0.0;
  for (int panel = 0; panel < k_panels; ++panel) {
    const double lo = k_max * panel / k_panels;
    const double hi = k_max * (panel + 1) / k_panels;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    auto f = [&](double kp) { return kp * mode_line_density(kp, a, T, n_max, rel_tol); };
    double acc = detail::kGK15Weights[7] * f(mid);
    for (int i = 0; i < 7; ++i) {
      const double dx = half * detail::kGK15Nodes[i];
      acc += detail::kGK15Weights[i] * (f(mid - dx) + f(mid + dx));
    }
    total += acc * half;
  }
  return total / (2.0 * pi);
}

}  // namespace

double mode_sum_check(double separation, double temperature, int k_panels,
                      int n_max, const QuadratureSpec& spec) {
  spec.validate();
  if (!(temperature > 0.0))
    throw std::invalid_argument("mode_sum_check: requires T > 0");
  if (k_panels < 1 || n_max < 1)
    throw std::invalid_argument("mode_sum_check: grid sizes must be >= 1");

  const auto fam = impedance_family(MaterialModel::ideal_metal());
  const double reference =
      free_energy(PlateSystem(separation, temperature), fam, spec).value;

  const double rel = std::min(spec.rel_tol, 1e-9);
  const double coarse = mode_sum_free_energy(separation, temperature, k_panels, n_max, rel);
  const double fine =
      mode_sum_free_energy(separation, temperature, 2 * k_panels, 2 * n_max, rel);
  if (std::abs(fine - coarse) > 0.005 * std::abs(reference))
    throw ModeSumGridError(
        "mode_sum_check: result does not stabilize under grid refinement");
  return std::abs(fine - reference) / std::abs(reference);
}

}  // namespace casimir
