#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/material_io.hpp"
#include "casimir/modes.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

constexpr double pi = std::numbers::pi;
const QuadratureSpec kSpec{};

// brute force: sign changes of the real dispersion function
// (1 - x^2) sin(a p) - 2 x cos(a p) on a dense omega grid
std::vector<double> brute_roots(double a, double k_perp, double z, Polarization pol,
                                double omega_max, int samples) {
  auto dispersion = [&](double omega) {
    const double p = std::sqrt((omega - constants::c * k_perp) *
                               (omega + constants::c * k_perp)) /
                     constants::c;
    const double x = pol == Polarization::Parallel ? z * omega / (constants::c * p)
                                                   : z * constants::c * p / omega;
    return (1.0 - x * x) * std::sin(a * p) - 2.0 * x * std::cos(a * p);
  };
  std::vector<double> roots;
  const double lo = constants::c * k_perp * (1.0 + 1e-9) + 1e-3;
  double prev_omega = lo, prev = dispersion(lo);
  for (int i = 1; i <= samples; ++i) {
    const double omega = lo + (omega_max - lo) * i / samples;
    const double val = dispersion(omega);
    if (prev == 0.0 || (prev < 0.0) != (val < 0.0)) {
      double x1 = prev_omega, x2 = omega, f1 = prev;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (x1 + x2);
        const double fm = dispersion(mid);
        if ((fm < 0.0) == (f1 < 0.0)) {
          x1 = mid;
          f1 = fm;
        } else {
          x2 = mid;
        }
      }
      roots.push_back(0.5 * (x1 + x2));
    }
    prev_omega = omega;
    prev = val;
  }
  return roots;
}

}  // namespace

TEST_CASE("oscillator free energy") {
  const double w = 1e15;
  CHECK(oscillator_free_energy(w, 0.0) == 0.5 * constants::hbar * w);

  // continuity at T -> 0
  CHECK(std::abs(oscillator_free_energy(w, 1e-6) - 0.5 * constants::hbar * w) <
        1e-12 * constants::hbar * w);

  // hbar w = 2 k_B T: k_B T ln(2 sinh 1)
  const double T = 300.0;
  const double w1 = 2.0 * constants::k_B * T / constants::hbar;
  CHECK(oscillator_free_energy(w1, T) ==
        doctest::Approx(constants::k_B * T * std::log(2.0 * std::sinh(1.0)))
            .epsilon(1e-14));

  // hbar w >> k_B T approaches the zero-point value
  const double wbig = 50.0 * constants::k_B * T / constants::hbar;
  CHECK(std::abs(oscillator_free_energy(wbig, T) - 0.5 * constants::hbar * wbig) <=
        2.0 * constants::k_B * T * std::exp(-50.0));

  // monotone increasing in omega (negative below hbar w ~ k_B T)
  double prev = -1e300;
  for (double omega = 1e13; omega < 1e17; omega *= 2.0) {
    const double f = oscillator_free_energy(omega, T);
    CHECK(f > prev);
    prev = f;
  }

  CHECK_THROWS_AS(oscillator_free_energy(0.0, 300.0), std::invalid_argument);
}

TEST_CASE("ideal-metal spectrum") {
  const double a = 1e-6;

  SUBCASE("k_perp = 0: omega_n = n pi c / a") {
    for (auto pol : {Polarization::Parallel, Polarization::Perpendicular}) {
      const auto sp = eigenfrequencies(a, 0.0, 0.0, pol, 3);
      REQUIRE(sp.frequencies.size() == 3);
      for (int n = 1; n <= 3; ++n) {
        const double analytic = n * pi * constants::c / a;
        CHECK(std::abs(sp.frequencies[n - 1] - analytic) <= 1e-10 * analytic);
      }
    }
  }

  SUBCASE("k_perp = 5e6: omega_1 = c sqrt(k^2 + (pi/a)^2)") {
    const auto sp = eigenfrequencies(a, 5e6, 0.0, Polarization::Parallel, 1);
    const double analytic = constants::c * std::hypot(5e6, pi / a);
    CHECK(std::abs(sp.frequencies[0] - analytic) <= 1e-10 * analytic);
  }

  SUBCASE("root count in a window matches the analytic formula") {
    oracles::Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
      const double k = rng.uniform(0.0, 5e6);
      const auto sp = eigenfrequencies(a, k, 0.0, Polarization::Perpendicular, 12);
      // choose the window edge between two roots
      const int j = 3 + static_cast<int>(rng.uniform(0.0, 8.0));
      const double omega_max = 0.5 * (sp.frequencies[j - 1] + sp.frequencies[j]);
      const double p = std::sqrt(omega_max * omega_max / (constants::c * constants::c) -
                                 k * k);
      CHECK(static_cast<int>(std::floor(a * p / pi)) == j);
    }
  }
}

TEST_CASE("imaginary-impedance spectrum") {
  const double a = 1e-6;

  SUBCASE("k_perp = 0 has the closed form (n pi + 2 atan z) c / a") {
    const double z = 0.01;
    for (auto pol : {Polarization::Parallel, Polarization::Perpendicular}) {
      const auto sp = eigenfrequencies(a, 0.0, z, pol, 4);
      REQUIRE(sp.frequencies.size() == 4);
      for (int i = 0; i < 4; ++i) {
        const double analytic = (i * pi + 2.0 * std::atan(z)) * constants::c / a;
        CHECK(std::abs(sp.frequencies[i] - analytic) <= 1e-10 * analytic);
      }
      // ordering preserved, O(z) shift from the ideal positions
      CHECK(sp.frequencies[0] < pi * constants::c / a);
    }
  }

  SUBCASE("agrees with a brute scan of the dispersion sign changes") {
    const double k = 3e6, z = 0.3;
    for (auto pol : {Polarization::Parallel, Polarization::Perpendicular}) {
      const auto sp = eigenfrequencies(a, k, z, pol, 5);
      const auto brute = brute_roots(a, k, z, pol, sp.frequencies.back() * 1.01, 400000);
      REQUIRE(brute.size() >= sp.frequencies.size());
      for (std::size_t i = 0; i < sp.frequencies.size(); ++i)
        CHECK(std::abs(sp.frequencies[i] - brute[i]) <= 1e-6 * brute[i]);
    }
  }

  SUBCASE("low perpendicular mode appears only for a k_perp < 2 z") {
    const double z = 0.3;
    // a k = 0.1 < 0.6: an extra root below the first ideal level
    const auto with = eigenfrequencies(a, 1e5, z, Polarization::Perpendicular, 2);
    const double p0 = std::sqrt(std::pow(with.frequencies[0] / constants::c, 2) - 1e10);
    CHECK(a * p0 < 0.5 * pi);
    // a k = 1.0 > 0.6: the first root sits on the n = 1 branch
    const auto without = eigenfrequencies(a, 1e6, z, Polarization::Perpendicular, 2);
    const double p1 =
        std::sqrt(std::pow(without.frequencies[0] / constants::c, 2) - 1e12);
    CHECK(a * p1 > 0.5 * pi);
  }

  SUBCASE("spectra are strictly ascending and above the light line") {
    oracles::Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
      const double k = rng.uniform(0.0, 4e6);
      const double z = rng.uniform(0.0, 0.9);
      const auto pol = trial % 2 ? Polarization::Parallel : Polarization::Perpendicular;
      const auto sp = eigenfrequencies(a, k, z, pol, 6);
      double prev = constants::c * k;
      for (double w : sp.frequencies) {
        CHECK(w > prev);
        prev = w;
      }
    }
  }

  CHECK_THROWS_AS(eigenfrequencies(a, 0.0, 1.0, Polarization::Parallel, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(eigenfrequencies(a, 0.0, 0.1, Polarization::Parallel, 0),
                  std::invalid_argument);
}

TEST_CASE("mode sum cross-validates the engine") {
  SUBCASE("reference grid at 1 um, 300 K") {
    const double dev = mode_sum_check(1e-6, 300.0, 48, 64, kSpec);
    CHECK(dev < 0.01);
  }

  SUBCASE("zero-point-dominated regime matches the T = 0 energy trend") {
    const double dev = mode_sum_check(1e-6, 1.0, 48, 64, kSpec);
    CHECK(dev < 0.01);
  }

  SUBCASE("toy grid is flagged unstable") {
    CHECK_THROWS_AS(mode_sum_check(5e-6, 300.0, 1, 1, kSpec), ModeSumGridError);
  }
}
