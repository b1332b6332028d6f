#include "casimir/engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

constexpr double kTailWidth = 60.0;  // e^{-60}: tail below 1e-26 relative

// Dimensionless integral of one term: Int_zeta^{zeta+60} y [ln(1 - rp^2 e^-y)
// + ln(1 - rt^2 e^-y)] dy.
IntegrationResult term_integral(const ReflectionEvaluator& ev,
                                const QuadratureSpec& spec) {
  const double zeta = ev.zeta();
  auto f = [&ev](double y) {
    const auto r2 = ev(y);
    const double damp = std::exp(-y);
    return y * (std::log1p(-r2.par * damp) + std::log1p(-r2.perp * damp));
  };
  return integrate_adaptive(f, zeta, zeta + kTailWidth, spec.rel_tol,
                            spec.max_nodes_per_term);
}

struct Term {
  double value;
  double error;
};

Term evaluate_term(int l, const PlateSystem& sys, const CoefficientFamily& fam,
                   const QuadratureSpec& spec) {
  const double pref = constants::k_B * sys.temperature /
                      (8.0 * std::numbers::pi * sys.separation * sys.separation);
  const auto ev = ReflectionEvaluator::for_index(fam, sys, l);
  const auto r = term_integral(ev, spec);
  return {pref * r.value, pref * r.error};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
  if (max_nodes_per_term < 16)
    throw std::invalid_argument("QuadratureSpec: max_nodes_per_term must be >= 16");
  if (!(term_cutoff > 0.0))
    throw std::invalid_argument("QuadratureSpec: term_cutoff must be > 0");
  if (max_matsubara_index < 1)
    throw std::invalid_argument("QuadratureSpec: max_matsubara_index must be >= 1");
}

double matsubara_term(int l, const PlateSystem& sys, const CoefficientFamily& fam,
                      const QuadratureSpec& spec) {
  spec.validate();
  if (l < 0) throw std::invalid_argument("matsubara_term: l must be >= 0");
  if (!(sys.temperature > 0.0))
    throw std::invalid_argument("matsubara_term: requires T > 0");
  return evaluate_term(l, sys, fam, spec).value;
}

FreeEnergyResult free_energy(const PlateSystem& sys, const CoefficientFamily& fam,
                             const QuadratureSpec& spec) {
  spec.validate();
  if (!(sys.temperature > 0.0))
    throw std::invalid_argument("free_energy: requires T > 0 (use zero_T_energy)");

  FreeEnergyResult res;
  const Term t0 = evaluate_term(0, sys, fam, spec);
  res.per_term.emplace_back(0, t0.value);
  double total = 0.5 * t0.value;
  double err = 0.5 * t0.error;
  double last = t0.value;

  int consecutive_small = 0;
  long l = 1;
  for (; l <= spec.max_matsubara_index; ++l) {
    const Term t = evaluate_term(static_cast<int>(l), sys, fam, spec);
    res.per_term.emplace_back(static_cast<int>(l), t.value);
    total += t.value;
    err += t.error;
    last = t.value;
    const bool below = std::abs(t.value) < spec.term_cutoff * std::abs(total) ||
                       t.value == 0.0;
    consecutive_small = below ? consecutive_small + 1 : 0;
    if (consecutive_small >= 3) break;
  }
  if (l > spec.max_matsubara_index)
    throw ConvergenceError("free_energy: Matsubara sum hit max index " +
                           std::to_string(spec.max_matsubara_index) +
                           " before the term cutoff");

  // geometric tail bound: terms decay at least like e^{-zeta_1} per index once
  // the cutoff region is reached
  const double tau =
      4.0 * std::numbers::pi * sys.separation * constants::k_B * sys.temperature /
      (constants::hbar * constants::c);
  const double decay = -std::expm1(-std::max(tau, 1e-3));
  res.value = total;
  res.terms_used = static_cast<int>(res.per_term.size());
  res.est_error = err + std::abs(last) / decay;
  return res;
}

double zero_T_energy(double separation, const CoefficientFamily& fam,
                     const QuadratureSpec& spec) {
  spec.validate();
  if (!(separation > 0.0))
    throw std::invalid_argument("zero_T_energy: separation must be > 0");

  auto outer = [&](double zeta) {
    const auto ev = ReflectionEvaluator::for_continuum(fam, separation, zeta);
    return term_integral(ev, spec).value;
  };
  const int outer_budget = std::max(spec.max_nodes_per_term, 4096);
  const auto r = integrate_adaptive(outer, 0.0, kTailWidth, spec.rel_tol, outer_budget);
  const double pref = constants::hbar * constants::c /
                      (32.0 * std::numbers::pi * std::numbers::pi *
                       separation * separation * separation);
  return pref * r.value;
}

}  // namespace casimir
