#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace casimir {

struct IntegrationResult {
  double value;
  double error;     // absolute error estimate
  int evaluations;  // integrand evaluations spent
};

/// Thrown when the node budget is exhausted before the tolerance is met.
/// Carries the last two global estimates so callers can judge how far off
/// the result was.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double last, double previous)
      : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}
  double last_estimate;
  double previous_estimate;
};

/// Matsubara truncation cap or finite-difference guard failures.
class ConvergenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1] (QUADPACK qk15 abscissae/weights).
inline constexpr double kGK15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15Weights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552591, 0.16900472663926790, 0.19035057806478540,
    0.20443294007529889, 0.20948214108472782};
inline constexpr double kG7Weights[4] = {
    0.12948496616886969, 0.27970539148927666, 0.38183005050511894,
    0.41795918367346938};

struct Panel {
  double lo, hi, value, error;
  std::uint64_t seq;  // tie-break so refinement order is deterministic
};

struct PanelWorse {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.seq > b.seq;
  }
};

template <typename F>
Panel evaluate_panel(F&& f, double lo, double hi, std::uint64_t seq) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_mid = f(mid);
  double kronrod = kGK15Weights[7] * f_mid;
  double gauss = kG7Weights[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double sum = f(mid - dx) + f(mid + dx);
    kronrod += kGK15Weights[i] * sum;
    if (i % 2 == 1) gauss += kG7Weights[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  // QUADPACK-style rescaled error estimate
  double err = std::abs(kronrod - gauss);
  err = std::pow(200.0 * err, 1.5);
  err = std::min(std::abs(kronrod - gauss) * 200.0, err);
  if (err < 1e-300) err = std::abs(kronrod - gauss);
  return Panel{lo, hi, kronrod, err, seq};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod panels. Refines the worst panel until the summed
/// error estimate is below rel_tol * |integral| (or an absolute floor for
/// integrals that vanish identically), throwing QuadratureError when
/// max_evaluations would be exceeded. Fully deterministic for fixed inputs.
template <typename F>
IntegrationResult integrate_adaptive(F&& f, double lo, double hi, double rel_tol,
                                     int max_evaluations,
                                     double abs_floor = 1e-300) {
  if (!(hi > lo)) return {0.0, 0.0, 0};

  std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelWorse> heap;
  std::uint64_t seq = 0;
  int evals = 0;
  double total = 0.0, total_err = 0.0;

  constexpr int kInitialPanels = 4;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = lo + (hi - lo) * i / kInitialPanels;
    const double b = lo + (hi - lo) * (i + 1) / kInitialPanels;
    auto p = detail::evaluate_panel(f, a, b, seq++);
    evals += 15;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  double previous = total;
  while (total_err > rel_tol * std::abs(total) && total_err > abs_floor) {
    if (evals + 30 > max_evaluations) {
      throw QuadratureError("quadrature did not converge within the node budget",
                            total, previous);
    }
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    auto left = detail::evaluate_panel(f, worst.lo, mid, seq++);
    auto right = detail::evaluate_panel(f, mid, worst.hi, seq++);
    evals += 30;
    previous = total;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  return {total, total_err, evals};
}

}  // namespace casimir
