#include "casimir/material.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

constexpr double kMuchLessThan = 0.1;  // operational threshold for "<<"

// Fritsch-Carlson monotone cubic slopes.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n == 1) return d;
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // one-sided endpoint slopes, clipped to preserve monotonicity
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return s;
  };
  d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

}  // namespace

MaterialModel MaterialModel::ideal_metal() {
  MaterialModel m;
  m.kind_ = MaterialKind::IdealMetal;
  m.label_ = "ideal";
  return m;
}

MaterialModel MaterialModel::plasma(double omega_p,
                                    std::optional<TransportParameters> transport) {
  if (!(omega_p > 0.0)) throw std::invalid_argument("plasma: omega_p must be > 0");
  MaterialModel m;
  m.kind_ = MaterialKind::Plasma;
  m.omega_p_ = omega_p;
  m.transport_ = transport;
  m.label_ = "plasma";
  return m;
}

MaterialModel MaterialModel::drude(double omega_p, double gamma,
                                   std::optional<TransportParameters> transport) {
  if (!(omega_p > 0.0)) throw std::invalid_argument("drude: omega_p must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("drude: gamma must be > 0");
  MaterialModel m;
  m.kind_ = MaterialKind::Drude;
  m.omega_p_ = omega_p;
  m.gamma_ = gamma;
  m.transport_ = transport;
  m.label_ = "drude";
  return m;
}

MaterialModel MaterialModel::tabulated(std::vector<std::array<double, 2>> xi_eps,
                                       std::optional<TransportParameters> transport) {
  if (xi_eps.size() < 2)
    throw std::invalid_argument("tabulated: need at least two (xi, eps) nodes");
  MaterialModel m;
  m.kind_ = MaterialKind::Tabulated;
  m.transport_ = transport;
  m.label_ = "tabulated";
  m.log_xi_.reserve(xi_eps.size());
  m.log_eps1_.reserve(xi_eps.size());
  double prev = 0.0;
  for (const auto& [xi, eps] : xi_eps) {
    if (!(xi > 0.0)) throw std::invalid_argument("tabulated: xi nodes must be > 0");
    if (!(xi > prev)) throw std::invalid_argument("tabulated: xi must be strictly increasing");
    if (!(eps >= 1.0)) throw std::invalid_argument("tabulated: eps must be >= 1");
    prev = xi;
    m.log_xi_.push_back(std::log(xi));
    m.log_eps1_.push_back(std::log(std::max(eps - 1.0, 1e-300)));
  }
  m.slope_ = pchip_slopes(m.log_xi_, m.log_eps1_);
  return m;
}

MaterialModel MaterialModel::labeled(std::string name) const {
  MaterialModel m = *this;
  m.label_ = std::move(name);
  return m;
}

double MaterialModel::table_eps_low() const {
  if (kind_ != MaterialKind::Tabulated)
    throw std::logic_error("table_eps_low: not a tabulated material");
  return 1.0 + std::exp(log_eps1_.front());
}

double MaterialModel::interpolate_table(double xi) const {
  const double lx = std::log(std::max(xi, 1e-300));
  if (lx <= log_xi_.front()) return 1.0 + std::exp(log_eps1_.front());
  if (lx >= log_xi_.back()) return 1.0 + std::exp(log_eps1_.back());
  const auto it = std::upper_bound(log_xi_.begin(), log_xi_.end(), lx);
  const std::size_t i = static_cast<std::size_t>(it - log_xi_.begin()) - 1;
  const double h = log_xi_[i + 1] - log_xi_[i];
  const double t = (lx - log_xi_[i]) / h;
  const double y0 = log_eps1_[i], y1 = log_eps1_[i + 1];
  const double d0 = slope_[i] * h, d1 = slope_[i + 1] * h;
  const double t2 = t * t, t3 = t2 * t;
  const double v = (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * d0 +
                   (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * d1;
  return 1.0 + std::exp(v);
}

double eps_imag(const MaterialModel& m, double xi) {
  if (xi < 0.0) throw std::invalid_argument("eps_imag: xi must be >= 0");
  switch (m.kind()) {
    case MaterialKind::IdealMetal:
      return std::numeric_limits<double>::infinity();
    case MaterialKind::Plasma:
      if (xi == 0.0)
        throw std::domain_error("eps_imag: plasma permittivity diverges at xi = 0");
      return 1.0 + (m.omega_p() / xi) * (m.omega_p() / xi);
    case MaterialKind::Drude:
      if (xi == 0.0)
        throw std::domain_error("eps_imag: Drude permittivity diverges at xi = 0");
      return 1.0 + m.omega_p() * m.omega_p() / (xi * (xi + m.gamma()));
    case MaterialKind::Tabulated:
      return m.interpolate_table(xi);
  }
  throw std::logic_error("eps_imag: unknown material kind");
}

double impedance_imag(const MaterialModel& m, double xi) {
  switch (m.kind()) {
    case MaterialKind::IdealMetal:
      return 0.0;
    case MaterialKind::Plasma:
    case MaterialKind::Drude:
      if (xi == 0.0) return 0.0;  // eps -> inf limit
      return 1.0 / std::sqrt(eps_imag(m, xi));
    case MaterialKind::Tabulated:
      return 1.0 / std::sqrt(m.interpolate_table(xi));
  }
  throw std::logic_error("impedance_imag: unknown material kind");
}

SkinRegime classify_regime(const MaterialModel& m, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("classify_regime: omega must be > 0");
  if (!m.transport())
    throw std::invalid_argument("classify_regime: material lacks transport parameters");
  const auto& t = *m.transport();
  // delta_n = c/sqrt(2 pi sigma omega) in Gaussian units; with sigma in 1/s
  // the cgs->SI length conversion cancels against c, so c in m/s gives meters.
  const double delta_n = constants::c / std::sqrt(2.0 * std::numbers::pi * t.sigma * omega);
  const double r1 = t.mean_free_path / delta_n;
  const double r2 = t.mean_free_path * omega / t.fermi_velocity;
  const bool ok1 = r1 < kMuchLessThan;
  const bool ok2 = r2 < kMuchLessThan;
  return {ok1 && ok2 ? SkinRegime::Value::NormalSkin : SkinRegime::Value::OutsideNormalSkin,
          delta_n, r1, r2, ok1, ok2};
}

}  // namespace casimir
