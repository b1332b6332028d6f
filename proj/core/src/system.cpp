#include "casimir/system.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

PlateSystem::PlateSystem(double a, double T) : separation(a), temperature(T) {
  if (!(a > 0.0)) throw std::invalid_argument("PlateSystem: separation must be > 0");
  if (!(T >= 0.0)) throw std::invalid_argument("PlateSystem: temperature must be >= 0");
}

double matsubara_frequency(int l, double temperature) {
  if (l < 0) throw std::invalid_argument("matsubara_frequency: l must be >= 0");
  if (l == 0) return 0.0;
  return 2.0 * std::numbers::pi * constants::k_B * temperature * l / constants::hbar;
}

DimensionlessPoint to_dimensionless(const PlateSystem& sys, int l, double k_perp) {
  if (k_perp < 0.0) throw std::invalid_argument("to_dimensionless: k_perp must be >= 0");
  const double xi = matsubara_frequency(l, sys.temperature);
  const double zeta = 2.0 * sys.separation * xi / constants::c;
  const double y_kperp = 2.0 * sys.separation * k_perp;
  return {std::hypot(y_kperp, zeta), zeta, l};
}

double from_dimensionless(const PlateSystem& sys, const DimensionlessPoint& p) {
  const double y2 = p.y * p.y - p.zeta * p.zeta;
  return y2 <= 0.0 ? 0.0 : std::sqrt(y2) / (2.0 * sys.separation);
}

}  // namespace casimir
