#pragma once

namespace casimir {

/// Geometry and thermodynamic state: two thick plane-parallel plates
/// separated by a vacuum gap.
struct PlateSystem {
  double separation;   ///< gap width a > 0 [m]
  double temperature;  ///< T >= 0 [K]

  PlateSystem(double a, double T);
};

/// Point of the (Matsubara index, transverse momentum) domain expressed in
/// the dimensionless variables used by the engine:
///   y = 2 a q_l,  zeta = 2 a xi_l / c,  with q_l^2 = k_perp^2 + xi_l^2/c^2.
/// y >= zeta >= 0 always.
struct DimensionlessPoint {
  double y;
  double zeta;
  int index;  ///< Matsubara index l
};

/// Matsubara frequency xi_l = 2 pi k_B T l / hbar [rad/s]. Exactly 0 for l = 0.
double matsubara_frequency(int l, double temperature);

DimensionlessPoint to_dimensionless(const PlateSystem& sys, int l, double k_perp);

/// Inverse of to_dimensionless; recovers k_perp [1/m].
double from_dimensionless(const PlateSystem& sys, const DimensionlessPoint& p);

}  // namespace casimir
