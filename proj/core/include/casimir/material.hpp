#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace casimir {

enum class MaterialKind { IdealMetal, Plasma, Drude, Tabulated };

/// dc transport data, used only by the skin-effect classifier.
struct TransportParameters {
  double sigma;           ///< dc conductivity, Gaussian units [1/s]
  double mean_free_path;  ///< conduction-electron mean free path [m]
  double fermi_velocity;  ///< v_F [m/s]
};

/// Parametrized source of the dielectric permittivity (and through it the
/// Leontovich impedance) on the imaginary frequency axis. Immutable after
/// construction.
class MaterialModel {
 public:
  static MaterialModel ideal_metal();
  static MaterialModel plasma(double omega_p,
                              std::optional<TransportParameters> transport = {});
  static MaterialModel drude(double omega_p, double gamma,
                             std::optional<TransportParameters> transport = {});
  /// Table of (xi [rad/s], eps >= 1) pairs, xi strictly increasing and > 0.
  /// Interpolated monotone-cubically in (log xi, log(eps-1)), clamped to the
  /// endpoint values outside the table.
  static MaterialModel tabulated(std::vector<std::array<double, 2>> xi_eps,
                                 std::optional<TransportParameters> transport = {});

  MaterialKind kind() const { return kind_; }
  double omega_p() const { return omega_p_; }
  double gamma() const { return gamma_; }
  const std::optional<TransportParameters>& transport() const { return transport_; }

  const std::string& label() const { return label_; }
  MaterialModel labeled(std::string name) const;

  /// Permittivity at the clamped table endpoints (Tabulated only).
  double table_eps_low() const;

  double interpolate_table(double xi) const;  // Tabulated only

 private:
  MaterialModel() = default;

  MaterialKind kind_ = MaterialKind::IdealMetal;
  double omega_p_ = 0.0;
  double gamma_ = 0.0;
  std::optional<TransportParameters> transport_;
  std::string label_;

  // monotone-cubic (Fritsch-Carlson) data in (log xi, log(eps-1))
  std::vector<double> log_xi_, log_eps1_, slope_;
};

/// Skin-effect classification of a real frequency: both conditions
/// l << delta_n(omega) and l << v_F/omega must hold for the normal regime.
struct SkinRegime {
  enum class Value { NormalSkin, OutsideNormalSkin };
  Value value;
  double penetration_depth;     ///< delta_n = c/sqrt(2 pi sigma omega) [m]
  double ratio_mean_free_path;  ///< l / delta_n
  double ratio_ballistic;       ///< l omega / v_F
  bool within_skin_depth;       ///< l / delta_n < threshold
  bool within_field_period;     ///< l omega / v_F < threshold
};

/// Dielectric permittivity on the imaginary axis, eps(i xi) >= 1.
/// IdealMetal yields +infinity as the "eps -> inf" sentinel. Plasma and Drude
/// diverge at xi = 0 and throw there; the zero-frequency reflection limits are
/// handled symbolically by the reflection module.
double eps_imag(const MaterialModel& m, double xi);

/// Leontovich impedance Z(i xi) = 1/sqrt(eps(i xi)), real, in [0, 1].
/// Defined at xi = 0 for every supported model (0 for IdealMetal/Plasma/Drude).
double impedance_imag(const MaterialModel& m, double xi);

/// The "<<" conditions are evaluated as ratio < 0.1; the raw ratios are
/// reported so callers can apply stricter cutoffs.
SkinRegime classify_regime(const MaterialModel& m, double omega);

}  // namespace casimir
