#pragma once

#include <string>
#include <vector>

#include "casimir/material.hpp"

namespace casimir {

/// JSON document schema:
///   {"kind": "ideal|plasma|drude|tabulated",
///    "omega_p_rad_s": ..., "gamma_rad_s": ...,
///    "table": [[xi, eps], ...],
///    "sigma_gauss_inv_s": ..., "mean_free_path_m": ..., "v_F_m_s": ...}
MaterialModel material_from_json_string(const std::string& text);
MaterialModel material_from_json_file(const std::string& path);
std::string material_to_json_string(const MaterialModel& m);

/// Shipped presets: "gold" (Drude), "gold-plasma" (Plasma, same omega_p),
/// "ideal". Gold parameters are conventional values for a clean sample, not
/// fitted data: omega_p = 1.37e16 rad/s, gamma = 5.3e13 rad/s,
/// sigma = 4.04e17 1/s, l = 4.0e-8 m, v_F = 1.4e6 m/s.
MaterialModel material_preset(const std::string& name);
std::vector<std::string> material_preset_names();

/// Preset name first, then filesystem path.
MaterialModel resolve_material(const std::string& name_or_path);

}  // namespace casimir
