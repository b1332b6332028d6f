#pragma once

namespace casimir::constants {

// CODATA 2018 values, SI. Single source of truth for the whole library.
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 2.99792458e8;        // m/s
inline constexpr double k_B = 1.380649e-23;      // J/K

}  // namespace casimir::constants
