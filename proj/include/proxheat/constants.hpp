#pragma once

#include <numbers>

// Fundamental constants in SI units (CODATA 2018). Everything downstream
// works in SI; temperatures stay in kelvin and are converted to energy
// explicitly through kB.

namespace proxheat::constants {

inline constexpr double pi = std::numbers::pi_v<double>;

/// h — Planck constant [J·s] (exact).
inline constexpr double planck = 6.62607015e-34;

/// ħ — reduced Planck constant [J·s].
inline constexpr double hbar = planck / (2.0 * pi);

/// k_B — Boltzmann constant [J/K] (exact).
inline constexpr double kB = 1.380649e-23;

/// ε₀ — vacuum permittivity [F/m].
inline constexpr double eps0 = 8.8541878128e-12;

/// μ₀ — vacuum permeability [H/m].
inline constexpr double mu0 = 1.25663706212e-6;

/// c — speed of light in vacuum [m/s] (exact).
inline constexpr double c_light = 299792458.0;

/// e — elementary charge [C] (exact).
inline constexpr double e_charge = 1.602176634e-19;

/// u — atomic mass unit [kg].
inline constexpr double amu = 1.66053906660e-27;

/// μ_B — Bohr magneton [J/T].
inline constexpr double bohr_magneton = 9.2740100783e-24;

} // namespace proxheat::constants
