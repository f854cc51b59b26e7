#pragma once

#include <string>
#include <vector>

#include "proxheat/materials.hpp"
#include "proxheat/trap.hpp"

// Surface-phonon heating channel: thermal Rayleigh waves corrugate the
// surface and modulate the image (van-der-Waals) potential of a neutral
// atom. The channel needs the modified Bessel function K₂, the corrugation
// coupling g(Q;z) and the Debye-scale surface parameters of the substrate.

namespace proxheat {

/// Modified Bessel function of the second kind, order 2, x > 0.
double bessel_k2(double x);

/// Corrugation coupling g(Q;z) = −(3 c₃ Q²/(2z²)) K₂(Qz), in J per unit
/// surface displacement. For Qz ≪ 1 it approaches −3c₃/z⁴.
double coupling_g(double Q, double z, double c3);

/// Rayleigh-wave heating rate
/// Γ = kBT c₃²/(ħ ω_t ω_D³ M M_s) · 72π³ η(1+η²)/z¹⁰.
/// Requires the material's Debye frequency, surface atom mass and eta.
double rayleigh_heating_rate(const TrapConfig& trap, const Particle& particle,
                             const Material& material);

/// Validity notes for the Qz ≪ 1 asymptotics behind the closed form; only
/// produced when the material declares a Rayleigh velocity (then the resonant
/// wave vector Q = ω_t/v_R is known) and Qz > 0.1.
std::vector<std::string> rayleigh_warnings(const TrapConfig& trap, const Material& material);

} // namespace proxheat
