#pragma once

#include <string>

#include "proxheat/tensor.hpp"

// Trap and particle configuration, the harmonic ground-state size and the
// magnetic-moment expectation value entering the spin heating channel.

namespace proxheat {

struct TrapConfig {
    double omega_t = 0.0;   // rad/s
    Vec3 axis = axis_z;     // unit vector along the oscillation direction
    double distance = 0.0;  // m, trap center to surface
    double temperature = 0.0; // K, substrate/environment

    void validate() const;
};

struct Particle {
    double mass = 0.0;          // kg
    double charge = 0.0;        // C
    double moment_expect = 0.0; // J²/T², value of <3μ² − μ_z²>
    double c3 = 0.0;            // J·m³, van-der-Waals coefficient

    void validate() const;
};

enum class SpinConvention {
    operator_spin_half, // μ_i = 2μ S_i/ħ, <S_i²> = ħ²/4
    classical_isotropic // fixed-length moment, <μ_z²> = μ²/3
};

struct SpinSpec {
    double moment_magnitude = 0.0; // J/T
    double spin = 0.5;             // half-integer
    SpinConvention convention = SpinConvention::operator_spin_half;
};

/// Ground-state wave-packet size a = √(ħ/(2Mω_t)); also the dipole matrix
/// element <1|x|0> of the harmonic trap.
double ground_state_size(const TrapConfig& trap, const Particle& particle);

/// <3μ² − μ_z²> under the chosen convention:
/// operator_spin_half → 8μ², classical_isotropic → (8/3)μ².
double moment_expectation(const SpinSpec& spec);

const char* to_string(SpinConvention c);
SpinConvention spin_convention_from_string(const std::string& s);

} // namespace proxheat
