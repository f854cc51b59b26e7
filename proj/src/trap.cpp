#include "proxheat/trap.hpp"

#include <cmath>
#include <stdexcept>

#include "proxheat/constants.hpp"

namespace proxheat {

namespace c = constants;

void TrapConfig::validate() const {
    if (!(omega_t > 0.0)) throw std::invalid_argument("trap: omega_t must be > 0");
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("trap: axis must be a unit vector (|n| deviates by > 1e-12)");
    if (!(distance > 0.0)) throw std::invalid_argument("trap: distance must be > 0");
    if (temperature < 0.0) throw std::invalid_argument("trap: temperature must be >= 0");
}

void Particle::validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("particle: mass must be > 0");
    if (moment_expect < 0.0) throw std::invalid_argument("particle: moment_expect must be >= 0");
    if (c3 < 0.0) throw std::invalid_argument("particle: c3 must be >= 0");
}

double ground_state_size(const TrapConfig& trap, const Particle& particle) {
    trap.validate();
    particle.validate();
    return std::sqrt(c::hbar / (2.0 * particle.mass * trap.omega_t));
}

double moment_expectation(const SpinSpec& spec) {
    if (spec.moment_magnitude < 0.0)
        throw std::invalid_argument("spin: moment_magnitude must be >= 0");
    const double mu2 = spec.moment_magnitude * spec.moment_magnitude;
    switch (spec.convention) {
        case SpinConvention::operator_spin_half:
            if (spec.spin != 0.5)
                throw std::invalid_argument(
                    "spin: operator_spin_half implements spin-1/2 algebra only (got spin " +
                    std::to_string(spec.spin) + ")");
            // μ_i = (2μ) S_i/ħ with <S_i²> = ħ²/4 gives <μ_i²> = μ² per axis
            return 8.0 * mu2;
        case SpinConvention::classical_isotropic:
            return (8.0 / 3.0) * mu2;
    }
    throw std::logic_error("spin: unhandled convention");
}

const char* to_string(SpinConvention c) {
    switch (c) {
        case SpinConvention::operator_spin_half: return "operator_spin_half";
        case SpinConvention::classical_isotropic: return "classical_isotropic";
    }
    return "?";
}

SpinConvention spin_convention_from_string(const std::string& s) {
    if (s == "operator_spin_half") return SpinConvention::operator_spin_half;
    if (s == "classical_isotropic") return SpinConvention::classical_isotropic;
    throw std::invalid_argument("unknown spin convention '" + s +
                                "' (expected operator_spin_half or classical_isotropic)");
}

} // namespace proxheat
