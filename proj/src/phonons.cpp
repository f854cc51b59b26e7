#include "proxheat/phonons.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "proxheat/constants.hpp"

namespace proxheat {

namespace c = constants;

double bessel_k2(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k2: x must be > 0");
    return std::cyl_bessel_k(2.0, x);
}

double coupling_g(double Q, double z, double c3) {
    if (!(Q > 0.0)) throw std::invalid_argument("coupling_g: Q must be > 0");
    if (!(z > 0.0)) throw std::invalid_argument("coupling_g: z must be > 0");
    if (c3 < 0.0) throw std::invalid_argument("coupling_g: c3 must be >= 0");
    return -(3.0 * c3 * Q * Q / (2.0 * z * z)) * bessel_k2(Q * z);
}

double rayleigh_heating_rate(const TrapConfig& trap, const Particle& particle,
                             const Material& material) {
    trap.validate();
    particle.validate();
    if (!material.debye_freq)
        throw std::invalid_argument("rayleigh_heating_rate: material '" + material.name +
                                    "' is missing debye_freq");
    if (!material.surface_atom_mass)
        throw std::invalid_argument("rayleigh_heating_rate: material '" + material.name +
                                    "' is missing surface_atom_mass");
    if (!material.eta)
        throw std::invalid_argument("rayleigh_heating_rate: material '" + material.name +
                                    "' is missing eta");
    if (particle.c3 == 0.0) return 0.0;
    const double wD = *material.debye_freq;
    const double eta = *material.eta;
    const double z = trap.distance;
    const double pref = c::kB * trap.temperature * particle.c3 * particle.c3 /
                        (c::hbar * trap.omega_t * wD * wD * wD * particle.mass *
                         *material.surface_atom_mass);
    const double geometry = 72.0 * c::pi * c::pi * c::pi * eta * (1.0 + eta * eta);
    return pref * geometry / std::pow(z, 10);
}

std::vector<std::string> rayleigh_warnings(const TrapConfig& trap, const Material& material) {
    std::vector<std::string> out;
    if (material.rayleigh_velocity) {
        const double Qz = trap.omega_t * trap.distance / *material.rayleigh_velocity;
        if (Qz > 0.1) {
            std::ostringstream os;
            os << "rayleigh-asymptotics: Q*z = " << Qz
               << " exceeds 0.1; the long-wavelength form of the coupling is strained";
            out.push_back(os.str());
        }
    }
    return out;
}

} // namespace proxheat
