#include "proxheat/rates.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "proxheat/constants.hpp"
#include "proxheat/phonons.hpp"

namespace proxheat {

namespace c = constants;

const char* to_string(Mechanism m) {
    switch (m) {
        case Mechanism::ion_surface: return "ion_surface";
        case Mechanism::ion_blackbody: return "ion_blackbody";
        case Mechanism::ion_endcap: return "ion_endcap";
        case Mechanism::spin_surface: return "spin_surface";
        case Mechanism::phonon_vdw: return "phonon_vdw";
    }
    return "?";
}

Mechanism mechanism_from_string(const std::string& s) {
    for (Mechanism m : {Mechanism::ion_surface, Mechanism::ion_blackbody, Mechanism::ion_endcap,
                        Mechanism::spin_surface, Mechanism::phonon_vdw})
        if (s == to_string(m)) return m;
    throw std::invalid_argument("unknown mechanism '" + s + "'");
}

const char* to_string(RateMethod m) {
    return m == RateMethod::closed_form ? "closed_form" : "pipeline";
}

void EndcapCircuit::validate() const {
    if (!(resistance > 0.0)) throw std::invalid_argument("endcap: resistance must be > 0");
    if (!(distance > 0.0)) throw std::invalid_argument("endcap: distance must be > 0");
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void require_perpendicular_axis(const Vec3& n) {
    if (std::abs(n.x) > 1e-9 || std::abs(n.y) > 1e-9 || n.z < 0.0)
        throw std::invalid_argument(
            "spin channel: only a trap axis perpendicular to the surface (n = e_z) is "
            "implemented; the magnetic force kernel is derived for the z gradient alone");
}

std::map<std::string, std::string> base_echo(const TrapConfig& trap, const Particle& p) {
    return {
        {"omega_t_rad_s", num(trap.omega_t)},
        {"axis", num(trap.axis.x) + " " + num(trap.axis.y) + " " + num(trap.axis.z)},
        {"distance_m", num(trap.distance)},
        {"temperature_K", num(trap.temperature)},
        {"mass_kg", num(p.mass)},
        {"charge_C", num(p.charge)},
        {"moment_expect_J2_T2", num(p.moment_expect)},
        {"c3_J_m3", num(p.c3)},
    };
}

// The closed forms take the high-temperature limit of the
// Bose-Einstein factor; flag the cases where that visibly deviates.
void flag_high_t_limit(const TrapConfig& trap, std::vector<std::string>& warnings) {
    if (trap.temperature <= 0.0) return;
    const double x = c::hbar * trap.omega_t / (c::kB * trap.temperature);
    if (x > 1e-3) {
        std::ostringstream os;
        os << "high-T-limit: hbar*omega_t/(kB*T) = " << x
           << "; the closed form's high-temperature Bose factor deviates from the exact one "
              "by about x/2";
        warnings.push_back(os.str());
    }
}

} // namespace

double golden_rule_rate(const TrapConfig& trap, const Particle& particle,
                        const SpectralTensor& force_spectrum) {
    trap.validate();
    particle.validate();
    if (force_spectrum.kind != SpectrumKind::force)
        throw std::invalid_argument(std::string("golden_rule_rate: spectrum is in ") +
                                    units_of(force_spectrum.kind) + ", need a force spectrum (" +
                                    units_of(SpectrumKind::force) + ")");
    force_spectrum.validate();
    const double a = ground_state_size(trap, particle);
    return (a * a / (c::hbar * c::hbar)) * force_spectrum.components.quadratic_form(trap.axis);
}

double ion_rate_closed(const TrapConfig& trap, const Particle& particle, const Material& m) {
    trap.validate();
    particle.validate();
    m.validate();
    if (particle.charge == 0.0)
        throw std::invalid_argument("ion channel: particle carries no charge");
    const double q2 = particle.charge * particle.charge;
    const double nz2 = trap.axis.z * trap.axis.z;
    const double z = trap.distance;
    return q2 * c::kB * trap.temperature * m.resistivity * (1.0 + nz2) /
           (16.0 * c::pi * c::hbar * trap.omega_t * particle.mass * z * z * z);
}

double ion_rate_endcap(const TrapConfig& trap, const Particle& particle,
                       const EndcapCircuit& endcap) {
    trap.validate();
    particle.validate();
    endcap.validate();
    if (particle.charge == 0.0)
        throw std::invalid_argument("ion channel: particle carries no charge");
    const double q2 = particle.charge * particle.charge;
    const double nz2 = trap.axis.z * trap.axis.z;
    const double d = endcap.distance;
    return q2 * c::kB * trap.temperature * endcap.resistance * (1.0 + nz2) /
           (16.0 * c::pi * c::hbar * trap.omega_t * particle.mass * d * d);
}

double zeeman_rate_closed(const TrapConfig& trap, const Particle& particle, const Material& m) {
    trap.validate();
    particle.validate();
    m.validate();
    if (!(particle.moment_expect > 0.0))
        throw std::invalid_argument("spin channel: particle carries no magnetic moment");
    require_perpendicular_axis(trap.axis);
    const double z = trap.distance;
    return c::mu0 * c::mu0 * c::kB * trap.temperature * particle.moment_expect /
           (c::hbar * trap.omega_t * particle.mass * m.resistivity * 128.0 * c::pi * z * z * z);
}

RateResult ion_rate_pipeline(const TrapConfig& trap, const Particle& particle,
                             const Material& m, bool include_blackbody) {
    if (particle.charge == 0.0)
        throw std::invalid_argument("ion channel: particle carries no charge");
    SpectralTensor s = electric_field_spectrum(m, trap.distance, -trap.omega_t,
                                               trap.temperature, include_blackbody);
    const double q2 = particle.charge * particle.charge;
    SpectralTensor force{s.components.scaled(q2), SpectrumKind::force, s.omega, s.position_z, {}};
    RateResult r;
    r.mechanism = Mechanism::ion_surface;
    r.method = RateMethod::pipeline;
    r.rate = golden_rule_rate(trap, particle, force);
    r.inputs_echo = base_echo(trap, particle);
    r.inputs_echo["material"] = m.name;
    r.inputs_echo["resistivity_ohm_m"] = num(m.resistivity);
    r.inputs_echo["include_blackbody"] = include_blackbody ? "true" : "false";
    r.warnings = std::move(s.warnings);
    return r;
}

RateResult ion_rate_blackbody(const TrapConfig& trap, const Particle& particle) {
    if (particle.charge == 0.0)
        throw std::invalid_argument("ion channel: particle carries no charge");
    trap.validate();
    SpectralTensor s = blackbody_field_spectrum(-trap.omega_t, trap.temperature);
    const double q2 = particle.charge * particle.charge;
    SpectralTensor force{s.components.scaled(q2), SpectrumKind::force, s.omega, 0.0, {}};
    RateResult r;
    r.mechanism = Mechanism::ion_blackbody;
    r.method = RateMethod::pipeline;
    r.rate = golden_rule_rate(trap, particle, force);
    r.inputs_echo = base_echo(trap, particle);
    return r;
}

RateResult zeeman_rate_pipeline(const TrapConfig& trap, const Particle& particle,
                                const Material& m) {
    trap.validate();
    particle.validate();
    if (!(particle.moment_expect > 0.0))
        throw std::invalid_argument("spin channel: particle carries no magnetic moment");
    require_perpendicular_axis(trap.axis);
    const double kernel =
        magnetic_force_kernel_zz(m, trap.distance, -trap.omega_t, trap.temperature);
    // Σ_ij <μ_i μ_j> t_ij = <3μ² − μ_z²>/2 for the diagonal t tensor
    const double szz = 0.5 * particle.moment_expect * kernel;
    SpectralTensor force{Mat3::diagonal(0.0, 0.0, szz), SpectrumKind::force, -trap.omega_t,
                         trap.distance, {}};
    RateResult r;
    r.mechanism = Mechanism::spin_surface;
    r.method = RateMethod::pipeline;
    r.rate = golden_rule_rate(trap, particle, force);
    r.inputs_echo = base_echo(trap, particle);
    r.inputs_echo["material"] = m.name;
    r.inputs_echo["resistivity_ohm_m"] = num(m.resistivity);
    r.warnings = dielectric_warnings(m, trap.omega_t);
    return r;
}

RateResult phonon_rate_result(const TrapConfig& trap, const Particle& particle,
                              const Material& m) {
    RateResult r;
    r.mechanism = Mechanism::phonon_vdw;
    r.method = RateMethod::closed_form;
    r.rate = rayleigh_heating_rate(trap, particle, m);
    r.inputs_echo = base_echo(trap, particle);
    r.inputs_echo["material"] = m.name;
    r.inputs_echo["debye_freq_rad_s"] = num(*m.debye_freq);
    r.inputs_echo["surface_atom_mass_kg"] = num(*m.surface_atom_mass);
    r.inputs_echo["eta"] = num(*m.eta);
    r.warnings = rayleigh_warnings(trap, m);
    flag_high_t_limit(trap, r.warnings);
    return r;
}

std::vector<RateResult> compute_all(const TrapConfig& trap, const Particle& particle,
                                    const Material& m,
                                    const std::optional<EndcapCircuit>& endcap) {
    trap.validate();
    particle.validate();
    m.validate();
    std::vector<RateResult> out;

    if (particle.charge != 0.0) {
        out.push_back(ion_rate_pipeline(trap, particle, m, false));
        out.push_back(ion_rate_blackbody(trap, particle));
        if (endcap) {
            RateResult r;
            r.mechanism = Mechanism::ion_endcap;
            r.method = RateMethod::closed_form;
            r.rate = ion_rate_endcap(trap, particle, *endcap);
            r.inputs_echo = base_echo(trap, particle);
            r.inputs_echo["endcap_resistance_ohm"] = num(endcap->resistance);
            r.inputs_echo["endcap_distance_m"] = num(endcap->distance);
            r.warnings.push_back(
                "endcap-model: lumped-circuit comparison; geometrical factor of order unity "
                "not included");
            flag_high_t_limit(trap, r.warnings);
            out.push_back(std::move(r));
        }
    }
    if (particle.moment_expect > 0.0) out.push_back(zeeman_rate_pipeline(trap, particle, m));
    if (particle.c3 > 0.0 && m.has_phonon_params())
        out.push_back(phonon_rate_result(trap, particle, m));

    if (out.empty())
        throw NoMechanismError(
            "no applicable heating mechanism: particle has no charge, no magnetic moment, and "
            "no van-der-Waals coupling usable with material '" + m.name + "'");
    return out;
}

} // namespace proxheat
