#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "proxheat/em_noise.hpp"
#include "proxheat/materials.hpp"
#include "proxheat/trap.hpp"

// Ground-state depletion rates. Closed forms use the high-temperature limit
// of the Bose-Einstein factor; pipeline variants assemble the golden rule
// from the fluctuation spectra with the exact factor, so the two agree to
// the size of that approximation and cross-validate the whole chain.

namespace proxheat {

struct NoMechanismError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mechanism {
    ion_surface,
    ion_blackbody,
    ion_endcap,
    spin_surface,
    phonon_vdw,
};

const char* to_string(Mechanism m);
Mechanism mechanism_from_string(const std::string& s);

enum class RateMethod { closed_form, pipeline };

const char* to_string(RateMethod m);

struct EndcapCircuit {
    double resistance = 0.0; // Ω
    double distance = 0.0;   // m, endcap separation (not the trap-surface z)

    void validate() const;
};

struct RateResult {
    Mechanism mechanism = Mechanism::ion_surface;
    double rate = 0.0; // 1/s
    RateMethod method = RateMethod::pipeline;
    std::map<std::string, std::string> inputs_echo;
    std::vector<std::string> warnings;
};

/// Γ = (a/ħ)² · nᵀ S n with a the trap ground-state size and S a force
/// spectrum at −ω_t. Rejects spectra whose unit tag is not N²·s.
double golden_rule_rate(const TrapConfig& trap, const Particle& particle,
                        const SpectralTensor& force_spectrum);

/// Surface channel closed form: q² kBT ρ (1+n_z²)/(16π ħ ω_t M z³).
double ion_rate_closed(const TrapConfig& trap, const Particle& particle, const Material& m);

/// Endcap Johnson-noise model: ρ/z → R, z → endcap distance;
/// q² kBT R (1+n_z²)/(16π ħ ω_t M d²). Independent of the trap-surface z.
double ion_rate_endcap(const TrapConfig& trap, const Particle& particle,
                       const EndcapCircuit& endcap);

/// Spin channel closed form: μ₀² kBT <3μ²−μ_z²>/(128π ħ ω_t M ρ z³).
/// The trap axis must be perpendicular to the surface.
double zeeman_rate_closed(const TrapConfig& trap, const Particle& particle, const Material& m);

/// Golden rule over the electric-field spectrum at −ω_t.
RateResult ion_rate_pipeline(const TrapConfig& trap, const Particle& particle,
                             const Material& m, bool include_blackbody);

/// Golden rule over the blackbody field alone (z-independent baseline).
RateResult ion_rate_blackbody(const TrapConfig& trap, const Particle& particle);

/// Golden rule over the magnetic force kernel at −ω_t (trap axis ⊥ surface).
RateResult zeeman_rate_pipeline(const TrapConfig& trap, const Particle& particle,
                                const Material& m);

/// Rayleigh-phonon channel as a RateResult (closed form with validity flags).
RateResult phonon_rate_result(const TrapConfig& trap, const Particle& particle,
                              const Material& m);

/// One RateResult per mechanism applicable to this particle/material
/// combination; inapplicable channels are omitted. Throws NoMechanismError
/// when nothing applies.
std::vector<RateResult> compute_all(const TrapConfig& trap, const Particle& particle,
                                    const Material& m,
                                    const std::optional<EndcapCircuit>& endcap);

} // namespace proxheat
