#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proxheat/config.hpp"

// Substrate models. A Material carries the dielectric response (Drude
// parameters when known, otherwise the constant-resistivity limit) and the
// surface-phonon parameters needed by the Rayleigh-wave heating channel.

namespace proxheat {

struct Material {
    std::string name;
    double resistivity = 0.0; // Ω·m, at trap frequencies

    // Drude response 1 - ωp²/(ω(ω+iγ)); when absent the constant-resistivity
    // limit 1 + i/(ε₀ωρ) is used.
    std::optional<double> drude_plasma_freq; // rad/s
    std::optional<double> drude_damping;     // rad/s

    // Surface-phonon parameters. Required by the phonon channel only.
    std::optional<double> debye_freq;        // rad/s
    std::optional<double> surface_atom_mass; // kg
    std::optional<double> eta;               // Rayleigh-wave bulk-decay parameter
    std::optional<double> surface_density;   // atoms/m², recorded but unused
    std::optional<double> rayleigh_velocity; // m/s, used only for a validity flag

    /// Throws std::invalid_argument on any violated invariant, including a
    /// Drude DC resistivity γ/(ε₀ωp²) more than 5% away from `resistivity`.
    void validate() const;

    bool has_drude() const { return drude_plasma_freq && drude_damping; }
    bool has_phonon_params() const { return debye_freq && surface_atom_mass && eta; }
};

/// Dielectric function ε(ω) for ω > 0.
std::complex<double> epsilon(const Material& m, double omega);

/// Im[(ε(ω) − 1)/(ε(ω) + 1)], the electrostatic image absorption factor.
double im_reflection_quasistatic(const Material& m, double omega);

/// Validity notes for the dielectric model at this frequency (e.g. Drude
/// parameters present but ω beyond the damping-rate regime). Empty when clean.
std::vector<std::string> dielectric_warnings(const Material& m, double omega);

class MaterialDb {
  public:
    /// Database preloaded with the built-in substrates ("Ag", "glass").
    static MaterialDb builtin();

    void add(Material m); // validates; replaces an existing entry of equal name
    const Material& get(const std::string& name) const;
    bool has(const std::string& name) const;
    std::vector<std::string> names() const;

    /// Merge all [material] sections of a database file into this db.
    void load_file(const std::string& path);
    void load_parsed(const ParsedConfig& cfg);

    /// Round-trippable serialization in the material config format.
    std::string serialize() const;

  private:
    std::map<std::string, Material> entries_;
};

/// Parse one material section (keys per the material config format; unknown
/// keys are a hard error).
Material material_from_section(const ParsedConfig& cfg, const ConfigSection& section);

} // namespace proxheat
