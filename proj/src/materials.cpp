#include "proxheat/materials.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "proxheat/constants.hpp"
#include "proxheat/units.hpp"

namespace proxheat {

namespace c = constants;

void Material::validate() const {
    if (name.empty()) throw std::invalid_argument("material: empty name");
    if (!(resistivity > 0.0))
        throw std::invalid_argument("material '" + name + "': resistivity must be > 0");
    if (eta && !(*eta > 0.0 && *eta <= 2.0))
        throw std::invalid_argument("material '" + name + "': eta must be in (0, 2]");
    if (debye_freq && !(*debye_freq > 0.0))
        throw std::invalid_argument("material '" + name + "': debye_freq must be > 0");
    if (surface_atom_mass && !(*surface_atom_mass > 0.0))
        throw std::invalid_argument("material '" + name + "': surface_atom_mass must be > 0");
    if (surface_density && !(*surface_density > 0.0))
        throw std::invalid_argument("material '" + name + "': surface_density must be > 0");
    if (rayleigh_velocity && !(*rayleigh_velocity > 0.0))
        throw std::invalid_argument("material '" + name + "': rayleigh_velocity must be > 0");
    if (drude_plasma_freq.has_value() != drude_damping.has_value())
        throw std::invalid_argument("material '" + name +
                                    "': Drude model needs both plasma_freq_rad_s and damping_rad_s");
    if (has_drude()) {
        if (!(*drude_plasma_freq > 0.0) || !(*drude_damping > 0.0))
            throw std::invalid_argument("material '" + name + "': Drude parameters must be > 0");
        const double implied_rho = *drude_damping / (c::eps0 * *drude_plasma_freq * *drude_plasma_freq);
        if (std::abs(implied_rho - resistivity) > 0.05 * resistivity) {
            std::ostringstream os;
            os << "material '" << name << "': Drude DC resistivity " << implied_rho
               << " Ω·m disagrees with resistivity " << resistivity << " Ω·m by more than 5%";
            throw std::invalid_argument(os.str());
        }
    }
}

std::complex<double> epsilon(const Material& m, double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("epsilon: omega must be > 0 (got " + std::to_string(omega) +
                                    "); negative frequencies are folded by the noise spectra");
    if (m.has_drude()) {
        const double wp = *m.drude_plasma_freq;
        const double gamma = *m.drude_damping;
        return 1.0 - wp * wp / (omega * std::complex<double>(omega, gamma));
    }
    return {1.0, 1.0 / (c::eps0 * omega * m.resistivity)};
}

double im_reflection_quasistatic(const Material& m, double omega) {
    const std::complex<double> eps = epsilon(m, omega);
    // Im[(ε−1)/(ε+1)] = 2 Im ε / |ε+1|²
    const double re1 = eps.real() + 1.0;
    return 2.0 * eps.imag() / (re1 * re1 + eps.imag() * eps.imag());
}

std::vector<std::string> dielectric_warnings(const Material& m, double omega) {
    std::vector<std::string> out;
    if (m.has_drude() && omega > *m.drude_damping / 10.0) {
        std::ostringstream os;
        os << "drude-validity: omega=" << omega << " rad/s is not well below the damping rate "
           << *m.drude_damping << " rad/s of material '" << m.name << "'";
        out.push_back(os.str());
    }
    return out;
}

MaterialDb MaterialDb::builtin() {
    MaterialDb db;

    Material ag;
    ag.name = "Ag";
    ag.resistivity = 1.6e-8;                      // Ω·m
    ag.debye_freq = c::kB * 225.0 / c::hbar;      // Debye temperature 225 K
    ag.surface_atom_mass = 108.0 * c::amu;
    ag.eta = 0.75;
    db.add(ag);

    Material glass;
    glass.name = "glass";
    glass.resistivity = 1e9; // Ω·m
    db.add(glass);

    return db;
}

void MaterialDb::add(Material m) {
    m.validate();
    entries_[m.name] = std::move(m);
}

bool MaterialDb::has(const std::string& name) const { return entries_.count(name) != 0; }

const Material& MaterialDb::get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        std::string known;
        for (const auto& [k, v] : entries_) known += (known.empty() ? "" : ", ") + k;
        throw ConfigError("unknown material '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

std::vector<std::string> MaterialDb::names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

Material material_from_section(const ParsedConfig& cfg, const ConfigSection& section) {
    SectionReader r(cfg, section);
    Material m;
    m.name = r.require_string("name");
    m.resistivity = convert(r.require_number("resistivity_ohm_cm"), "ohm_cm", "ohm_m");
    if (auto v = r.get_number("debye_temp_K")) m.debye_freq = c::kB * *v / c::hbar;
    if (auto v = r.get_number("surface_atom_mass_amu")) m.surface_atom_mass = *v * c::amu;
    if (auto v = r.get_number("eta")) m.eta = *v;
    if (auto v = r.get_number("plasma_freq_rad_s")) m.drude_plasma_freq = *v;
    if (auto v = r.get_number("damping_rad_s")) m.drude_damping = *v;
    if (auto v = r.get_number("surface_density_per_m2")) m.surface_density = *v;
    if (auto v = r.get_number("rayleigh_velocity_m_s")) m.rayleigh_velocity = *v;
    r.reject_unknown();
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(cfg.source + ":" + std::to_string(section.line) + ": " + e.what());
    }
    return m;
}

void MaterialDb::load_parsed(const ParsedConfig& cfg) {
    bool any = false;
    for (const ConfigSection* sec : cfg.find_all("material")) {
        add(material_from_section(cfg, *sec));
        any = true;
    }
    // A bare file with top-level keys is accepted as a single material.
    if (!any && !cfg.sections.front().entries.empty()) {
        add(material_from_section(cfg, cfg.sections.front()));
        any = true;
    }
    if (!any) throw ConfigError(cfg.source + ": no [material] section found");
}

void MaterialDb::load_file(const std::string& path) { load_parsed(parse_config_file(path)); }

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string MaterialDb::serialize() const {
    std::ostringstream os;
    for (const auto& [name, m] : entries_) {
        os << "[material]\n";
        os << "name = " << name << "\n";
        os << "resistivity_ohm_cm = " << num(m.resistivity * 1e2) << "\n";
        if (m.debye_freq) os << "debye_temp_K = " << num(*m.debye_freq * c::hbar / c::kB) << "\n";
        if (m.surface_atom_mass)
            os << "surface_atom_mass_amu = " << num(*m.surface_atom_mass / c::amu) << "\n";
        if (m.eta) os << "eta = " << num(*m.eta) << "\n";
        if (m.drude_plasma_freq) os << "plasma_freq_rad_s = " << num(*m.drude_plasma_freq) << "\n";
        if (m.drude_damping) os << "damping_rad_s = " << num(*m.drude_damping) << "\n";
        if (m.surface_density) os << "surface_density_per_m2 = " << num(*m.surface_density) << "\n";
        if (m.rayleigh_velocity)
            os << "rayleigh_velocity_m_s = " << num(*m.rayleigh_velocity) << "\n";
        os << "\n";
    }
    return os.str();
}

} // namespace proxheat
