#include <map>
#include <stdexcept>

#include "proxheat/scenario.hpp"

namespace proxheat {

namespace {

// Trapped ion above a room-temperature silver surface: surface proximity
// field vs blackbody vs endcap-circuit baselines over distance.
const std::string kFig2IonAg = R"(# preset: fig2-ion-ag
material = Ag

[particle]
mass_amu = 40
charge_e = 1

[trap]
omega_t_hz = 1e6
axis = 0 0 1
temperature_k = 300

[sweep]
variable = z
min_um = 0.3
max_um = 1000
points = 200
spacing = log

[endcap]
resistance_ohm = 1
distance_mm = 1
)";

// Neutral spin-1/2 atom: magnetic proximity-field heating above silver and
// glass, plus the Rayleigh-phonon van-der-Waals channel (silver only).
const std::string kFig3SpinPhonon = R"(# preset: fig3-spin-phonon
material = Ag, glass

[particle]
mass_amu = 40
moment_bohr = 1
spin = 0.5
spin_convention = operator_spin_half
c3_khz_um3 = 1

[trap]
omega_t_hz = 1e5
axis = 0 0 1
temperature_k = 300

[sweep]
variable = z
min_um = 0.03
max_um = 30
points = 200
spacing = log
)";

const std::map<std::string, const std::string*>& preset_map() {
    static const std::map<std::string, const std::string*> presets = {
        {"fig2-ion-ag", &kFig2IonAg},
        {"fig3-spin-phonon", &kFig3SpinPhonon},
    };
    return presets;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : preset_map()) out.push_back(name);
    return out;
}

const std::string& preset_text(const std::string& name) {
    const auto& presets = preset_map();
    auto it = presets.find(name);
    if (it == presets.end()) {
        std::string known;
        for (const auto& [n, t] : presets) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("unknown preset '" + name + "' (available: " + known + ")");
    }
    return *it->second;
}

Scenario preset_scenario(const std::string& name, const MaterialDb& db) {
    return load_scenario(parse_config_text(preset_text(name), "preset:" + name), db);
}

} // namespace proxheat
