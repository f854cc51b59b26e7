#include "proxheat/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "proxheat/constants.hpp"
#include "proxheat/units.hpp"

namespace proxheat {

namespace c = constants;

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::distance: return "z";
        case SweepVariable::trap_frequency: return "omega_t";
        case SweepVariable::temperature: return "T";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (!(min < max)) throw std::invalid_argument("sweep: min must be < max");
    if (points < 2) throw std::invalid_argument("sweep: points must be >= 2");
    if (log_spacing && !(min > 0.0))
        throw std::invalid_argument("sweep: log spacing needs min > 0");
    if (variable != SweepVariable::temperature && !(min > 0.0))
        throw std::invalid_argument("sweep: min must be > 0 for this variable");
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> g(points);
    if (log_spacing) {
        const double la = std::log10(min), lb = std::log10(max);
        for (int i = 0; i < points; ++i)
            g[i] = std::pow(10.0, la + (lb - la) * i / (points - 1));
    } else {
        for (int i = 0; i < points; ++i) g[i] = min + (max - min) * i / (points - 1);
    }
    g.front() = min;
    g.back() = max;
    return g;
}

void Scenario::validate() const {
    if (materials.empty()) throw std::invalid_argument("scenario: needs at least one material");
    for (const auto& m : materials) m.validate();
    particle.validate();
    sweep.validate();
    if (sweep.variable != SweepVariable::distance) {
        if (!fixed_distance || !(*fixed_distance > 0.0))
            throw std::invalid_argument("scenario: distance must be set (> 0) unless swept");
    }
    if (sweep.variable != SweepVariable::trap_frequency && !(omega_t > 0.0))
        throw std::invalid_argument("scenario: omega_t must be > 0 unless swept");
    if (sweep.variable != SweepVariable::temperature && temperature < 0.0)
        throw std::invalid_argument("scenario: temperature must be >= 0 unless swept");
    if (endcap) endcap->validate();
    if (!channels_auto && channels.empty())
        throw std::invalid_argument("scenario: explicit channel list is empty");
}

namespace {

bool material_dependent(Mechanism m) {
    return m == Mechanism::ion_surface || m == Mechanism::spin_surface ||
           m == Mechanism::phonon_vdw;
}

bool applicable(Mechanism mech, const Scenario& sc, const Material& m) {
    switch (mech) {
        case Mechanism::ion_surface: return sc.particle.charge != 0.0;
        case Mechanism::ion_blackbody: return sc.particle.charge != 0.0;
        case Mechanism::ion_endcap: return sc.particle.charge != 0.0 && sc.endcap.has_value();
        case Mechanism::spin_surface: return sc.particle.moment_expect > 0.0;
        case Mechanism::phonon_vdw:
            return sc.particle.c3 > 0.0 && m.has_phonon_params();
    }
    return false;
}

constexpr Mechanism kMechanismOrder[] = {Mechanism::ion_surface, Mechanism::ion_blackbody,
                                         Mechanism::ion_endcap, Mechanism::spin_surface,
                                         Mechanism::phonon_vdw};

struct ColumnPlan {
    Mechanism mechanism;
    const Material* material; // nullptr for material-independent channels
    bool applies;
    std::string label;
};

std::vector<ColumnPlan> plan_columns(const Scenario& sc) {
    std::vector<Mechanism> wanted;
    if (sc.channels_auto) {
        for (Mechanism mech : kMechanismOrder) {
            bool any = false;
            for (const auto& m : sc.materials) any = any || applicable(mech, sc, m);
            if (any) wanted.push_back(mech);
        }
    } else {
        wanted = sc.channels;
    }

    std::vector<ColumnPlan> plan;
    for (Mechanism mech : kMechanismOrder) {
        if (std::find(wanted.begin(), wanted.end(), mech) == wanted.end()) continue;
        if (!material_dependent(mech)) {
            bool applies = applicable(mech, sc, sc.materials.front());
            plan.push_back({mech, nullptr, applies, to_string(mech)});
            continue;
        }
        // one column per material for which the channel makes sense; if it
        // qualifies for a single material the label stays unqualified
        std::vector<const Material*> mats;
        for (const auto& m : sc.materials)
            if (applicable(mech, sc, m)) mats.push_back(&m);
        if (mats.empty()) {
            // explicitly requested but nowhere applicable: keep an empty column
            plan.push_back({mech, nullptr, false, to_string(mech)});
            continue;
        }
        for (const Material* m : mats) {
            std::string label = to_string(mech);
            if (mats.size() > 1) label += ":" + m->name;
            plan.push_back({mech, m, true, label});
        }
    }
    return plan;
}

std::optional<RateResult> evaluate_cell(const ColumnPlan& col, const Scenario& sc,
                                        const TrapConfig& trap) {
    if (!col.applies) return std::nullopt;
    switch (col.mechanism) {
        case Mechanism::ion_surface:
            return ion_rate_pipeline(trap, sc.particle, *col.material, false);
        case Mechanism::ion_blackbody:
            return ion_rate_blackbody(trap, sc.particle);
        case Mechanism::ion_endcap: {
            RateResult r;
            r.mechanism = Mechanism::ion_endcap;
            r.method = RateMethod::closed_form;
            r.rate = ion_rate_endcap(trap, sc.particle, *sc.endcap);
            return r;
        }
        case Mechanism::spin_surface:
            return zeeman_rate_pipeline(trap, sc.particle, *col.material);
        case Mechanism::phonon_vdw:
            return phonon_rate_result(trap, sc.particle, *col.material);
    }
    return std::nullopt;
}

} // namespace

SweepTable run_scenario(const Scenario& sc) {
    sc.validate();
    const std::vector<ColumnPlan> plan = plan_columns(sc);
    if (std::none_of(plan.begin(), plan.end(), [](const ColumnPlan& p) { return p.applies; }))
        throw NoMechanismError(
            "no applicable heating mechanism for this scenario: check charge, magnetic moment, "
            "c3 and the material's phonon parameters");

    SweepTable table;
    switch (sc.sweep.variable) {
        case SweepVariable::distance: table.sweep_label = "z_m"; break;
        case SweepVariable::trap_frequency: table.sweep_label = "omega_t_rad_s"; break;
        case SweepVariable::temperature: table.sweep_label = "T_K"; break;
    }
    table.sweep_values = sc.sweep.grid();
    for (const auto& colplan : plan)
        table.columns.push_back(SweepColumn{
            colplan.label, colplan.mechanism,
            colplan.material ? colplan.material->name : std::string{}, {}});
    table.row_warnings.resize(table.sweep_values.size());

    TrapConfig trap;
    trap.axis = sc.axis;
    trap.omega_t = sc.omega_t;
    trap.temperature = sc.temperature;
    trap.distance = sc.fixed_distance.value_or(1.0);

    for (size_t row = 0; row < table.sweep_values.size(); ++row) {
        const double v = table.sweep_values[row];
        switch (sc.sweep.variable) {
            case SweepVariable::distance: trap.distance = v; break;
            case SweepVariable::trap_frequency: trap.omega_t = v; break;
            case SweepVariable::temperature: trap.temperature = v; break;
        }
        std::vector<std::string> row_warn;
        for (size_t ci = 0; ci < plan.size(); ++ci) {
            std::optional<RateResult> r = evaluate_cell(plan[ci], sc, trap);
            if (!r) {
                table.columns[ci].values.push_back(std::nullopt);
                continue;
            }
            table.columns[ci].values.push_back(r->rate);
            for (const auto& w : r->warnings)
                if (std::find(row_warn.begin(), row_warn.end(), w) == row_warn.end())
                    row_warn.push_back(w);
        }
        std::string joined;
        for (const auto& w : row_warn) joined += (joined.empty() ? "" : " | ") + w;
        table.row_warnings[row] = std::move(joined);
    }
    return table;
}

namespace {

Vec3 parse_axis(const std::string& text, const std::string& source, int line) {
    std::istringstream is(text);
    Vec3 n;
    if (!(is >> n.x >> n.y >> n.z))
        throw ConfigError(source + ":" + std::to_string(line) +
                          ": axis must be three numbers, got '" + text + "'");
    std::string extra;
    if (is >> extra)
        throw ConfigError(source + ":" + std::to_string(line) +
                          ": axis must be exactly three numbers");
    if (!(n.norm() > 0.0))
        throw ConfigError(source + ":" + std::to_string(line) + ": axis must be nonzero");
    return n.normalized();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(std::exchange(cur, {}));
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

Scenario load_scenario(const ParsedConfig& cfg, const MaterialDb& db) {
    Scenario sc;

    // top level: material name(s) or nothing when an inline [material] is given
    SectionReader top(cfg, cfg.sections.front());
    std::optional<std::string> mat_names = top.get_string("material");
    top.reject_unknown();

    if (const ConfigSection* inline_mat = cfg.find_section("material")) {
        sc.materials.push_back(material_from_section(cfg, *inline_mat));
        if (mat_names)
            throw ConfigError(cfg.source +
                              ": give either a top-level material name or an inline "
                              "[material] section, not both");
    } else {
        if (!mat_names)
            throw ConfigError(cfg.source + ": missing 'material = <name>' (or a [material] section)");
        for (const std::string& name : split_list(*mat_names)) sc.materials.push_back(db.get(name));
        if (sc.materials.empty())
            throw ConfigError(cfg.source + ": 'material' names no material");
    }

    // [particle]
    const ConfigSection* psec = cfg.find_section("particle");
    if (!psec) throw ConfigError(cfg.source + ": missing [particle] section");
    {
        SectionReader r(cfg, *psec);
        sc.particle.mass = r.require_number("mass_amu") * c::amu;
        if (auto q = r.get_number("charge_e")) sc.particle.charge = *q * c::e_charge;

        std::optional<double> mu;
        if (auto v = r.get_number("moment_bohr")) mu = *v * c::bohr_magneton;
        if (auto v = r.get_number("moment_mhz_per_gauss")) {
            if (mu)
                throw ConfigError(cfg.source +
                                  ": give moment_bohr or moment_mhz_per_gauss, not both");
            // μ/(2πħ) in MHz/G: μ = h · (v·1e6 Hz) / 1e-4 T
            mu = c::planck * (*v * 1e6) / 1e-4;
        }
        if (mu) {
            SpinSpec spin;
            spin.moment_magnitude = *mu;
            if (auto s = r.get_number("spin")) spin.spin = *s;
            if (auto conv = r.get_string("spin_convention")) {
                try {
                    spin.convention = spin_convention_from_string(*conv);
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(cfg.source + ": " + e.what());
                }
            }
            sc.spin = spin;
            try {
                sc.particle.moment_expect = moment_expectation(spin);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(cfg.source + ": " + e.what());
            }
        } else {
            if (r.get_number("spin") || r.get_string("spin_convention"))
                throw ConfigError(cfg.source +
                                  ": spin keys need a magnetic moment (moment_bohr or "
                                  "moment_mhz_per_gauss)");
        }

        std::optional<double> c3;
        if (auto v = r.get_number("c3_khz_um3")) c3 = c::planck * (*v * 1e3) * 1e-18;
        if (auto v = r.get_number("c3_j_m3")) {
            if (c3) throw ConfigError(cfg.source + ": give c3_khz_um3 or c3_j_m3, not both");
            c3 = *v;
        }
        if (c3) sc.particle.c3 = *c3;
        r.reject_unknown();
    }

    // [trap]
    const ConfigSection* tsec = cfg.find_section("trap");
    if (!tsec) throw ConfigError(cfg.source + ": missing [trap] section");
    {
        SectionReader r(cfg, *tsec);
        if (auto f = r.get_number("omega_t_hz")) sc.omega_t = 2.0 * c::pi * *f;
        if (auto ax = r.get_string("axis"))
            sc.axis = parse_axis(*ax, cfg.source, tsec->find("axis")->line);
        if (auto t = r.get_number("temperature_k")) sc.temperature = *t;
        if (auto z = r.get_number("distance_um")) sc.fixed_distance = *z * 1e-6;
        r.reject_unknown();
    }

    // [sweep]
    const ConfigSection* ssec = cfg.find_section("sweep");
    if (!ssec) throw ConfigError(cfg.source + ": missing [sweep] section");
    {
        SectionReader r(cfg, *ssec);
        const std::string var = r.require_string("variable");
        if (var == "z") {
            sc.sweep.variable = SweepVariable::distance;
            sc.sweep.min = r.require_number("min_um") * 1e-6;
            sc.sweep.max = r.require_number("max_um") * 1e-6;
        } else if (var == "omega_t") {
            sc.sweep.variable = SweepVariable::trap_frequency;
            sc.sweep.min = 2.0 * c::pi * r.require_number("min_hz");
            sc.sweep.max = 2.0 * c::pi * r.require_number("max_hz");
        } else if (var == "T") {
            sc.sweep.variable = SweepVariable::temperature;
            sc.sweep.min = r.require_number("min_k");
            sc.sweep.max = r.require_number("max_k");
        } else {
            throw ConfigError(cfg.source + ":" + std::to_string(ssec->line) +
                              ": sweep variable must be z, omega_t or T (got '" + var + "')");
        }
        if (sc.sweep.variable == SweepVariable::distance && sc.fixed_distance)
            throw ConfigError(cfg.source + ":" + std::to_string(ssec->line) +
                              ": distance_um conflicts with sweeping z");
        if (sc.sweep.variable == SweepVariable::trap_frequency && sc.omega_t > 0.0)
            throw ConfigError(cfg.source + ":" + std::to_string(ssec->line) +
                              ": omega_t_hz conflicts with sweeping omega_t");
        sc.sweep.points = static_cast<int>(r.require_number("points"));
        if (auto sp = r.get_string("spacing")) {
            if (*sp == "log")
                sc.sweep.log_spacing = true;
            else if (*sp == "linear")
                sc.sweep.log_spacing = false;
            else
                throw ConfigError(cfg.source + ": spacing must be 'log' or 'linear'");
        }
        r.reject_unknown();
    }

    // [endcap] (optional)
    if (const ConfigSection* esec = cfg.find_section("endcap")) {
        SectionReader r(cfg, *esec);
        EndcapCircuit ec;
        ec.resistance = r.require_number("resistance_ohm");
        ec.distance = r.require_number("distance_mm") * 1e-3;
        r.reject_unknown();
        sc.endcap = ec;
    }

    // [channels] (optional; default auto)
    if (const ConfigSection* csec = cfg.find_section("channels")) {
        SectionReader r(cfg, *csec);
        const std::string sel = r.require_string("select");
        r.reject_unknown();
        if (sel != "auto") {
            sc.channels_auto = false;
            for (const std::string& name : split_list(sel)) {
                try {
                    sc.channels.push_back(mechanism_from_string(name));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(cfg.source + ": " + e.what());
                }
            }
        }
    }

    try {
        sc.validate();
    } catch (const std::exception& e) {
        throw ConfigError(cfg.source + ": " + e.what());
    }

    // Fail early, with the physics explanation, if the spin channel would be
    // asked for a tilted trap axis.
    const bool spin_wanted =
        sc.particle.moment_expect > 0.0 &&
        (sc.channels_auto || std::find(sc.channels.begin(), sc.channels.end(),
                                       Mechanism::spin_surface) != sc.channels.end());
    if (spin_wanted && (std::abs(sc.axis.x) > 1e-9 || std::abs(sc.axis.y) > 1e-9))
        throw ConfigError(cfg.source +
                          ": the spin channel is implemented for a trap axis perpendicular to "
                          "the surface (axis = 0 0 1) only");

    return sc;
}

Scenario load_scenario_file(const std::string& path, const MaterialDb& db) {
    return load_scenario(parse_config_file(path), db);
}

} // namespace proxheat
