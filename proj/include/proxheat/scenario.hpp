#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "proxheat/config.hpp"
#include "proxheat/materials.hpp"
#include "proxheat/rates.hpp"
#include "proxheat/trap.hpp"

// Scenario runner behind the CLI: parse a scenario config, sweep one
// variable (distance, trap frequency or temperature), evaluate every
// applicable heating channel per grid point, and emit CSV or log-log plots.

namespace proxheat {

enum class SweepVariable { distance, trap_frequency, temperature };

const char* to_string(SweepVariable v);

struct SweepSpec {
    SweepVariable variable = SweepVariable::distance;
    double min = 0.0; // SI units of the variable
    double max = 0.0;
    int points = 2;
    bool log_spacing = true;

    void validate() const;
    std::vector<double> grid() const;
};

struct Scenario {
    std::vector<Material> materials; // at least one
    Particle particle;
    std::optional<SpinSpec> spin; // recorded for the echo; already folded into particle
    double omega_t = 0.0;         // rad/s (ignored while sweeping trap_frequency)
    Vec3 axis = axis_z;
    double temperature = 0.0;     // K (ignored while sweeping temperature)
    std::optional<double> fixed_distance; // m, required unless sweeping distance
    SweepSpec sweep;
    bool channels_auto = true;
    std::vector<Mechanism> channels; // explicit selection when !channels_auto
    std::optional<EndcapCircuit> endcap;

    void validate() const;
};

struct SweepColumn {
    std::string label; // CSV header cell, e.g. "spin_surface:Ag"
    Mechanism mechanism = Mechanism::ion_surface;
    std::string material_name; // empty for material-independent channels
    std::vector<std::optional<double>> values;
};

struct SweepTable {
    std::string sweep_label; // "z_m", "omega_t_rad_s" or "T_K"
    std::vector<double> sweep_values;
    std::vector<SweepColumn> columns;
    std::vector<std::string> row_warnings; // deduplicated, " | "-joined per row
};

/// Evaluate the scenario over its sweep grid. Deterministic: the same
/// scenario yields the same table (and byte-identical CSV).
SweepTable run_scenario(const Scenario& scenario);

/// Build a Scenario from a parsed config, resolving material names in `db`.
Scenario load_scenario(const ParsedConfig& cfg, const MaterialDb& db);
Scenario load_scenario_file(const std::string& path, const MaterialDb& db);

/// Compiled-in figure presets.
std::vector<std::string> preset_names();
const std::string& preset_text(const std::string& name);
Scenario preset_scenario(const std::string& name, const MaterialDb& db);

// --- sweep table I/O -------------------------------------------------------

/// CSV with one `#` unit-comment line, a header row
/// `<sweep_label>,<column...>,warnings`, and values printed as %.8e
/// (9 significant digits). Empty cells mark inapplicable channels.
void emit_csv(const SweepTable& table, std::ostream& out);
std::string csv_string(const SweepTable& table);

/// Parse emit_csv output back into a table (round-trip check and tooling).
SweepTable parse_csv(std::istream& in);
SweepTable parse_csv_string(const std::string& text);

/// Self-contained log-log SVG plot: one polyline per series, decade ticks,
/// legend. Series without positive finite values are skipped with a notice
/// on stderr. Requires at least two sweep points.
void emit_plot_svg(const SweepTable& table, std::ostream& out);

/// 80-column ASCII rendering of the same log-log plot.
void emit_plot_ascii(const SweepTable& table, std::ostream& out, int width = 80,
                     int height = 24);

} // namespace proxheat
