// proxheat — heating rates of trapped particles near room-temperature
// surfaces. Runs a scenario (preset or config file), sweeps one variable and
// writes CSV plus optional log-log plots.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "proxheat/scenario.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitNoMechanism = 3;

void write_plot(const proxheat::SweepTable& table, const std::string& dest, bool quiet) {
    if (dest == "ascii" || dest == "-") {
        proxheat::emit_plot_ascii(table, std::cout);
        return;
    }
    const bool svg = dest.size() >= 4 && dest.substr(dest.size() - 4) == ".svg";
    std::ofstream out(dest);
    if (!out) throw proxheat::IoError("cannot open plot file '" + dest + "' for writing");
    if (svg)
        proxheat::emit_plot_svg(table, out);
    else
        proxheat::emit_plot_ascii(table, out);
    if (!out.good()) throw proxheat::IoError("failed writing plot file '" + dest + "'");
    if (!quiet) std::cerr << "wrote plot to " << dest << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heating rates of trapped particles near thermal surfaces"};
    app.footer("presets: fig2-ion-ag, fig3-spin-phonon\n"
               "extra materials: set PROXHEAT_MATERIALS to a material database file");

    std::string preset, config_path, out_path, plot_path;
    std::string format = "csv";
    bool quiet = false;
    bool list_presets = false;

    auto* preset_opt = app.add_option("--preset", preset, "run a compiled-in scenario preset");
    auto* config_opt = app.add_option("--config", config_path, "run a scenario config file");
    preset_opt->excludes(config_opt);
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--plot", plot_path,
                   "plot output: <path>.svg, <path>.txt (ascii) or 'ascii' for stdout");
    app.add_option("--format", format, "table output format (csv)");
    app.add_flag("--quiet", quiet, "suppress progress notes on stderr");
    app.add_flag("--list-presets", list_presets, "list available presets and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_presets) {
            for (const auto& name : proxheat::preset_names()) std::cout << name << "\n";
            return 0;
        }
        if (format != "csv")
            throw proxheat::ConfigError("unsupported --format '" + format + "' (only csv)");
        if (preset.empty() == config_path.empty())
            throw proxheat::ConfigError("give exactly one of --preset or --config");

        proxheat::MaterialDb db = proxheat::MaterialDb::builtin();
        if (const char* extra = std::getenv("PROXHEAT_MATERIALS")) db.load_file(extra);

        proxheat::Scenario scenario = preset.empty()
                                          ? proxheat::load_scenario_file(config_path, db)
                                          : proxheat::preset_scenario(preset, db);
        proxheat::SweepTable table = proxheat::run_scenario(scenario);

        if (out_path.empty()) {
            proxheat::emit_csv(table, std::cout);
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw proxheat::IoError("cannot open '" + out_path + "' for writing");
            proxheat::emit_csv(table, out);
            if (!out.good()) throw proxheat::IoError("failed writing '" + out_path + "'");
            if (!quiet)
                std::cerr << "wrote " << table.sweep_values.size() << " rows x "
                          << table.columns.size() << " channels to " << out_path << "\n";
        }
        if (!plot_path.empty()) write_plot(table, plot_path, quiet);
        return 0;
    } catch (const proxheat::IoError& e) {
        std::cerr << "error[io]: " << e.what() << "\n";
        return kExitIo;
    } catch (const proxheat::NoMechanismError& e) {
        std::cerr << "error[no-mechanism]: " << e.what() << "\n";
        return kExitNoMechanism;
    } catch (const proxheat::ConfigError& e) {
        std::cerr << "error[config]: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error[config]: " << e.what() << "\n";
        return kExitConfig;
    }
}
