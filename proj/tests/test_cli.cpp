#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed binary end to end: output determinism, exit codes,
// env-var material loading. The binary path is baked in by CMake.

#ifndef PROXHEAT_BIN_PATH
#error "PROXHEAT_BIN_PATH must be defined by the build"
#endif

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("proxheat_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string binary() { return std::string("\"") + PROXHEAT_BIN_PATH + "\""; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

const char* kIonScenario = R"(
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
min_um = 1
max_um = 100
points = 10
spacing = log
)";

} // namespace

TEST_CASE("preset runs are byte-identical across invocations") {
    TempDir tmp;
    const fs::path a = tmp.path / "a.csv";
    const fs::path b = tmp.path / "b.csv";
    CHECK(run(binary() + " --preset fig2-ion-ag --out " + a.string() + " --quiet") == 0);
    CHECK(run(binary() + " --preset fig2-ion-ag --out " + b.string() + " --quiet") == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text.find("z_m,ion_surface,ion_blackbody,ion_endcap,warnings") != std::string::npos);

    CHECK(run(binary() + " --preset fig3-spin-phonon --out " + (tmp.path / "c.csv").string() +
              " --quiet") == 0);
    CHECK(slurp(tmp.path / "c.csv")
              .find("z_m,spin_surface:Ag,spin_surface:glass,phonon_vdw,warnings") !=
          std::string::npos);
}

TEST_CASE("config files run and plots are produced") {
    TempDir tmp;
    spit(tmp.path / "ion.cfg", kIonScenario);
    const fs::path csv = tmp.path / "ion.csv";
    const fs::path svg = tmp.path / "ion.svg";
    const fs::path txt = tmp.path / "ion.txt";
    CHECK(run(binary() + " --config " + (tmp.path / "ion.cfg").string() + " --out " +
              csv.string() + " --plot " + svg.string() + " --quiet") == 0);
    CHECK(slurp(svg).find("<svg") == 0);
    CHECK(run(binary() + " --config " + (tmp.path / "ion.cfg").string() + " --out " +
              csv.string() + " --plot " + txt.string() + " --quiet") == 0);
    CHECK(slurp(txt).find("heating rate [1/s]") != std::string::npos);

    // '--plot ascii' renders to stdout
    const fs::path combined = tmp.path / "stdout.txt";
    CHECK(run(binary() + " --config " + (tmp.path / "ion.cfg").string() + " --out " +
              csv.string() + " --plot ascii --quiet > " + combined.string()) == 0);
    CHECK(slurp(combined).find("heating rate [1/s]") != std::string::npos);
}

TEST_CASE("exit codes: 1 config, 2 io, 3 no mechanism") {
    TempDir tmp;
    // 1: config-level problems
    CHECK(run(binary() + " --preset no-such-preset 2>/dev/null") == 1);
    CHECK(run(binary() + " 2>/dev/null") == 1); // neither --preset nor --config
    CHECK(run(binary() + " --preset fig2-ion-ag --format yaml 2>/dev/null") == 1);
    spit(tmp.path / "broken.cfg", "material = Ag\nnot a key value line\n");
    CHECK(run(binary() + " --config " + (tmp.path / "broken.cfg").string() + " 2>/dev/null") ==
          1);

    // 2: unwritable output path
    CHECK(run(binary() + " --preset fig2-ion-ag --out /nonexistent-dir/x.csv 2>/dev/null") == 2);

    // 3: no applicable mechanism
    spit(tmp.path / "inert.cfg", R"(
material = glass

[particle]
mass_amu = 40

[trap]
omega_t_hz = 1e6
axis = 0 0 1
temperature_k = 300

[sweep]
variable = z
min_um = 1
max_um = 10
points = 2
)");
    CHECK(run(binary() + " --config " + (tmp.path / "inert.cfg").string() + " 2>/dev/null") == 3);

    // error category markers are machine readable
    CHECK(run(binary() + " --preset nope 2> " + (tmp.path / "err.txt").string()) == 1);
    CHECK(slurp(tmp.path / "err.txt").find("error[config]:") == 0);
}

TEST_CASE("PROXHEAT_MATERIALS merges an extra database") {
    TempDir tmp;
    spit(tmp.path / "extra.cfg", R"(
[material]
name = customodium
resistivity_ohm_cm = 5e-6
)");
    std::string scenario(kIonScenario);
    scenario.replace(scenario.find("material = Ag"), 13, "material = customodium");
    spit(tmp.path / "custom.cfg", scenario);
    const std::string env = "PROXHEAT_MATERIALS=" + (tmp.path / "extra.cfg").string() + " ";
    CHECK(run(env + binary() + " --config " + (tmp.path / "custom.cfg").string() + " --out " +
              (tmp.path / "custom.csv").string() + " --quiet") == 0);
    CHECK(slurp(tmp.path / "custom.csv").find("ion_surface") != std::string::npos);
    // unknown name without the env var still fails as a config error
    CHECK(run(binary() + " --config " + (tmp.path / "custom.cfg").string() + " 2>/dev/null") ==
          1);
}

TEST_CASE("list-presets") {
    TempDir tmp;
    CHECK(run(binary() + " --list-presets > " + (tmp.path / "presets.txt").string()) == 0);
    const std::string text = slurp(tmp.path / "presets.txt");
    CHECK(text.find("fig2-ion-ag") != std::string::npos);
    CHECK(text.find("fig3-spin-phonon") != std::string::npos);
}
