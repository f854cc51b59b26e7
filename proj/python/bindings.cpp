#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "proxheat/constants.hpp"
#include "proxheat/em_noise.hpp"
#include "proxheat/materials.hpp"
#include "proxheat/phonons.hpp"
#include "proxheat/rates.hpp"
#include "proxheat/scenario.hpp"
#include "proxheat/trap.hpp"
#include "proxheat/units.hpp"

namespace py = pybind11;
using namespace proxheat;

namespace {

// 3x3 tensors cross the boundary as nested lists; no numpy dependency.
py::list mat3_to_list(const Mat3& m) {
    py::list rows;
    for (int i = 0; i < 3; ++i) {
        py::list row;
        for (int j = 0; j < 3; ++j) row.append(m(i, j));
        rows.append(row);
    }
    return rows;
}

Vec3 vec3_from_seq(const std::vector<double>& v) {
    if (v.size() != 3) throw py::value_error("axis must have 3 components");
    return Vec3{v[0], v[1], v[2]};
}

} // namespace

PYBIND11_MODULE(_proxheat, m) {
    m.doc() = "heating rates of harmonically trapped particles near thermal surfaces";

    auto consts = m.def_submodule("constants", "fundamental constants, SI (CODATA 2018)");
    consts.attr("hbar") = constants::hbar;
    consts.attr("kB") = constants::kB;
    consts.attr("eps0") = constants::eps0;
    consts.attr("mu0") = constants::mu0;
    consts.attr("c") = constants::c_light;
    consts.attr("e_charge") = constants::e_charge;
    consts.attr("amu") = constants::amu;
    consts.attr("bohr_magneton") = constants::bohr_magneton;

    m.def("convert", &convert, py::arg("value"), py::arg("from_unit"), py::arg("to_unit"),
          "convert between registered units (temperature<->energy bridges through kB)");
    m.def("thermal_energy", &thermal_energy, py::arg("temperature_K"), "kB*T in joules");

    py::enum_<SpinConvention>(m, "SpinConvention")
        .value("operator_spin_half", SpinConvention::operator_spin_half)
        .value("classical_isotropic", SpinConvention::classical_isotropic);

    py::class_<Material>(m, "Material")
        .def(py::init<>())
        .def_readwrite("name", &Material::name)
        .def_readwrite("resistivity", &Material::resistivity)
        .def_readwrite("drude_plasma_freq", &Material::drude_plasma_freq)
        .def_readwrite("drude_damping", &Material::drude_damping)
        .def_readwrite("debye_freq", &Material::debye_freq)
        .def_readwrite("surface_atom_mass", &Material::surface_atom_mass)
        .def_readwrite("eta", &Material::eta)
        .def_readwrite("surface_density", &Material::surface_density)
        .def_readwrite("rayleigh_velocity", &Material::rayleigh_velocity)
        .def("validate", &Material::validate)
        .def("__repr__",
             [](const Material& mt) { return "<Material '" + mt.name + "'>"; });

    py::class_<MaterialDb>(m, "MaterialDb")
        .def_static("builtin", &MaterialDb::builtin)
        .def("add", &MaterialDb::add)
        .def("get", &MaterialDb::get, py::return_value_policy::copy)
        .def("has", &MaterialDb::has)
        .def("names", &MaterialDb::names)
        .def("load_file", &MaterialDb::load_file)
        .def("serialize", &MaterialDb::serialize);

    m.def(
        "epsilon",
        [](const Material& mt, double omega) {
            const auto e = epsilon(mt, omega);
            return std::make_pair(e.real(), e.imag());
        },
        py::arg("material"), py::arg("omega"),
        "dielectric function at omega > 0, returned as (re, im)");
    m.def("im_reflection_quasistatic", &im_reflection_quasistatic, py::arg("material"),
          py::arg("omega"));

    py::class_<TrapConfig>(m, "TrapConfig")
        .def(py::init([](double omega_t, std::vector<double> axis, double distance,
                         double temperature) {
                 TrapConfig t;
                 t.omega_t = omega_t;
                 t.axis = vec3_from_seq(axis);
                 t.distance = distance;
                 t.temperature = temperature;
                 t.validate();
                 return t;
             }),
             py::arg("omega_t"), py::arg("axis") = std::vector<double>{0.0, 0.0, 1.0},
             py::arg("distance") = 1e-6, py::arg("temperature") = 300.0)
        .def_readwrite("omega_t", &TrapConfig::omega_t)
        .def_readwrite("distance", &TrapConfig::distance)
        .def_readwrite("temperature", &TrapConfig::temperature)
        .def_property(
            "axis",
            [](const TrapConfig& t) {
                return std::vector<double>{t.axis.x, t.axis.y, t.axis.z};
            },
            [](TrapConfig& t, const std::vector<double>& v) { t.axis = vec3_from_seq(v); });

    py::class_<Particle>(m, "Particle")
        .def(py::init([](double mass, double charge, double moment_expect, double c3) {
                 Particle p;
                 p.mass = mass;
                 p.charge = charge;
                 p.moment_expect = moment_expect;
                 p.c3 = c3;
                 p.validate();
                 return p;
             }),
             py::arg("mass"), py::arg("charge") = 0.0, py::arg("moment_expect") = 0.0,
             py::arg("c3") = 0.0)
        .def_readwrite("mass", &Particle::mass)
        .def_readwrite("charge", &Particle::charge)
        .def_readwrite("moment_expect", &Particle::moment_expect)
        .def_readwrite("c3", &Particle::c3);

    py::class_<SpinSpec>(m, "SpinSpec")
        .def(py::init([](double moment_magnitude, double spin, SpinConvention convention) {
                 SpinSpec s;
                 s.moment_magnitude = moment_magnitude;
                 s.spin = spin;
                 s.convention = convention;
                 return s;
             }),
             py::arg("moment_magnitude"), py::arg("spin") = 0.5,
             py::arg("convention") = SpinConvention::operator_spin_half)
        .def_readwrite("moment_magnitude", &SpinSpec::moment_magnitude)
        .def_readwrite("spin", &SpinSpec::spin)
        .def_readwrite("convention", &SpinSpec::convention);

    m.def("ground_state_size", &ground_state_size, py::arg("trap"), py::arg("particle"));
    m.def("moment_expectation", &moment_expectation, py::arg("spec"));

    m.def("thermal_factor", &thermal_factor, py::arg("omega"), py::arg("temperature"),
          "folded FDT occupation factor, J*s");
    m.def(
        "im_green_blackbody", [](double omega) { return mat3_to_list(im_green_blackbody(omega)); },
        py::arg("omega"));
    m.def(
        "im_green_surface",
        [](const Material& mt, double z, double omega) {
            const auto g = im_green_surface(mt, z, omega);
            return py::make_tuple(mat3_to_list(g.tensor), g.warnings);
        },
        py::arg("material"), py::arg("z"), py::arg("omega"),
        "returns (tensor, warnings)");

    py::class_<SpectralTensor>(m, "SpectralTensor")
        .def_property_readonly(
            "components", [](const SpectralTensor& s) { return mat3_to_list(s.components); })
        .def_property_readonly("units",
                               [](const SpectralTensor& s) { return units_of(s.kind); })
        .def_readonly("omega", &SpectralTensor::omega)
        .def_readonly("position_z", &SpectralTensor::position_z)
        .def_readonly("warnings", &SpectralTensor::warnings);

    m.def("electric_field_spectrum", &electric_field_spectrum, py::arg("material"), py::arg("z"),
          py::arg("omega"), py::arg("temperature"), py::arg("include_blackbody") = false);
    m.def("blackbody_field_spectrum", &blackbody_field_spectrum, py::arg("omega"),
          py::arg("temperature"));
    m.def("magnetic_field_correlation", &magnetic_field_correlation, py::arg("material"),
          py::arg("z1"), py::arg("z2"), py::arg("omega"), py::arg("temperature"));
    m.def("magnetic_force_kernel_zz", &magnetic_force_kernel_zz, py::arg("material"), py::arg("z"),
          py::arg("omega"), py::arg("temperature"));

    m.def("bessel_k2", &bessel_k2, py::arg("x"));
    m.def("coupling_g", &coupling_g, py::arg("Q"), py::arg("z"), py::arg("c3"));
    m.def("rayleigh_heating_rate", &rayleigh_heating_rate, py::arg("trap"), py::arg("particle"),
          py::arg("material"));

    py::enum_<Mechanism>(m, "Mechanism")
        .value("ion_surface", Mechanism::ion_surface)
        .value("ion_blackbody", Mechanism::ion_blackbody)
        .value("ion_endcap", Mechanism::ion_endcap)
        .value("spin_surface", Mechanism::spin_surface)
        .value("phonon_vdw", Mechanism::phonon_vdw);

    py::enum_<RateMethod>(m, "RateMethod")
        .value("closed_form", RateMethod::closed_form)
        .value("pipeline", RateMethod::pipeline);

    py::class_<EndcapCircuit>(m, "EndcapCircuit")
        .def(py::init([](double resistance, double distance) {
                 EndcapCircuit e{resistance, distance};
                 e.validate();
                 return e;
             }),
             py::arg("resistance"), py::arg("distance"))
        .def_readwrite("resistance", &EndcapCircuit::resistance)
        .def_readwrite("distance", &EndcapCircuit::distance);

    py::class_<RateResult>(m, "RateResult")
        .def_readonly("mechanism", &RateResult::mechanism)
        .def_readonly("rate", &RateResult::rate)
        .def_readonly("method", &RateResult::method)
        .def_readonly("inputs_echo", &RateResult::inputs_echo)
        .def_readonly("warnings", &RateResult::warnings)
        .def("__repr__", [](const RateResult& r) {
            std::ostringstream os;
            os << "<RateResult " << to_string(r.mechanism) << " " << r.rate << " 1/s ("
               << to_string(r.method) << ")>";
            return os.str();
        });

    m.def("golden_rule_rate", &golden_rule_rate, py::arg("trap"), py::arg("particle"),
          py::arg("force_spectrum"));
    m.def("ion_rate_closed", &ion_rate_closed, py::arg("trap"), py::arg("particle"),
          py::arg("material"));
    m.def("ion_rate_endcap", &ion_rate_endcap, py::arg("trap"), py::arg("particle"),
          py::arg("endcap"));
    m.def("zeeman_rate_closed", &zeeman_rate_closed, py::arg("trap"), py::arg("particle"),
          py::arg("material"));
    m.def("ion_rate_pipeline", &ion_rate_pipeline, py::arg("trap"), py::arg("particle"),
          py::arg("material"), py::arg("include_blackbody") = false);
    m.def("ion_rate_blackbody", &ion_rate_blackbody, py::arg("trap"), py::arg("particle"));
    m.def("zeeman_rate_pipeline", &zeeman_rate_pipeline, py::arg("trap"), py::arg("particle"),
          py::arg("material"));
    m.def("compute_all", &compute_all, py::arg("trap"), py::arg("particle"), py::arg("material"),
          py::arg("endcap") = std::nullopt);

    // scenario level: configs in, CSV/plots out
    m.def(
        "run_scenario_text",
        [](const std::string& config_text, const std::string& label) {
            MaterialDb db = MaterialDb::builtin();
            Scenario sc = load_scenario(parse_config_text(config_text, label), db);
            return csv_string(run_scenario(sc));
        },
        py::arg("config_text"), py::arg("label") = "<string>",
        "run a scenario config given as text; returns the CSV");
    m.def(
        "run_preset",
        [](const std::string& name) {
            MaterialDb db = MaterialDb::builtin();
            return csv_string(run_scenario(preset_scenario(name, db)));
        },
        py::arg("name"), "run a compiled-in preset; returns the CSV");
    m.def("preset_names", &preset_names);
    m.def("preset_text", &preset_text, py::arg("name"));

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<NoMechanismError>(m, "NoMechanismError");
}
