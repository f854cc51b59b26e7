#include "proxheat/em_noise.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "proxheat/constants.hpp"

namespace proxheat {

namespace c = constants;

const char* units_of(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::electric_field: return "V^2*s/m^2";
        case SpectrumKind::magnetic_field: return "T^2*s";
        case SpectrumKind::force: return "N^2*s";
    }
    return "?";
}

void SpectralTensor::validate() const {
    if (!components.is_symmetric())
        throw std::invalid_argument("spectral tensor must be symmetric");
    for (int i = 0; i < 3; ++i)
        if (components(i, i) < 0.0)
            throw std::invalid_argument("spectral tensor diagonal must be >= 0");
}

double thermal_factor(double omega, double temperature) {
    if (temperature < 0.0)
        throw std::invalid_argument("thermal_factor: temperature must be >= 0");
    if (omega == 0.0)
        throw std::invalid_argument("thermal_factor: omega must be nonzero");
    if (temperature == 0.0) return omega > 0.0 ? 2.0 * c::hbar : 0.0;
    const double x = c::hbar * std::abs(omega) / (c::kB * temperature);
    if (omega > 0.0) {
        // 2ħ(n̄+1) = 2ħ/(1 − e^{−x})
        return 2.0 * c::hbar / (-std::expm1(-x));
    }
    // 2ħ n̄ = 2ħ/(e^{x} − 1); underflows to 0 for ħ|ω| ≫ kBT as it should
    return 2.0 * c::hbar / std::expm1(x);
}

Mat3 im_green_blackbody(double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("im_green_blackbody: omega must be > 0");
    const double g = omega * omega * omega / (6.0 * c::pi * c::eps0 * c::c_light * c::c_light * c::c_light);
    return Mat3::diagonal(g, g, g);
}

SurfaceGreen im_green_surface(const Material& m, double z, double omega) {
    if (!(z > 0.0)) throw std::invalid_argument("im_green_surface: z must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("im_green_surface: omega must be > 0");
    SurfaceGreen out;
    const double imr = im_reflection_quasistatic(m, omega);
    const double scale = imr / (16.0 * c::pi * c::eps0 * z * z * z);
    out.tensor = Mat3::diagonal(surface_s_xx * scale, surface_s_xx * scale, surface_s_zz * scale);
    const double retardation = omega * z / c::c_light;
    if (retardation >= 0.01) {
        std::ostringstream os;
        os << "quasi-static: omega*z/c = " << retardation
           << " is not small; the electrostatic image approximation degrades";
        out.warnings.push_back(os.str());
    }
    for (auto& w : dielectric_warnings(m, omega)) out.warnings.push_back(std::move(w));
    return out;
}

SpectralTensor electric_field_spectrum(const Material& m, double z, double omega,
                                       double temperature, bool include_blackbody) {
    const double w = std::abs(omega);
    SurfaceGreen surf = im_green_surface(m, z, w);
    Mat3 im_g = surf.tensor;
    if (include_blackbody) im_g = im_g + im_green_blackbody(w);
    SpectralTensor s;
    s.components = im_g.scaled(thermal_factor(omega, temperature));
    s.kind = SpectrumKind::electric_field;
    s.omega = omega;
    s.position_z = z;
    s.warnings = std::move(surf.warnings);
    return s;
}

SpectralTensor blackbody_field_spectrum(double omega, double temperature) {
    SpectralTensor s;
    s.components = im_green_blackbody(std::abs(omega)).scaled(thermal_factor(omega, temperature));
    s.kind = SpectrumKind::electric_field;
    s.omega = omega;
    s.position_z = 0.0;
    return s;
}

namespace {

// Common prefactor of the magnetic correlation tensor and its gradient
// kernel: μ₀²ω²ε₀ Im ε(|ω|) × (folded FDT factor)/2. The /2 absorbs the ħ
// already present in thermal_factor.
double magnetic_prefactor(const Material& m, double omega, double temperature) {
    const double w = std::abs(omega);
    const double im_eps = epsilon(m, w).imag();
    return 0.5 * thermal_factor(omega, temperature) * c::mu0 * c::mu0 * w * w * c::eps0 * im_eps;
}

} // namespace

SpectralTensor magnetic_field_correlation(const Material& m, double z1, double z2,
                                          double omega, double temperature) {
    if (!(z1 > 0.0) || !(z2 > 0.0))
        throw std::invalid_argument("magnetic_field_correlation: z1, z2 must be > 0");
    const double pref = magnetic_prefactor(m, omega, temperature);
    const double geom = 1.0 / (8.0 * c::pi * (z1 + z2));
    SpectralTensor s;
    s.components = Mat3::diagonal(magnetic_t_xx * pref * geom, magnetic_t_xx * pref * geom,
                                  magnetic_t_zz * pref * geom);
    s.kind = SpectrumKind::magnetic_field;
    s.omega = omega;
    s.position_z = 0.5 * (z1 + z2);
    s.warnings = dielectric_warnings(m, std::abs(omega));
    return s;
}

double magnetic_force_kernel_zz(const Material& m, double z, double omega,
                                double temperature) {
    if (!(z > 0.0)) throw std::invalid_argument("magnetic_force_kernel_zz: z must be > 0");
    // ∂_z ∂_z' (8π(z+z'))⁻¹ at z'=z equals (32πz³)⁻¹
    return magnetic_prefactor(m, omega, temperature) / (32.0 * c::pi * z * z * z);
}

} // namespace proxheat
