#pragma once

#include <string>
#include <vector>

#include "proxheat/materials.hpp"
#include "proxheat/tensor.hpp"

// Electromagnetic fluctuation spectra above an absorbing half-space: the
// thermal occupation factor, the blackbody and quasi-static surface Green
// tensors, and the electric/magnetic field cross-correlation spectral
// densities they combine into.
//
// Sign convention: spectra take a signed frequency. Heating evaluates them at
// −ω_t; the implementation folds the odd Green tensor and the signed
// Bose-Einstein factor into one non-negative spectrum, so S(−ω) carries the
// absorption weight 2ħ n̄(ω) and S(+ω) the emission weight 2ħ(n̄(ω)+1).

namespace proxheat {

enum class SpectrumKind {
    electric_field, // V²·s/m²
    magnetic_field, // T²·s
    force           // N²·s
};

const char* units_of(SpectrumKind kind);

struct SpectralTensor {
    Mat3 components;
    SpectrumKind kind = SpectrumKind::force;
    double omega = 0.0;      // signed evaluation frequency, rad/s
    double position_z = 0.0; // m (0 for position-independent spectra)
    std::vector<std::string> warnings;

    void validate() const; // symmetric with non-negative diagonal
};

/// Folded FDT occupation factor in J·s: 2ħ/(1−e^{−ħω/kBT}) for ω > 0,
/// 2ħ n̄(|ω|) for ω < 0. At T = 0 this is 2ħ (ω > 0) or 0 (ω < 0).
double thermal_factor(double omega, double temperature);

/// Free-space term Im G_ij = ω³/(6πε₀c³) δ_ij, for ω > 0. Units 1/(F·m²).
Mat3 im_green_blackbody(double omega);

struct SurfaceGreen {
    Mat3 tensor; // 1/(F·m²)
    std::vector<std::string> warnings;
};

/// Quasi-static surface term Im G_ij = s_ij/(16πε₀z³)·Im[(ε−1)/(ε+1)] with
/// s = diag(1/2, 1/2, 1), for ω > 0. A warning is attached when ωz/c ≥ 0.01.
SurfaceGreen im_green_surface(const Material& m, double z, double omega);

/// Electric-field fluctuation spectrum at the trap position, V²·s/m².
SpectralTensor electric_field_spectrum(const Material& m, double z, double omega,
                                       double temperature, bool include_blackbody);

/// Blackbody-only electric-field spectrum (isotropic, z-independent).
SpectralTensor blackbody_field_spectrum(double omega, double temperature);

/// Magnetic-field cross-correlation tensor at heights z1, z2, T²·s:
/// prefactor(ω,T)·t_ij/(8π(z1+z2)) with t = diag(3/2, 3/2, 1).
SpectralTensor magnetic_field_correlation(const Material& m, double z1, double z2,
                                          double omega, double temperature);

/// Scalar kernel K(z,ω) of the z-force spectrum for a moment above the
/// surface: S_F^zz = Σ_ij μ_i μ_j t_ij · K, with
/// K = ∂_z∂_z' [prefactor/(8π(z+z'))]|_{z'=z} = prefactor/(32πz³).
/// Units T²·s/m² (magnetic-field-gradient correlation per unit μ²).
double magnetic_force_kernel_zz(const Material& m, double z, double omega,
                                double temperature);

/// Anisotropy constants of the quasi-static electric Green tensor (xx=yy, zz).
inline constexpr double surface_s_xx = 0.5;
inline constexpr double surface_s_zz = 1.0;

/// Anisotropy constants of the magnetic correlation tensor (xx=yy, zz).
inline constexpr double magnetic_t_xx = 1.5;
inline constexpr double magnetic_t_zz = 1.0;

} // namespace proxheat
