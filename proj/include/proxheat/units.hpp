#pragma once

#include <array>
#include <string>

// Dimension-tagged quantities and unit conversion. A Dimension is an integer
// exponent vector over the SI base dimensions (kg, m, s, A, K); a Quantity is
// a value plus its dimension. Only the handful of units this project needs
// are registered, not a general units framework.

namespace proxheat {

struct Dimension {
    // exponents over (kg, m, s, A, K)
    std::array<int, 5> exp{0, 0, 0, 0, 0};

    constexpr bool operator==(const Dimension&) const = default;

    Dimension operator*(const Dimension& o) const;
    Dimension operator/(const Dimension& o) const;

    std::string str() const;
};

namespace dims {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension mass{{1, 0, 0, 0, 0}};
inline constexpr Dimension length{{0, 1, 0, 0, 0}};
inline constexpr Dimension time{{0, 0, 1, 0, 0}};
inline constexpr Dimension current{{0, 0, 0, 1, 0}};
inline constexpr Dimension temperature{{0, 0, 0, 0, 1}};
inline constexpr Dimension frequency{{0, 0, -1, 0, 0}};
inline constexpr Dimension energy{{1, 2, -2, 0, 0}};
inline constexpr Dimension resistivity{{1, 3, -3, -2, 0}};   // Ω·m
inline constexpr Dimension magnetic_field{{1, 0, -2, -1, 0}}; // T
} // namespace dims

struct Quantity {
    double value = 0.0;
    Dimension dim;

    Quantity operator+(const Quantity& o) const; // throws on dimension mismatch
    Quantity operator-(const Quantity& o) const;
    Quantity operator*(const Quantity& o) const;
    Quantity operator/(const Quantity& o) const;
    bool operator<(const Quantity& o) const;     // throws on dimension mismatch
};

/// Convert `value` between two registered units sharing a dimension.
/// Temperature and energy interconvert through kB (the Kelvin-energy bridge
/// used throughout for Debye temperatures and the like); any other dimension
/// mismatch is an error naming both dimensions.
double convert(double value, const std::string& from_unit, const std::string& to_unit);

/// True if `unit` is a registered unit tag.
bool unit_known(const std::string& unit);

/// Registered unit tags, in registration order.
std::array<const char*, 19> registered_units();

/// kB·T in joules; rejects negative temperatures.
double thermal_energy(double temperature_K);

} // namespace proxheat
