#include "proxheat/units.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "proxheat/constants.hpp"

namespace proxheat {

Dimension Dimension::operator*(const Dimension& o) const {
    Dimension r;
    for (int i = 0; i < 5; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
}

Dimension Dimension::operator/(const Dimension& o) const {
    Dimension r;
    for (int i = 0; i < 5; ++i) r.exp[i] = exp[i] - o.exp[i];
    return r;
}

std::string Dimension::str() const {
    static const char* names[5] = {"kg", "m", "s", "A", "K"};
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 5; ++i) {
        if (exp[i] == 0) continue;
        if (any) os << "·";
        os << names[i];
        if (exp[i] != 1) os << "^" << exp[i];
        any = true;
    }
    return any ? os.str() : "1";
}

namespace {

void require_same_dim(const Dimension& a, const Dimension& b, const char* what) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string("dimension mismatch in ") + what +
                                    ": [" + a.str() + "] vs [" + b.str() + "]");
    }
}

} // namespace

Quantity Quantity::operator+(const Quantity& o) const {
    require_same_dim(dim, o.dim, "addition");
    return {value + o.value, dim};
}

Quantity Quantity::operator-(const Quantity& o) const {
    require_same_dim(dim, o.dim, "subtraction");
    return {value - o.value, dim};
}

Quantity Quantity::operator*(const Quantity& o) const {
    return {value * o.value, dim * o.dim};
}

Quantity Quantity::operator/(const Quantity& o) const {
    return {value / o.value, dim / o.dim};
}

bool Quantity::operator<(const Quantity& o) const {
    require_same_dim(dim, o.dim, "comparison");
    return value < o.value;
}

namespace {

struct UnitDef {
    Dimension dim;
    double to_si; // multiplicative factor to the SI-coherent unit
};

const std::unordered_map<std::string, UnitDef>& unit_table() {
    using namespace dims;
    static const std::unordered_map<std::string, UnitDef> table = {
        {"ohm_m", {resistivity, 1.0}},
        {"ohm_cm", {resistivity, 1e-2}},
        {"kg", {mass, 1.0}},
        {"amu", {mass, constants::amu}},
        {"K", {temperature, 1.0}},
        {"J", {energy, 1.0}},
        {"Hz", {frequency, 1.0}},
        {"kHz", {frequency, 1e3}},
        {"MHz", {frequency, 1e6}},
        {"GHz", {frequency, 1e9}},
        {"m", {length, 1.0}},
        {"cm", {length, 1e-2}},
        {"mm", {length, 1e-3}},
        {"um", {length, 1e-6}},
        {"nm", {length, 1e-9}},
        {"T", {magnetic_field, 1.0}},
        {"G", {magnetic_field, 1e-4}},
        {"s", {time, 1.0}},
        {"ms", {time, 1e-3}},
    };
    return table;
}

const UnitDef& lookup_unit(const std::string& unit) {
    const auto& table = unit_table();
    auto it = table.find(unit);
    if (it == table.end()) throw std::invalid_argument("unknown unit tag '" + unit + "'");
    return it->second;
}

} // namespace

bool unit_known(const std::string& unit) { return unit_table().count(unit) != 0; }

std::array<const char*, 19> registered_units() {
    return {"ohm_m", "ohm_cm", "kg", "amu", "K",  "J",  "Hz", "kHz", "MHz", "GHz",
            "m",     "cm",     "mm", "um",  "nm", "T",  "G",  "s",   "ms"};
}

double convert(double value, const std::string& from_unit, const std::string& to_unit) {
    const UnitDef& from = lookup_unit(from_unit);
    const UnitDef& to = lookup_unit(to_unit);
    if (from.dim == to.dim) return value * from.to_si / to.to_si;
    // Kelvin-energy bridge: T [K] <-> kB·T [J]
    if (from.dim == dims::temperature && to.dim == dims::energy)
        return value * from.to_si * constants::kB / to.to_si;
    if (from.dim == dims::energy && to.dim == dims::temperature)
        return value * from.to_si / constants::kB / to.to_si;
    throw std::invalid_argument("dimension mismatch converting '" + from_unit + "' [" +
                                from.dim.str() + "] to '" + to_unit + "' [" + to.dim.str() + "]");
}

double thermal_energy(double temperature_K) {
    if (temperature_K < 0.0)
        throw std::invalid_argument("thermal_energy: negative temperature " +
                                    std::to_string(temperature_K) + " K");
    return constants::kB * temperature_K;
}

} // namespace proxheat
