#include "mgslca/units.hpp"

#include <map>

namespace mgslca {

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::mass: return "mass";
        case Dimension::energy: return "energy";
        case Dimension::area: return "area";
        case Dimension::length: return "length";
        case Dimension::volume: return "volume";
        case Dimension::amount: return "amount";
    }
    return "?";
}

namespace {

const std::map<std::string, Unit, std::less<>>& registry() {
    static const std::map<std::string, Unit, std::less<>> units = {
        // mass, base kg
        {"kg", {"kg", Dimension::mass, 1.0}},
        {"g", {"g", Dimension::mass, 1e-3}},
        {"mg", {"mg", Dimension::mass, 1e-6}},
        {"ug", {"ug", Dimension::mass, 1e-9}},
        {"t", {"t", Dimension::mass, 1e3}},
        // energy, base Wh
        {"Wh", {"Wh", Dimension::energy, 1.0}},
        {"kWh", {"kWh", Dimension::energy, 1e3}},
        {"MWh", {"MWh", Dimension::energy, 1e6}},
        {"J", {"J", Dimension::energy, 1.0 / 3600.0}},
        {"kJ", {"kJ", Dimension::energy, 1e3 / 3600.0}},
        {"MJ", {"MJ", Dimension::energy, 1e6 / 3600.0}},
        {"GJ", {"GJ", Dimension::energy, 1e9 / 3600.0}},
        // area, base m2
        {"m2", {"m2", Dimension::area, 1.0}},
        {"cm2", {"cm2", Dimension::area, 1e-4}},
        // length, base m
        {"m", {"m", Dimension::length, 1.0}},
        {"cm", {"cm", Dimension::length, 1e-2}},
        {"mm", {"mm", Dimension::length, 1e-3}},
        {"um", {"um", Dimension::length, 1e-6}},
        // volume, base m3
        {"m3", {"m3", Dimension::volume, 1.0}},
        {"L", {"L", Dimension::volume, 1e-3}},
        // amount, base item
        {"item", {"item", Dimension::amount, 1.0}},
    };
    return units;
}

}  // namespace

const Unit& unit(std::string_view symbol) {
    const auto& reg = registry();
    auto it = reg.find(symbol);
    if (it == reg.end()) {
        throw LcaError("UNKNOWN_UNIT", "unknown unit symbol: " + std::string(symbol));
    }
    return it->second;
}

bool is_known_unit(std::string_view symbol) {
    return registry().count(symbol) > 0;
}

const Unit& base_unit(Dimension d) {
    switch (d) {
        case Dimension::mass: return unit("kg");
        case Dimension::energy: return unit("Wh");
        case Dimension::area: return unit("m2");
        case Dimension::length: return unit("m");
        case Dimension::volume: return unit("m3");
        case Dimension::amount: return unit("item");
    }
    throw LcaError("UNKNOWN_UNIT", "bad dimension");
}

double convert_amount(double x, const Unit& from, const Unit& to) {
    if (from.dimension != to.dimension) {
        throw LcaError("DIMENSION_MISMATCH",
                       "cannot convert " + from.symbol + " (" + std::string(dimension_name(from.dimension)) +
                           ") to " + to.symbol + " (" + std::string(dimension_name(to.dimension)) + ")");
    }
    if (from.to_base == to.to_base) return x;  // exact, no rounding detour
    return x * from.to_base / to.to_base;
}

}  // namespace mgslca
