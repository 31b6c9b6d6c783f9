#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mgslca {

/// Error with a stable machine-readable code, thrown by operations whose
/// contract names an error condition (e.g. DIMENSION_MISMATCH).
class LcaError : public std::runtime_error {
public:
    LcaError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

enum class Dimension { mass, energy, area, length, volume, amount };

std::string_view dimension_name(Dimension d);

/// A unit of measure. to_base converts one unit into the dimension's base
/// unit (kg, Wh, m2, m, m3, item).
struct Unit {
    std::string symbol;
    Dimension dimension = Dimension::mass;
    double to_base = 1.0;

    bool operator==(const Unit&) const = default;
};

/// Looks up a unit by symbol in the built-in registry.
/// Throws LcaError(UNKNOWN_UNIT) for unregistered symbols.
const Unit& unit(std::string_view symbol);

bool is_known_unit(std::string_view symbol);

/// Base unit of a dimension (kg, Wh, m2, m, m3, item).
const Unit& base_unit(Dimension d);

/// Converts x from one unit to another of the same dimension.
/// Throws LcaError(DIMENSION_MISMATCH) when dimensions differ.
double convert_amount(double x, const Unit& from, const Unit& to);

}  // namespace mgslca
