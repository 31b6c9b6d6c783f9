#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgslca/battery.hpp"
#include "mgslca/inventory.hpp"
#include "mgslca/lcia.hpp"
#include "mgslca/scenario.hpp"

namespace mgslca {

inline constexpr std::string_view kFormatVersion = "1";

/// Everything a .lca.json document holds.
struct Dataset {
    std::string format_version{kFormatVersion};
    InventoryDatabase database;
    std::vector<ImpactMethod> methods;
    std::vector<CellDesign> cells;
    std::vector<PackDesign> packs;
    std::vector<Scenario> scenarios;
    std::vector<ComparisonEntry> comparisons;

    const ImpactMethod* find_method(std::string_view id) const;
    const CellDesign* find_cell(std::string_view name) const;
    const PackDesign* find_pack(std::string_view name) const;
    const Scenario* find_scenario(std::string_view id) const;

    bool operator==(const Dataset&) const = default;
};

enum class Severity { error, warning };

struct ParseDiagnostic {
    Severity severity = Severity::error;
    std::string path;  // e.g. /processes/3/exchanges/1/unit
    std::string code;  // SYNTAX, MISSING_FIELD, BAD_UNIT, DANGLING_REF, ...
    std::string message;
};

struct ParseResult {
    std::optional<Dataset> dataset;  // present iff no error diagnostics
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return dataset.has_value(); }
};

/// Parses a document. Total: malformed input yields error diagnostics,
/// never an exception. Unknown fields warn and are otherwise ignored.
ParseResult parse(std::string_view text);

ParseResult parse_file(const std::string& path);

/// Serializes a dataset. Deterministic key order; parse(emit(ds)) == ds.
std::string emit(const Dataset& ds);

}  // namespace mgslca
