#pragma once

#include <string>
#include <vector>

#include "mgslca/battery.hpp"
#include "mgslca/lcia.hpp"

namespace mgslca {

enum class OverrideKind { replace_provider, scale_exchange, set_component_mass };

/// One parameter override. Fields are interpreted by kind:
///   replace_provider: product_flow + new_process
///   scale_exchange:   process + flow + factor
///   set_component_mass: cell + role + new_mass_mg
struct Override {
    OverrideKind kind = OverrideKind::replace_provider;
    std::string product_flow;
    std::string new_process;
    std::string process;
    std::string flow;
    double factor = 1.0;
    std::string cell;
    Role role = Role::anode;
    double new_mass_mg = 0.0;

    bool operator==(const Override&) const = default;
};

struct Scenario {
    std::string id;
    std::vector<Override> overrides;  // applied in listed order

    bool operator==(const Scenario&) const = default;
};

struct ScenarioResult {
    InventoryDatabase database;
    std::vector<CellDesign> cells;
};

/// Applies the scenario's overrides in order to copies of the inputs.
/// Originals are untouched. replace_provider rewires every input of the
/// product flow to the new process's reference product.
/// Throws LcaError(UNRESOLVED_OVERRIDE) naming the failing id.
ScenarioResult apply_scenario(const InventoryDatabase& db, const std::vector<CellDesign>& cells,
                              const Scenario& sc);

/// A battery system compared per Wh: densities from the literature plus its
/// per-Wh impacts under a common method.
struct ComparisonEntry {
    std::string name;
    double original_density_wh_kg = 0.0;
    double adjusted_density_wh_kg = 0.0;
    std::string method;  // method id the impacts were computed with
    ImpactResult per_wh_impacts;

    bool operator==(const ComparisonEntry&) const = default;
};

struct ComparisonTable {
    std::vector<std::string> system_names;    // sorted by name
    std::vector<std::string> category_ids;
    std::map<std::pair<std::string, std::string>, double> values;          // (system, category)
    std::map<std::pair<std::string, std::string>, double> ratio_to_best;   // value / column min
    std::map<std::string, std::string> best_system;                        // category -> name
};

/// Cross-chemistry comparison. Throws LcaError(METHOD_MISMATCH) when an
/// entry was computed with a different method. Ties on the best system
/// break deterministically by name order.
ComparisonTable compare(const std::vector<ComparisonEntry>& entries, const ImpactMethod& method);

}  // namespace mgslca
