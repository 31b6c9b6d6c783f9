#include "mgslca/engine.hpp"

#include <algorithm>

namespace mgslca {

AnalysisRun AnalysisRun::resolve(const Dataset& ds, const std::string& method_id,
                                 const std::string& cell_name, const std::string& pack_name,
                                 const std::string& scenario_id) {
    const ImpactMethod* method = ds.find_method(method_id);
    if (!method) throw LcaError("UNKNOWN_ID", "unknown method: " + method_id);
    const CellDesign* cell = ds.find_cell(cell_name);
    if (!cell) throw LcaError("UNKNOWN_ID", "unknown cell: " + cell_name);
    const PackDesign* pack = ds.find_pack(pack_name);
    if (!pack) throw LcaError("UNKNOWN_ID", "unknown pack: " + pack_name);

    AnalysisRun run{ds.database, *method, *cell, *pack};
    if (!scenario_id.empty()) {
        const Scenario* sc = ds.find_scenario(scenario_id);
        if (!sc) throw LcaError("UNKNOWN_ID", "unknown scenario: " + scenario_id);
        ScenarioResult applied = apply_scenario(ds.database, {*cell}, *sc);
        run.database = std::move(applied.database);
        run.cell = applied.cells.front();
    }
    return run;
}

ImpactResult AnalysisRun::impacts() const {
    return characterize(solve_inventory(database, demand()), method);
}

Grouping AnalysisRun::component_grouping() const {
    Grouping grouping;
    std::map<std::string, std::string> grouped;  // process id -> label

    auto add = [&](const std::string& label, const std::string& material) {
        if (material.empty()) return;
        const Process* provider = database.provider_of(material);
        if (!provider)
            throw LcaError("UNKNOWN_ID", "no provider for material flow " + material);
        auto [it, inserted] = grouped.emplace(provider->id, label);
        if (inserted) grouping[label].push_back(provider->id);
    };

    for (const auto& comp : cell.components)
        add(std::string(role_name(comp.role)), comp.material);
    add("pack_housing", pack.housing_material);
    add("bms", pack.bms_material);
    add("cell_manufacture", pack.manufacture_material);
    return grouping;
}

ContributionTable AnalysisRun::contribution_table() const {
    return contributions(database, demand(), method, component_grouping());
}

}  // namespace mgslca
