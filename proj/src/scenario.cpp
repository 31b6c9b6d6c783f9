#include "mgslca/scenario.hpp"

#include <algorithm>
#include <limits>

namespace mgslca {

namespace {

void apply_replace_provider(InventoryDatabase& db, const Override& ov) {
    const Process* new_proc = db.find_process(ov.new_process);
    if (!new_proc)
        throw LcaError("UNRESOLVED_OVERRIDE", "replace_provider: unknown process " + ov.new_process);
    const Flow* old_flow = db.find_flow(ov.product_flow);
    if (!old_flow || old_flow->kind != FlowKind::product)
        throw LcaError("UNRESOLVED_OVERRIDE",
                       "replace_provider: unknown product flow " + ov.product_flow);
    const std::string new_flow_id = new_proc->reference_product.flow_id;
    const Flow* new_flow = db.find_flow(new_flow_id);
    if (!new_flow || new_flow->unit.dimension != old_flow->unit.dimension)
        throw LcaError("UNRESOLVED_OVERRIDE",
                       "replace_provider: reference product of " + ov.new_process +
                           " is not unit-compatible with " + ov.product_flow);
    for (auto& p : db.processes) {
        for (auto& ex : p.exchanges) {
            if (ex.direction == Direction::input && ex.flow_id == ov.product_flow)
                ex.flow_id = new_flow_id;
        }
    }
}

void apply_scale_exchange(InventoryDatabase& db, const Override& ov) {
    if (!(ov.factor >= 0.0))
        throw LcaError("UNRESOLVED_OVERRIDE", "scale_exchange: factor must be >= 0");
    for (auto& p : db.processes) {
        if (p.id != ov.process) continue;
        bool touched = false;
        for (auto& ex : p.exchanges) {
            if (ex.flow_id == ov.flow) {
                ex.amount *= ov.factor;
                touched = true;
            }
        }
        if (!touched)
            throw LcaError("UNRESOLVED_OVERRIDE", "scale_exchange: process " + ov.process +
                                                      " has no exchange of flow " + ov.flow);
        return;
    }
    throw LcaError("UNRESOLVED_OVERRIDE", "scale_exchange: unknown process " + ov.process);
}

void apply_set_component_mass(std::vector<CellDesign>& cells, const Override& ov) {
    for (auto& cell : cells) {
        if (cell.name != ov.cell) continue;
        for (auto& c : cell.components) {
            if (c.role == ov.role) {
                c.mass_mg = ov.new_mass_mg;
                return;
            }
        }
        throw LcaError("UNRESOLVED_OVERRIDE",
                       "set_component_mass: cell " + ov.cell + " has no " +
                           std::string(role_name(ov.role)) + " component");
    }
    throw LcaError("UNRESOLVED_OVERRIDE", "set_component_mass: unknown cell " + ov.cell);
}

}  // namespace

ScenarioResult apply_scenario(const InventoryDatabase& db, const std::vector<CellDesign>& cells,
                              const Scenario& sc) {
    ScenarioResult out{db, cells};
    for (const auto& ov : sc.overrides) {
        switch (ov.kind) {
            case OverrideKind::replace_provider: apply_replace_provider(out.database, ov); break;
            case OverrideKind::scale_exchange: apply_scale_exchange(out.database, ov); break;
            case OverrideKind::set_component_mass: apply_set_component_mass(out.cells, ov); break;
        }
    }
    return out;
}

ComparisonTable compare(const std::vector<ComparisonEntry>& entries, const ImpactMethod& method) {
    for (const auto& e : entries) {
        if (e.method != method.id)
            throw LcaError("METHOD_MISMATCH", "entry " + e.name + " was computed with method " +
                                                  e.method + ", expected " + method.id);
    }

    ComparisonTable table;
    for (const auto& e : entries) table.system_names.push_back(e.name);
    std::sort(table.system_names.begin(), table.system_names.end());
    for (const auto& c : method.categories) table.category_ids.push_back(c.id);

    auto entry_by_name = [&](const std::string& name) -> const ComparisonEntry& {
        for (const auto& e : entries)
            if (e.name == name) return e;
        throw LcaError("METHOD_MISMATCH", "entry lookup failed");  // unreachable
    };

    for (const auto& cat : table.category_ids) {
        double best = std::numeric_limits<double>::infinity();
        std::string best_name;
        for (const auto& name : table.system_names) {
            const auto& e = entry_by_name(name);
            auto it = e.per_wh_impacts.per_category.find(cat);
            const double v = it == e.per_wh_impacts.per_category.end() ? 0.0 : it->second;
            table.values[{name, cat}] = v;
            if (v < best) {
                best = v;
                best_name = name;  // first in name order wins ties
            }
        }
        table.best_system[cat] = best_name;
        for (const auto& name : table.system_names) {
            const double v = table.values[{name, cat}];
            table.ratio_to_best[{name, cat}] = best != 0.0 ? v / best : (v == 0.0 ? 1.0 : 0.0);
        }
    }
    return table;
}

}  // namespace mgslca
