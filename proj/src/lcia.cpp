#include "mgslca/lcia.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mgslca {

const ImpactCategory* ImpactMethod::find_category(std::string_view id) const {
    for (const auto& c : categories)
        if (c.id == id) return &c;
    return nullptr;
}

ImpactResult characterize(const InventoryVector& g, const ImpactMethod& method) {
    ImpactResult out;
    for (const auto& cat : method.categories) {
        double value = 0.0;
        size_t covered = 0;
        for (const auto& [flow_id, amount] : g.entries) {
            auto it = cat.factors.find(flow_id);
            if (it != cat.factors.end()) {
                value += it->second * amount;
                ++covered;
            }
        }
        out.per_category[cat.id] = value;
        out.coverage[cat.id] =
            g.entries.empty() ? 1.0 : static_cast<double>(covered) / g.entries.size();
    }
    return out;
}

double ced(const InventoryVector& g, const ImpactCategory& energy_factors) {
    ImpactMethod m{"ced", {energy_factors}};
    return characterize(g, m).per_category.at(energy_factors.id);
}

ContributionTable contributions(const InventoryDatabase& db, const DemandVector& f,
                                const ImpactMethod& method, const Grouping& grouping) {
    // disjointness of groups and group lookup
    std::map<std::string, std::string> group_of;  // process id -> label
    for (const auto& [label, pids] : grouping) {
        for (const auto& pid : pids) {
            auto [it, inserted] = group_of.emplace(pid, label);
            if (!inserted && it->second != label)
                throw LcaError("OVERLAPPING_GROUPS",
                               "process " + pid + " appears in groups " + it->second + " and " +
                                   label);
        }
    }

    TechnosphereSystem sys = assemble(db);
    for (const auto& [flow_id, amount] : f.entries) {
        const Process* provider = db.provider_of(flow_id);
        if (!provider || group_of.find(provider->id) == group_of.end())
            throw LcaError("UNGROUPED_FOREGROUND",
                           "provider of demanded flow " + flow_id + " is not in any group");
    }

    ScalingVector s = solve_scaling(sys, f);
    InventoryVector g_total = inventory(sys, s);
    ImpactResult total = characterize(g_total, method);

    // per-unit inventory of background products demanded by the foreground
    std::map<std::string, InventoryVector> intensity;  // product flow id -> g per unit
    auto background_intensity = [&](const std::string& flow_id) -> const InventoryVector& {
        auto it = intensity.find(flow_id);
        if (it == intensity.end()) {
            DemandVector unit_demand;
            unit_demand.entries[flow_id] = 1.0;
            it = intensity.emplace(flow_id, inventory(sys, solve_scaling(sys, unit_demand))).first;
        }
        return it->second;
    };

    ContributionTable table;
    table.grouping = grouping;
    for (const auto& [label, _] : grouping) table.group_labels.push_back(label);
    std::sort(table.group_labels.begin(), table.group_labels.end());

    std::map<std::string, InventoryVector> group_g;
    for (const auto& label : table.group_labels) group_g[label] = {};

    for (const auto& [pid, label] : group_of) {
        const Process* p = db.find_process(pid);
        if (!p) continue;
        auto sit = s.entries.find(pid);
        const double scale = sit == s.entries.end() ? 0.0 : sit->second;
        if (scale == 0.0) continue;
        auto& gg = group_g[label];
        for (const auto& ex : p->exchanges) {
            const Flow* flow = db.find_flow(ex.flow_id);
            if (flow->kind == FlowKind::elementary) {
                gg.entries[ex.flow_id] += scale * ex.amount_base();
            } else if (ex.direction == Direction::input) {
                const Process* provider = db.provider_of(ex.flow_id);
                if (provider && group_of.count(provider->id)) continue;  // counted in its own group
                const InventoryVector& unit_g = background_intensity(ex.flow_id);
                for (const auto& [fid, amt] : unit_g.entries)
                    gg.entries[fid] += scale * ex.amount_base() * amt;
            }
        }
    }

    for (const auto& cat : method.categories) {
        const double cat_total = total.per_category.at(cat.id);
        table.totals[cat.id] = cat_total;
        table.zero_total[cat.id] = cat_total == 0.0;
        for (const auto& label : table.group_labels) {
            ImpactResult r = characterize(group_g[label], method);
            ContributionRow row;
            row.value = r.per_category.at(cat.id);
            row.share = cat_total != 0.0 ? row.value / cat_total : 0.0;
            table.rows[{cat.id, label}] = row;
        }
    }
    return table;
}

}  // namespace mgslca
