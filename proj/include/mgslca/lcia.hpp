#pragma once

#include <map>
#include <string>
#include <vector>

#include "mgslca/solver.hpp"

namespace mgslca {

/// A midpoint impact category (GWP, FDP, ODP, MDP, CED) with its
/// characterization factors per elementary flow. Flows without a factor
/// count as 0 and lower the coverage figure.
struct ImpactCategory {
    std::string id;
    std::string name;
    std::string unit;  // e.g. "kg CO2-eq/Wh"
    std::map<std::string, double> factors;

    bool operator==(const ImpactCategory&) const = default;
};

struct ImpactMethod {
    std::string id;
    std::vector<ImpactCategory> categories;

    const ImpactCategory* find_category(std::string_view id) const;

    bool operator==(const ImpactMethod&) const = default;
};

struct ImpactResult {
    std::map<std::string, double> per_category;
    std::map<std::string, double> coverage;  // fraction of inventory flows with a factor

    bool operator==(const ImpactResult&) const = default;
};

/// Grouping of foreground processes for contribution analysis.
using Grouping = std::map<std::string, std::vector<std::string>>;  // label -> process ids

struct ContributionRow {
    double value = 0.0;
    double share = 0.0;
};

struct ContributionTable {
    Grouping grouping;
    std::vector<std::string> group_labels;  // sorted
    std::map<std::pair<std::string, std::string>, ContributionRow> rows;  // (category, group)
    std::map<std::string, double> totals;            // category -> total
    std::map<std::string, bool> zero_total;          // category -> totals[c] == 0
};

/// per_category[c] = sum over flows of factor_c(flow) * g(flow).
ImpactResult characterize(const InventoryVector& g, const ImpactMethod& method);

/// Cumulative energy demand: characterize restricted to one energy-valued
/// category, reported in Wh per functional unit.
double ced(const InventoryVector& g, const ImpactCategory& energy_factors);

/// Hot-spot analysis. Each group is credited with the direct elementary
/// flows of its scaled foreground processes plus the full upstream inventory
/// of the background demand those processes induce. Shared background is
/// thereby attributed proportionally to the demand each group places on it.
///
/// Preconditions: groups are disjoint; the provider of every demanded flow
/// belongs to some group. Throws OVERLAPPING_GROUPS / UNGROUPED_FOREGROUND.
ContributionTable contributions(const InventoryDatabase& db, const DemandVector& f,
                                const ImpactMethod& method, const Grouping& grouping);

}  // namespace mgslca
