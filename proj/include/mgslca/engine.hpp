#pragma once

#include "mgslca/dataio.hpp"

namespace mgslca {

/// Resolved inputs of one analysis run over a dataset. Applies the optional
/// scenario on construction; originals stay untouched.
struct AnalysisRun {
    InventoryDatabase database;
    ImpactMethod method;
    CellDesign cell;
    PackDesign pack;

    /// Throws LcaError(UNKNOWN_ID) for unresolvable ids.
    static AnalysisRun resolve(const Dataset& ds, const std::string& method_id,
                               const std::string& cell_name, const std::string& pack_name,
                               const std::string& scenario_id = "");

    DemandVector demand() const { return per_wh_demand(cell, pack); }

    /// Per-Wh impacts of the selected cell + pack.
    ImpactResult impacts() const;

    /// Component-level hot-spot analysis. Groups are the cell roles present
    /// plus pack_housing, bms and cell_manufacture when the pack declares
    /// those materials; each group holds the provider of its material flow.
    ContributionTable contribution_table() const;
    Grouping component_grouping() const;
};

}  // namespace mgslca
