#include <doctest.h>

#include "mgslca/scenario.hpp"
#include "testutil.hpp"

using namespace mgslca;
using namespace mgslca::testutil;

namespace {

/// chain_fixture plus an alternative electricity supply with doubled CO2.
InventoryDatabase chain_with_cn() {
    InventoryDatabase db = chain_fixture();
    db.flows.push_back({"electricity-cn", "Electricity CN", FlowKind::product, unit("kWh"),
                        std::nullopt});
    Process cn{"P-cn", "cn electricity",
               {"electricity-cn", 1.0, unit("kWh"), Direction::output},
               {{"co2", 1.0, unit("kg"), Direction::output}}};
    db.processes.push_back(cn);
    return db;
}

double co2_for_foil(const InventoryDatabase& db) {
    DemandVector f;
    f.entries["foil"] = 1.0;
    return solve_inventory(db, f).entries.at("co2");
}

}  // namespace

TEST_CASE("empty scenario is the identity") {
    InventoryDatabase db = chain_fixture();
    std::vector<CellDesign> cells;
    ScenarioResult r = apply_scenario(db, cells, Scenario{"empty", {}});
    CHECK(r.database == db);
}

TEST_CASE("replace_provider rewires the electricity input") {
    InventoryDatabase db = chain_with_cn();
    Scenario sc{"cn", {Override{.kind = OverrideKind::replace_provider,
                                .product_flow = "electricity",
                                .new_process = "P-cn"}}};
    ScenarioResult r = apply_scenario(db, {}, sc);
    CHECK(db == chain_with_cn());  // original untouched

    // oracle comparison: electricity share doubles, foil direct stays
    const double before = co2_for_foil(db);           // 2*0.5 + 0.1 = 1.1
    const double after = co2_for_foil(r.database);    // 2*1.0 + 0.1 = 2.1
    CHECK(before == doctest::Approx(1.1));
    CHECK(after == doctest::Approx(2.1));
    DemandVector f;
    f.entries["foil"] = 1.0;
    CHECK(max_rel_diff(solve_inventory(r.database, f),
                       traverse_oracle(r.database, f, 10)) <= 1e-9);
}

TEST_CASE("replace_provider followed by its inverse restores results") {
    InventoryDatabase db = chain_with_cn();
    Scenario forward{"cn", {Override{.kind = OverrideKind::replace_provider,
                                     .product_flow = "electricity",
                                     .new_process = "P-cn"}}};
    Scenario back{"eu", {Override{.kind = OverrideKind::replace_provider,
                                  .product_flow = "electricity-cn",
                                  .new_process = "P"}}};
    ScenarioResult swapped = apply_scenario(db, {}, forward);
    ScenarioResult restored = apply_scenario(swapped.database, {}, back);
    CHECK(std::abs(co2_for_foil(restored.database) - co2_for_foil(db)) <= 1e-12);
}

TEST_CASE("scale_exchange with factor zero annihilates the path") {
    InventoryDatabase db = chain_fixture();
    Scenario sc{"no-elec", {Override{.kind = OverrideKind::scale_exchange,
                                     .process = "Q",
                                     .flow = "electricity",
                                     .factor = 0.0}}};
    ScenarioResult r = apply_scenario(db, {}, sc);
    CHECK(co2_for_foil(r.database) == doctest::Approx(0.1));  // only Q's direct emission
}

TEST_CASE("set_component_mass edits a cell copy") {
    CellDesign cell;
    cell.name = "c";
    cell.cell_energy_wh = 1.0;
    cell.components = {{Role::anode, "m", 100.0}};
    Scenario sc{"resize", {Override{.kind = OverrideKind::set_component_mass,
                                    .cell = "c",
                                    .role = Role::anode,
                                    .new_mass_mg = 50.0}}};
    ScenarioResult r = apply_scenario(chain_fixture(), {cell}, sc);
    CHECK(r.cells.front().components.front().mass_mg == 50.0);
    CHECK(cell.components.front().mass_mg == 100.0);
}

TEST_CASE("unresolved overrides fail with the offending id") {
    Scenario sc{"bad", {Override{.kind = OverrideKind::replace_provider,
                                 .product_flow = "electricity",
                                 .new_process = "missing"}}};
    CHECK_THROWS_WITH_AS(apply_scenario(chain_fixture(), {}, sc),
                         doctest::Contains("missing"), LcaError);
}

TEST_CASE("scenario application is pure and repeatable") {
    InventoryDatabase db = chain_with_cn();
    Scenario sc{"cn", {Override{.kind = OverrideKind::replace_provider,
                                .product_flow = "electricity",
                                .new_process = "P-cn"}}};
    ScenarioResult a = apply_scenario(db, {}, sc);
    ScenarioResult b = apply_scenario(db, {}, sc);
    CHECK(a.database == b.database);
}

TEST_CASE("category independence for untouched zero-factor categories") {
    InventoryDatabase db = chain_with_cn();
    ImpactMethod m;
    m.categories.push_back({"gwp", "GWP", "kg", {{"co2", 1.0}}});
    m.categories.push_back({"odp", "ODP", "kg", {{"cfc11", 1.0}}});
    DemandVector f;
    f.entries["foil"] = 1.0;
    ImpactResult before = characterize(solve_inventory(db, f), m);
    Scenario sc{"cn", {Override{.kind = OverrideKind::replace_provider,
                                .product_flow = "electricity",
                                .new_process = "P-cn"}}};
    ImpactResult after = characterize(solve_inventory(apply_scenario(db, {}, sc).database, f), m);
    CHECK(after.per_category.at("odp") == before.per_category.at("odp"));  // bit-stable
    CHECK(after.per_category.at("gwp") != before.per_category.at("gwp"));
}

TEST_CASE("comparison table with the Table 2 style entries") {
    ImpactMethod m;
    m.id = "ri";
    m.categories.push_back({"gwp", "GWP", "kg", {}});
    std::vector<ComparisonEntry> entries;
    ComparisonEntry nmc{"NMC (Ell)", 105.1, 130.3, "ri", {}};
    nmc.per_wh_impacts.per_category["gwp"] = 0.10;
    ComparisonEntry lis{"LiS (Deng)", 220.0, 224.0, "ri", {}};
    lis.per_wh_impacts.per_category["gwp"] = 0.16;
    ComparisonEntry lfp{"LFP (Zak)", 93.0, 86.4, "ri", {}};
    lfp.per_wh_impacts.per_category["gwp"] = 0.12;
    entries = {nmc, lis, lfp};
    ComparisonTable t = compare(entries, m);
    CHECK(t.best_system.at("gwp") == "NMC (Ell)");
    CHECK(t.ratio_to_best.at({"NMC (Ell)", "gwp"}) == doctest::Approx(1.0));
    CHECK(t.ratio_to_best.at({"LiS (Deng)", "gwp"}) == doctest::Approx(1.6));
}

TEST_CASE("one-entry comparison has ratio one") {
    ImpactMethod m;
    m.id = "ri";
    m.categories.push_back({"gwp", "GWP", "kg", {}});
    ComparisonEntry only{"solo", 100.0, 100.0, "ri", {}};
    only.per_wh_impacts.per_category["gwp"] = 0.2;
    ComparisonTable t = compare({only}, m);
    CHECK(t.ratio_to_best.at({"solo", "gwp"}) == doctest::Approx(1.0));
}

TEST_CASE("ties break deterministically by name") {
    ImpactMethod m;
    m.id = "ri";
    m.categories.push_back({"gwp", "GWP", "kg", {}});
    ComparisonEntry a{"b-system", 100.0, 100.0, "ri", {}};
    a.per_wh_impacts.per_category["gwp"] = 0.2;
    ComparisonEntry b{"a-system", 100.0, 100.0, "ri", {}};
    b.per_wh_impacts.per_category["gwp"] = 0.2;
    ComparisonTable t = compare({a, b}, m);
    CHECK(t.best_system.at("gwp") == "a-system");
}

TEST_CASE("method mismatch is rejected") {
    ImpactMethod m;
    m.id = "other";
    ComparisonEntry e{"x", 100.0, 100.0, "ri", {}};
    CHECK_THROWS_AS(compare({e}, m), LcaError);
}
