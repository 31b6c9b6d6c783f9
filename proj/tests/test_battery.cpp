#include <doctest.h>

#include "mgslca/battery.hpp"
#include "testutil.hpp"

using namespace mgslca;

namespace {

CellDesign baseline_cell() {
    CellDesign cell;
    cell.name = "MgS-BL";
    cell.cell_energy_wh = 0.382242;
    cell.components = {
        {Role::anode, "mg-foil", 427.0},
        {Role::cathode_active, "sulfur", 421.0},
        {Role::binder, "binder", 5.0},
        {Role::conductive_additive, "carbon", 5.0},
        {Role::cathode_collector, "al-foil", 88.0},
        {Role::separator, "separator", 700.0},
        {Role::electrolyte, "electrolyte", 2060.0},
        {Role::housing, "pouch", 3000.0},
    };
    return cell;
}

PackDesign automotive_pack() {
    PackDesign pack;
    pack.name = "automotive";
    pack.housing_material = "pack-housing";
    pack.bms_material = "bms";
    return pack;
}

EvolutionSpec evo1_spec() {
    EvolutionSpec spec;
    spec.target_shares = {{Role::housing, 0.03}};
    return spec;
}

EvolutionSpec evo2_spec() {
    EvolutionSpec spec;
    spec.target_shares = {{Role::separator, 0.02}, {Role::housing, 0.03}};
    spec.preserved_share_roles = {Role::electrolyte};
    return spec;
}

}  // namespace

TEST_CASE("mass shares of the baseline cell") {
    const auto shares = mass_shares(baseline_cell());
    CHECK(shares.at(Role::anode) == doctest::Approx(427.0 / 6706.0));
    CHECK(shares.at(Role::housing) == doctest::Approx(0.447).epsilon(1e-3));
    double sum = 0.0;
    for (const auto& [r, s] : shares) sum += s;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-component cell has share 1") {
    CellDesign cell;
    cell.name = "mono";
    cell.cell_energy_wh = 1.0;
    cell.components = {{Role::anode, "m", 100.0}};
    CHECK(mass_shares(cell).at(Role::anode) == doctest::Approx(1.0));
}

TEST_CASE("empty cell is rejected") {
    CellDesign cell;
    cell.name = "empty";
    CHECK_THROWS_AS(mass_shares(cell), LcaError);
    CHECK_THROWS_AS(cell_energy_density(cell), LcaError);
}

TEST_CASE("first evolution reduces the pouch to 3 wt%") {
    CellDesign evo1 = derive_evolution(baseline_cell(), evo1_spec());
    CHECK(evo1.total_mass_mg() == doctest::Approx(3706.0 / 0.97));
    CHECK(evo1.find_component(Role::housing)->mass_mg == doctest::Approx(114.62).epsilon(1e-3));
    CHECK(evo1.find_component(Role::anode)->mass_mg == 427.0);
    CHECK(evo1.cell_energy_wh == baseline_cell().cell_energy_wh);
}

TEST_CASE("second evolution thins the separator and electrolyte") {
    CellDesign evo2 = derive_evolution(baseline_cell(), evo2_spec());
    CHECK(evo2.total_mass_mg() == doctest::Approx(1471.66).epsilon(1e-4));
    CHECK(evo2.find_component(Role::separator)->mass_mg == doctest::Approx(29.43).epsilon(1e-3));
    CHECK(evo2.find_component(Role::housing)->mass_mg == doctest::Approx(44.15).epsilon(1e-3));
    CHECK(evo2.find_component(Role::electrolyte)->mass_mg ==
          doctest::Approx(452.08).epsilon(1e-3));
}

TEST_CASE("empty spec is the identity") {
    CellDesign same = derive_evolution(baseline_cell(), EvolutionSpec{});
    CHECK(same == baseline_cell());
}

TEST_CASE("evolution errors") {
    EvolutionSpec too_much;
    too_much.target_shares = {{Role::housing, 0.8}, {Role::separator, 0.3}};
    CHECK_THROWS_AS(derive_evolution(baseline_cell(), too_much), LcaError);

    CellDesign no_housing = baseline_cell();
    no_housing.components.pop_back();
    CHECK_THROWS_AS(derive_evolution(no_housing, evo1_spec()), LcaError);
}

TEST_CASE("energy densities across evolutions") {
    CellDesign bl = baseline_cell();
    CellDesign evo1 = derive_evolution(bl, evo1_spec());
    CellDesign evo2 = derive_evolution(bl, evo2_spec());
    PackDesign pack = automotive_pack();

    CHECK(cell_energy_density(bl) == doctest::Approx(57.0));
    CHECK(cell_energy_density(evo1) == doctest::Approx(100.0).epsilon(0.01));
    CHECK(cell_energy_density(evo2) == doctest::Approx(259.8).epsilon(0.01));

    CHECK(pack_energy_density(cell_energy_density(bl), pack) == doctest::Approx(45.6));
    CHECK(pack_energy_density(100.0, pack) == doctest::Approx(80.0));
    CHECK(pack_energy_density(259.8, pack) == doctest::Approx(207.8).epsilon(1e-3));
}

TEST_CASE("per-Wh bill of materials") {
    CellDesign bl = baseline_cell();
    PackDesign pack = automotive_pack();
    DemandVector d = per_wh_bom(bl, pack);
    CHECK(d.entries.at("bms") == doctest::Approx(0.055 / 45.6).epsilon(1e-6));        // 1.206 g/Wh
    CHECK(d.entries.at("mg-foil") ==
          doctest::Approx((427.0 / 6706.0) * 0.8 / 45.6).epsilon(1e-6));              // 1.117 g/Wh
    CHECK(d.entries.at("bms") == doctest::Approx(1.206e-3).epsilon(1e-3));

    // zero-mass component demands nothing
    CellDesign with_zero = bl;
    with_zero.components[2].mass_mg = 0.0;
    CHECK(per_wh_bom(with_zero, pack).entries.at("binder") == 0.0);
}

TEST_CASE("per-Wh masses scale inversely with pack density") {
    CellDesign bl = baseline_cell();
    CellDesign doubled = bl;
    doubled.cell_energy_wh *= 2.0;  // doubles cell and pack energy density
    PackDesign pack = automotive_pack();
    DemandVector a = per_wh_bom(bl, pack);
    DemandVector b = per_wh_bom(doubled, pack);
    for (const auto& [k, v] : a.entries) CHECK(b.entries.at(k) == doctest::Approx(v / 2.0));
}

TEST_CASE("evolution round-trips its target shares") {
    CellDesign evo2 = derive_evolution(baseline_cell(), evo2_spec());
    const auto shares = mass_shares(evo2);
    CHECK(std::abs(shares.at(Role::separator) - 0.02) <= 1e-9);
    CHECK(std::abs(shares.at(Role::housing) - 0.03) <= 1e-9);
    CHECK(std::abs(shares.at(Role::electrolyte) - 2060.0 / 6706.0) <= 1e-9);
}

TEST_CASE("component-wise dominance of evolutions") {
    CellDesign bl = baseline_cell();
    CellDesign evo1 = derive_evolution(bl, evo1_spec());
    CellDesign evo2 = derive_evolution(bl, evo2_spec());
    for (const auto& c : bl.components) {
        CHECK(evo1.find_component(c.role)->mass_mg <= c.mass_mg + 1e-9);
        CHECK(evo2.find_component(c.role)->mass_mg <= evo1.find_component(c.role)->mass_mg + 1e-9);
    }
}

TEST_CASE("collector minimum from the aluminium reference") {
    AnodeSizingInput in;  // paper defaults
    CollectorResult r = collector_min(in);
    CHECK(r.thickness_um == doctest::Approx(8.8));
    CHECK(r.mass_mg == doctest::Approx(113.2).epsilon(1e-3));

    in.anode_to_reference_conductivity_ratio = 1.0;
    CHECK(collector_min(in).thickness_um == doctest::Approx(4.4));
}

TEST_CASE("aluminium collector self-check") {
    // 88 mg over 74 cm2 at 2.70 g/cm3 is a 4.404 um foil
    const double thickness_um = 88.0 * 1e-3 / (74.0 * 2.70) * 1e4;
    CHECK(thickness_um == doctest::Approx(4.404).epsilon(1e-3));
    AnodeSizingInput al;
    al.anode_density_g_cm3 = 2.70;
    al.anode_to_reference_conductivity_ratio = 1.0;
    al.reference_collector_thickness_um = thickness_um;
    CHECK(collector_min(al).mass_mg == doctest::Approx(88.0).epsilon(1e-3));
}

TEST_CASE("capacity matching") {
    CHECK(capacity_match(421.0, 1.67, 2.205) == doctest::Approx(318.9).epsilon(1e-3));
    CHECK(capacity_match(100.0, 2.0, 2.0) == doctest::Approx(100.0));
    CHECK(capacity_match(0.0, 1.67, 2.205) == 0.0);
}

TEST_CASE("optimized anode mass") {
    AnodeSizingInput in;
    CHECK(optimized_anode_mass(in) == doctest::Approx(432.1).epsilon(1e-3));
    CHECK(optimized_anode_mass(in) >= 427.0);  // above the prototype foil

    in.cathode_active_mass_mg = 0.0;
    CHECK(optimized_anode_mass(in) == doctest::Approx(113.2).epsilon(1e-3));
}

TEST_CASE("break-even cycles") {
    CHECK(break_even_cycles(1583.0, 4.059) == 390);
    CHECK(break_even_cycles(0.0, 4.059) == 0);
    CHECK(break_even_cycles(100.0, 1.0) == 100);
    CHECK_THROWS_AS(break_even_cycles(100.0, 0.0), LcaError);
}
