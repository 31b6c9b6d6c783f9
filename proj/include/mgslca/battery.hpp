#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mgslca/solver.hpp"

namespace mgslca {

enum class Role {
    anode,
    cathode_active,
    binder,
    conductive_additive,
    cathode_collector,
    separator,
    electrolyte,
    housing,
};

std::string_view role_name(Role r);
Role role_from_name(std::string_view name);  // throws UNKNOWN_ROLE

struct CellComponent {
    Role role = Role::anode;
    std::string material;  // product flow id
    double mass_mg = 0.0;

    bool operator==(const CellComponent&) const = default;
};

/// A cell layout: component masses in mg plus the cell's energy content.
struct CellDesign {
    std::string name;
    std::vector<CellComponent> components;  // each role at most once
    double cell_energy_wh = 0.0;

    double total_mass_mg() const;
    const CellComponent* find_component(Role r) const;

    bool operator==(const CellDesign&) const = default;
};

/// Pack layout as mass shares (cells + casing + BMS sum to 1) with the
/// materials the pack-level components are made of.
struct PackDesign {
    std::string name;
    double cell_share = 0.8;
    double housing_share = 0.145;
    double bms_share = 0.055;
    double pack_mass_kg = 1.0;
    std::string housing_material;  // product flow id, may be empty
    std::string bms_material;      // product flow id, may be empty
    // Optional service flow (unit kg) demanded at 1 kg per kg of cell,
    // standing for the cell and pack assembly energy chain.
    std::string manufacture_material;

    bool operator==(const PackDesign&) const = default;
};

/// Rule set deriving an optimized cell from a baseline: fixed roles keep
/// their absolute mass, targeted roles get a prescribed weight share of the
/// new total, preserved roles keep their baseline weight share.
struct EvolutionSpec {
    std::set<Role> fixed_roles;
    std::map<Role, double> target_shares;
    std::set<Role> preserved_share_roles;
};

struct AnodeSizingInput {
    double electrode_area_cm2 = 74.0;
    double cathode_active_mass_mg = 421.0;
    double cathode_specific_capacity_ah_g = 1.67;
    double anode_specific_capacity_ah_g = 2.205;
    double reference_collector_thickness_um = 4.4;
    double anode_to_reference_conductivity_ratio = 0.5;
    double anode_density_g_cm3 = 1.738;
};

struct CollectorResult {
    double thickness_um = 0.0;
    double mass_mg = 0.0;
};

/// Weight share per role; shares sum to 1. Throws EMPTY_CELL.
std::map<Role, double> mass_shares(const CellDesign& cell);

/// Applies an evolution rule set. cell_energy is never altered.
/// Throws SHARES_EXCEED_ONE, MISSING_ROLE.
CellDesign derive_evolution(const CellDesign& base, const EvolutionSpec& spec);

/// Wh per kg of cell. Throws EMPTY_CELL.
double cell_energy_density(const CellDesign& cell);

/// Wh per kg of pack: cell density times the cell mass share.
double pack_energy_density(double cell_density_wh_kg, const PackDesign& pack);

/// Per-Wh bill of materials: kg of each material per Wh of pack capacity,
/// including pack housing and BMS. Feeds the solver demand directly.
DemandVector per_wh_bom(const CellDesign& cell, const PackDesign& pack);

/// per_wh_bom plus the pack's manufacture service demand (kg of cell
/// assembled per Wh), when the pack declares one.
DemandVector per_wh_demand(const CellDesign& cell, const PackDesign& pack);

/// Minimum current-collector thickness and mass for the anode foil, scaled
/// from a reference collector by the conductivity ratio.
CollectorResult collector_min(const AnodeSizingInput& input);

/// Anode active mass matching the cathode capacity.
double capacity_match(double cathode_mass_mg, double cathode_cap_ah_g, double anode_cap_ah_g);

/// Capacity-matched active mass plus the collector minimum.
double optimized_anode_mass(const AnodeSizingInput& input);

/// Cycles needed before the energy delivered amortizes the production CED.
/// Throws NONPOSITIVE_RETURN.
long break_even_cycles(double ced_per_wh, double energy_return_per_cycle);

}  // namespace mgslca
