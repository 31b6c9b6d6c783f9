#include "mgslca/battery.hpp"

#include <array>
#include <cmath>

namespace mgslca {

namespace {
constexpr std::array<std::pair<Role, std::string_view>, 8> kRoleNames = {{
    {Role::anode, "anode"},
    {Role::cathode_active, "cathode_active"},
    {Role::binder, "binder"},
    {Role::conductive_additive, "conductive_additive"},
    {Role::cathode_collector, "cathode_collector"},
    {Role::separator, "separator"},
    {Role::electrolyte, "electrolyte"},
    {Role::housing, "housing"},
}};
}

std::string_view role_name(Role r) {
    for (const auto& [role, name] : kRoleNames)
        if (role == r) return name;
    return "?";
}

Role role_from_name(std::string_view name) {
    for (const auto& [role, n] : kRoleNames)
        if (n == name) return role;
    throw LcaError("UNKNOWN_ROLE", "unknown cell component role: " + std::string(name));
}

double CellDesign::total_mass_mg() const {
    double total = 0.0;
    for (const auto& c : components) total += c.mass_mg;
    return total;
}

const CellComponent* CellDesign::find_component(Role r) const {
    for (const auto& c : components)
        if (c.role == r) return &c;
    return nullptr;
}

std::map<Role, double> mass_shares(const CellDesign& cell) {
    const double total = cell.total_mass_mg();
    if (!(total > 0.0)) throw LcaError("EMPTY_CELL", "cell " + cell.name + " has zero mass");
    std::map<Role, double> shares;
    for (const auto& c : cell.components) shares[c.role] = c.mass_mg / total;
    return shares;
}

CellDesign derive_evolution(const CellDesign& base, const EvolutionSpec& spec) {
    for (Role r : spec.fixed_roles)
        if (!base.find_component(r))
            throw LcaError("MISSING_ROLE",
                           "fixed role " + std::string(role_name(r)) + " absent from " + base.name);

    const double base_total = base.total_mass_mg();
    if (!(base_total > 0.0)) throw LcaError("EMPTY_CELL", "cell " + base.name + " has zero mass");

    double fixed_mass = 0.0;
    for (Role r : spec.fixed_roles) fixed_mass += base.find_component(r)->mass_mg;
    // roles not targeted or preserved are fixed implicitly
    for (const auto& c : base.components) {
        if (spec.fixed_roles.count(c.role) || spec.target_shares.count(c.role) ||
            spec.preserved_share_roles.count(c.role))
            continue;
        fixed_mass += c.mass_mg;
    }

    double sigma = 0.0;
    for (const auto& [role, share] : spec.target_shares) {
        if (!base.find_component(role))
            throw LcaError("MISSING_ROLE",
                           "targeted role " + std::string(role_name(role)) + " absent from " +
                               base.name);
        sigma += share;
    }
    for (Role r : spec.preserved_share_roles) {
        const CellComponent* c = base.find_component(r);
        if (!c)
            throw LcaError("MISSING_ROLE",
                           "preserved role " + std::string(role_name(r)) + " absent from " +
                               base.name);
        sigma += c->mass_mg / base_total;
    }
    if (sigma >= 1.0)
        throw LcaError("SHARES_EXCEED_ONE", "target and preserved shares sum to " +
                                                std::to_string(sigma));

    const double new_total = fixed_mass / (1.0 - sigma);
    CellDesign out = base;
    for (auto& c : out.components) {
        if (auto it = spec.target_shares.find(c.role); it != spec.target_shares.end())
            c.mass_mg = it->second * new_total;
        else if (spec.preserved_share_roles.count(c.role))
            c.mass_mg = (c.mass_mg / base_total) * new_total;
        // fixed roles keep base mass; cell_energy unchanged
    }
    return out;
}

double cell_energy_density(const CellDesign& cell) {
    const double total_kg = cell.total_mass_mg() * 1e-6;
    if (!(total_kg > 0.0)) throw LcaError("EMPTY_CELL", "cell " + cell.name + " has zero mass");
    return cell.cell_energy_wh / total_kg;
}

double pack_energy_density(double cell_density_wh_kg, const PackDesign& pack) {
    return cell_density_wh_kg * pack.cell_share;
}

DemandVector per_wh_bom(const CellDesign& cell, const PackDesign& pack) {
    const double pack_density = pack_energy_density(cell_energy_density(cell), pack);
    if (!(pack_density > 0.0))
        throw LcaError("EMPTY_CELL", "pack energy density must be positive");

    DemandVector demand;
    const auto shares = mass_shares(cell);
    for (const auto& c : cell.components) {
        const double share_in_pack = shares.at(c.role) * pack.cell_share;
        demand.entries[c.material] += share_in_pack / pack_density;  // kg per Wh
    }
    if (!pack.housing_material.empty())
        demand.entries[pack.housing_material] += pack.housing_share / pack_density;
    if (!pack.bms_material.empty())
        demand.entries[pack.bms_material] += pack.bms_share / pack_density;
    return demand;
}

DemandVector per_wh_demand(const CellDesign& cell, const PackDesign& pack) {
    DemandVector demand = per_wh_bom(cell, pack);
    if (!pack.manufacture_material.empty()) {
        const double pack_density = pack_energy_density(cell_energy_density(cell), pack);
        demand.entries[pack.manufacture_material] += pack.cell_share / pack_density;
    }
    return demand;
}

CollectorResult collector_min(const AnodeSizingInput& input) {
    CollectorResult out;
    out.thickness_um =
        input.reference_collector_thickness_um / input.anode_to_reference_conductivity_ratio;
    // um -> cm is 1e-4; g -> mg is 1e3
    out.mass_mg =
        out.thickness_um * 1e-4 * input.electrode_area_cm2 * input.anode_density_g_cm3 * 1e3;
    return out;
}

double capacity_match(double cathode_mass_mg, double cathode_cap_ah_g, double anode_cap_ah_g) {
    return cathode_mass_mg * cathode_cap_ah_g / anode_cap_ah_g;
}

double optimized_anode_mass(const AnodeSizingInput& input) {
    return capacity_match(input.cathode_active_mass_mg, input.cathode_specific_capacity_ah_g,
                          input.anode_specific_capacity_ah_g) +
           collector_min(input).mass_mg;
}

long break_even_cycles(double ced_per_wh, double energy_return_per_cycle) {
    if (!(energy_return_per_cycle > 0.0))
        throw LcaError("NONPOSITIVE_RETURN", "per-cycle energy return must be positive");
    return static_cast<long>(std::ceil(ced_per_wh / energy_return_per_cycle));
}

}  // namespace mgslca
