#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgslca/units.hpp"

namespace mgslca {

enum class FlowKind { product, elementary };

/// A product or elementary flow. Product flows link processes; elementary
/// flows cross the system boundary (emissions, resources) and carry a
/// compartment such as "air".
struct Flow {
    std::string id;
    std::string name;
    FlowKind kind = FlowKind::product;
    Unit unit;
    std::optional<std::string> compartment;

    bool operator==(const Flow&) const = default;
};

enum class Direction { input, output };

/// One exchange of a process. The amount is kept in the unit it was written
/// in; amount_base() converts to the dimension's base unit.
struct Exchange {
    std::string flow_id;
    double amount = 0.0;
    Unit unit;
    Direction direction = Direction::input;

    double amount_base() const { return amount * unit.to_base; }

    bool operator==(const Exchange&) const = default;
};

/// A production activity: exactly one reference product output, plus product
/// inputs (technosphere demands) and elementary exchanges (biosphere).
struct Process {
    std::string id;
    std::string name;
    Exchange reference_product;
    std::vector<Exchange> exchanges;

    bool operator==(const Process&) const = default;
};

struct InventoryDatabase {
    std::string name;
    std::string version;
    std::vector<Flow> flows;
    std::vector<Process> processes;

    const Flow* find_flow(std::string_view id) const;
    const Process* find_process(std::string_view id) const;
    /// Process whose reference product is the given product flow, if any.
    const Process* provider_of(std::string_view flow_id) const;

    bool operator==(const InventoryDatabase&) const = default;
};

struct ValidationFinding {
    std::string code;        // MISSING_PROVIDER, DUPLICATE_PROVIDER, ...
    std::string process_id;  // may be empty
    std::string flow_id;     // may be empty
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;
    bool ok() const { return findings.empty(); }
};

/// Structural validation. Problems are reported, never thrown; an empty
/// report means every database invariant holds.
ValidationReport validate_database(const InventoryDatabase& db);

}  // namespace mgslca
