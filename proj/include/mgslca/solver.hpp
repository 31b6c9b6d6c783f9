#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mgslca/inventory.hpp"

namespace mgslca {

/// Functional-unit demand: product flow id -> amount in base units.
struct DemandVector {
    std::map<std::string, double> entries;
};

/// Matrix form of a database. Process order is sorted by process id and row i
/// of A corresponds to the reference product of process i (single-provider
/// rule makes this a bijection). B rows follow flow_order (sorted elementary
/// flow ids).
struct TechnosphereSystem {
    std::vector<std::string> process_order;
    std::vector<std::string> flow_order;
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;

    int process_index(std::string_view id) const;
    /// Row of A owned by the given product flow, or -1.
    int product_index(std::string_view flow_id) const;

    std::vector<std::string> product_order;  // reference product flow id per row
};

struct ScalingVector {
    std::map<std::string, double> entries;  // process id -> scale
};

struct InventoryVector {
    std::map<std::string, double> entries;  // elementary flow id -> amount (base units)
};

/// Builds A and B from a validated database.
/// Throws LcaError(INVALID_DATABASE) when validation findings exist.
TechnosphereSystem assemble(const InventoryDatabase& db);

/// Solves A s = f for the scaling vector.
/// Throws LcaError(UNKNOWN_DEMAND_FLOW) for demands on flows without a row,
/// LcaError(SINGULAR_SYSTEM) when the residual cannot be driven below
/// 1e-6 * max(1, ||f||_inf) by refinement.
ScalingVector solve_scaling(const TechnosphereSystem& sys, const DemandVector& f);

/// g = B s.
InventoryVector inventory(const TechnosphereSystem& sys, const ScalingVector& s);

/// Convenience: validate-free full pipeline for a prevalidated database.
InventoryVector solve_inventory(const InventoryDatabase& db, const DemandVector& f);

/// Breadth-first expansion of the demand graph, truncated at max_depth
/// supply waves. Independent of the matrix path; used as a test oracle.
/// For acyclic databases and depth >= diameter the result matches the
/// matrix inventory.
InventoryVector traverse_oracle(const InventoryDatabase& db, const DemandVector& f, int max_depth);

}  // namespace mgslca
