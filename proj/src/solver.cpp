#include "mgslca/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mgslca {

int TechnosphereSystem::process_index(std::string_view id) const {
    auto it = std::lower_bound(process_order.begin(), process_order.end(), id);
    if (it == process_order.end() || *it != id) return -1;
    return static_cast<int>(it - process_order.begin());
}

int TechnosphereSystem::product_index(std::string_view flow_id) const {
    for (size_t i = 0; i < product_order.size(); ++i)
        if (product_order[i] == flow_id) return static_cast<int>(i);
    return -1;
}

TechnosphereSystem assemble(const InventoryDatabase& db) {
    ValidationReport report = validate_database(db);
    if (!report.ok()) {
        throw LcaError("INVALID_DATABASE",
                       "database has " + std::to_string(report.findings.size()) +
                           " validation findings; first: " + report.findings.front().message);
    }

    TechnosphereSystem sys;
    for (const auto& p : db.processes) sys.process_order.push_back(p.id);
    std::sort(sys.process_order.begin(), sys.process_order.end());

    std::set<std::string> elementary;
    for (const auto& f : db.flows)
        if (f.kind == FlowKind::elementary) elementary.insert(f.id);
    sys.flow_order.assign(elementary.begin(), elementary.end());

    const auto n = static_cast<Eigen::Index>(sys.process_order.size());
    const auto m = static_cast<Eigen::Index>(sys.flow_order.size());
    sys.A = Eigen::MatrixXd::Zero(n, n);
    sys.B = Eigen::MatrixXd::Zero(m, n);
    sys.product_order.resize(n);

    for (Eigen::Index j = 0; j < n; ++j)
        sys.product_order[j] = db.find_process(sys.process_order[j])->reference_product.flow_id;

    auto flow_row = [&](const std::string& id) {
        auto it = std::lower_bound(sys.flow_order.begin(), sys.flow_order.end(), id);
        return static_cast<Eigen::Index>(it - sys.flow_order.begin());
    };

    for (Eigen::Index j = 0; j < n; ++j) {
        const Process* p = db.find_process(sys.process_order[j]);
        sys.A(j, j) += p->reference_product.amount_base();
        for (const auto& ex : p->exchanges) {
            const Flow* flow = db.find_flow(ex.flow_id);
            if (flow->kind == FlowKind::product) {
                const double a = ex.amount_base();
                const int row = sys.product_index(ex.flow_id);
                sys.A(row, j) += (ex.direction == Direction::input) ? -a : a;
            } else {
                sys.B(flow_row(ex.flow_id), j) += ex.amount_base();
            }
        }
    }
    return sys;
}

ScalingVector solve_scaling(const TechnosphereSystem& sys, const DemandVector& f) {
    const auto n = sys.A.rows();
    Eigen::VectorXd fv = Eigen::VectorXd::Zero(n);
    for (const auto& [flow_id, amount] : f.entries) {
        const int row = sys.product_index(flow_id);
        if (row < 0)
            throw LcaError("UNKNOWN_DEMAND_FLOW",
                           "demand on flow " + flow_id + " which no process produces");
        fv(row) += amount;
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.A);
    Eigen::VectorXd s = lu.solve(fv);

    const double scale = std::max(1.0, fv.lpNorm<Eigen::Infinity>());
    double resid = (sys.A * s - fv).lpNorm<Eigen::Infinity>();
    for (int iter = 0; iter < 3 && resid > 1e-9 * scale; ++iter) {
        s += lu.solve(fv - sys.A * s);
        resid = (sys.A * s - fv).lpNorm<Eigen::Infinity>();
    }
    if (!s.allFinite() || resid > 1e-6 * scale)
        throw LcaError("SINGULAR_SYSTEM", "technosphere matrix is numerically singular");

    ScalingVector out;
    for (Eigen::Index i = 0; i < n; ++i) out.entries[sys.process_order[i]] = s(i);
    return out;
}

InventoryVector inventory(const TechnosphereSystem& sys, const ScalingVector& s) {
    Eigen::VectorXd sv = Eigen::VectorXd::Zero(sys.A.rows());
    for (const auto& [pid, scale] : s.entries) {
        const int idx = sys.process_index(pid);
        if (idx >= 0) sv(idx) = scale;
    }
    Eigen::VectorXd g = sys.B * sv;
    InventoryVector out;
    for (size_t i = 0; i < sys.flow_order.size(); ++i)
        out.entries[sys.flow_order[i]] = g(static_cast<Eigen::Index>(i));
    return out;
}

InventoryVector solve_inventory(const InventoryDatabase& db, const DemandVector& f) {
    TechnosphereSystem sys = assemble(db);
    return inventory(sys, solve_scaling(sys, f));
}

InventoryVector traverse_oracle(const InventoryDatabase& db, const DemandVector& f, int max_depth) {
    InventoryVector g;
    for (const auto& flow : db.flows)
        if (flow.kind == FlowKind::elementary) g.entries[flow.id] = 0.0;

    // wave of pending scale factors per process
    std::map<std::string, double> wave;
    for (const auto& [flow_id, amount] : f.entries) {
        const Process* p = db.provider_of(flow_id);
        if (!p) continue;
        wave[p->id] += amount / p->reference_product.amount_base();
    }

    for (int depth = 0; depth <= max_depth && !wave.empty(); ++depth) {
        std::map<std::string, double> next;
        for (const auto& [pid, scale] : wave) {
            const Process* p = db.find_process(pid);
            for (const auto& ex : p->exchanges) {
                const Flow* flow = db.find_flow(ex.flow_id);
                if (flow->kind == FlowKind::elementary) {
                    g.entries[ex.flow_id] += scale * ex.amount_base();
                } else if (ex.direction == Direction::input) {
                    const Process* provider = db.provider_of(ex.flow_id);
                    if (provider)
                        next[provider->id] +=
                            scale * ex.amount_base() / provider->reference_product.amount_base();
                }
            }
        }
        wave = std::move(next);
    }
    return g;
}

}  // namespace mgslca
