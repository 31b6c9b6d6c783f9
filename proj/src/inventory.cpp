#include "mgslca/inventory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mgslca {

const Flow* InventoryDatabase::find_flow(std::string_view id) const {
    for (const auto& f : flows)
        if (f.id == id) return &f;
    return nullptr;
}

const Process* InventoryDatabase::find_process(std::string_view id) const {
    for (const auto& p : processes)
        if (p.id == id) return &p;
    return nullptr;
}

const Process* InventoryDatabase::provider_of(std::string_view flow_id) const {
    for (const auto& p : processes)
        if (p.reference_product.flow_id == flow_id) return &p;
    return nullptr;
}

namespace {

void check_exchange(const InventoryDatabase& db, const Process& p, const Exchange& ex,
                    bool is_reference, std::vector<ValidationFinding>& out) {
    const Flow* flow = db.find_flow(ex.flow_id);
    if (!flow) {
        out.push_back({"DANGLING_FLOW", p.id, ex.flow_id,
                       "process " + p.id + " references unknown flow " + ex.flow_id});
        return;
    }
    if (ex.unit.dimension != flow->unit.dimension) {
        out.push_back({"UNIT_MISMATCH", p.id, ex.flow_id,
                       "exchange unit " + ex.unit.symbol + " does not match dimension of flow " +
                           ex.flow_id});
    }
    if (is_reference) {
        if (!(ex.amount > 0.0) || !std::isfinite(ex.amount) || ex.direction != Direction::output ||
            flow->kind != FlowKind::product) {
            out.push_back({"NONPOSITIVE_REFERENCE", p.id, ex.flow_id,
                           "reference product of " + p.id +
                               " must be a positive product output"});
        }
    } else if (ex.amount < 0.0 || !std::isfinite(ex.amount)) {
        out.push_back({"NEGATIVE_AMOUNT", p.id, ex.flow_id,
                       "exchange amount must be finite and non-negative"});
    }
}

}  // namespace

ValidationReport validate_database(const InventoryDatabase& db) {
    ValidationReport report;
    auto& out = report.findings;

    std::set<std::string> flow_ids;
    for (const auto& f : db.flows) {
        if (!flow_ids.insert(f.id).second)
            out.push_back({"DUPLICATE_ID", "", f.id, "duplicate flow id " + f.id});
    }

    std::map<std::string, int> providers;  // product flow id -> provider count
    std::set<std::string> process_ids;
    for (const auto& p : db.processes) {
        if (!process_ids.insert(p.id).second)
            out.push_back({"DUPLICATE_ID", p.id, "", "duplicate process id " + p.id});
        check_exchange(db, p, p.reference_product, true, out);
        providers[p.reference_product.flow_id] += 1;
        for (const auto& ex : p.exchanges) check_exchange(db, p, ex, false, out);
    }

    for (const auto& [flow_id, count] : providers) {
        if (count > 1)
            out.push_back({"DUPLICATE_PROVIDER", "", flow_id,
                           "product flow " + flow_id + " has " + std::to_string(count) +
                               " providers"});
    }

    // every product input must be supplied by some process
    for (const auto& p : db.processes) {
        for (const auto& ex : p.exchanges) {
            const Flow* flow = db.find_flow(ex.flow_id);
            if (!flow || flow->kind != FlowKind::product) continue;
            if (ex.direction == Direction::input && providers.find(ex.flow_id) == providers.end()) {
                out.push_back({"MISSING_PROVIDER", p.id, ex.flow_id,
                               "no process produces " + ex.flow_id + " required by " + p.id});
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.code, a.process_id, a.flow_id) < std::tie(b.code, b.process_id, b.flow_id);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) {
                              return a.code == b.code && a.process_id == b.process_id &&
                                     a.flow_id == b.flow_id;
                          }),
              out.end());
    return report;
}

}  // namespace mgslca
