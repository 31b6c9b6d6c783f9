#include <doctest.h>

#include <algorithm>

#include "testutil.hpp"

using namespace mgslca;
using namespace mgslca::testutil;

namespace {

bool has_finding(const ValidationReport& r, const std::string& code) {
    return std::any_of(r.findings.begin(), r.findings.end(),
                       [&](const auto& f) { return f.code == code; });
}

}  // namespace

TEST_CASE("well-formed chain validates clean") {
    CHECK(validate_database(chain_fixture()).ok());
}

TEST_CASE("product input without provider") {
    InventoryDatabase db = chain_fixture();
    db.processes.erase(db.processes.begin());  // drop P, Q still inputs electricity
    ValidationReport r = validate_database(db);
    CHECK(has_finding(r, "MISSING_PROVIDER"));
    CHECK(r.findings.size() == 1);
    CHECK(r.findings.front().process_id == "Q");
    CHECK(r.findings.front().flow_id == "electricity");
}

TEST_CASE("two processes sharing a reference product") {
    InventoryDatabase db = chain_fixture();
    Process dup = db.processes.front();
    dup.id = "P2";
    db.processes.push_back(dup);
    ValidationReport r = validate_database(db);
    CHECK(has_finding(r, "DUPLICATE_PROVIDER"));
}

TEST_CASE("dangling flow reference") {
    InventoryDatabase db = chain_fixture();
    db.processes[1].exchanges.push_back({"nope", 1.0, unit("kg"), Direction::input});
    CHECK(has_finding(validate_database(db), "DANGLING_FLOW"));
}

TEST_CASE("exchange unit dimension mismatch") {
    InventoryDatabase db = chain_fixture();
    db.processes[1].exchanges[0].unit = unit("kg");  // electricity input in kg
    CHECK(has_finding(validate_database(db), "UNIT_MISMATCH"));
}

TEST_CASE("nonpositive reference product") {
    InventoryDatabase db = chain_fixture();
    db.processes[0].reference_product.amount = 0.0;
    CHECK(has_finding(validate_database(db), "NONPOSITIVE_REFERENCE"));
}

TEST_CASE("negative exchange amounts are rejected") {
    InventoryDatabase db = chain_fixture();
    db.processes[0].exchanges[0].amount = -0.5;
    CHECK(has_finding(validate_database(db), "NEGATIVE_AMOUNT"));
}

TEST_CASE("validation is order-independent and idempotent") {
    InventoryDatabase db = chain_fixture();
    db.processes[1].exchanges.push_back({"nope", 1.0, unit("kg"), Direction::input});
    ValidationReport a = validate_database(db);
    std::reverse(db.processes.begin(), db.processes.end());
    ValidationReport b = validate_database(db);
    REQUIRE(a.findings.size() == b.findings.size());
    for (size_t i = 0; i < a.findings.size(); ++i) {
        CHECK(a.findings[i].code == b.findings[i].code);
        CHECK(a.findings[i].flow_id == b.findings[i].flow_id);
    }
    ValidationReport again = validate_database(db);
    CHECK(again.findings.size() == b.findings.size());
}
