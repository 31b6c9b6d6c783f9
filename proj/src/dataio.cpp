#include "mgslca/dataio.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace mgslca {

using nlohmann::json;
using nlohmann::ordered_json;

const ImpactMethod* Dataset::find_method(std::string_view id) const {
    for (const auto& m : methods)
        if (m.id == id) return &m;
    return nullptr;
}

const CellDesign* Dataset::find_cell(std::string_view name) const {
    for (const auto& c : cells)
        if (c.name == name) return &c;
    return nullptr;
}

const PackDesign* Dataset::find_pack(std::string_view name) const {
    for (const auto& p : packs)
        if (p.name == name) return &p;
    return nullptr;
}

const Scenario* Dataset::find_scenario(std::string_view id) const {
    for (const auto& s : scenarios)
        if (s.id == id) return &s;
    return nullptr;
}

namespace {

class Parser {
public:
    std::vector<ParseDiagnostic> diags;
    bool failed = false;

    void error(const std::string& path, const std::string& code, const std::string& msg) {
        diags.push_back({Severity::error, path, code, msg});
        failed = true;
    }
    void warn(const std::string& path, const std::string& code, const std::string& msg) {
        diags.push_back({Severity::warning, path, code, msg});
    }

    void check_unknown(const json& obj, const std::string& path,
                       std::initializer_list<const char*> known) {
        if (!obj.is_object()) return;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool found = false;
            for (const char* k : known)
                if (it.key() == k) { found = true; break; }
            if (!found)
                warn(path + "/" + it.key(), "UNKNOWN_FIELD", "unrecognized field ignored");
        }
    }

    const json* require(const json& obj, const char* key, const std::string& path) {
        if (!obj.is_object() || !obj.contains(key)) {
            error(path, "MISSING_FIELD", std::string("missing required field '") + key + "'");
            return nullptr;
        }
        return &obj.at(key);
    }

    std::optional<std::string> require_string(const json& obj, const char* key,
                                              const std::string& path) {
        const json* v = require(obj, key, path);
        if (!v) return std::nullopt;
        if (!v->is_string()) {
            error(path + "/" + key, "BAD_VALUE", "expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    std::optional<double> require_number(const json& obj, const char* key,
                                         const std::string& path) {
        const json* v = require(obj, key, path);
        if (!v) return std::nullopt;
        if (!v->is_number()) {
            error(path + "/" + key, "BAD_VALUE", "expected a number");
            return std::nullopt;
        }
        return v->get<double>();
    }

    std::optional<Unit> require_unit(const json& obj, const std::string& path) {
        auto sym = require_string(obj, "unit", path);
        if (!sym) return std::nullopt;
        if (!is_known_unit(*sym)) {
            error(path + "/unit", "BAD_UNIT", "unknown unit symbol '" + *sym + "'");
            return std::nullopt;
        }
        return unit(*sym);
    }

    /// {"amount": x, "unit": "mg"}
    std::optional<std::pair<double, Unit>> quantity(const json& obj, const char* key,
                                                    const std::string& path) {
        const json* v = require(obj, key, path);
        if (!v) return std::nullopt;
        const std::string qpath = path + "/" + key;
        if (!v->is_object()) {
            error(qpath, "BAD_VALUE", "expected {amount, unit}");
            return std::nullopt;
        }
        check_unknown(*v, qpath, {"amount", "unit"});
        auto amount = require_number(*v, "amount", qpath);
        auto u = require_unit(*v, qpath);
        if (!amount || !u) return std::nullopt;
        return std::make_pair(*amount, *u);
    }
};

Exchange parse_exchange(Parser& p, const json& j, const std::string& path, bool with_direction) {
    Exchange ex;
    if (with_direction)
        p.check_unknown(j, path, {"flow", "amount", "unit", "direction"});
    else
        p.check_unknown(j, path, {"flow", "amount", "unit"});
    if (auto flow = p.require_string(j, "flow", path)) ex.flow_id = *flow;
    if (auto amount = p.require_number(j, "amount", path)) ex.amount = *amount;
    if (auto u = p.require_unit(j, path)) ex.unit = *u;
    ex.direction = Direction::output;
    if (with_direction) {
        if (auto dir = p.require_string(j, "direction", path)) {
            if (*dir == "input") ex.direction = Direction::input;
            else if (*dir == "output") ex.direction = Direction::output;
            else p.error(path + "/direction", "BAD_VALUE", "direction must be input or output");
        }
    }
    return ex;
}

void parse_flows(Parser& p, const json& arr, InventoryDatabase& db) {
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/flows/" + std::to_string(i);
        const json& j = arr[i];
        if (!j.is_object()) { p.error(path, "BAD_VALUE", "expected an object"); continue; }
        p.check_unknown(j, path, {"id", "name", "kind", "unit", "compartment"});
        Flow f;
        if (auto id = p.require_string(j, "id", path)) f.id = *id;
        if (auto name = p.require_string(j, "name", path)) f.name = *name;
        if (auto kind = p.require_string(j, "kind", path)) {
            if (*kind == "product") f.kind = FlowKind::product;
            else if (*kind == "elementary") f.kind = FlowKind::elementary;
            else p.error(path + "/kind", "BAD_VALUE", "kind must be product or elementary");
        }
        if (auto u = p.require_unit(j, path)) f.unit = *u;
        if (j.contains("compartment")) {
            if (j.at("compartment").is_string())
                f.compartment = j.at("compartment").get<std::string>();
            else
                p.error(path + "/compartment", "BAD_VALUE", "expected a string");
        }
        if (f.kind == FlowKind::elementary && !f.compartment)
            p.error(path, "MISSING_FIELD", "elementary flow needs a compartment");
        if (f.kind == FlowKind::product && f.compartment)
            p.error(path + "/compartment", "BAD_VALUE", "product flows carry no compartment");
        db.flows.push_back(std::move(f));
    }
}

void parse_processes(Parser& p, const json& arr, InventoryDatabase& db) {
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/processes/" + std::to_string(i);
        const json& j = arr[i];
        if (!j.is_object()) { p.error(path, "BAD_VALUE", "expected an object"); continue; }
        p.check_unknown(j, path, {"id", "name", "reference_product", "exchanges"});
        Process proc;
        if (auto id = p.require_string(j, "id", path)) proc.id = *id;
        if (auto name = p.require_string(j, "name", path)) proc.name = *name;
        if (const json* rp = p.require(j, "reference_product", path))
            proc.reference_product = parse_exchange(p, *rp, path + "/reference_product", false);
        if (j.contains("exchanges")) {
            const json& exs = j.at("exchanges");
            if (!exs.is_array()) {
                p.error(path + "/exchanges", "BAD_VALUE", "expected an array");
            } else {
                for (size_t k = 0; k < exs.size(); ++k)
                    proc.exchanges.push_back(parse_exchange(
                        p, exs[k], path + "/exchanges/" + std::to_string(k), true));
            }
        }
        db.processes.push_back(std::move(proc));
    }
}

void parse_methods(Parser& p, const json& arr, std::vector<ImpactMethod>& out) {
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/methods/" + std::to_string(i);
        const json& j = arr[i];
        if (!j.is_object()) { p.error(path, "BAD_VALUE", "expected an object"); continue; }
        p.check_unknown(j, path, {"id", "categories"});
        ImpactMethod m;
        if (auto id = p.require_string(j, "id", path)) m.id = *id;
        if (const json* cats = p.require(j, "categories", path); cats && cats->is_array()) {
            for (size_t k = 0; k < cats->size(); ++k) {
                const std::string cpath = path + "/categories/" + std::to_string(k);
                const json& cj = (*cats)[k];
                if (!cj.is_object()) { p.error(cpath, "BAD_VALUE", "expected an object"); continue; }
                p.check_unknown(cj, cpath, {"id", "name", "unit", "factors"});
                ImpactCategory cat;
                if (auto id = p.require_string(cj, "id", cpath)) cat.id = *id;
                if (auto name = p.require_string(cj, "name", cpath)) cat.name = *name;
                if (auto u = p.require_string(cj, "unit", cpath)) cat.unit = *u;
                if (const json* facs = p.require(cj, "factors", cpath)) {
                    if (!facs->is_object()) {
                        p.error(cpath + "/factors", "BAD_VALUE", "expected an object");
                    } else {
                        for (auto it = facs->begin(); it != facs->end(); ++it) {
                            if (!it.value().is_number())
                                p.error(cpath + "/factors/" + it.key(), "BAD_VALUE",
                                        "expected a number");
                            else
                                cat.factors[it.key()] = it.value().get<double>();
                        }
                    }
                }
                m.categories.push_back(std::move(cat));
            }
        }
        out.push_back(std::move(m));
    }
}

void parse_cells(Parser& p, const json& arr, std::vector<CellDesign>& out) {
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/cells/" + std::to_string(i);
        const json& j = arr[i];
        if (!j.is_object()) { p.error(path, "BAD_VALUE", "expected an object"); continue; }
        p.check_unknown(j, path, {"name", "cell_energy", "components"});
        CellDesign cell;
        if (auto name = p.require_string(j, "name", path)) cell.name = *name;
        if (auto e = p.quantity(j, "cell_energy", path)) {
            if (e->second.dimension != Dimension::energy)
                p.error(path + "/cell_energy/unit", "BAD_UNIT", "expected an energy unit");
            else
                cell.cell_energy_wh = convert_amount(e->first, e->second, unit("Wh"));
        }
        if (const json* comps = p.require(j, "components", path); comps && comps->is_array()) {
            for (size_t k = 0; k < comps->size(); ++k) {
                const std::string cpath = path + "/components/" + std::to_string(k);
                const json& cj = (*comps)[k];
                if (!cj.is_object()) { p.error(cpath, "BAD_VALUE", "expected an object"); continue; }
                p.check_unknown(cj, cpath, {"role", "material", "mass"});
                CellComponent comp;
                if (auto role = p.require_string(cj, "role", cpath)) {
                    try {
                        comp.role = role_from_name(*role);
                    } catch (const LcaError&) {
                        p.error(cpath + "/role", "BAD_VALUE", "unknown role '" + *role + "'");
                    }
                }
                if (auto mat = p.require_string(cj, "material", cpath)) comp.material = *mat;
                if (auto m = p.quantity(cj, "mass", cpath)) {
                    if (m->second.dimension != Dimension::mass)
                        p.error(cpath + "/mass/unit", "BAD_UNIT", "expected a mass unit");
                    else
                        comp.mass_mg = convert_amount(m->first, m->second, unit("mg"));
                }
                cell.components.push_back(std::move(comp));
            }
        }
        out.push_back(std::move(cell));
    }
}

void parse_packs(Parser& p, const json& arr, std::vector<PackDesign>& out) {
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/packs/" + std::to_string(i);
        const json& j = arr[i];
        if (!j.is_object()) { p.error(path, "BAD_VALUE", "expected an object"); continue; }
        p.check_unknown(j, path,
                        {"name", "cell_share", "housing_share", "bms_share", "pack_mass",
                         "housing_material", "bms_material", "manufacture_material"});
        PackDesign pack;
        if (auto name = p.require_string(j, "name", path)) pack.name = *name;
        if (auto v = p.require_number(j, "cell_share", path)) pack.cell_share = *v;
        if (auto v = p.require_number(j, "housing_share", path)) pack.housing_share = *v;
        if (auto v = p.require_number(j, "bms_share", path)) pack.bms_share = *v;
        if (auto m = p.quantity(j, "pack_mass", path)) {
            if (m->second.dimension != Dimension::mass)
                p.error(path + "/pack_mass/unit", "BAD_UNIT", "expected a mass unit");
            else
                pack.pack_mass_kg = convert_amount(m->first, m->second, unit("kg"));
        }
        if (j.contains("housing_material") && j.at("housing_material").is_string())
            pack.housing_material = j.at("housing_material").get<std::string>();
        if (j.contains("bms_material") && j.at("bms_material").is_string())
            pack.bms_material = j.at("bms_material").get<std::string>();
        if (j.contains("manufacture_material") && j.at("manufacture_material").is_string())
            pack.manufacture_material = j.at("manufacture_material").get<std::string>();
        const double sum = pack.cell_share + pack.housing_share + pack.bms_share;
        if (std::abs(sum - 1.0) > 1e-9)
            p.error(path, "BAD_VALUE", "pack shares must sum to 1, got " + std::to_string(sum));
        out.push_back(std::move(pack));
    }
}

void parse_scenarios(Parser& p, const json& arr, std::vector<Scenario>& out) {
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/scenarios/" + std::to_string(i);
        const json& j = arr[i];
        if (!j.is_object()) { p.error(path, "BAD_VALUE", "expected an object"); continue; }
        p.check_unknown(j, path, {"id", "overrides"});
        Scenario sc;
        if (auto id = p.require_string(j, "id", path)) sc.id = *id;
        if (const json* ovs = p.require(j, "overrides", path); ovs && ovs->is_array()) {
            for (size_t k = 0; k < ovs->size(); ++k) {
                const std::string opath = path + "/overrides/" + std::to_string(k);
                const json& oj = (*ovs)[k];
                if (!oj.is_object()) { p.error(opath, "BAD_VALUE", "expected an object"); continue; }
                Override ov;
                auto kind = p.require_string(oj, "kind", opath);
                if (!kind) continue;
                if (*kind == "replace_provider") {
                    p.check_unknown(oj, opath, {"kind", "product_flow", "new_process"});
                    ov.kind = OverrideKind::replace_provider;
                    if (auto v = p.require_string(oj, "product_flow", opath)) ov.product_flow = *v;
                    if (auto v = p.require_string(oj, "new_process", opath)) ov.new_process = *v;
                } else if (*kind == "scale_exchange") {
                    p.check_unknown(oj, opath, {"kind", "process", "flow", "factor"});
                    ov.kind = OverrideKind::scale_exchange;
                    if (auto v = p.require_string(oj, "process", opath)) ov.process = *v;
                    if (auto v = p.require_string(oj, "flow", opath)) ov.flow = *v;
                    if (auto v = p.require_number(oj, "factor", opath)) ov.factor = *v;
                    if (ov.factor < 0.0)
                        p.error(opath + "/factor", "BAD_VALUE", "factor must be >= 0");
                } else if (*kind == "set_component_mass") {
                    p.check_unknown(oj, opath, {"kind", "cell", "role", "mass"});
                    ov.kind = OverrideKind::set_component_mass;
                    if (auto v = p.require_string(oj, "cell", opath)) ov.cell = *v;
                    if (auto role = p.require_string(oj, "role", opath)) {
                        try {
                            ov.role = role_from_name(*role);
                        } catch (const LcaError&) {
                            p.error(opath + "/role", "BAD_VALUE", "unknown role '" + *role + "'");
                        }
                    }
                    if (auto m = p.quantity(oj, "mass", opath)) {
                        if (m->second.dimension != Dimension::mass)
                            p.error(opath + "/mass/unit", "BAD_UNIT", "expected a mass unit");
                        else
                            ov.new_mass_mg = convert_amount(m->first, m->second, unit("mg"));
                    }
                } else {
                    p.error(opath + "/kind", "BAD_VALUE", "unknown override kind '" + *kind + "'");
                    continue;
                }
                sc.overrides.push_back(std::move(ov));
            }
        }
        out.push_back(std::move(sc));
    }
}

void parse_comparisons(Parser& p, const json& arr, std::vector<ComparisonEntry>& out) {
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/comparisons/" + std::to_string(i);
        const json& j = arr[i];
        if (!j.is_object()) { p.error(path, "BAD_VALUE", "expected an object"); continue; }
        p.check_unknown(j, path,
                        {"name", "original_density", "adjusted_density", "method",
                         "per_wh_impacts"});
        ComparisonEntry e;
        if (auto name = p.require_string(j, "name", path)) e.name = *name;
        if (auto v = p.require_number(j, "original_density", path)) e.original_density_wh_kg = *v;
        if (auto v = p.require_number(j, "adjusted_density", path)) e.adjusted_density_wh_kg = *v;
        if (auto v = p.require_string(j, "method", path)) e.method = *v;
        if (const json* imps = p.require(j, "per_wh_impacts", path)) {
            if (!imps->is_object()) {
                p.error(path + "/per_wh_impacts", "BAD_VALUE", "expected an object");
            } else {
                for (auto it = imps->begin(); it != imps->end(); ++it) {
                    if (!it.value().is_number())
                        p.error(path + "/per_wh_impacts/" + it.key(), "BAD_VALUE",
                                "expected a number");
                    else
                        e.per_wh_impacts.per_category[it.key()] = it.value().get<double>();
                }
            }
        }
        if (!(e.original_density_wh_kg > 0.0) || !(e.adjusted_density_wh_kg > 0.0))
            p.error(path, "BAD_VALUE", "densities must be positive");
        out.push_back(std::move(e));
    }
}

void check_cross_references(Parser& p, const Dataset& ds) {
    auto flow_known = [&](const std::string& id) { return ds.database.find_flow(id) != nullptr; };
    for (size_t i = 0; i < ds.cells.size(); ++i) {
        for (size_t k = 0; k < ds.cells[i].components.size(); ++k) {
            const auto& comp = ds.cells[i].components[k];
            if (!comp.material.empty() && !flow_known(comp.material))
                p.error("/cells/" + std::to_string(i) + "/components/" + std::to_string(k) +
                            "/material",
                        "DANGLING_REF", "undefined flow '" + comp.material + "'");
        }
    }
    for (size_t i = 0; i < ds.packs.size(); ++i) {
        const auto& pack = ds.packs[i];
        if (!pack.housing_material.empty() && !flow_known(pack.housing_material))
            p.error("/packs/" + std::to_string(i) + "/housing_material", "DANGLING_REF",
                    "undefined flow '" + pack.housing_material + "'");
        if (!pack.bms_material.empty() && !flow_known(pack.bms_material))
            p.error("/packs/" + std::to_string(i) + "/bms_material", "DANGLING_REF",
                    "undefined flow '" + pack.bms_material + "'");
        if (!pack.manufacture_material.empty() && !flow_known(pack.manufacture_material))
            p.error("/packs/" + std::to_string(i) + "/manufacture_material", "DANGLING_REF",
                    "undefined flow '" + pack.manufacture_material + "'");
    }
    for (size_t i = 0; i < ds.database.processes.size(); ++i) {
        const auto& proc = ds.database.processes[i];
        if (!proc.reference_product.flow_id.empty() && !flow_known(proc.reference_product.flow_id))
            p.error("/processes/" + std::to_string(i) + "/reference_product/flow", "DANGLING_REF",
                    "undefined flow '" + proc.reference_product.flow_id + "'");
        for (size_t k = 0; k < proc.exchanges.size(); ++k) {
            if (!proc.exchanges[k].flow_id.empty() && !flow_known(proc.exchanges[k].flow_id))
                p.error("/processes/" + std::to_string(i) + "/exchanges/" + std::to_string(k) +
                            "/flow",
                        "DANGLING_REF", "undefined flow '" + proc.exchanges[k].flow_id + "'");
        }
    }
    for (size_t i = 0; i < ds.comparisons.size(); ++i) {
        if (!ds.find_method(ds.comparisons[i].method))
            p.error("/comparisons/" + std::to_string(i) + "/method", "DANGLING_REF",
                    "undefined method '" + ds.comparisons[i].method + "'");
    }
}

}  // namespace

ParseResult parse(std::string_view text) {
    ParseResult result;
    Parser p;

    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        p.error("", "SYNTAX", "document is not valid JSON");
        result.diagnostics = std::move(p.diags);
        return result;
    }
    if (!doc.is_object()) {
        p.error("", "SYNTAX", "top level must be an object");
        result.diagnostics = std::move(p.diags);
        return result;
    }

    p.check_unknown(doc, "",
                    {"format_version", "name", "version", "flows", "processes", "methods",
                     "cells", "packs", "scenarios", "comparisons"});

    Dataset ds;
    if (auto v = p.require_string(doc, "format_version", "")) {
        ds.format_version = *v;
        if (*v != kFormatVersion)
            p.error("/format_version", "VERSION_UNSUPPORTED",
                    "unsupported format version '" + *v + "'");
    }
    if (doc.contains("name") && doc.at("name").is_string())
        ds.database.name = doc.at("name").get<std::string>();
    if (doc.contains("version") && doc.at("version").is_string())
        ds.database.version = doc.at("version").get<std::string>();

    auto section = [&](const char* key) -> const json* {
        if (!doc.contains(key)) return nullptr;
        if (!doc.at(key).is_array()) {
            p.error(std::string("/") + key, "BAD_VALUE", "expected an array");
            return nullptr;
        }
        return &doc.at(key);
    };

    if (const json* arr = section("flows")) parse_flows(p, *arr, ds.database);
    if (const json* arr = section("processes")) parse_processes(p, *arr, ds.database);
    if (const json* arr = section("methods")) parse_methods(p, *arr, ds.methods);
    if (const json* arr = section("cells")) parse_cells(p, *arr, ds.cells);
    if (const json* arr = section("packs")) parse_packs(p, *arr, ds.packs);
    if (const json* arr = section("scenarios")) parse_scenarios(p, *arr, ds.scenarios);
    if (const json* arr = section("comparisons")) parse_comparisons(p, *arr, ds.comparisons);

    if (!p.failed) check_cross_references(p, ds);

    result.diagnostics = std::move(p.diags);
    if (!p.failed) result.dataset = std::move(ds);
    return result;
}

ParseResult parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult r;
        r.diagnostics.push_back({Severity::error, "", "IO", "cannot open file " + path});
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

namespace {

ordered_json emit_exchange(const Exchange& ex, bool with_direction) {
    ordered_json j;
    j["flow"] = ex.flow_id;
    j["amount"] = ex.amount;
    j["unit"] = ex.unit.symbol;
    if (with_direction) j["direction"] = ex.direction == Direction::input ? "input" : "output";
    return j;
}

ordered_json quantity_json(double amount, const char* unit_symbol) {
    ordered_json j;
    j["amount"] = amount;
    j["unit"] = unit_symbol;
    return j;
}

}  // namespace

std::string emit(const Dataset& ds) {
    ordered_json doc;
    doc["format_version"] = ds.format_version;
    doc["name"] = ds.database.name;
    doc["version"] = ds.database.version;

    doc["flows"] = ordered_json::array();
    for (const auto& f : ds.database.flows) {
        ordered_json j;
        j["id"] = f.id;
        j["name"] = f.name;
        j["kind"] = f.kind == FlowKind::product ? "product" : "elementary";
        j["unit"] = f.unit.symbol;
        if (f.compartment) j["compartment"] = *f.compartment;
        doc["flows"].push_back(std::move(j));
    }

    doc["processes"] = ordered_json::array();
    for (const auto& proc : ds.database.processes) {
        ordered_json j;
        j["id"] = proc.id;
        j["name"] = proc.name;
        j["reference_product"] = emit_exchange(proc.reference_product, false);
        j["exchanges"] = ordered_json::array();
        for (const auto& ex : proc.exchanges) j["exchanges"].push_back(emit_exchange(ex, true));
        doc["processes"].push_back(std::move(j));
    }

    doc["methods"] = ordered_json::array();
    for (const auto& m : ds.methods) {
        ordered_json j;
        j["id"] = m.id;
        j["categories"] = ordered_json::array();
        for (const auto& c : m.categories) {
            ordered_json cj;
            cj["id"] = c.id;
            cj["name"] = c.name;
            cj["unit"] = c.unit;
            cj["factors"] = ordered_json::object();
            for (const auto& [fid, factor] : c.factors) cj["factors"][fid] = factor;
            j["categories"].push_back(std::move(cj));
        }
        doc["methods"].push_back(std::move(j));
    }

    doc["cells"] = ordered_json::array();
    for (const auto& cell : ds.cells) {
        ordered_json j;
        j["name"] = cell.name;
        j["cell_energy"] = quantity_json(cell.cell_energy_wh, "Wh");
        j["components"] = ordered_json::array();
        for (const auto& comp : cell.components) {
            ordered_json cj;
            cj["role"] = std::string(role_name(comp.role));
            cj["material"] = comp.material;
            cj["mass"] = quantity_json(comp.mass_mg, "mg");
            j["components"].push_back(std::move(cj));
        }
        doc["cells"].push_back(std::move(j));
    }

    doc["packs"] = ordered_json::array();
    for (const auto& pack : ds.packs) {
        ordered_json j;
        j["name"] = pack.name;
        j["cell_share"] = pack.cell_share;
        j["housing_share"] = pack.housing_share;
        j["bms_share"] = pack.bms_share;
        j["pack_mass"] = quantity_json(pack.pack_mass_kg, "kg");
        if (!pack.housing_material.empty()) j["housing_material"] = pack.housing_material;
        if (!pack.bms_material.empty()) j["bms_material"] = pack.bms_material;
        if (!pack.manufacture_material.empty())
            j["manufacture_material"] = pack.manufacture_material;
        doc["packs"].push_back(std::move(j));
    }

    doc["scenarios"] = ordered_json::array();
    for (const auto& sc : ds.scenarios) {
        ordered_json j;
        j["id"] = sc.id;
        j["overrides"] = ordered_json::array();
        for (const auto& ov : sc.overrides) {
            ordered_json oj;
            switch (ov.kind) {
                case OverrideKind::replace_provider:
                    oj["kind"] = "replace_provider";
                    oj["product_flow"] = ov.product_flow;
                    oj["new_process"] = ov.new_process;
                    break;
                case OverrideKind::scale_exchange:
                    oj["kind"] = "scale_exchange";
                    oj["process"] = ov.process;
                    oj["flow"] = ov.flow;
                    oj["factor"] = ov.factor;
                    break;
                case OverrideKind::set_component_mass:
                    oj["kind"] = "set_component_mass";
                    oj["cell"] = ov.cell;
                    oj["role"] = std::string(role_name(ov.role));
                    oj["mass"] = quantity_json(ov.new_mass_mg, "mg");
                    break;
            }
            j["overrides"].push_back(std::move(oj));
        }
        doc["scenarios"].push_back(std::move(j));
    }

    doc["comparisons"] = ordered_json::array();
    for (const auto& e : ds.comparisons) {
        ordered_json j;
        j["name"] = e.name;
        j["original_density"] = e.original_density_wh_kg;
        j["adjusted_density"] = e.adjusted_density_wh_kg;
        j["method"] = e.method;
        j["per_wh_impacts"] = ordered_json::object();
        for (const auto& [cat, v] : e.per_wh_impacts.per_category) j["per_wh_impacts"][cat] = v;
        doc["comparisons"].push_back(std::move(j));
    }

    return doc.dump(2) + "\n";
}

}  // namespace mgslca
