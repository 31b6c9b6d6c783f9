// Command-line front end: loads .lca.json datasets and runs the analyses
// (validation, per-Wh impacts, contribution analysis, cell evolution, anode
// sizing, CED break-even, cross-chemistry comparison, scenario sweeps).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mgslca/battery.hpp"
#include "mgslca/engine.hpp"
#include "mgslca/report.hpp"

using namespace mgslca;

namespace {

struct CommonOpts {
    std::string dataset;
    std::string format = "table";
    std::string method;
    std::string cell;
    std::string pack;
    std::string scenario;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_run_ids) {
    cmd->add_option("--dataset", o.dataset, "Path to a .lca.json dataset")->required();
    cmd->add_option("--format", o.format, "Output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", o.out, "Write the report to a file instead of stdout");
    if (needs_run_ids) {
        cmd->add_option("--method", o.method, "Impact method id")->required();
        cmd->add_option("--cell", o.cell, "Cell design name")->required();
        cmd->add_option("--pack", o.pack, "Pack design name")->required();
        cmd->add_option("--scenario", o.scenario, "Scenario id to apply first");
    }
}

int write_report(const Report& report, const CommonOpts& o) {
    const std::string text = report.render(output_format_from_name(o.format));
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

Dataset load_dataset(const std::string& path) {
    ParseResult r = parse_file(path);
    for (const auto& d : r.diagnostics) {
        if (d.code == "IO") {
            std::cerr << "error: " << d.message << "\n";
            std::exit(2);
        }
    }
    if (!r.ok()) {
        for (const auto& d : r.diagnostics)
            std::cerr << (d.severity == Severity::error ? "error" : "warning") << " " << d.code
                      << " at " << (d.path.empty() ? "/" : d.path) << ": " << d.message << "\n";
        std::exit(1);
    }
    return std::move(*r.dataset);
}

int cmd_validate(const std::string& path) {
    ParseResult r = parse_file(path);
    for (const auto& d : r.diagnostics) {
        if (d.code == "IO") {
            std::cerr << "error: " << d.message << "\n";
            return 2;
        }
    }
    bool has_errors = false;
    for (const auto& d : r.diagnostics) {
        std::cerr << (d.severity == Severity::error ? "error" : "warning") << " " << d.code
                  << " at " << (d.path.empty() ? "/" : d.path) << ": " << d.message << "\n";
        if (d.severity == Severity::error) has_errors = true;
    }
    if (!r.ok()) return 1;
    ValidationReport report = validate_database(r.dataset->database);
    for (const auto& f : report.findings) {
        std::cerr << "error " << f.code << ": " << f.message << "\n";
        has_errors = true;
    }
    return has_errors ? 1 : 0;
}

int cmd_impacts(const CommonOpts& o) {
    Dataset ds = load_dataset(o.dataset);
    AnalysisRun run = AnalysisRun::resolve(ds, o.method, o.cell, o.pack, o.scenario);
    ImpactResult result = run.impacts();

    Report report;
    report.columns = {"category", "value", "unit", "coverage"};
    for (const auto& cat : run.method.categories)
        report.add_row({cat.id, result.per_category.at(cat.id), cat.unit,
                        result.coverage.at(cat.id)});
    return write_report(report, o);
}

int cmd_contrib(const CommonOpts& o) {
    Dataset ds = load_dataset(o.dataset);
    AnalysisRun run = AnalysisRun::resolve(ds, o.method, o.cell, o.pack, o.scenario);
    ContributionTable table = run.contribution_table();

    Report report;
    report.columns = {"category", "group", "value", "share_percent"};
    for (const auto& cat : run.method.categories)
        for (const auto& label : table.group_labels) {
            const auto& row = table.rows.at({cat.id, label});
            report.add_row({cat.id, label, row.value, row.share * 100.0});
        }
    return write_report(report, o);
}

int cmd_evolve(const CommonOpts& o, const std::vector<std::string>& targets,
               const std::vector<std::string>& preserved) {
    Dataset ds = load_dataset(o.dataset);
    const CellDesign* base = ds.find_cell(o.cell);
    if (!base) throw LcaError("UNKNOWN_ID", "unknown cell: " + o.cell);

    EvolutionSpec spec;
    for (const auto& t : targets) {
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw LcaError("BAD_TARGET", "expected role=share, got: " + t);
        spec.target_shares[role_from_name(t.substr(0, eq))] = std::stod(t.substr(eq + 1));
    }
    for (const auto& r : preserved) spec.preserved_share_roles.insert(role_from_name(r));

    CellDesign evolved = derive_evolution(*base, spec);
    const auto shares = mass_shares(evolved);

    Report report;
    report.columns = {"role", "material", "mass_mg", "share_percent"};
    for (const auto& comp : evolved.components)
        report.add_row({std::string(role_name(comp.role)), comp.material, comp.mass_mg,
                        shares.at(comp.role) * 100.0});
    report.add_row({std::string("total"), std::string(""), evolved.total_mass_mg(), 100.0});
    report.add_row({std::string("energy_density_wh_kg"), std::string(""),
                    cell_energy_density(evolved), 0.0});
    return write_report(report, o);
}

int cmd_anode(const CommonOpts& o, const AnodeSizingInput& input) {
    CollectorResult collector = collector_min(input);
    const double matched = capacity_match(input.cathode_active_mass_mg,
                                          input.cathode_specific_capacity_ah_g,
                                          input.anode_specific_capacity_ah_g);
    const double total = optimized_anode_mass(input);

    Report report;
    report.columns = {"quantity", "value", "unit"};
    report.add_row({std::string("collector_min_thickness"), collector.thickness_um,
                    std::string("um")});
    report.add_row({std::string("collector_min_mass"), collector.mass_mg, std::string("mg")});
    report.add_row({std::string("capacity_matched_mass"), matched, std::string("mg")});
    report.add_row({std::string("optimized_anode_mass"), total, std::string("mg")});
    return write_report(report, o);
}

int cmd_breakeven(const CommonOpts& o, double ced_per_wh, double energy_return) {
    Report report;
    report.columns = {"ced_per_wh", "energy_return_per_cycle", "break_even_cycles"};
    report.add_row({ced_per_wh, energy_return, break_even_cycles(ced_per_wh, energy_return)});
    return write_report(report, o);
}

int cmd_compare(const CommonOpts& o) {
    Dataset ds = load_dataset(o.dataset);
    const ImpactMethod* method = ds.find_method(o.method);
    if (!method) throw LcaError("UNKNOWN_ID", "unknown method: " + o.method);
    ComparisonTable table = compare(ds.comparisons, *method);

    Report report;
    report.columns = {"system", "original_density_wh_kg", "adjusted_density_wh_kg",
                      "category", "value", "ratio_to_best"};
    for (const auto& name : table.system_names) {
        const ComparisonEntry* entry = nullptr;
        for (const auto& e : ds.comparisons)
            if (e.name == name) entry = &e;
        for (const auto& cat : table.category_ids)
            report.add_row({name, entry->original_density_wh_kg, entry->adjusted_density_wh_kg,
                            cat, table.values.at({name, cat}),
                            table.ratio_to_best.at({name, cat})});
    }
    return write_report(report, o);
}

int cmd_scenario_sweep(const CommonOpts& o) {
    Dataset ds = load_dataset(o.dataset);

    Report report;
    report.columns = {"scenario", "category", "value", "unit"};
    auto add_rows = [&](const std::string& scenario_id, const std::string& label) {
        AnalysisRun run = AnalysisRun::resolve(ds, o.method, o.cell, o.pack, scenario_id);
        ImpactResult result = run.impacts();
        for (const auto& cat : run.method.categories)
            report.add_row({label, cat.id, result.per_category.at(cat.id), cat.unit});
    };
    add_rows("", "baseline");
    std::vector<std::string> ids;
    for (const auto& sc : ds.scenarios) ids.push_back(sc.id);
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids) add_rows(id, id);
    return write_report(report, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cradle-to-gate LCA engine and battery modeling toolkit"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a dataset file");
    validate->add_option("path", validate_path, "Dataset file")->required();

    CommonOpts impacts_o;
    auto* impacts = app.add_subcommand("impacts", "Per-Wh impact results");
    add_common(impacts, impacts_o, true);

    CommonOpts contrib_o;
    auto* contrib = app.add_subcommand("contrib", "Component contribution analysis");
    add_common(contrib, contrib_o, true);

    CommonOpts evolve_o;
    std::vector<std::string> evolve_targets, evolve_preserved;
    auto* evolve = app.add_subcommand("evolve", "Derive an optimized cell layout");
    add_common(evolve, evolve_o, false);
    evolve->add_option("--cell", evolve_o.cell, "Baseline cell name")->required();
    evolve->add_option("--target", evolve_targets, "role=share target, e.g. housing=0.03");
    evolve->add_option("--preserve", evolve_preserved, "Role keeping its baseline weight share");

    CommonOpts anode_o;
    AnodeSizingInput anode_in;
    auto* anode = app.add_subcommand("anode", "Electrochemical anode sizing");
    anode->add_option("--format", anode_o.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    anode->add_option("--out", anode_o.out, "Output file");
    anode->add_option("--area", anode_in.electrode_area_cm2, "Electrode area, cm2");
    anode->add_option("--cathode-mass", anode_in.cathode_active_mass_mg,
                      "Cathode active mass, mg");
    anode->add_option("--cathode-capacity", anode_in.cathode_specific_capacity_ah_g,
                      "Cathode specific capacity, Ah/g");
    anode->add_option("--anode-capacity", anode_in.anode_specific_capacity_ah_g,
                      "Anode specific capacity, Ah/g");
    anode->add_option("--ref-thickness", anode_in.reference_collector_thickness_um,
                      "Reference collector thickness, um");
    anode->add_option("--conductivity-ratio", anode_in.anode_to_reference_conductivity_ratio,
                      "Anode/reference conductivity ratio");
    anode->add_option("--density", anode_in.anode_density_g_cm3, "Anode density, g/cm3");

    CommonOpts breakeven_o;
    double ced_per_wh = 0.0, energy_return = 0.0;
    auto* breakeven = app.add_subcommand("breakeven", "CED break-even cycle count");
    breakeven->add_option("ced", ced_per_wh, "CED per Wh of capacity, Wh")->required();
    breakeven->add_option("return", energy_return, "Energy return per cycle, Wh per Wh")
        ->required();
    breakeven->add_option("--format", breakeven_o.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    breakeven->add_option("--out", breakeven_o.out, "Output file");

    CommonOpts compare_o;
    auto* compare_cmd = app.add_subcommand("compare", "Cross-chemistry comparison table");
    add_common(compare_cmd, compare_o, false);
    compare_cmd->add_option("--method", compare_o.method, "Impact method id")->required();

    CommonOpts sweep_o;
    auto* sweep = app.add_subcommand("scenario-sweep", "Run every scenario in the dataset");
    add_common(sweep, sweep_o, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_path);
        if (impacts->parsed()) return cmd_impacts(impacts_o);
        if (contrib->parsed()) return cmd_contrib(contrib_o);
        if (evolve->parsed()) return cmd_evolve(evolve_o, evolve_targets, evolve_preserved);
        if (anode->parsed()) return cmd_anode(anode_o, anode_in);
        if (breakeven->parsed()) return cmd_breakeven(breakeven_o, ced_per_wh, energy_return);
        if (compare_cmd->parsed()) return cmd_compare(compare_o);
        if (sweep->parsed()) return cmd_scenario_sweep(sweep_o);
    } catch (const LcaError& e) {
        std::cerr << "error " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
