#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgslca/engine.hpp"

namespace py = pybind11;
using namespace mgslca;

namespace {

py::dict impact_result_dict(const ImpactResult& r) {
    py::dict d;
    d["per_category"] = r.per_category;
    d["coverage"] = r.coverage;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mgslca, m) {
    m.doc() = "Cradle-to-gate LCA engine and battery modeling toolkit";

    py::register_exception<LcaError>(m, "LcaError");

    m.def("convert_amount",
          [](double x, const std::string& from, const std::string& to) {
              return convert_amount(x, unit(from), unit(to));
          },
          py::arg("x"), py::arg("from_unit"), py::arg("to_unit"));

    py::class_<Dataset>(m, "Dataset")
        .def_property_readonly("cell_names",
                               [](const Dataset& ds) {
                                   std::vector<std::string> names;
                                   for (const auto& c : ds.cells) names.push_back(c.name);
                                   return names;
                               })
        .def_property_readonly("pack_names",
                               [](const Dataset& ds) {
                                   std::vector<std::string> names;
                                   for (const auto& p : ds.packs) names.push_back(p.name);
                                   return names;
                               })
        .def_property_readonly("method_ids",
                               [](const Dataset& ds) {
                                   std::vector<std::string> ids;
                                   for (const auto& mth : ds.methods) ids.push_back(mth.id);
                                   return ids;
                               })
        .def_property_readonly("scenario_ids", [](const Dataset& ds) {
            std::vector<std::string> ids;
            for (const auto& s : ds.scenarios) ids.push_back(s.id);
            return ids;
        });

    m.def("load_dataset", [](const std::string& path) {
        ParseResult r = parse_file(path);
        if (!r.ok()) {
            std::string msg = "failed to load " + path;
            for (const auto& d : r.diagnostics)
                if (d.severity == Severity::error)
                    msg += "\n  " + d.code + " at " + d.path + ": " + d.message;
            throw LcaError("PARSE_FAILED", msg);
        }
        return *r.dataset;
    });

    m.def("validate_file", [](const std::string& path) {
        ParseResult r = parse_file(path);
        std::vector<std::string> problems;
        for (const auto& d : r.diagnostics)
            if (d.severity == Severity::error) problems.push_back(d.code + " at " + d.path);
        if (r.ok())
            for (const auto& f : validate_database(r.dataset->database).findings)
                problems.push_back(f.code + ": " + f.message);
        return problems;
    });

    m.def("impacts",
          [](const Dataset& ds, const std::string& method, const std::string& cell,
             const std::string& pack, const std::string& scenario) {
              return impact_result_dict(
                  AnalysisRun::resolve(ds, method, cell, pack, scenario).impacts());
          },
          py::arg("dataset"), py::arg("method"), py::arg("cell"), py::arg("pack"),
          py::arg("scenario") = "");

    m.def("contributions",
          [](const Dataset& ds, const std::string& method, const std::string& cell,
             const std::string& pack, const std::string& scenario) {
              ContributionTable t =
                  AnalysisRun::resolve(ds, method, cell, pack, scenario).contribution_table();
              py::dict out;
              for (const auto& [key, row] : t.rows) {
                  py::tuple k = py::make_tuple(key.first, key.second);
                  out[k] = py::make_tuple(row.value, row.share);
              }
              return out;
          },
          py::arg("dataset"), py::arg("method"), py::arg("cell"), py::arg("pack"),
          py::arg("scenario") = "");

    m.def("mass_shares", [](const Dataset& ds, const std::string& cell_name) {
        const CellDesign* cell = ds.find_cell(cell_name);
        if (!cell) throw LcaError("UNKNOWN_ID", "unknown cell: " + cell_name);
        std::map<std::string, double> out;
        for (const auto& [role, share] : mass_shares(*cell))
            out[std::string(role_name(role))] = share;
        return out;
    });

    m.def("cell_energy_density", [](const Dataset& ds, const std::string& cell_name) {
        const CellDesign* cell = ds.find_cell(cell_name);
        if (!cell) throw LcaError("UNKNOWN_ID", "unknown cell: " + cell_name);
        return cell_energy_density(*cell);
    });

    m.def("pack_energy_density",
          [](double cell_density, double cell_share) {
              PackDesign pack;
              pack.cell_share = cell_share;
              pack.housing_share = (1.0 - cell_share) * 0.725;
              pack.bms_share = 1.0 - cell_share - pack.housing_share;
              return pack_energy_density(cell_density, pack);
          },
          py::arg("cell_density_wh_kg"), py::arg("cell_share") = 0.8);

    py::class_<AnodeSizingInput>(m, "AnodeSizingInput")
        .def(py::init<>())
        .def_readwrite("electrode_area_cm2", &AnodeSizingInput::electrode_area_cm2)
        .def_readwrite("cathode_active_mass_mg", &AnodeSizingInput::cathode_active_mass_mg)
        .def_readwrite("cathode_specific_capacity_ah_g",
                       &AnodeSizingInput::cathode_specific_capacity_ah_g)
        .def_readwrite("anode_specific_capacity_ah_g",
                       &AnodeSizingInput::anode_specific_capacity_ah_g)
        .def_readwrite("reference_collector_thickness_um",
                       &AnodeSizingInput::reference_collector_thickness_um)
        .def_readwrite("anode_to_reference_conductivity_ratio",
                       &AnodeSizingInput::anode_to_reference_conductivity_ratio)
        .def_readwrite("anode_density_g_cm3", &AnodeSizingInput::anode_density_g_cm3);

    m.def("collector_min", [](const AnodeSizingInput& in) {
        CollectorResult r = collector_min(in);
        return py::make_tuple(r.thickness_um, r.mass_mg);
    });
    m.def("capacity_match", &capacity_match, py::arg("cathode_mass_mg"),
          py::arg("cathode_cap_ah_g"), py::arg("anode_cap_ah_g"));
    m.def("optimized_anode_mass", &optimized_anode_mass);
    m.def("break_even_cycles", &break_even_cycles, py::arg("ced_per_wh"),
          py::arg("energy_return_per_cycle"));
}
