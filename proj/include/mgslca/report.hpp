#pragma once

#include <string>
#include <variant>
#include <vector>

namespace mgslca {

enum class OutputFormat { table, csv, json };

OutputFormat output_format_from_name(std::string_view name);  // throws BAD_FORMAT

using Cell = std::variant<std::string, double, long>;

/// A flat report: named columns, rows of cells. Renders to an aligned text
/// table, CSV (comma, '.' decimal, LF, header row) or a JSON array of
/// objects. All renderings carry the same values.
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }

    std::string render(OutputFormat format) const;
};

/// Shortest decimal representation that round-trips the double.
std::string format_number(double v);

}  // namespace mgslca
