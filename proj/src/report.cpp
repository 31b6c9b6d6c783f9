#include "mgslca/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "mgslca/units.hpp"

namespace mgslca {

OutputFormat output_format_from_name(std::string_view name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw LcaError("BAD_FORMAT", "unknown output format: " + std::string(name));
}

std::string format_number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
    return format_number(std::get<double>(c));
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string render_table(const Report& r) {
    std::vector<size_t> widths(r.columns.size());
    for (size_t i = 0; i < r.columns.size(); ++i) widths[i] = r.columns[i].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : r.rows) {
        std::vector<std::string> texts;
        for (size_t i = 0; i < row.size(); ++i) {
            texts.push_back(cell_text(row[i]));
            if (i < widths.size()) widths[i] = std::max(widths[i], texts.back().size());
        }
        cells.push_back(std::move(texts));
    }
    std::ostringstream out;
    auto emit_row = [&](const std::vector<std::string>& texts) {
        for (size_t i = 0; i < texts.size(); ++i) {
            if (i) out << "  ";
            out << texts[i];
            if (i + 1 < texts.size())
                out << std::string(widths[i] > texts[i].size() ? widths[i] - texts[i].size() : 0,
                                   ' ');
        }
        out << '\n';
    };
    emit_row(r.columns);
    std::string rule;
    for (size_t i = 0; i < widths.size(); ++i) {
        if (i) rule += "  ";
        rule += std::string(widths[i], '-');
    }
    out << rule << '\n';
    for (const auto& row : cells) emit_row(row);
    return out.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream out;
    for (size_t i = 0; i < r.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_quote(r.columns[i]);
    }
    out << '\n';
    for (const auto& row : r.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_quote(cell_text(row[i]));
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < row.size() && i < r.columns.size(); ++i) {
            if (std::holds_alternative<std::string>(row[i]))
                obj[r.columns[i]] = std::get<std::string>(row[i]);
            else if (std::holds_alternative<long>(row[i]))
                obj[r.columns[i]] = std::get<long>(row[i]);
            else
                obj[r.columns[i]] = std::get<double>(row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace

std::string Report::render(OutputFormat format) const {
    switch (format) {
        case OutputFormat::table: return render_table(*this);
        case OutputFormat::csv: return render_csv(*this);
        case OutputFormat::json: return render_json(*this);
    }
    return {};
}

}  // namespace mgslca
