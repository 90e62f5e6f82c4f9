#include "strata/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace strata {

bool Report::all_pass() const {
    for (const auto& a : assertions)
        if (!a.pass) return false;
    return true;
}

void Report::assert_that(std::string name, bool pass, std::string detail) {
    assertions.push_back({std::move(name), pass, pass ? "" : std::move(detail)});
}

std::string Report::render_text() const {
    std::ostringstream out;
    out << "# " << command << "\n";
    for (const auto& [k, v] : params) out << "# " << k << " = " << v << "\n";
    if (!columns.empty()) {
        std::vector<std::size_t> widths(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) widths[j] = columns[j].size();
        for (const auto& row : rows)
            for (std::size_t j = 0; j < row.size(); ++j)
                widths[j] = std::max(widths[j], row[j].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t j = 0; j < cells.size(); ++j) {
                out << cells[j];
                if (j + 1 < cells.size())
                    out << std::string(widths[j] - cells[j].size() + 2, ' ');
            }
            out << "\n";
        };
        line(columns);
        for (const auto& row : rows) line(row);
    }
    for (const auto& a : assertions) {
        out << (a.pass ? "PASS " : "FAIL ") << a.name;
        if (!a.detail.empty()) out << ": " << a.detail;
        out << "\n";
    }
    return out.str();
}

std::string Report::render_json() const {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["params"] = params;
    if (!columns.empty()) {
        j["columns"] = columns;
        j["rows"] = rows;
    }
    auto arr = nlohmann::json::array();
    for (const auto& a : assertions)
        arr.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    j["assertions"] = arr;
    return j.dump(2) + "\n";
}

std::string Report::render_tsv() const {
    std::ostringstream out;
    out << "command\t" << command << "\n";
    for (const auto& [k, v] : params) out << "param\t" << k << "\t" << v << "\n";
    if (!columns.empty()) {
        out << "columns";
        for (const auto& c : columns) out << "\t" << c;
        out << "\n";
        for (const auto& row : rows) {
            out << "row";
            for (const auto& c : row) out << "\t" << c;
            out << "\n";
        }
    }
    for (const auto& a : assertions)
        out << "assert\t" << a.name << "\t" << (a.pass ? "pass" : "fail") << "\t" << a.detail
            << "\n";
    return out.str();
}

std::string Report::render(const std::string& format) const {
    if (format == "text") return render_text();
    if (format == "json") return render_json();
    if (format == "tsv") return render_tsv();
    throw std::invalid_argument("unknown format: " + format);
}

}  // namespace strata
