#include "gup/output.hpp"

#include <cstdio>
#include <fstream>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "gup/errors.hpp"

namespace gup {

void Table::add_row(std::initializer_list<double> values) {
    if (values.size() != columns.size()) {
        throw InvalidStateError("Table::add_row: value count does not match columns");
    }
    rows.emplace_back(values);
}

std::string to_csv(const Table& table) {
    std::string out = fmt::format("{}\n", fmt::join(table.columns, ","));
    for (const auto& row : table.rows) {
        out += fmt::format("{}\n", fmt::join(row, ","));
    }
    return out;
}

std::string to_json(const Table& table, const std::map<std::string, std::string>& meta) {
    nlohmann::json j;
    j["meta"] = nlohmann::json::object();
    for (const auto& [key, value] : meta) j["meta"][key] = value;
    j["records"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json rec = nlohmann::json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            rec[table.columns[i]] = row[i];
        }
        j["records"].push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_text: cannot open " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write_text: write failed for " + path);
}

} // namespace gup
