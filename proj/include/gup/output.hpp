#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace gup {

/// A rectangular numeric result table with named columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::initializer_list<double> values);
};

/// Header line plus one line per row. Doubles are printed with the
/// shortest representation that round-trips, so CSV and JSON exports of
/// the same table parse back to identical values.
std::string to_csv(const Table& table);

/// {"meta": {...}, "records": [{column: value, ...}, ...]}
std::string to_json(const Table& table,
                    const std::map<std::string, std::string>& meta = {});

/// Writes to the file at `path`, or to stdout when `path` is "-" or empty.
void write_text(const std::string& path, const std::string& content);

} // namespace gup
