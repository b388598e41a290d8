#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pdld {

// Column table of doubles plus ordered metadata (seed, parameters, version,
// wall time). Serialized to CSV (meta as leading # comments) or JSON
// ({"meta": {...}, "rows": [...]}) with round-trip float formatting.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> meta;

    void add_meta(std::string key, std::string value) {
        meta.emplace_back(std::move(key), std::move(value));
    }
    void add_row(std::vector<double> row);
};

std::string to_csv_string(const Table& t);
std::string to_json_string(const Table& t);

// writes to a temporary sibling then renames, so the target appears complete
// or not at all
void write_atomic(const std::string& path, const std::string& content);
void write_table(const Table& t, const std::string& path, const std::string& format);

}  // namespace pdld
