#include "pdld/table.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "pdld/util.hpp"

namespace pdld {

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) throw domain_error("table row width mismatch");
    rows.push_back(std::move(row));
}

std::string to_csv_string(const Table& t) {
    std::string out;
    for (const auto& [k, v] : t.meta) {
        out += "# ";
        out += k;
        out += "=";
        out += v;
        out += "\n";
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json_string(const Table& t) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta) meta[k] = v;
    j["meta"] = std::move(meta);
    j["columns"] = t.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw io_error("cannot open for writing: " + tmp.string());
        f << content;
        if (!f) throw io_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw io_error("rename failed for " + target.string() + ": " + ec.message());
}

void write_table(const Table& t, const std::string& path, const std::string& format) {
    if (format == "csv")
        write_atomic(path, to_csv_string(t));
    else if (format == "json")
        write_atomic(path, to_json_string(t));
    else
        throw usage_error("unknown output format: " + format);
}

}  // namespace pdld
