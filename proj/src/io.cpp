#include "ptsync/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace ptsync::io {

void Table::add_column(std::string name, ColumnKind kind) {
    columns.push_back(std::move(name));
    kinds.push_back(kind);
}

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table::add_row: row width != column count");
    }
    rows.push_back(std::move(row));
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string format_cell(double x, ColumnKind kind) {
    if (kind == ColumnKind::Integer) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(x));
        return buf;
    }
    return format_real(x);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) {
            os << ',';
        }
        os << table.columns[c];
    }
    os << '\n';
    for (const std::vector<double>& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                os << ',';
            }
            os << format_cell(row[c], table.kinds[c]);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& table, const ConfigEcho& config) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config) {
        cfg[key] = value;
    }
    doc["config"] = std::move(cfg);

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const std::vector<double>& row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (table.kinds[c] == ColumnKind::Integer) {
                rec[table.columns[c]] = static_cast<long long>(row[c]);
            } else {
                rec[table.columns[c]] = row[c];
            }
        }
        rows.push_back(std::move(rec));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

JsonDocument read_table_json(std::istream& is) {
    const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(is);
    if (!doc.is_object() || !doc.contains("config") || !doc.contains("rows")) {
        throw std::invalid_argument("read_table_json: expected {config, rows}");
    }

    JsonDocument out;
    for (const auto& [key, value] : doc.at("config").items()) {
        out.config.emplace_back(key, value.get<std::string>());
    }
    const nlohmann::ordered_json& rows = doc.at("rows");
    bool first = true;
    for (const nlohmann::ordered_json& rec : rows) {
        if (first) {
            for (const auto& [key, value] : rec.items()) {
                out.table.add_column(
                    key, value.is_number_integer() ? ColumnKind::Integer : ColumnKind::Real);
            }
            first = false;
        }
        std::vector<double> row;
        row.reserve(out.table.columns.size());
        for (const std::string& col : out.table.columns) {
            row.push_back(rec.at(col).get<double>());
        }
        out.table.add_row(std::move(row));
    }
    return out;
}

}  // namespace ptsync::io
