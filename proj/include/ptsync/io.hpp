#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ptsync::io {

/// Real columns are serialized with round-trip precision; Integer columns
/// (flags, indices) print without a decimal point.
enum class ColumnKind { Real, Integer };

/// Column-ordered numeric table; integer-kind cells are stored as exactly
/// representable doubles.
struct Table {
    std::vector<std::string> columns;
    std::vector<ColumnKind> kinds;
    std::vector<std::vector<double>> rows;

    void add_column(std::string name, ColumnKind kind = ColumnKind::Real);
    void add_row(std::vector<double> row);
};

/// Echoed key=value pairs describing the run that produced a table.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Round-trip decimal form of a double (17 significant digits, %g style).
std::string format_real(double x);

/// Comma-separated, header row, LF line endings.
void write_csv(std::ostream& os, const Table& table);

/// One top-level object: {"config": {...}, "rows": [{col: value, ...}, ...]}.
void write_json(std::ostream& os, const Table& table, const ConfigEcho& config);

struct JsonDocument {
    ConfigEcho config;
    Table table;
};

/// Parse a document produced by write_json; values round-trip exactly.
JsonDocument read_table_json(std::istream& is);

}  // namespace ptsync::io
