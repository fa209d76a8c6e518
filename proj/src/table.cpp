#include "radlab/table.hpp"

#include <cmath>
#include <cstdio>

#include "radlab/errors.hpp"

namespace radlab {

void Table::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size())
        throw domain_error("table: row width does not match the header");
    rows.push_back(std::move(cells));
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {
void emit_cell_csv(const Cell& c, std::ostream& out) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        out << *i;
    } else if (const auto* d = std::get_if<double>(&c)) {
        out << format_double(*d);
    } else {
        out << std::get<std::string>(c);
    }
}

void emit_cell_json(const Cell& c, std::ostream& out) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        out << *i;
    } else if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d))
            out << format_double(*d);
        else
            out << "null"; // JSON has no literal for inf/nan
    } else {
        out << '"' << std::get<std::string>(c) << '"';
    }
}
} // namespace

void emit_table(const Table& table, TableFormat format, std::ostream& out) {
    if (format == TableFormat::csv) {
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            if (j) out << ',';
            out << table.columns[j];
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out << ',';
                emit_cell_csv(row[j], out);
            }
            out << '\n';
        }
        return;
    }
    out << "[";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        out << (i ? ",\n " : "\n ");
        out << '{';
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            if (j) out << ',';
            out << '"' << table.columns[j] << "\":";
            emit_cell_json(table.rows[i][j], out);
        }
        out << '}';
    }
    out << (table.rows.empty() ? "]\n" : "\n]\n");
}

} // namespace radlab
