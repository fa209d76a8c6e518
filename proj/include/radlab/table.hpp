#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace radlab {

// Flat result table with a fixed column order.  Floats are printed with 17
// significant digits so a reader parsing them back recovers the exact bits;
// the same formatting feeds both CSV and JSON, which keeps byte-identical
// output across runs trivially true.
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells);
};

enum class TableFormat { csv, json };

std::string format_double(double x); // %.17g

void emit_table(const Table& table, TableFormat format, std::ostream& out);

} // namespace radlab
