#pragma once

// Flat record tables rendered as CSV, JSON (array of objects) or an aligned
// text table. Every format keeps column order and row order.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lmarkov::cli {

enum class OutputFormat { csv, json, table };

OutputFormat parse_format(std::string_view name);

using Cell = std::variant<std::string, double, long long, bool>;

struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

void render(std::ostream& out, const RecordTable& table, OutputFormat format);

}  // namespace lmarkov::cli
