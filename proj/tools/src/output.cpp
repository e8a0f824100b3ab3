#include "lmarkov_cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "lmarkov/csv.hpp"

namespace lmarkov::cli {

namespace {

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    // JSON has no inf/nan; keep them as their CSV spelling.
    if (!std::isfinite(*d)) return format_real(*d);
    return *d;
  }
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<bool>(c);
}

void render_csv(std::ostream& out, const RecordTable& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << csv_field(t.columns[j]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_field(cell_text(row[j]));
    out << '\n';
  }
}

void render_json(std::ostream& out, const RecordTable& t) {
  // ordered_json keeps the column order of each record.
  auto ordered = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) rec[t.columns[j]] = cell_json(row[j]);
    ordered.push_back(std::move(rec));
  }
  out << ordered.dump(2) << '\n';
}

void render_table(std::ostream& out, const RecordTable& t) {
  std::vector<std::size_t> width(t.columns.size());
  std::vector<std::vector<std::string>> text;
  for (std::size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].size();
  for (const auto& row : t.rows) {
    auto& line = text.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      line.push_back(cell_text(row[j]));
      width[j] = std::max(width[j], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      out << (j ? "  " : "") << cells[j];
      if (j + 1 < cells.size()) out << std::string(width[j] - cells[j].size(), ' ');
    }
    out << '\n';
  };
  emit(t.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& line : text) emit(line);
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

void RecordTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("RecordTable: row width mismatch");
  rows.push_back(std::move(row));
}

void render(std::ostream& out, const RecordTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: render_csv(out, table); break;
    case OutputFormat::json: render_json(out, table); break;
    case OutputFormat::table: render_table(out, table); break;
  }
}

}  // namespace lmarkov::cli
