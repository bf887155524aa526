#pragma once

// Plain result tables with CSV and JSON writers.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hahn_lsq {

// Empty cells (monostate) render as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  /// Row must have one cell per column.
  void add_row(std::vector<Cell> row);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double v);

/// Header row, comma separated, LF line endings.
void write_csv(std::ostream& out, const Table& table);

/// {"config": ..., "schema": {"columns": [...]}, "rows": [{...}, ...]}
void write_json(std::ostream& out, const Table& table, const nlohmann::ordered_json& config);

}  // namespace hahn_lsq
