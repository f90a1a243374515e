#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qcoh::cli {

inline constexpr std::string_view tool_version = "0.1.0";

using Cell = std::variant<std::int64_t, double, std::string>;

// Tabular result plus metadata. CSV carries the table only; JSON carries
// metadata, the same table as an array of objects, and any extra fields.
struct ExperimentOutput {
  nlohmann::ordered_json metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  void add_row(std::vector<Cell> row);
  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;
};

// %.17g with '.' as the decimal separator.
std::string format_double(double value);

nlohmann::ordered_json base_metadata(std::string_view algorithm);

}  // namespace qcoh::cli
