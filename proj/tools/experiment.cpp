#include "experiment.hpp"

#include <cstdio>
#include <stdexcept>

namespace qcoh::cli {

namespace {

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

std::string to_csv(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  // snprintf honours LC_NUMERIC; the CLI never calls setlocale, so this is "C".
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::ordered_json base_metadata(std::string_view algorithm) {
  nlohmann::ordered_json m;
  m["algorithm"] = algorithm;
  m["version"] = tool_version;
  return m;
}

void ExperimentOutput::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

void ExperimentOutput::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << to_csv(row[c]);
    out << '\n';
  }
}

void ExperimentOutput::write_json(std::ostream& out) const {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns[c]] = to_json(row[c]);
    table.push_back(std::move(obj));
  }
  doc["rows"] = std::move(table);
  for (const auto& [key, value] : extra.items()) doc[key] = value;
  out << doc.dump(2) << '\n';
}

}  // namespace qcoh::cli
