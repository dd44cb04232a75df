#include "lpevac/curve_table.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lpevac {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

// Splits one CSV record; quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += ch;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  fields.push_back(field);
  return fields;
}

nlohmann::ordered_json json_number(double value) {
  if (std::isfinite(value)) return value;
  return format_number(value);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

double parse_number(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

CurveTable::CurveTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CurveTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " values for " +
                                std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void CurveTable::set_metadata(const std::string& key, const std::string& value) {
  if (key.find_first_of("=\r\n") != std::string::npos || value.find_first_of("\r\n") != std::string::npos) {
    throw std::invalid_argument("metadata keys may not contain '=' or line breaks");
  }
  metadata_[key] = value;
}

std::vector<double> CurveTable::column(const std::string& name) const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j] != name) continue;
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row[j]);
    return out;
  }
  throw std::out_of_range("no column named '" + name + "'");
}

std::string CurveTable::to_csv() const {
  std::ostringstream out;
  for (const auto& [key, value] : metadata_) out << "# " << key << '=' << value << "\r\n";
  for (std::size_t j = 0; j < columns_.size(); ++j) out << (j ? "," : "") << csv_field(columns_[j]);
  out << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
    out << "\r\n";
  }
  return out.str();
}

std::string CurveTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["columns"] = columns_;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& row : rows_) values.push_back(json_number(row[j]));
    data[columns_[j]] = std::move(values);
  }
  doc["data"] = std::move(data);
  doc["metadata"] = metadata_;
  return doc.dump(2) + "\n";
}

CurveTable CurveTable::from_csv(const std::string& text) {
  CurveTable table;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header && line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("metadata line without '='");
      table.metadata_[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split_record(line);
    if (!have_header) {
      table.columns_ = fields;
      have_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& field : fields) row.push_back(parse_number(field));
    table.add_row(std::move(row));
  }
  if (!have_header) throw std::invalid_argument("CSV text has no header line");
  return table;
}

}  // namespace lpevac
