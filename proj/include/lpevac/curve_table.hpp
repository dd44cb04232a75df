#ifndef LPEVAC_CURVE_TABLE_HPP
#define LPEVAC_CURVE_TABLE_HPP

#include <map>
#include <string>
#include <vector>

namespace lpevac {

/// A sampled table of named real columns plus the parameters that produced it.
class CurveTable {
 public:
  CurveTable() = default;
  explicit CurveTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

  /// Throws std::invalid_argument if the row arity differs from the column count.
  void add_row(std::vector<double> row);
  void set_metadata(const std::string& key, const std::string& value);

  /// Values of one column, in row order.
  std::vector<double> column(const std::string& name) const;

  /// Metadata as "# key=value" lines, then an RFC 4180 header and rows with
  /// CRLF line ends. Numbers carry 12 significant digits.
  std::string to_csv() const;
  /// {"columns": [...], "data": {name: [values]}, "metadata": {...}}.
  std::string to_json() const;

  /// Inverse of to_csv; accepts LF or CRLF line ends.
  static CurveTable from_csv(const std::string& text);

  friend bool operator==(const CurveTable&, const CurveTable&) = default;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::map<std::string, std::string> metadata_;
};

/// Shortest decimal form with 12 significant digits; "inf", "-inf", "nan" for
/// non-finite values.
std::string format_number(double value);
double parse_number(const std::string& text);

}  // namespace lpevac

#endif  // LPEVAC_CURVE_TABLE_HPP
