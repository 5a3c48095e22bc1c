#pragma once

// Minimal CSV dialect: comma separator, mandatory header row, no embedded
// newlines. Double-quoted fields are accepted on input.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace picksim {

/// Malformed input file; carries `file:line: message`.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CsvTable {
 public:
  static CsvTable read(const std::filesystem::path& path);
  static CsvTable parse(std::istream& in, std::string source_name);

  /// Throws InputError unless every name is a header column.
  void require_columns(std::initializer_list<std::string_view> names) const;

  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
  std::size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }

  const std::string& cell(std::size_t row, std::string_view col) const;
  long long integer(std::size_t row, std::string_view col) const;
  double real(std::size_t row, std::string_view col) const;

  /// `file:line: what` for diagnostics on data row `row`.
  std::string where(std::size_t row) const;

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace picksim
