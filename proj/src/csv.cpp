#include "picksim/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

namespace picksim {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(std::move(field));
  return out;
}

CsvTable CsvTable::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  return parse(in, path.string());
}

CsvTable CsvTable::parse(std::istream& in, std::string source_name) {
  CsvTable t;
  t.source_ = std::move(source_name);
  std::string line;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
      t.header_ = split_csv_line(line);
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != t.header_.size()) {
      throw InputError(t.source_ + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(t.header_.size()) + " fields, got " + std::to_string(fields.size()));
    }
    t.rows_.push_back(std::move(fields));
  }
  if (!have_header) throw InputError(t.source_ + ": missing header row");
  return t;
}

bool CsvTable::has_column(std::string_view name) const {
  return std::find(header_.begin(), header_.end(), name) != header_.end();
}

std::size_t CsvTable::column(std::string_view name) const {
  auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) throw InputError(source_ + ": missing column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header_.begin());
}

void CsvTable::require_columns(std::initializer_list<std::string_view> names) const {
  for (auto n : names) column(n);
}

std::string CsvTable::where(std::size_t row) const {
  return source_ + ":" + std::to_string(row + 2);
}

const std::string& CsvTable::cell(std::size_t row, std::string_view col) const {
  return rows_.at(row).at(column(col));
}

long long CsvTable::integer(std::size_t row, std::string_view col) const {
  const auto& text = cell(row, col);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError(where(row) + ": column '" + std::string(col) + "' is not an integer: '" + text + "'");
  }
  return v;
}

double CsvTable::real(std::size_t row, std::string_view col) const {
  const auto& text = cell(row, col);
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError(where(row) + ": column '" + std::string(col) + "' is not a number: '" + text + "'");
  }
  return v;
}

}  // namespace picksim
