#pragma once

// CSV output: header row, fixed column order, doubles at 17 significant
// digits. Files are written to a sibling temporary and renamed into place.

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace su11::csv {

using Cell = std::variant<double, long long, std::string>;

std::string format_double(double v);

class Table {
 public:
  explicit Table(std::vector<std::string> header);

  // Throws DimensionMismatchError when the row width differs from the header.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t size() const { return rows_.size(); }
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

// Throws su11::Error when the file cannot be written.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_table(const std::filesystem::path& path, const Table& table);

}  // namespace su11::csv
