#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace propkit::io {

// Minimal reader for the unquoted comma-separated tables this project ships.
// Blank lines and lines starting with '#' are skipped; fields are trimmed.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row

  // Index of a header column, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;
  // Like column() but throws MalformedTable naming `source`.
  std::size_t require_column(std::string_view name,
                             std::string_view source) const;
};

CsvTable parse_csv(std::string_view text);

// Reads a whole file. Throws Error{MalformedTable} if it cannot be opened.
std::string read_file(const std::string& path);

// Strict number parsing; throws MalformedTable with `context` on failure.
double parse_double(std::string_view field, std::string_view context);
int parse_int(std::string_view field, std::string_view context);

// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

std::vector<std::string_view> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

}  // namespace propkit::io
