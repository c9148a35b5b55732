#pragma once

#include <string>
#include <vector>

namespace abel {

/// Column-named table with string cells. Reports keep exact integers exact
/// and doubles at full precision by formatting into strings once, at the rim.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

std::string format_double(double x);  // shortest round-trip form

std::string table_to_csv(const Table& t);
Table table_from_csv(const std::string& text);

std::string table_to_json(const Table& t);
Table table_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace abel
