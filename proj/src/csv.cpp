#include "csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace atlas::csv {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

Table load(const std::filesystem::path& path, const std::string& expected_header) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open dataset file: " + path.string());

  Table table;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line.front() == '#') continue;  // provenance comments
      if (line != expected_header)
        throw std::runtime_error(path.string() + ": unexpected header \"" + line +
                                 "\" (want \"" + expected_header + "\")");
      table.header = split(line, ',');
      header_seen = true;
      continue;
    }
    auto row = split(line, ',');
    if (row.size() != table.header.size())
      throw std::runtime_error(path.string() + ": malformed row \"" + line + "\"");
    table.rows.push_back(std::move(row));
  }
  if (!header_seen)
    throw std::runtime_error(path.string() + ": missing header row");
  return table;
}

}  // namespace atlas::csv
