#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace atlas::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Loads a comma-separated file.  Lines starting with '#' before the header
/// are provenance comments and are skipped.  Every row must match the header
/// width; the header must equal `expected_header` exactly.
Table load(const std::filesystem::path& path, const std::string& expected_header);

std::vector<std::string> split(const std::string& line, char sep);

}  // namespace atlas::csv
