#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

namespace atlas {

#ifndef ATLAS_DEFAULT_DATA_DIR
#define ATLAS_DEFAULT_DATA_DIR "data"
#endif

/// Dataset directory, in precedence order: explicit override, the
/// SYMMETRY_ATLAS_DATA environment variable, then the build-time default.
inline std::filesystem::path resolve_data_dir(const std::string& override_dir = {}) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("SYMMETRY_ATLAS_DATA"); env && *env)
    return env;
  return ATLAS_DEFAULT_DATA_DIR;
}

}  // namespace atlas
