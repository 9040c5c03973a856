#pragma once

#include <filesystem>
#include <string>

namespace lislab::cli {

/// Writes `contents` to a sibling temp file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace lislab::cli
