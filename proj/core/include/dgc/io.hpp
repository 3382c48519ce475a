#pragma once

#include <filesystem>
#include <string>

namespace dgc {

/// Round-trip formatting for doubles (printf %.17g); all text outputs use it
/// so identical runs produce identical bytes.
std::string format_double(double v);

/// Creates the directory (and parents) if needed; throws ConfigError on
/// filesystem failure.
void ensure_directory(const std::filesystem::path& dir);

/// Writes a whole text file (truncating).
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

/// True when both directory trees have identical file names and bytes.
bool directory_trees_identical(const std::filesystem::path& a,
                               const std::filesystem::path& b);

}  // namespace dgc
