#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace scopegate {

// Minimal RFC-4180-style CSV: fields containing commas, quotes, or newlines
// are double-quoted with "" escapes. Enough for manifests and reports; not a
// general CSV library.
std::vector<std::string> split_csv_row(std::string_view line);
std::string join_csv_row(const std::vector<std::string>& fields);

// Shortest decimal representation that round-trips to the same double.
// Used everywhere a double goes into a text artifact so output is stable.
std::string format_double(double v);

// Writes content to a sibling temp file, then renames over path, so readers
// never observe a half-written artifact.
void atomic_write(const std::filesystem::path& path, std::string_view content);

}  // namespace scopegate
