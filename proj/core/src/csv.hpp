#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hgrid::csv {

/// Lines of a text file with trailing CR stripped. Throws IoError.
std::vector<std::string> read_lines(std::filesystem::path const& path);

std::vector<std::string_view> split(std::string_view line, char sep = ',');

/// Strict numeric field parsing; returns false on trailing garbage.
bool parse_double(std::string_view field, double& out);
bool parse_int(std::string_view field, long long& out);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_atomic(std::filesystem::path const& path, std::string const& contents);

} // namespace hgrid::csv
