#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace probfrac {

// 17 significant digits, '.' separator, independent of the C locale.
std::string format_double(double value);

// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view field);

// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace probfrac
