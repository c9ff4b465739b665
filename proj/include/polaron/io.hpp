#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace polaron::io {

/// Number with 12 significant digits, shortest of fixed/scientific.
std::string format_number(double value);

/// Writes `content` to a sibling temp file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Comma-separated rows; blank lines skipped, cells trimmed.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(std::string_view text);

double parse_double(const std::string& cell, const std::string& where);

/// Copy of `doc` with every floating-point number cut to 12 significant digits.
nlohmann::json rounded(const nlohmann::json& doc);

}  // namespace polaron::io
