#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wardsim {

/// Shortest round-trip decimal representation of a double. Used for every
/// numeric cell the library writes so that reruns are byte-identical and
/// written values parse back to the exact same double.
std::string format_double(double value);

double parse_double(std::string_view text); // throws validation_error
long long parse_integer(std::string_view text);

/// In-memory view of a delimited text file: a header row plus string cells.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::optional<std::size_t> column_index(std::string_view name) const;
};

/// Reads a delimited file with a header row. Leading lines starting with '#'
/// (schema-version headers) are skipped. Fields must not contain the
/// delimiter; no quoting is supported.
Table read_delimited(const std::filesystem::path& path, char delimiter = ',');

/// Writes a delimited file. `schema_line` (without the leading "# ") becomes
/// the first line of the file and identifies the format version.
void write_delimited(const std::filesystem::path& path, const Table& table,
                     std::string_view schema_line, char delimiter = ',');

std::vector<std::string> split_fields(std::string_view line, char delimiter);

} // namespace wardsim
