#include "wardsim/delimited.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "wardsim/errors.hpp"

namespace wardsim {

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buffer, ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw validation_error("not a number: '" + std::string(text) + "'");
    }
    return value;
}

long long parse_integer(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw validation_error("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::optional<std::size_t> Table::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    return std::nullopt;
}

std::vector<std::string> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

Table read_delimited(const std::filesystem::path& path, char delimiter) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open file: " + path.string());

    Table table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!have_header && !line.empty() && line.front() == '#') continue;
        if (!have_header) {
            table.columns = split_fields(line, delimiter);
            have_header = true;
            continue;
        }
        if (line.empty()) continue;
        table.rows.push_back(split_fields(line, delimiter));
    }
    if (!have_header) throw schema_error("file has no header row: " + path.string());
    return table;
}

void write_delimited(const std::filesystem::path& path, const Table& table,
                     std::string_view schema_line, char delimiter) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot write file: " + path.string());

    out << "# " << schema_line << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out << delimiter;
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::logic_error("write_delimited: row width does not match header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].find(delimiter) != std::string::npos) {
                throw validation_error("field contains the delimiter: '" + row[i] + "'");
            }
            if (i > 0) out << delimiter;
            out << row[i];
        }
        out << '\n';
    }
    if (!out) throw data_error("write failed: " + path.string());
}

} // namespace wardsim
