#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gcsim::sim {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

double parse_double(std::string_view s);
std::int64_t parse_int(std::string_view s);

std::vector<std::string> split(std::string_view text, char sep);
std::string_view trim(std::string_view s);

// Both throw std::runtime_error naming the path on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gcsim::sim
