#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "moa/array.hpp"

namespace moa {

// Plain-text array literal:
//
//   line 1: whitespace-separated extents (empty for a scalar)
//   line 2: whitespace-separated elements in row-major order
//
// Elements are printed in shortest round-trip form, so format/parse is
// bit-exact for every double including inf and nan.

std::string format_array(const MoaArray& a);
MoaArray parse_array(std::string_view text);

MoaArray read_array_file(const std::filesystem::path& path);
void write_array_file(const std::filesystem::path& path, const MoaArray& a);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
/// Parses a full token as a double; throws ParseError otherwise.
double parse_double(std::string_view token);

} // namespace moa
