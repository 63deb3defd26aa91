#pragma once

#include <filesystem>
#include <string>

#include "vortex/field.hpp"

namespace vortex {

/// torus-field v1: header "torus-field v1 n=<n>", then n lines of n
/// space-separated values, row i the x1 index. Shortest round-trip decimal
/// formatting, locale independent.
std::string encode_field(const RealField& f);
RealField decode_field(const std::string& text);

/// Atomic write: temp file in the same directory, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

void write_field(const std::filesystem::path& path, const RealField& f);
RealField read_field(const std::filesystem::path& path);

}  // namespace vortex
