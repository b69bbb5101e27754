#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corpusforge {

// Decodes a UTF-8 string into code points. Returns std::nullopt on any
// invalid byte sequence (overlong forms, stray continuation bytes,
// surrogate halves, values past U+10FFFF).
std::optional<std::vector<char32_t>> utf8_decode(std::string_view text);

bool utf8_valid(std::string_view text);

// Number of code points; invalid input yields std::nullopt.
std::optional<std::size_t> utf8_length(std::string_view text);

// Appends one code point as UTF-8.
void utf8_append(std::string& out, char32_t cp);

}  // namespace corpusforge
