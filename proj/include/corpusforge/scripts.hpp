#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corpusforge {

enum class Script {
  Latin,
  Cyrillic,
  Han,
  Hiragana,
  Katakana,
  Greek,
  Devanagari,
  Hangul,
  Malayalam,
  Arabic,
  Other,
};

const char* to_string(Script script);

// Script of one code point by Unicode block range. Digits, whitespace and
// generic punctuation (Common script) map to Other but are skipped by the
// histogram below.
Script classify_code_point(char32_t cp);

struct ScriptCount {
  Script script = Script::Other;
  uint64_t characters = 0;
};

// Per-script character counts over the transcripts, ranked by count
// descending (ties by enum order). ASCII digits/whitespace/punctuation do
// not count toward any script; undecodable strings are skipped entirely.
std::vector<ScriptCount> detect_scripts(const std::vector<std::string>& transcripts);

}  // namespace corpusforge
