#include "corpusforge/scripts.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "corpusforge/utf8.hpp"

namespace corpusforge {

const char* to_string(Script script) {
  switch (script) {
    case Script::Latin:
      return "Latin";
    case Script::Cyrillic:
      return "Cyrillic";
    case Script::Han:
      return "Han";
    case Script::Hiragana:
      return "Hiragana";
    case Script::Katakana:
      return "Katakana";
    case Script::Greek:
      return "Greek";
    case Script::Devanagari:
      return "Devanagari";
    case Script::Hangul:
      return "Hangul";
    case Script::Malayalam:
      return "Malayalam";
    case Script::Arabic:
      return "Arabic";
    case Script::Other:
      return "Other";
  }
  return "?";
}

namespace {

struct Range {
  char32_t lo;
  char32_t hi;
  Script script;
};

// Unicode block ranges for the scripts the corpus reports on.
constexpr Range kRanges[] = {
    {0x0041, 0x005A, Script::Latin},
    {0x0061, 0x007A, Script::Latin},
    {0x00C0, 0x00D6, Script::Latin},
    {0x00D8, 0x00F6, Script::Latin},
    {0x00F8, 0x024F, Script::Latin},
    {0x1E00, 0x1EFF, Script::Latin},
    {0x2C60, 0x2C7F, Script::Latin},
    {0xA720, 0xA7FF, Script::Latin},
    {0x0370, 0x03FF, Script::Greek},
    {0x1F00, 0x1FFF, Script::Greek},
    {0x0400, 0x052F, Script::Cyrillic},
    {0x2DE0, 0x2DFF, Script::Cyrillic},
    {0xA640, 0xA69F, Script::Cyrillic},
    {0x0600, 0x06FF, Script::Arabic},
    {0x0750, 0x077F, Script::Arabic},
    {0x08A0, 0x08FF, Script::Arabic},
    {0xFB50, 0xFDFF, Script::Arabic},
    {0xFE70, 0xFEFF, Script::Arabic},
    {0x0900, 0x097F, Script::Devanagari},
    {0xA8E0, 0xA8FF, Script::Devanagari},
    {0x0D00, 0x0D7F, Script::Malayalam},
    {0x1100, 0x11FF, Script::Hangul},
    {0x3130, 0x318F, Script::Hangul},
    {0xA960, 0xA97F, Script::Hangul},
    {0xAC00, 0xD7FF, Script::Hangul},
    {0x3040, 0x309F, Script::Hiragana},
    {0x30A0, 0x30FF, Script::Katakana},
    {0x31F0, 0x31FF, Script::Katakana},
    {0xFF66, 0xFF9D, Script::Katakana},
    {0x3400, 0x4DBF, Script::Han},
    {0x4E00, 0x9FFF, Script::Han},
    {0xF900, 0xFAFF, Script::Han},
    {0x20000, 0x2A6DF, Script::Han},
};

bool common_code_point(char32_t cp) {
  if (cp <= 0x40) return true;                  // controls, space, digits, punct
  if (cp >= 0x5B && cp <= 0x60) return true;    // [\]^_`
  if (cp >= 0x7B && cp <= 0x7F) return true;    // {|}~
  if (cp >= 0x2000 && cp <= 0x206F) return true;  // general punctuation
  return false;
}

}  // namespace

Script classify_code_point(char32_t cp) {
  for (const Range& range : kRanges) {
    if (cp >= range.lo && cp <= range.hi) return range.script;
  }
  return Script::Other;
}

std::vector<ScriptCount> detect_scripts(
    const std::vector<std::string>& transcripts) {
  std::map<Script, uint64_t> counts;
  for (const auto& transcript : transcripts) {
    auto cps = utf8_decode(transcript);
    if (!cps) continue;
    for (char32_t cp : *cps) {
      if (common_code_point(cp)) continue;
      ++counts[classify_code_point(cp)];
    }
  }
  std::vector<ScriptCount> ranked;
  ranked.reserve(counts.size());
  for (const auto& [script, count] : counts) ranked.push_back({script, count});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const ScriptCount& a, const ScriptCount& b) {
                     return a.characters > b.characters;
                   });
  return ranked;
}

}  // namespace corpusforge
