#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace corpusforge {

class CoordinatorClient;

struct KeywordEntry {
  std::string keyword;   // normalized token
  std::string language;  // BCP-47-style tag
  std::string source_doc;

  bool operator==(const KeywordEntry&) const = default;
};

struct LanguageDistribution {
  std::map<std::string, uint64_t> counts;  // language -> unique keywords
  uint64_t total = 0;
};

struct HarvestDiagnostics {
  uint64_t undecodable_lines = 0;
};

// Tokenizes documents (one per line) into unique keywords: split on
// whitespace and ASCII punctuation, ASCII case-folded, minimum two code
// points, purely numeric tokens dropped. Undecodable lines are skipped and
// tallied. Result is sorted by keyword.
std::vector<KeywordEntry> extract_keywords(std::istream& documents,
                                           const std::string& language,
                                           HarvestDiagnostics* diagnostics = nullptr);
std::vector<KeywordEntry> extract_keywords(const std::string& text,
                                           const std::string& language,
                                           HarvestDiagnostics* diagnostics = nullptr);

LanguageDistribution language_distribution(const std::vector<KeywordEntry>& entries);

// Orders keywords so every keyword of a rarer language precedes all
// keywords of strictly more frequent languages; ties break lexicographically
// by (language, keyword). Input order never matters. Throws
// std::invalid_argument when an entry's language is missing from the
// distribution.
std::vector<KeywordEntry> prioritize(const std::vector<KeywordEntry>& entries,
                                     const LanguageDistribution& distribution);

// Pushes up to `limit` keywords as Keyword resources (0 = no limit).
// Returns how many the coordinator actually created; replays are absorbed
// by coordinator deduplication.
uint64_t feed_coordinator(const std::vector<KeywordEntry>& queue,
                          CoordinatorClient& coordinator, uint64_t limit);

// TSV report, columns: language, unique_keyword_count; rows sorted by
// count descending, then language.
std::string distribution_report_tsv(const LanguageDistribution& distribution);

}  // namespace corpusforge
