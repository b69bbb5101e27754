#include "corpusforge/harvester.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "corpusforge/coordinator_client.hpp"
#include "corpusforge/utf8.hpp"

namespace corpusforge {

namespace {

bool is_separator(unsigned char c) {
  // ASCII whitespace and punctuation split tokens; non-ASCII bytes are
  // always token material (no per-script segmentation here).
  if (c >= 0x80) return false;
  return std::isspace(c) || std::ispunct(c);
}

std::string fold_ascii(const std::string& token) {
  std::string out = token;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool purely_numeric(const std::string& token) {
  return std::all_of(token.begin(), token.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

std::vector<KeywordEntry> extract_keywords(std::istream& documents,
                                           const std::string& language,
                                           HarvestDiagnostics* diagnostics) {
  std::set<std::string> unique;
  HarvestDiagnostics local;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(documents, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!utf8_valid(line)) {
      ++local.undecodable_lines;
      continue;
    }
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      std::string folded = fold_ascii(token);
      token.clear();
      auto length = utf8_length(folded);
      if (!length || *length < 2) return;
      if (purely_numeric(folded)) return;
      unique.insert(std::move(folded));
    };
    for (char c : line) {
      if (is_separator(static_cast<unsigned char>(c))) {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
  }
  if (diagnostics) *diagnostics = local;

  std::vector<KeywordEntry> entries;
  entries.reserve(unique.size());
  for (const auto& keyword : unique) {
    entries.push_back({keyword, language, ""});
  }
  return entries;
}

std::vector<KeywordEntry> extract_keywords(const std::string& text,
                                           const std::string& language,
                                           HarvestDiagnostics* diagnostics) {
  std::istringstream in(text);
  return extract_keywords(in, language, diagnostics);
}

LanguageDistribution language_distribution(
    const std::vector<KeywordEntry>& entries) {
  LanguageDistribution dist;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& entry : entries) {
    if (!seen.insert({entry.language, entry.keyword}).second) continue;
    ++dist.counts[entry.language];
    ++dist.total;
  }
  return dist;
}

std::vector<KeywordEntry> prioritize(const std::vector<KeywordEntry>& entries,
                                     const LanguageDistribution& distribution) {
  for (const auto& entry : entries) {
    if (!distribution.counts.count(entry.language)) {
      throw std::invalid_argument("language missing from distribution: " +
                                  entry.language);
    }
  }
  std::vector<KeywordEntry> ordered = entries;
  std::sort(ordered.begin(), ordered.end(),
            [&](const KeywordEntry& a, const KeywordEntry& b) {
              uint64_t ca = distribution.counts.at(a.language);
              uint64_t cb = distribution.counts.at(b.language);
              if (ca != cb) return ca < cb;  // rarer language first
              if (a.language != b.language) return a.language < b.language;
              return a.keyword < b.keyword;
            });
  return ordered;
}

uint64_t feed_coordinator(const std::vector<KeywordEntry>& queue,
                          CoordinatorClient& coordinator, uint64_t limit) {
  uint64_t created = 0;
  uint64_t pushed = 0;
  for (const auto& entry : queue) {
    if (limit > 0 && pushed >= limit) break;
    ++pushed;
    if (coordinator.add_resource(ResourceKind::Keyword, entry.keyword).created) {
      ++created;
    }
  }
  return created;
}

std::string distribution_report_tsv(const LanguageDistribution& distribution) {
  std::vector<std::pair<std::string, uint64_t>> rows(
      distribution.counts.begin(), distribution.counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::ostringstream out;
  out << "language\tunique_keyword_count\n";
  for (const auto& [language, count] : rows) {
    out << language << '\t' << count << '\n';
  }
  return out.str();
}

}  // namespace corpusforge
