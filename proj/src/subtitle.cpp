#include "corpusforge/subtitle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace corpusforge {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(current);
  }
  return lines;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// "HH:MM:SS.mmm" with HH allowed to exceed two digits.
bool parse_timestamp(const std::string& token, double* out) {
  auto first_colon = token.find(':');
  auto second_colon = token.find(':', first_colon + 1);
  auto dot = token.find('.', second_colon + 1);
  if (first_colon == std::string::npos || second_colon == std::string::npos ||
      dot == std::string::npos) {
    return false;
  }
  std::string hh = token.substr(0, first_colon);
  std::string mm = token.substr(first_colon + 1, second_colon - first_colon - 1);
  std::string ss = token.substr(second_colon + 1, dot - second_colon - 1);
  std::string mmm = token.substr(dot + 1);
  if (hh.size() < 2 || mm.size() != 2 || ss.size() != 2 || mmm.size() != 3) {
    return false;
  }
  if (!all_digits(hh) || !all_digits(mm) || !all_digits(ss) ||
      !all_digits(mmm)) {
    return false;
  }
  long hours = std::stol(hh);
  long minutes = std::stol(mm);
  long seconds = std::stol(ss);
  long millis = std::stol(mmm);
  if (minutes > 59 || seconds > 59) return false;
  *out = hours * 3600.0 + minutes * 60.0 + seconds + millis / 1000.0;
  return true;
}

bool parse_cue_timing(const std::string& line, double* start, double* end) {
  auto arrow = line.find(" --> ");
  if (arrow == std::string::npos) return false;
  std::string lhs = line.substr(0, arrow);
  std::string rhs = line.substr(arrow + 5);
  // Trim trailing spaces; cue settings are not part of the subset.
  while (!rhs.empty() && rhs.back() == ' ') rhs.pop_back();
  if (rhs.find(' ') != std::string::npos) return false;
  return parse_timestamp(lhs, start) && parse_timestamp(rhs, end);
}

std::vector<Cue> repair(std::vector<Cue> cues) {
  std::stable_sort(cues.begin(), cues.end(),
                   [](const Cue& a, const Cue& b) { return a.start < b.start; });
  for (std::size_t i = 0; i + 1 < cues.size(); ++i) {
    if (cues[i].end > cues[i + 1].start) cues[i].end = cues[i + 1].start;
  }
  std::vector<Cue> kept;
  kept.reserve(cues.size());
  for (auto& cue : cues) {
    if (cue.end > cue.start) kept.push_back(std::move(cue));
  }
  return kept;
}

}  // namespace

std::vector<Cue> parse_webvtt(const std::string& text) {
  std::string body = text;
  // Tolerate a UTF-8 BOM before the signature.
  if (body.rfind("\xEF\xBB\xBF", 0) == 0) body.erase(0, 3);

  std::vector<std::string> lines = split_lines(body);
  if (lines.empty() || lines[0].rfind("WEBVTT", 0) != 0) {
    throw SubtitleParseError("missing WEBVTT header");
  }

  std::vector<Cue> cues;
  std::size_t i = 1;
  while (i < lines.size()) {
    if (lines[i].empty()) {
      ++i;
      continue;
    }
    Cue cue;
    if (!parse_cue_timing(lines[i], &cue.start, &cue.end)) {
      throw SubtitleParseError("bad cue timing line: " + lines[i]);
    }
    if (cue.start < 0 || cue.end < 0) {
      throw SubtitleParseError("negative cue time");
    }
    ++i;
    std::string cue_text;
    std::size_t text_lines = 0;
    while (i < lines.size() && !lines[i].empty()) {
      if (text_lines > 0) cue_text.push_back('\n');
      cue_text += lines[i];
      ++text_lines;
      ++i;
    }
    if (text_lines == 0) {
      throw SubtitleParseError("cue without text");
    }
    cue.text = std::move(cue_text);
    cues.push_back(std::move(cue));
  }
  return repair(std::move(cues));
}

std::string format_cue_time(double seconds) {
  long total_ms = std::lround(seconds * 1000.0);
  if (total_ms < 0) total_ms = 0;
  long ms = total_ms % 1000;
  long s = (total_ms / 1000) % 60;
  long m = (total_ms / 60000) % 60;
  long h = total_ms / 3600000;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02ld:%02ld:%02ld.%03ld", h, m, s, ms);
  return buf;
}

std::string render_webvtt(const std::vector<Cue>& cues) {
  std::ostringstream out;
  out << "WEBVTT\n";
  for (const auto& cue : cues) {
    out << "\n"
        << format_cue_time(cue.start) << " --> " << format_cue_time(cue.end)
        << "\n"
        << cue.text << "\n";
  }
  return out.str();
}

}  // namespace corpusforge
