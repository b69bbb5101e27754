#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace corpusforge {

// One timed text segment of a subtitle track. After parsing repair the
// cues of a track are sorted by start, non-overlapping, and end > start.
struct Cue {
  double start = 0.0;  // seconds
  double end = 0.0;    // seconds, > start
  std::string text;    // UTF-8, lines joined with '\n'

  bool operator==(const Cue& other) const = default;
};

class SubtitleParseError : public std::runtime_error {
 public:
  explicit SubtitleParseError(const std::string& what)
      : std::runtime_error(what) {}
};

// Parses the WebVTT subset used at rest: a "WEBVTT" header line, a blank
// line, then cue blocks of one "HH:MM:SS.mmm --> HH:MM:SS.mmm" line
// followed by one or more text lines. Repairs on the way out: cues are
// sorted by start, overlapping cues are truncated at the next cue's
// start, and cues left with no duration are dropped.
// Throws SubtitleParseError on malformed input.
std::vector<Cue> parse_webvtt(const std::string& text);

// Renders cues back to the same subset. Inverse of parse_webvtt for
// already-repaired cue lists.
std::string render_webvtt(const std::vector<Cue>& cues);

std::string format_cue_time(double seconds);

}  // namespace corpusforge
