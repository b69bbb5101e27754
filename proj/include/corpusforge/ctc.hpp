#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace corpusforge {

// Frame-level label posteriors, row-major frames x symbols. Every row is a
// probability distribution; symbol 0 is the reserved blank.
struct PosteriorMatrix {
  std::size_t frames = 0;
  std::size_t symbols = 0;
  std::vector<double> values;

  double at(std::size_t t, std::size_t v) const {
    return values[t * symbols + v];
  }
  double& at(std::size_t t, std::size_t v) { return values[t * symbols + v]; }
};

inline constexpr int kBlankSymbol = 0;

// Scoring alphabet: blank, 'a'..'z' (1..26), space (27).
inline constexpr std::size_t kAlphabetSize = 28;

// Maps transcript text onto the scoring alphabet: ASCII letters are
// case-folded, whitespace runs collapse to one space label, anything
// outside the alphabet is dropped. May return an empty sequence (e.g. a
// cue that is only music notation), which the scorer treats as unalignable.
std::vector<int> encode_labels(std::string_view text);

// Forward-algorithm alignment score: total -log p(labels | posteriors)
// over all blank-augmented paths, computed in log space, divided by the
// label count so scores stay comparable across utterance lengths. Lower is
// better; a feasible perfectly peaked posterior scores 0.
//
// Returns +infinity when no alignment exists (frames < labels + adjacent
// repeats). Throws std::invalid_argument for empty labels, labels outside
// [1, symbols), or rows that are not probability distributions.
double ctc_log_loss(const PosteriorMatrix& posteriors,
                    const std::vector<int>& labels);

}  // namespace corpusforge
