#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corpusforge/manifest.hpp"

namespace corpusforge {

// One audio segment + transcript, the unit of curation. score is the
// alignment loss (lower is better); +infinity marks an unalignable pair.
struct UtterancePair {
  std::string video_id;
  uint64_t cue_index = 0;
  double duration = 0.0;  // seconds, > 0
  std::string transcript;
  std::optional<double> score;

  bool operator==(const UtterancePair&) const = default;
};

using Scorer = std::function<double(const UtterancePair&)>;

// Attaches scorer output to every pair. The scorer is pluggable; the
// reference one runs the CTC loss over simulator posteriors (see
// make_reference_scorer in pipeline.hpp).
std::vector<UtterancePair> score_corpus(std::vector<UtterancePair> pairs,
                                        const Scorer& scorer);

// Reporting copy with finite scores clamped to `cap`. Raw scores stay with
// the caller; unscored and unalignable (+inf) pairs pass through unchanged
// so they remain excluded from any filter.
std::vector<UtterancePair> cap_scores(const std::vector<UtterancePair>& pairs,
                                      double cap);

// Keeps pairs with a finite score <= threshold (boundary inclusive:
// "worse" means strictly greater loss). Unscored and infinite pairs are
// always dropped.
std::vector<UtterancePair> filter_by_threshold(
    const std::vector<UtterancePair>& pairs, double threshold);

struct SplitResult {
  std::vector<UtterancePair> train;
  std::vector<UtterancePair> test;
};

// Seed-stable disjoint train/test sampling: |test| = test_size,
// |train| = min(train_max, n - test_size). Input order does not matter;
// pairs are canonically ordered by (video_id, cue_index) before the
// seeded shuffle. Throws std::invalid_argument unless test_size < n.
SplitResult sample_splits(const std::vector<UtterancePair>& pairs,
                          uint64_t train_max, uint64_t test_size,
                          uint64_t seed);

// Population statistics.
struct StatsSummary {
  uint64_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Welford one-pass accumulation; throws std::invalid_argument on empty
// input.
StatsSummary duration_stats(std::span<const double> values);

// Text lengths measured in Unicode scalar values. Transcripts that do not
// decode are skipped.
StatsSummary text_length_stats(const std::vector<std::string>& transcripts);

struct SubsetHours {
  double manual = 0.0;
  double automatic = 0.0;
};

struct LanguageHours {
  std::map<std::string, SubsetHours> by_language;
  double unlabeled = 0.0;

  double total() const {
    double sum = unlabeled;
    for (const auto& [lang, hours] : by_language) {
      sum += hours.manual + hours.automatic;
    }
    return sum;
  }
};

// Sums manifest durations per (language, subset); videos without a
// language land in the unlabeled bucket so hours conserve.
LanguageHours language_hours(const std::vector<ManifestRecord>& manifest);

struct SweepReport {
  std::vector<double> thresholds;  // ascending
  std::vector<uint64_t> kept_counts;
  std::vector<double> kept_hours;
};

// One filter_by_threshold evaluation per threshold over the given pairs
// (pass a capped copy for the cap-at-max reporting convention). Thresholds
// must be ascending; the kept counts are then monotone by construction of
// the filter.
SweepReport threshold_sweep(const std::vector<UtterancePair>& pairs,
                            const std::vector<double>& thresholds);

struct ScoreDurationReport {
  struct Row {
    double duration = 0.0;
    double capped_score = 0.0;
  };
  struct Bin {
    double lo = 0.0;
    double hi = 0.0;
    uint64_t count = 0;
  };
  double cap = 0.0;
  std::vector<Row> rows;        // one per finitely scored pair
  std::vector<Bin> histogram;   // marginal score histogram, bin width 1.0
};

ScoreDurationReport score_duration_report(
    const std::vector<UtterancePair>& pairs, double cap);

}  // namespace corpusforge
