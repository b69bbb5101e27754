#include "corpusforge/curation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "corpusforge/rng.hpp"
#include "corpusforge/utf8.hpp"

namespace corpusforge {

namespace {

bool finite_score(const UtterancePair& pair) {
  return pair.score && std::isfinite(*pair.score);
}

}  // namespace

std::vector<UtterancePair> score_corpus(std::vector<UtterancePair> pairs,
                                        const Scorer& scorer) {
  for (auto& pair : pairs) pair.score = scorer(pair);
  return pairs;
}

std::vector<UtterancePair> cap_scores(const std::vector<UtterancePair>& pairs,
                                      double cap) {
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  std::vector<UtterancePair> out = pairs;
  for (auto& pair : out) {
    if (finite_score(pair)) pair.score = std::min(*pair.score, cap);
  }
  return out;
}

std::vector<UtterancePair> filter_by_threshold(
    const std::vector<UtterancePair>& pairs, double threshold) {
  std::vector<UtterancePair> kept;
  kept.reserve(pairs.size());
  for (const auto& pair : pairs) {
    if (finite_score(pair) && *pair.score <= threshold) kept.push_back(pair);
  }
  return kept;
}

SplitResult sample_splits(const std::vector<UtterancePair>& pairs,
                          uint64_t train_max, uint64_t test_size,
                          uint64_t seed) {
  if (test_size >= pairs.size()) {
    throw std::invalid_argument("test_size must be < number of pairs");
  }
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Canonical order first so the split depends on content, not input order.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pairs[a].video_id != pairs[b].video_id) {
      return pairs[a].video_id < pairs[b].video_id;
    }
    return pairs[a].cue_index < pairs[b].cue_index;
  });
  SplitMix64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(order[i - 1], order[j]);
  }

  SplitResult result;
  result.test.reserve(test_size);
  for (uint64_t i = 0; i < test_size; ++i) {
    result.test.push_back(pairs[order[i]]);
  }
  uint64_t train_size =
      std::min<uint64_t>(train_max, pairs.size() - test_size);
  result.train.reserve(train_size);
  for (uint64_t i = 0; i < train_size; ++i) {
    result.train.push_back(pairs[order[test_size + i]]);
  }
  return result;
}

StatsSummary duration_stats(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("stats need at least one value");
  }
  StatsSummary summary;
  summary.min = std::numeric_limits<double>::infinity();
  summary.max = -std::numeric_limits<double>::infinity();
  double mean = 0.0;
  double m2 = 0.0;
  uint64_t n = 0;
  for (double v : values) {
    ++n;
    double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
    summary.min = std::min(summary.min, v);
    summary.max = std::max(summary.max, v);
  }
  summary.count = n;
  summary.mean = mean;
  summary.stddev = std::sqrt(m2 / static_cast<double>(n));  // population
  return summary;
}

StatsSummary text_length_stats(const std::vector<std::string>& transcripts) {
  std::vector<double> lengths;
  lengths.reserve(transcripts.size());
  for (const auto& transcript : transcripts) {
    auto length = utf8_length(transcript);
    if (!length) continue;
    lengths.push_back(static_cast<double>(*length));
  }
  return duration_stats(lengths);
}

LanguageHours language_hours(const std::vector<ManifestRecord>& manifest) {
  LanguageHours hours;
  for (const auto& record : manifest) {
    double h = record.duration / 3600.0;
    switch (record.subset) {
      case Subset::Manual:
        hours.by_language[record.language.value_or("?")].manual += h;
        break;
      case Subset::Automatic:
        hours.by_language[record.language.value_or("?")].automatic += h;
        break;
      case Subset::Unlabeled:
        hours.unlabeled += h;
        break;
    }
  }
  return hours;
}

SweepReport threshold_sweep(const std::vector<UtterancePair>& pairs,
                            const std::vector<double>& thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (thresholds[i] < thresholds[i - 1]) {
      throw std::invalid_argument("thresholds must ascend");
    }
  }
  SweepReport report;
  report.thresholds = thresholds;
  for (double threshold : thresholds) {
    auto kept = filter_by_threshold(pairs, threshold);
    double kept_hours = 0.0;
    for (const auto& pair : kept) kept_hours += pair.duration / 3600.0;
    report.kept_counts.push_back(kept.size());
    report.kept_hours.push_back(kept_hours);
  }
  return report;
}

ScoreDurationReport score_duration_report(
    const std::vector<UtterancePair>& pairs, double cap) {
  if (cap <= 0) throw std::invalid_argument("cap must be > 0");
  ScoreDurationReport report;
  report.cap = cap;

  auto capped = cap_scores(pairs, cap);
  std::size_t bins = static_cast<std::size_t>(std::ceil(cap));
  report.histogram.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    report.histogram[b].lo = static_cast<double>(b);
    report.histogram[b].hi = std::min(static_cast<double>(b + 1), cap);
  }
  for (const auto& pair : capped) {
    if (!finite_score(pair)) continue;
    double score = *pair.score;
    report.rows.push_back({pair.duration, score});
    auto bin = static_cast<std::size_t>(score);  // bin width 1.0
    if (bin >= bins) bin = bins - 1;              // score == cap
    ++report.histogram[bin].count;
  }
  return report;
}

}  // namespace corpusforge
