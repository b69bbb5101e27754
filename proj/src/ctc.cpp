#include "corpusforge/ctc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace corpusforge {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kRowSumTolerance = 1e-6;

double safe_log(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double hi = std::max(a, b);
  double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

std::vector<int> encode_labels(std::string_view text) {
  std::vector<int> labels;
  labels.reserve(text.size());
  bool pending_space = false;
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      if (!labels.empty()) pending_space = true;
      continue;
    }
    int symbol = -1;
    if (c >= 'a' && c <= 'z') {
      symbol = 1 + (c - 'a');
    } else if (c >= 'A' && c <= 'Z') {
      symbol = 1 + (c - 'A');
    }
    if (symbol < 0) continue;  // outside the scoring alphabet
    if (pending_space) {
      labels.push_back(27);
      pending_space = false;
    }
    labels.push_back(symbol);
  }
  return labels;
}

double ctc_log_loss(const PosteriorMatrix& posteriors,
                    const std::vector<int>& labels) {
  const std::size_t T = posteriors.frames;
  const std::size_t V = posteriors.symbols;
  if (V < 2) throw std::invalid_argument("alphabet must include blank + 1");
  if (posteriors.values.size() != T * V) {
    throw std::invalid_argument("posterior matrix shape mismatch");
  }
  if (labels.empty()) throw std::invalid_argument("labels must be non-empty");
  for (int label : labels) {
    if (label <= kBlankSymbol || static_cast<std::size_t>(label) >= V) {
      throw std::invalid_argument("label outside [1, symbols)");
    }
  }
  for (std::size_t t = 0; t < T; ++t) {
    double sum = 0.0;
    for (std::size_t v = 0; v < V; ++v) {
      double p = posteriors.at(t, v);
      if (p < 0.0) throw std::invalid_argument("negative posterior entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("posterior row does not sum to 1");
    }
  }

  const std::size_t L = labels.size();
  std::size_t repeats = 0;
  for (std::size_t i = 1; i < L; ++i) {
    if (labels[i] == labels[i - 1]) ++repeats;
  }
  if (T < L + repeats) {
    return std::numeric_limits<double>::infinity();  // no alignment fits
  }

  // Blank-interleaved sequence: blank, l1, blank, l2, ..., blank.
  const std::size_t S = 2 * L + 1;
  auto ext = [&](std::size_t s) -> int {
    return (s % 2 == 0) ? kBlankSymbol : labels[s / 2];
  };

  std::vector<double> prev(S, kNegInf), curr(S, kNegInf);
  prev[0] = safe_log(posteriors.at(0, kBlankSymbol));
  if (S > 1) prev[1] = safe_log(posteriors.at(0, static_cast<std::size_t>(ext(1))));

  for (std::size_t t = 1; t < T; ++t) {
    for (std::size_t s = 0; s < S; ++s) {
      double acc = prev[s];
      if (s >= 1) acc = log_add(acc, prev[s - 1]);
      if (s >= 2 && ext(s) != kBlankSymbol && ext(s) != ext(s - 2)) {
        acc = log_add(acc, prev[s - 2]);
      }
      curr[s] =
          acc + safe_log(posteriors.at(t, static_cast<std::size_t>(ext(s))));
    }
    std::swap(prev, curr);
  }

  double total = prev[S - 1];
  if (S > 1) total = log_add(total, prev[S - 2]);
  if (total == kNegInf) return std::numeric_limits<double>::infinity();
  return -total / static_cast<double>(L);
}

}  // namespace corpusforge
