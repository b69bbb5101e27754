#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corpusforge/curation.hpp"
#include "corpusforge/scripts.hpp"

namespace corpusforge {

// Write-to-temp + rename so rerunning a command atomically replaces
// reports.
void atomic_write_file(const std::string& path, const std::string& content);

// Number rendering used in report headers: thresholds always carry a
// decimal ("2.0"), caps print whole values bare ("20").
std::string format_threshold(double value);
std::string format_cap(double value);

struct CurationHeader {
  double threshold = 0.0;
  double cap = 0.0;
  uint64_t seed = 0;
};

std::string curation_header_line(const CurationHeader& header);

// Mean/Std/Min/Max rows, one column per named summary; columns without a
// summary render "-".
std::string stats_table_csv(
    const std::vector<std::pair<std::string, std::optional<StatsSummary>>>& columns);

std::string language_hours_csv(const LanguageHours& hours);
std::string scripts_csv(const std::vector<ScriptCount>& ranked);

std::string sweep_csv(const SweepReport& report, const CurationHeader& header);
std::string sweep_json(const SweepReport& report, const CurationHeader& header);

std::string score_scatter_csv(const ScoreDurationReport& report,
                              const CurationHeader& header);
std::string score_histogram_csv(const ScoreDurationReport& report,
                                const CurationHeader& header);

std::string utterances_jsonl(const std::vector<UtterancePair>& pairs);

}  // namespace corpusforge
