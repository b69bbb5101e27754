#include "corpusforge/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace corpusforge {

namespace {

using nlohmann::json;

std::string fmt(double value, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, value);
  return buf;
}

}  // namespace

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for write: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string format_threshold(double value) {
  double scaled = value * 10.0;
  if (std::abs(scaled - std::round(scaled)) < 1e-9) return fmt(value, "%.1f");
  return fmt(value, "%g");
}

std::string format_cap(double value) {
  if (std::abs(value - std::round(value)) < 1e-9) {
    return std::to_string(static_cast<long long>(std::llround(value)));
  }
  return fmt(value, "%g");
}

std::string curation_header_line(const CurationHeader& header) {
  std::ostringstream out;
  out << "# threshold=" << format_threshold(header.threshold)
      << " cap=" << format_cap(header.cap) << " seed=" << header.seed << "\n";
  return out.str();
}

std::string stats_table_csv(
    const std::vector<std::pair<std::string, std::optional<StatsSummary>>>&
        columns) {
  std::ostringstream out;
  out << "stat";
  for (const auto& [name, summary] : columns) out << ',' << name;
  out << '\n';

  const char* row_names[] = {"Mean", "Std", "Min", "Max"};
  for (int row = 0; row < 4; ++row) {
    out << row_names[row];
    for (const auto& [name, summary] : columns) {
      out << ',';
      if (!summary) {
        out << '-';
        continue;
      }
      double value = 0.0;
      switch (row) {
        case 0:
          value = summary->mean;
          break;
        case 1:
          value = summary->stddev;
          break;
        case 2:
          value = summary->min;
          break;
        case 3:
          value = summary->max;
          break;
      }
      out << fmt(value);
    }
    out << '\n';
  }
  return out.str();
}

std::string language_hours_csv(const LanguageHours& hours) {
  struct Row {
    std::string language;
    double manual;
    double automatic;
    double unlabeled;
  };
  std::vector<Row> rows;
  for (const auto& [language, subset_hours] : hours.by_language) {
    rows.push_back({language, subset_hours.manual, subset_hours.automatic, 0.0});
  }
  if (hours.unlabeled > 0.0) {
    rows.push_back({"(unlabeled)", 0.0, 0.0, hours.unlabeled});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    double ta = a.manual + a.automatic + a.unlabeled;
    double tb = b.manual + b.automatic + b.unlabeled;
    if (ta != tb) return ta > tb;
    return a.language < b.language;
  });

  std::ostringstream out;
  out << "language,manual_hours,automatic_hours,unlabeled_hours,total_hours\n";
  for (const auto& row : rows) {
    out << row.language << ',' << fmt(row.manual) << ',' << fmt(row.automatic)
        << ',' << fmt(row.unlabeled) << ','
        << fmt(row.manual + row.automatic + row.unlabeled) << '\n';
  }
  return out.str();
}

std::string scripts_csv(const std::vector<ScriptCount>& ranked) {
  std::ostringstream out;
  out << "rank,script,characters\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    out << (i + 1) << ',' << to_string(ranked[i].script) << ','
        << ranked[i].characters << '\n';
  }
  return out.str();
}

std::string sweep_csv(const SweepReport& report, const CurationHeader& header) {
  std::ostringstream out;
  out << curation_header_line(header);
  out << "threshold,kept_count,kept_hours\n";
  for (std::size_t i = 0; i < report.thresholds.size(); ++i) {
    out << format_threshold(report.thresholds[i]) << ','
        << report.kept_counts[i] << ',' << fmt(report.kept_hours[i]) << '\n';
  }
  return out.str();
}

std::string sweep_json(const SweepReport& report, const CurationHeader& header) {
  json j;
  j["threshold"] = header.threshold;
  j["cap"] = header.cap;
  j["seed"] = header.seed;
  j["thresholds"] = report.thresholds;
  j["kept_counts"] = report.kept_counts;
  j["kept_hours"] = report.kept_hours;
  return j.dump(2) + "\n";
}

std::string score_scatter_csv(const ScoreDurationReport& report,
                              const CurationHeader& header) {
  std::ostringstream out;
  out << curation_header_line(header);
  out << "duration_s,score\n";
  for (const auto& row : report.rows) {
    out << fmt(row.duration) << ',' << fmt(row.capped_score) << '\n';
  }
  return out.str();
}

std::string score_histogram_csv(const ScoreDurationReport& report,
                                const CurationHeader& header) {
  std::ostringstream out;
  out << curation_header_line(header);
  out << "bin_lo,bin_hi,count\n";
  for (const auto& bin : report.histogram) {
    out << fmt(bin.lo) << ',' << fmt(bin.hi) << ',' << bin.count << '\n';
  }
  return out.str();
}

std::string utterances_jsonl(const std::vector<UtterancePair>& pairs) {
  std::ostringstream out;
  for (const auto& pair : pairs) {
    json j;
    j["video_id"] = pair.video_id;
    j["cue_index"] = pair.cue_index;
    j["duration"] = pair.duration;
    j["transcript"] = pair.transcript;
    if (pair.score) {
      if (std::isfinite(*pair.score)) {
        j["score"] = *pair.score;
      } else {
        j["score"] = "inf";  // JSON has no infinity literal
      }
    }
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace corpusforge
