#pragma once

#include <cstdint>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace corpusforge {

enum class Subset { Manual, Automatic, Unlabeled };

const char* to_string(Subset subset);
std::optional<Subset> subset_from_string(const std::string& s);

// One classified, downloaded video. subset == Unlabeled exactly when both
// language and subtitle_path are absent.
struct ManifestRecord {
  std::string video_id;
  std::string channel_id;
  Subset subset = Subset::Unlabeled;
  std::optional<std::string> language;
  std::string audio_path;
  std::optional<std::string> subtitle_path;
  double duration = 0.0;  // seconds
  uint64_t num_cues = 0;

  bool operator==(const ManifestRecord&) const = default;
};

std::string manifest_record_to_json(const ManifestRecord& record);
ManifestRecord manifest_record_from_json(const std::string& line);

// Append-only JSON-lines sink; appends are atomic per record so concurrent
// download workers can share one sink.
class ManifestSink {
 public:
  explicit ManifestSink(const std::string& path);

  void append(const ManifestRecord& record);
  uint64_t records_written() const;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::ofstream out_;
  uint64_t count_ = 0;
};

// Whole-file read; malformed lines throw std::runtime_error. A missing
// file is an error; an empty file is an empty manifest.
std::vector<ManifestRecord> read_manifest(const std::string& path);

}  // namespace corpusforge
