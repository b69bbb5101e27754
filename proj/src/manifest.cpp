#include "corpusforge/manifest.hpp"

#include <stdexcept>

#include "json.hpp"

namespace corpusforge {

using nlohmann::json;

const char* to_string(Subset subset) {
  switch (subset) {
    case Subset::Manual:
      return "manual";
    case Subset::Automatic:
      return "automatic";
    case Subset::Unlabeled:
      return "unlabeled";
  }
  return "?";
}

std::optional<Subset> subset_from_string(const std::string& s) {
  if (s == "manual") return Subset::Manual;
  if (s == "automatic") return Subset::Automatic;
  if (s == "unlabeled") return Subset::Unlabeled;
  return std::nullopt;
}

std::string manifest_record_to_json(const ManifestRecord& record) {
  json j;
  j["video_id"] = record.video_id;
  j["channel_id"] = record.channel_id;
  j["subset"] = to_string(record.subset);
  if (record.language) j["language"] = *record.language;
  j["audio_path"] = record.audio_path;
  if (record.subtitle_path) j["subtitle_path"] = *record.subtitle_path;
  j["duration"] = record.duration;
  j["num_cues"] = record.num_cues;
  return j.dump();
}

ManifestRecord manifest_record_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("bad manifest line: ") + e.what());
  }
  ManifestRecord record;
  try {
    record.video_id = j.at("video_id").get<std::string>();
    record.channel_id = j.at("channel_id").get<std::string>();
    auto subset = subset_from_string(j.at("subset").get<std::string>());
    if (!subset) throw std::runtime_error("unknown subset in manifest");
    record.subset = *subset;
    if (j.contains("language")) record.language = j["language"].get<std::string>();
    record.audio_path = j.at("audio_path").get<std::string>();
    if (j.contains("subtitle_path")) {
      record.subtitle_path = j["subtitle_path"].get<std::string>();
    }
    record.duration = j.at("duration").get<double>();
    record.num_cues = j.at("num_cues").get<uint64_t>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("bad manifest record: ") + e.what());
  }
  return record;
}

ManifestSink::ManifestSink(const std::string& path) : path_(path) {
  out_.open(path, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open manifest: " + path);
}

void ManifestSink::append(const ManifestRecord& record) {
  std::string line = manifest_record_to_json(record);
  std::lock_guard lock(mu_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw std::runtime_error("manifest write failed: " + path_);
  ++count_;
}

uint64_t ManifestSink::records_written() const {
  std::lock_guard lock(mu_);
  return count_;
}

std::vector<ManifestRecord> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  std::vector<ManifestRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(manifest_record_from_json(line));
  }
  return records;
}

}  // namespace corpusforge
