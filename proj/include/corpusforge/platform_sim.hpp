#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpusforge/ctc.hpp"
#include "corpusforge/platform.hpp"
#include "corpusforge/subtitle.hpp"

namespace corpusforge {

class WorldError : public std::runtime_error {
 public:
  explicit WorldError(const std::string& what) : std::runtime_error(what) {}
};

// Ground-truth utterance: what is actually spoken in a span of the video.
struct TimedText {
  double start = 0.0;
  double end = 0.0;
  std::string text;
};

struct SubtitleTrackSpec {
  std::string language;
  SubtitleKind kind = SubtitleKind::Manual;
  std::vector<Cue> cues;
};

struct VideoSpec {
  std::string id;
  std::string channel_id;
  std::vector<std::string> title_keywords;
  bool license_cc = false;
  double duration_s = 0.0;
  uint64_t audio_seed = 0;
  std::vector<TimedText> spoken_text;
  std::vector<SubtitleTrackSpec> subtitle_tracks;
};

// Declarative description of the simulated platform. Loaded from a single
// JSON file so fixtures stay reviewable and oracles can be computed
// straight from the file (schema documented in docs/worldspec.md).
struct WorldSpec {
  int page_size = 10;
  std::vector<VideoSpec> videos;

  static WorldSpec from_json(const std::string& json_text);
  static WorldSpec load_file(const std::string& path);
  std::string to_json() const;

  // Checks id uniqueness, page_size >= 1, channel ids present, and that
  // all cue/utterance times fall within the video duration.
  void validate() const;
};

// Deterministic in-process stand-in for the video platform. Read-only
// after construction apart from the corruption knob, so unrestricted
// concurrent access is fine.
class PlatformSim : public PlatformAdapter {
 public:
  explicit PlatformSim(WorldSpec world);

  SearchPage search(const SearchQuery& query,
                    const std::optional<std::string>& continuation) override;
  VideoRecord video_metadata(const std::string& video_id) override;
  SearchPage channel_videos(
      const std::string& channel_id,
      const std::optional<std::string>& continuation) override;
  AudioBuffer media(const std::string& video_id) override;
  std::string subtitle(const std::string& video_id, const std::string& language,
                       SubtitleKind kind) override;

  // Stand-in for a pre-trained acoustic model: per-frame posteriors over
  // the scoring alphabet, sharply peaked on the ground-truth spoken text
  // of the indexed utterance. corruption in [0,1] mixes the rows toward
  // uniform; 0 is exact one-hot, 1 is exactly uniform.
  PosteriorMatrix posteriors(const std::string& video_id,
                             std::size_t cue_index) const;

  void set_corruption(double corruption);
  double corruption() const { return corruption_.load(); }

  const WorldSpec& world() const { return world_; }

  static constexpr int kPosteriorFramesPerSecond = 25;

 private:
  const VideoSpec& require_video(const std::string& video_id) const;

  WorldSpec world_;
  std::atomic<double> corruption_{0.0};
  std::unordered_map<std::string, std::size_t> video_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> channel_index_;
};

// Frame path construction used by posteriors(); exposed for tests.
std::vector<int> build_alignment_path(const std::vector<int>& labels,
                                      std::size_t frames);

}  // namespace corpusforge
