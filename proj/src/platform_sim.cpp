#include "corpusforge/platform_sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "corpusforge/rng.hpp"
#include "json.hpp"

namespace corpusforge {

namespace {

using nlohmann::json;

constexpr const char* kContinuationPrefix = "o:";

std::optional<std::size_t> parse_continuation(const std::string& token) {
  if (token.rfind(kContinuationPrefix, 0) != 0) return std::nullopt;
  std::size_t offset = 0;
  for (std::size_t i = 2; i < token.size(); ++i) {
    char c = token[i];
    if (c < '0' || c > '9') return std::nullopt;
    offset = offset * 10 + static_cast<std::size_t>(c - '0');
  }
  return token.size() > 2 ? std::optional<std::size_t>(offset) : std::nullopt;
}

SearchPage paginate(const std::vector<std::string>& ids, std::size_t offset,
                    std::size_t page_size) {
  SearchPage page;
  if (offset >= ids.size()) return page;
  std::size_t end = std::min(ids.size(), offset + page_size);
  page.video_ids.assign(ids.begin() + static_cast<std::ptrdiff_t>(offset),
                        ids.begin() + static_cast<std::ptrdiff_t>(end));
  if (end < ids.size()) {
    page.continuation = kContinuationPrefix + std::to_string(end);
  }
  return page;
}

json timed_text_to_json(const TimedText& t) {
  return {{"start", t.start}, {"end", t.end}, {"text", t.text}};
}

json cue_to_json(const Cue& c) {
  return {{"start", c.start}, {"end", c.end}, {"text", c.text}};
}

}  // namespace

const char* to_string(SubtitleKind kind) {
  return kind == SubtitleKind::Manual ? "manual" : "automatic";
}

std::optional<SubtitleKind> subtitle_kind_from_string(const std::string& s) {
  if (s == "manual") return SubtitleKind::Manual;
  if (s == "automatic") return SubtitleKind::Automatic;
  return std::nullopt;
}

WorldSpec WorldSpec::from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw WorldError(std::string("world JSON parse error: ") + e.what());
  }
  WorldSpec world;
  try {
    world.page_size = j.value("page_size", 10);
    for (const auto& vj : j.at("videos")) {
      VideoSpec video;
      video.id = vj.at("id").get<std::string>();
      video.channel_id = vj.at("channel_id").get<std::string>();
      for (const auto& kw : vj.value("title_keywords", json::array())) {
        video.title_keywords.push_back(kw.get<std::string>());
      }
      video.license_cc = vj.value("license_cc", false);
      video.duration_s = vj.at("duration_s").get<double>();
      video.audio_seed = vj.value("audio_seed", 0ULL);
      for (const auto& uj : vj.value("spoken_text", json::array())) {
        TimedText t;
        t.start = uj.at("start").get<double>();
        t.end = uj.at("end").get<double>();
        t.text = uj.at("text").get<std::string>();
        video.spoken_text.push_back(std::move(t));
      }
      for (const auto& tj : vj.value("subtitle_tracks", json::array())) {
        SubtitleTrackSpec track;
        track.language = tj.at("language").get<std::string>();
        auto kind = subtitle_kind_from_string(tj.at("kind").get<std::string>());
        if (!kind) throw WorldError("unknown subtitle kind");
        track.kind = *kind;
        for (const auto& cj : tj.value("cues", json::array())) {
          Cue cue;
          cue.start = cj.at("start").get<double>();
          cue.end = cj.at("end").get<double>();
          cue.text = cj.at("text").get<std::string>();
          track.cues.push_back(std::move(cue));
        }
        video.subtitle_tracks.push_back(std::move(track));
      }
      world.videos.push_back(std::move(video));
    }
  } catch (const json::exception& e) {
    throw WorldError(std::string("world JSON shape error: ") + e.what());
  }
  world.validate();
  return world;
}

WorldSpec WorldSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WorldError("cannot open world file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

std::string WorldSpec::to_json() const {
  json j;
  j["page_size"] = page_size;
  json videos_json = json::array();
  for (const auto& video : videos) {
    json vj;
    vj["id"] = video.id;
    vj["channel_id"] = video.channel_id;
    vj["title_keywords"] = video.title_keywords;
    vj["license_cc"] = video.license_cc;
    vj["duration_s"] = video.duration_s;
    vj["audio_seed"] = video.audio_seed;
    json spoken = json::array();
    for (const auto& t : video.spoken_text) spoken.push_back(timed_text_to_json(t));
    vj["spoken_text"] = std::move(spoken);
    json tracks = json::array();
    for (const auto& track : video.subtitle_tracks) {
      json tj;
      tj["language"] = track.language;
      tj["kind"] = to_string(track.kind);
      json cues = json::array();
      for (const auto& cue : track.cues) cues.push_back(cue_to_json(cue));
      tj["cues"] = std::move(cues);
      tracks.push_back(std::move(tj));
    }
    vj["subtitle_tracks"] = std::move(tracks);
    videos_json.push_back(std::move(vj));
  }
  j["videos"] = std::move(videos_json);
  return j.dump(2) + "\n";
}

void WorldSpec::validate() const {
  if (page_size < 1) throw WorldError("page_size must be >= 1");
  std::unordered_map<std::string, bool> seen;
  for (const auto& video : videos) {
    if (video.id.empty()) throw WorldError("video with empty id");
    if (video.channel_id.empty()) {
      throw WorldError("video " + video.id + " has empty channel_id");
    }
    if (seen.count(video.id)) throw WorldError("duplicate video id " + video.id);
    seen[video.id] = true;
    if (video.duration_s <= 0) {
      throw WorldError("video " + video.id + " has non-positive duration");
    }
    auto check_span = [&](double start, double end, const char* what) {
      if (start < 0 || end <= start || end > video.duration_s + 1e-9) {
        throw WorldError("video " + video.id + ": " + what +
                         " span outside duration");
      }
    };
    for (const auto& t : video.spoken_text) check_span(t.start, t.end, "spoken_text");
    for (const auto& track : video.subtitle_tracks) {
      if (track.language.empty()) {
        throw WorldError("video " + video.id + " has track with empty language");
      }
      for (const auto& cue : track.cues) check_span(cue.start, cue.end, "cue");
    }
  }
}

PlatformSim::PlatformSim(WorldSpec world) : world_(std::move(world)) {
  world_.validate();
  for (std::size_t i = 0; i < world_.videos.size(); ++i) {
    video_index_[world_.videos[i].id] = i;
    // World-file order doubles as upload order.
    channel_index_[world_.videos[i].channel_id].push_back(i);
  }
}

const VideoSpec& PlatformSim::require_video(const std::string& video_id) const {
  auto it = video_index_.find(video_id);
  if (it == video_index_.end()) {
    throw PlatformNotFound("unknown video: " + video_id);
  }
  return world_.videos[it->second];
}

SearchPage PlatformSim::search(const SearchQuery& query,
                               const std::optional<std::string>& continuation) {
  if (query.keyword.empty()) throw PlatformError("empty search keyword");

  struct Hit {
    std::size_t occurrences;
    const std::string* id;
  };
  std::vector<Hit> hits;
  for (const auto& video : world_.videos) {
    std::size_t occurrences = static_cast<std::size_t>(
        std::count(video.title_keywords.begin(), video.title_keywords.end(),
                   query.keyword));
    if (occurrences == 0) continue;
    if (query.require_cc_license && !video.license_cc) continue;
    if (query.require_subtitles && video.subtitle_tracks.empty()) continue;
    hits.push_back({occurrences, &video.id});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.occurrences != b.occurrences) return a.occurrences > b.occurrences;
    return *a.id < *b.id;
  });
  std::vector<std::string> ids;
  ids.reserve(hits.size());
  for (const Hit& hit : hits) ids.push_back(*hit.id);

  std::size_t offset = 0;
  if (continuation) {
    auto parsed = parse_continuation(*continuation);
    if (!parsed) throw PlatformError("bad continuation token");
    offset = *parsed;
  }
  return paginate(ids, offset, static_cast<std::size_t>(world_.page_size));
}

VideoRecord PlatformSim::video_metadata(const std::string& video_id) {
  const VideoSpec& video = require_video(video_id);
  VideoRecord record;
  record.id = video.id;
  record.channel_id = video.channel_id;
  record.duration_s = video.duration_s;
  record.license_cc = video.license_cc;
  for (const auto& track : video.subtitle_tracks) {
    record.subtitles.push_back({track.language, track.kind});
  }
  return record;
}

SearchPage PlatformSim::channel_videos(
    const std::string& channel_id,
    const std::optional<std::string>& continuation) {
  auto it = channel_index_.find(channel_id);
  if (it == channel_index_.end()) {
    throw PlatformNotFound("unknown channel: " + channel_id);
  }
  std::vector<std::string> ids;
  ids.reserve(it->second.size());
  for (std::size_t idx : it->second) ids.push_back(world_.videos[idx].id);

  std::size_t offset = 0;
  if (continuation) {
    auto parsed = parse_continuation(*continuation);
    if (!parsed) throw PlatformError("bad continuation token");
    offset = *parsed;
  }
  return paginate(ids, offset, static_cast<std::size_t>(world_.page_size));
}

AudioBuffer PlatformSim::media(const std::string& video_id) {
  const VideoSpec& video = require_video(video_id);

  SplitMix64 rng(video.audio_seed * 0x9E3779B97F4A7C15ULL + 1);
  static constexpr int kRates[] = {8000, 16000, 24000, 44100, 48000};
  int rate = kRates[rng.next() % 5];
  int channels = 1 + static_cast<int>(rng.next() % 2);
  double tone_a = 180.0 + static_cast<double>(rng.next() % 300);
  double tone_b = 600.0 + static_cast<double>(rng.next() % 800);

  auto frames = static_cast<std::size_t>(std::llround(video.duration_s * rate));
  if (frames == 0) frames = 1;

  AudioBuffer audio;
  audio.sample_rate = rate;
  audio.channels = channels;
  audio.samples.resize(frames * static_cast<std::size_t>(channels));

  std::size_t utterance = 0;
  for (std::size_t i = 0; i < frames; ++i) {
    double t = static_cast<double>(i) / rate;
    while (utterance < video.spoken_text.size() &&
           t >= video.spoken_text[utterance].end) {
      ++utterance;
    }
    bool speaking = utterance < video.spoken_text.size() &&
                    t >= video.spoken_text[utterance].start;
    double value;
    if (speaking) {
      value = 0.55 * std::sin(2.0 * std::numbers::pi * tone_a * t) +
              0.25 * std::sin(2.0 * std::numbers::pi * tone_b * t) +
              0.08 * rng.next_signal();
    } else {
      value = 0.05 * std::sin(2.0 * std::numbers::pi * tone_b * t) +
              0.02 * rng.next_signal();
    }
    auto sample = static_cast<int16_t>(std::lround(value * 9000.0));
    for (int c = 0; c < channels; ++c) {
      audio.samples[i * static_cast<std::size_t>(channels) +
                    static_cast<std::size_t>(c)] = sample;
    }
  }
  return audio;
}

std::string PlatformSim::subtitle(const std::string& video_id,
                                  const std::string& language,
                                  SubtitleKind kind) {
  const VideoSpec& video = require_video(video_id);
  for (const auto& track : video.subtitle_tracks) {
    if (track.language == language && track.kind == kind) {
      return render_webvtt(track.cues);
    }
  }
  throw PlatformNotFound("no such subtitle track: " + video_id + "/" +
                         language + "/" + to_string(kind));
}

std::vector<int> build_alignment_path(const std::vector<int>& labels,
                                      std::size_t frames) {
  // Minimal frame cost: one frame per label plus a separating blank
  // between adjacent repeats.
  std::size_t repeats = 0;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) ++repeats;
  }
  std::size_t needed = labels.size() + repeats;
  if (frames < needed) frames = needed;

  std::size_t spare = frames - needed;
  std::size_t per_label = labels.empty() ? 0 : spare / labels.size();

  std::vector<int> path;
  path.reserve(frames);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0 && labels[i] == labels[i - 1]) path.push_back(kBlankSymbol);
    for (std::size_t k = 0; k <= per_label; ++k) path.push_back(labels[i]);
  }
  while (path.size() < frames) path.push_back(kBlankSymbol);
  return path;
}

PosteriorMatrix PlatformSim::posteriors(const std::string& video_id,
                                        std::size_t cue_index) const {
  const VideoSpec& video = require_video(video_id);
  if (cue_index >= video.spoken_text.size()) {
    throw PlatformNotFound("no ground-truth utterance " +
                           std::to_string(cue_index) + " in " + video_id);
  }
  const TimedText& utterance = video.spoken_text[cue_index];
  std::vector<int> labels = encode_labels(utterance.text);

  auto duration_frames = static_cast<std::size_t>(std::llround(
      (utterance.end - utterance.start) * kPosteriorFramesPerSecond));
  if (duration_frames == 0) duration_frames = 1;
  std::vector<int> path = build_alignment_path(labels, duration_frames);

  double corruption = corruption_.load();
  PosteriorMatrix matrix;
  matrix.frames = path.size();
  matrix.symbols = kAlphabetSize;
  matrix.values.assign(matrix.frames * matrix.symbols,
                       corruption / static_cast<double>(kAlphabetSize));
  for (std::size_t t = 0; t < matrix.frames; ++t) {
    matrix.at(t, static_cast<std::size_t>(path[t])) += 1.0 - corruption;
  }
  return matrix;
}

void PlatformSim::set_corruption(double corruption) {
  if (corruption < 0.0 || corruption > 1.0) {
    throw std::invalid_argument("corruption must be in [0, 1]");
  }
  corruption_.store(corruption);
}

SearchPage LiveStubAdapter::search(const SearchQuery&,
                                   const std::optional<std::string>&) {
  throw PlatformUnavailable("live platform adapter is a stub");
}
VideoRecord LiveStubAdapter::video_metadata(const std::string&) {
  throw PlatformUnavailable("live platform adapter is a stub");
}
SearchPage LiveStubAdapter::channel_videos(const std::string&,
                                           const std::optional<std::string>&) {
  throw PlatformUnavailable("live platform adapter is a stub");
}
AudioBuffer LiveStubAdapter::media(const std::string&) {
  throw PlatformUnavailable("live platform adapter is a stub");
}
std::string LiveStubAdapter::subtitle(const std::string&, const std::string&,
                                      SubtitleKind) {
  throw PlatformUnavailable("live platform adapter is a stub");
}

}  // namespace corpusforge
