#include "corpusforge/download.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "corpusforge/audio.hpp"
#include "corpusforge/subtitle.hpp"

namespace corpusforge {

Classification resolve_subtitles(const std::vector<SubtitleDescriptor>& descriptors,
                                 bool strict) {
  std::vector<const SubtitleDescriptor*> manual;
  std::vector<const SubtitleDescriptor*> automatic;
  for (const auto& d : descriptors) {
    (d.kind == SubtitleKind::Manual ? manual : automatic).push_back(&d);
  }

  Classification unlabeled;  // default outcome

  // Lone manual track, nothing else.
  if (manual.size() == 1 && automatic.empty()) {
    return {Classification::Outcome::ManualLabeled, manual[0]->language,
            SubtitleKind::Manual};
  }
  // Lone automatic track, nothing else.
  if (manual.empty() && automatic.size() == 1) {
    return {Classification::Outcome::AutomaticLabeled, automatic[0]->language,
            SubtitleKind::Automatic};
  }
  // One manual track plus automatic tracks that all agree with it.
  if (!strict && manual.size() == 1 && !automatic.empty()) {
    const std::string& language = manual[0]->language;
    bool agree = true;
    for (const auto* d : automatic) {
      if (d->language != language) {
        agree = false;
        break;
      }
    }
    if (agree) {
      return {Classification::Outcome::ManualLabeled, language,
              SubtitleKind::Manual};
    }
  }
  return unlabeled;
}

namespace {

std::string sanitize_for_path(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    if (!ok) c = '_';
  }
  return out;
}

}  // namespace

ManifestRecord process_video(const Resource& resource, PlatformAdapter& platform,
                             ManifestSink& sink, const DownloadOptions& options,
                             DownloadOutcome& outcome) {
  const std::string& video_id = resource.payload;
  VideoRecord metadata = platform.video_metadata(video_id);
  Classification classification =
      resolve_subtitles(metadata.subtitles, options.strict_resolve);

  namespace fs = std::filesystem;
  fs::path out_root(options.out_dir);
  fs::create_directories(out_root / "audio");

  std::vector<Cue> cues;
  std::optional<std::string> subtitle_path;
  if (classification.labeled()) {
    std::string vtt = platform.subtitle(video_id, classification.language,
                                        *classification.chosen_kind);
    try {
      cues = parse_webvtt(vtt);
    } catch (const SubtitleParseError& e) {
      // A broken track must not kill the pipeline; keep the audio as
      // unlabeled material and remember why.
      outcome.diagnostics.push_back(video_id + ": subtitle downgraded: " +
                                    e.what());
      ++outcome.downgraded_subtitles;
      classification = Classification{};
    }
  }
  // Manifest paths are relative to the output root so a corpus directory
  // can be moved (and reruns into fresh directories stay byte-identical).
  if (classification.labeled()) {
    fs::create_directories(out_root / "subtitles");
    std::string rel = "subtitles/" + sanitize_for_path(video_id) + "." +
                      sanitize_for_path(classification.language) + ".vtt";
    fs::path path = out_root / rel;
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    out << render_webvtt(cues);
    if (!out) throw std::runtime_error("subtitle write failed: " + path.string());
    subtitle_path = rel;
  }

  AudioBuffer normalized = normalize_audio(platform.media(video_id));
  std::string audio_rel = "audio/" + sanitize_for_path(video_id) + ".wav";
  write_wav((out_root / audio_rel).string(), normalized);

  ManifestRecord record;
  record.video_id = video_id;
  record.channel_id = metadata.channel_id;
  record.subset = classification.subset();
  if (classification.labeled()) record.language = classification.language;
  record.audio_path = audio_rel;
  record.subtitle_path = subtitle_path;
  record.duration = normalized.duration_seconds();
  record.num_cues = cues.size();
  sink.append(record);
  return record;
}

DownloadOutcome download_loop(CoordinatorClient& coordinator,
                              PlatformAdapter& platform, ManifestSink& sink,
                              const DownloadOptions& options) {
  DownloadOutcome outcome;
  int empty_polls = 0;
  while (empty_polls < options.drain_polls) {
    auto resource =
        coordinator.acquire_next(ResourceKind::Video, options.worker_id);
    if (!resource) {
      ++empty_polls;
      if (empty_polls < options.drain_polls && options.poll_wait_ms > 0) {
        std::this_thread::sleep_for(
            std::chrono::milliseconds(options.poll_wait_ms));
      }
      continue;
    }
    empty_polls = 0;
    try {
      ManifestRecord record =
          process_video(*resource, platform, sink, options, outcome);
      ++outcome.videos_processed;
      ++outcome.records_written;
      coordinator.complete(resource->id, options.worker_id,
                           std::string("subset=") + to_string(record.subset));
    } catch (const PlatformUnavailable&) {
      // transient: the lease expires and someone retries
    } catch (const PlatformNotFound& e) {
      // permanent: retrying forever would wedge the drain
      outcome.diagnostics.push_back(resource->payload + ": " + e.what());
      coordinator.complete(resource->id, options.worker_id, "error=not-found");
      ++outcome.videos_processed;
    }
  }
  return outcome;
}

}  // namespace corpusforge
