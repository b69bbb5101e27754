#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corpusforge/coordinator_client.hpp"
#include "corpusforge/manifest.hpp"
#include "corpusforge/platform.hpp"

namespace corpusforge {

// Outcome of the language-resolution heuristic over a video's subtitle
// descriptor list.
struct Classification {
  enum class Outcome { ManualLabeled, AutomaticLabeled, Unlabeled };
  Outcome outcome = Outcome::Unlabeled;
  std::string language;  // set iff labeled
  std::optional<SubtitleKind> chosen_kind;

  bool labeled() const { return outcome != Outcome::Unlabeled; }
  Subset subset() const {
    switch (outcome) {
      case Outcome::ManualLabeled:
        return Subset::Manual;
      case Outcome::AutomaticLabeled:
        return Subset::Automatic;
      case Outcome::Unlabeled:
        return Subset::Unlabeled;
    }
    return Subset::Unlabeled;
  }
};

// Decides which subtitle to trust, if any:
//   - a lone manual track labels the video with its language;
//   - a lone automatic track does the same;
//   - one manual track plus automatic tracks in the same language keeps
//     the manual one (manual transcripts train better); strict mode turns
//     this case into Unlabeled instead;
//   - everything else (conflicting languages, extra multiplicity, empty
//     list) is Unlabeled.
// Total over every descriptor list and independent of input order.
Classification resolve_subtitles(const std::vector<SubtitleDescriptor>& descriptors,
                                 bool strict = false);

struct DownloadOptions {
  std::string worker_id = "download";
  std::string out_dir = ".";
  bool strict_resolve = false;
  int drain_polls = 5;
  int poll_wait_ms = 20;
};

struct DownloadOutcome {
  uint64_t videos_processed = 0;
  uint64_t records_written = 0;
  uint64_t downgraded_subtitles = 0;  // malformed subtitle -> Unlabeled
  std::vector<std::string> diagnostics;
};

// Processes one already-acquired Video resource: classify, fetch the
// chosen subtitle, normalize audio, write both to disk, and append the
// manifest record. Throws PlatformUnavailable for transient trouble (the
// caller leaves the lease to expire).
ManifestRecord process_video(const Resource& resource, PlatformAdapter& platform,
                             ManifestSink& sink, const DownloadOptions& options,
                             DownloadOutcome& outcome);

// Drains Video resources until the coordinator reports none for
// drain_polls consecutive polls.
DownloadOutcome download_loop(CoordinatorClient& coordinator,
                              PlatformAdapter& platform, ManifestSink& sink,
                              const DownloadOptions& options);

}  // namespace corpusforge
