#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpusforge/audio.hpp"

namespace corpusforge {

enum class SubtitleKind { Manual, Automatic };

const char* to_string(SubtitleKind kind);
std::optional<SubtitleKind> subtitle_kind_from_string(const std::string& s);

struct SubtitleDescriptor {
  std::string language;  // BCP-47-style tag
  SubtitleKind kind = SubtitleKind::Manual;

  bool operator==(const SubtitleDescriptor&) const = default;
};

// Platform metadata for one video.
struct VideoRecord {
  std::string id;
  std::string channel_id;
  double duration_s = 0.0;
  bool license_cc = false;
  std::vector<SubtitleDescriptor> subtitles;
};

struct SearchQuery {
  std::string keyword;
  bool require_subtitles = false;
  bool require_cc_license = false;
  int max_pages = 10;
};

// One page of a paginated listing. continuation is absent on the final
// page and never on an empty result.
struct SearchPage {
  std::vector<std::string> video_ids;
  std::optional<std::string> continuation;
};

class PlatformError : public std::runtime_error {
 public:
  explicit PlatformError(const std::string& what) : std::runtime_error(what) {}
};

// Permanent: the id does not exist. Workers give up on the resource.
class PlatformNotFound : public PlatformError {
 public:
  explicit PlatformNotFound(const std::string& what) : PlatformError(what) {}
};

// Transient: network trouble, throttling. Workers leave the resource to
// lease expiry so another attempt happens later.
class PlatformUnavailable : public PlatformError {
 public:
  explicit PlatformUnavailable(const std::string& what)
      : PlatformError(what) {}
};

// The surface every video platform backend exposes to workers. The
// simulator implements it in-process; HttpPlatformAdapter speaks the same
// contract over sockets; a live adapter would too.
class PlatformAdapter {
 public:
  virtual ~PlatformAdapter() = default;

  virtual SearchPage search(const SearchQuery& query,
                            const std::optional<std::string>& continuation) = 0;
  virtual VideoRecord video_metadata(const std::string& video_id) = 0;
  virtual SearchPage channel_videos(
      const std::string& channel_id,
      const std::optional<std::string>& continuation) = 0;
  virtual AudioBuffer media(const std::string& video_id) = 0;
  virtual std::string subtitle(const std::string& video_id,
                               const std::string& language,
                               SubtitleKind kind) = 0;
};

// Placeholder for a real platform backend; every call reports the
// platform unavailable.
class LiveStubAdapter : public PlatformAdapter {
 public:
  SearchPage search(const SearchQuery&,
                    const std::optional<std::string>&) override;
  VideoRecord video_metadata(const std::string&) override;
  SearchPage channel_videos(const std::string&,
                            const std::optional<std::string>&) override;
  AudioBuffer media(const std::string&) override;
  std::string subtitle(const std::string&, const std::string&,
                       SubtitleKind) override;
};

}  // namespace corpusforge
