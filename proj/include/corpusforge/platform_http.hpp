#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include "corpusforge/platform.hpp"

namespace corpusforge {

// Mounts any PlatformAdapter (normally the simulator) behind the HTTP
// surface a live adapter would use, so workers can be exercised over real
// sockets:
//   GET /search?keyword=...&cc=0|1&subs=0|1[&continuation=...]
//   GET /videos/{id}/metadata
//   GET /videos/{id}/media                (audio/wav)
//   GET /videos/{id}/subtitles?language=...&kind=manual|automatic
//   GET /channels/{id}/videos[?continuation=...]
class PlatformHttpServer {
 public:
  struct Options {
    std::string host = "127.0.0.1";
    int port = 0;
  };

  explicit PlatformHttpServer(PlatformAdapter& backend)
      : PlatformHttpServer(backend, Options{}) {}
  PlatformHttpServer(PlatformAdapter& backend, Options options);
  ~PlatformHttpServer();

  PlatformHttpServer(const PlatformHttpServer&) = delete;
  PlatformHttpServer& operator=(const PlatformHttpServer&) = delete;

  void start();
  void stop();
  int port() const { return port_; }
  std::string base_url() const;

 private:
  PlatformAdapter& backend_;
  Options options_;
  int port_ = 0;
  std::atomic<bool> started_{false};
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread server_thread_;
};

// PlatformAdapter over the HTTP surface above.
class HttpPlatformAdapter : public PlatformAdapter {
 public:
  explicit HttpPlatformAdapter(std::string base_url);
  ~HttpPlatformAdapter() override;

  SearchPage search(const SearchQuery& query,
                    const std::optional<std::string>& continuation) override;
  VideoRecord video_metadata(const std::string& video_id) override;
  SearchPage channel_videos(
      const std::string& channel_id,
      const std::optional<std::string>& continuation) override;
  AudioBuffer media(const std::string& video_id) override;
  std::string subtitle(const std::string& video_id, const std::string& language,
                       SubtitleKind kind) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace corpusforge
