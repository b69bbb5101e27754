#include "corpusforge/platform_http.hpp"

#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

namespace corpusforge {

namespace {

using nlohmann::json;

json page_to_json(const SearchPage& page) {
  json j;
  j["video_ids"] = page.video_ids;
  if (page.continuation) j["continuation"] = *page.continuation;
  return j;
}

SearchPage page_from_json(const json& j) {
  SearchPage page;
  for (const auto& id : j.at("video_ids")) {
    page.video_ids.push_back(id.get<std::string>());
  }
  if (j.contains("continuation")) {
    page.continuation = j["continuation"].get<std::string>();
  }
  return page;
}

// Maps adapter exceptions onto status codes and back.
template <typename Fn>
void guard(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const PlatformNotFound& e) {
    res.status = 404;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  } catch (const PlatformUnavailable& e) {
    res.status = 503;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  } catch (const std::exception& e) {
    res.status = 400;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  }
}

}  // namespace

struct PlatformHttpServer::Impl {
  httplib::Server server;
};

PlatformHttpServer::PlatformHttpServer(PlatformAdapter& backend, Options options)
    : backend_(backend),
      options_(std::move(options)),
      impl_(std::make_unique<Impl>()) {}

PlatformHttpServer::~PlatformHttpServer() { stop(); }

void PlatformHttpServer::start() {
  if (started_) return;
  auto& server = impl_->server;

  server.Get("/search", [this](const httplib::Request& req,
                               httplib::Response& res) {
    guard(res, [&] {
      SearchQuery query;
      query.keyword = req.get_param_value("keyword");
      query.require_cc_license = req.get_param_value("cc") == "1";
      query.require_subtitles = req.get_param_value("subs") == "1";
      std::optional<std::string> continuation;
      if (req.has_param("continuation")) {
        continuation = req.get_param_value("continuation");
      }
      res.set_content(page_to_json(backend_.search(query, continuation)).dump(),
                      "application/json");
    });
  });

  server.Get(R"(/videos/([^/]+)/metadata)", [this](const httplib::Request& req,
                                                   httplib::Response& res) {
    guard(res, [&] {
      VideoRecord record = backend_.video_metadata(req.matches[1].str());
      json subtitles = json::array();
      for (const auto& d : record.subtitles) {
        subtitles.push_back(
            {{"language", d.language}, {"kind", to_string(d.kind)}});
      }
      json j = {{"id", record.id},
                {"channel_id", record.channel_id},
                {"duration_s", record.duration_s},
                {"license_cc", record.license_cc},
                {"subtitles", std::move(subtitles)}};
      res.set_content(j.dump(), "application/json");
    });
  });

  server.Get(R"(/videos/([^/]+)/media)", [this](const httplib::Request& req,
                                                httplib::Response& res) {
    guard(res, [&] {
      AudioBuffer audio = backend_.media(req.matches[1].str());
      std::vector<uint8_t> wav = encode_wav(audio);
      res.set_content(reinterpret_cast<const char*>(wav.data()), wav.size(),
                      "audio/wav");
    });
  });

  server.Get(R"(/videos/([^/]+)/subtitles)",
             [this](const httplib::Request& req, httplib::Response& res) {
               guard(res, [&] {
                 auto kind = subtitle_kind_from_string(
                     req.get_param_value("kind"));
                 if (!kind) throw std::invalid_argument("unknown subtitle kind");
                 std::string vtt =
                     backend_.subtitle(req.matches[1].str(),
                                       req.get_param_value("language"), *kind);
                 res.set_content(vtt, "text/vtt");
               });
             });

  server.Get(R"(/channels/([^/]+)/videos)",
             [this](const httplib::Request& req, httplib::Response& res) {
               guard(res, [&] {
                 std::optional<std::string> continuation;
                 if (req.has_param("continuation")) {
                   continuation = req.get_param_value("continuation");
                 }
                 res.set_content(
                     page_to_json(backend_.channel_videos(req.matches[1].str(),
                                                          continuation))
                         .dump(),
                     "application/json");
               });
             });

  if (options_.port == 0) {
    port_ = server.bind_to_any_port(options_.host);
    if (port_ < 0) throw std::runtime_error("platform bind failed");
  } else {
    if (!server.bind_to_port(options_.host, options_.port)) {
      throw std::runtime_error("platform bind failed on port " +
                               std::to_string(options_.port));
    }
    port_ = options_.port;
  }
  server_thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  started_ = true;
}

void PlatformHttpServer::stop() {
  if (!started_) return;
  impl_->server.stop();
  if (server_thread_.joinable()) server_thread_.join();
  started_ = false;
}

std::string PlatformHttpServer::base_url() const {
  return "http://" + options_.host + ":" + std::to_string(port_);
}

struct HttpPlatformAdapter::Impl {
  explicit Impl(const std::string& base_url) : client(base_url) {
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(60, 0);
  }
  httplib::Client client;
};

HttpPlatformAdapter::HttpPlatformAdapter(std::string base_url)
    : impl_(std::make_unique<Impl>(base_url)) {}

HttpPlatformAdapter::~HttpPlatformAdapter() = default;

namespace {

const httplib::Result& check(const httplib::Result& result, const char* what) {
  if (!result) {
    throw PlatformUnavailable(std::string("platform unreachable: ") + what);
  }
  if (result->status == 404) {
    json body = json::parse(result->body, nullptr, false);
    throw PlatformNotFound(body.is_discarded()
                               ? std::string("not found")
                               : body.value("error", "not found"));
  }
  if (result->status == 503) throw PlatformUnavailable("platform unavailable");
  if (result->status != 200) {
    throw PlatformError("platform error: HTTP " +
                        std::to_string(result->status));
  }
  return result;
}

json parse_body(const httplib::Result& result) {
  json body = json::parse(result->body, nullptr, false);
  if (body.is_discarded()) throw PlatformError("platform sent non-JSON");
  return body;
}

}  // namespace

SearchPage HttpPlatformAdapter::search(
    const SearchQuery& query, const std::optional<std::string>& continuation) {
  httplib::Params params{{"keyword", query.keyword},
                         {"cc", query.require_cc_license ? "1" : "0"},
                         {"subs", query.require_subtitles ? "1" : "0"}};
  if (continuation) params.emplace("continuation", *continuation);
  auto result = impl_->client.Get("/search", params, httplib::Headers{});
  return page_from_json(parse_body(check(result, "search")));
}

VideoRecord HttpPlatformAdapter::video_metadata(const std::string& video_id) {
  auto result = impl_->client.Get("/videos/" + video_id + "/metadata");
  json body = parse_body(check(result, "video_metadata"));
  VideoRecord record;
  record.id = body.at("id").get<std::string>();
  record.channel_id = body.at("channel_id").get<std::string>();
  record.duration_s = body.at("duration_s").get<double>();
  record.license_cc = body.at("license_cc").get<bool>();
  for (const auto& d : body.at("subtitles")) {
    auto kind = subtitle_kind_from_string(d.at("kind").get<std::string>());
    if (!kind) throw PlatformError("platform sent unknown subtitle kind");
    record.subtitles.push_back({d.at("language").get<std::string>(), *kind});
  }
  return record;
}

SearchPage HttpPlatformAdapter::channel_videos(
    const std::string& channel_id,
    const std::optional<std::string>& continuation) {
  httplib::Params params;
  if (continuation) params.emplace("continuation", *continuation);
  auto result = impl_->client.Get("/channels/" + channel_id + "/videos", params,
                                  httplib::Headers{});
  return page_from_json(parse_body(check(result, "channel_videos")));
}

AudioBuffer HttpPlatformAdapter::media(const std::string& video_id) {
  auto result = impl_->client.Get("/videos/" + video_id + "/media");
  check(result, "media");
  return decode_wav(reinterpret_cast<const uint8_t*>(result->body.data()),
                    result->body.size());
}

std::string HttpPlatformAdapter::subtitle(const std::string& video_id,
                                          const std::string& language,
                                          SubtitleKind kind) {
  httplib::Params params{{"language", language}, {"kind", to_string(kind)}};
  auto result = impl_->client.Get("/videos/" + video_id + "/subtitles", params,
                                  httplib::Headers{});
  check(result, "subtitle");
  return result->body;
}

}  // namespace corpusforge
