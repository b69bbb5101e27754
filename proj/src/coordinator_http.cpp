#include "corpusforge/coordinator_http.hpp"

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

namespace corpusforge {

namespace {

using nlohmann::json;

json stats_to_json(const CoordinatorStats& stats) {
  json j = json::object();
  const ResourceKind kinds[] = {ResourceKind::Keyword, ResourceKind::Channel,
                                ResourceKind::Video};
  for (ResourceKind kind : kinds) {
    const auto& row = stats.counts[static_cast<int>(kind)];
    j[to_string(kind)] = {
        {"not_started", row[static_cast<int>(ResourceState::NotStarted)]},
        {"in_progress", row[static_cast<int>(ResourceState::InProgress)]},
        {"done", row[static_cast<int>(ResourceState::Done)]}};
  }
  return j;
}

// Wire shape of a leased resource; lease timestamps stay server-side.
json resource_to_wire(const Resource& resource) {
  return {{"id", resource.id},
          {"kind", to_string(resource.kind)},
          {"payload", resource.payload},
          {"state", to_string(resource.state)}};
}

}  // namespace

struct CoordinatorServer::Impl {
  httplib::Server server;
  std::mutex reaper_mu;
  std::condition_variable reaper_cv;
};

CoordinatorServer::CoordinatorServer(Coordinator& coordinator, Options options)
    : coordinator_(coordinator),
      options_(std::move(options)),
      impl_(std::make_unique<Impl>()) {}

CoordinatorServer::~CoordinatorServer() { stop(); }

void CoordinatorServer::start() {
  if (started_) return;
  auto& server = impl_->server;

  server.Post("/resources", [this](const httplib::Request& req,
                                   httplib::Response& res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.contains("kind") ||
        !body.contains("payload")) {
      res.status = 400;
      res.set_content(R"({"error":"bad request body"})", "application/json");
      return;
    }
    auto kind = resource_kind_from_string(body["kind"].get<std::string>());
    if (!kind) {
      res.status = 400;
      res.set_content(R"({"error":"unknown kind"})", "application/json");
      return;
    }
    try {
      AddOutcome outcome =
          coordinator_.add_resource(*kind, body["payload"].get<std::string>());
      res.set_content(
          json{{"id", outcome.id}, {"created", outcome.created}}.dump(),
          "application/json");
    } catch (const std::invalid_argument& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });

  server.Post("/resources/next", [this](const httplib::Request& req,
                                        httplib::Response& res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.contains("kind") ||
        !body.contains("worker_id")) {
      res.status = 400;
      res.set_content(R"({"error":"bad request body"})", "application/json");
      return;
    }
    auto kind = resource_kind_from_string(body["kind"].get<std::string>());
    if (!kind) {
      res.status = 400;
      res.set_content(R"({"error":"unknown kind"})", "application/json");
      return;
    }
    try {
      auto resource =
          coordinator_.acquire_next(*kind, body["worker_id"].get<std::string>());
      json reply;
      reply["resource"] = resource ? resource_to_wire(*resource) : json(nullptr);
      res.set_content(reply.dump(), "application/json");
    } catch (const std::invalid_argument& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });

  server.Post(R"(/resources/([^/]+)/complete)",
              [this](const httplib::Request& req, httplib::Response& res) {
                json body = json::parse(req.body, nullptr, false);
                if (body.is_discarded() || !body.contains("worker_id")) {
                  res.status = 400;
                  res.set_content(R"({"error":"bad request body"})",
                                  "application/json");
                  return;
                }
                CompleteStatus status = coordinator_.complete(
                    req.matches[1].str(), body["worker_id"].get<std::string>(),
                    body.value("result", ""));
                switch (status) {
                  case CompleteStatus::Ok:
                    res.set_content(R"({"ok":true})", "application/json");
                    break;
                  case CompleteStatus::NotFound:
                    res.status = 404;
                    res.set_content(R"({"error":"not-found"})",
                                    "application/json");
                    break;
                  case CompleteStatus::StaleLease:
                    res.status = 409;
                    res.set_content(R"({"error":"stale-lease"})",
                                    "application/json");
                    break;
                  case CompleteStatus::InvalidState:
                    res.status = 422;
                    res.set_content(R"({"error":"invalid-state"})",
                                    "application/json");
                    break;
                }
              });

  server.Get("/stats", [this](const httplib::Request&, httplib::Response& res) {
    res.set_content(stats_to_json(coordinator_.stats()).dump(),
                    "application/json");
  });

  if (options_.port == 0) {
    port_ = impl_->server.bind_to_any_port(options_.host);
    if (port_ < 0) throw std::runtime_error("coordinator bind failed");
  } else {
    if (!impl_->server.bind_to_port(options_.host, options_.port)) {
      throw std::runtime_error("coordinator bind failed on port " +
                               std::to_string(options_.port));
    }
    port_ = options_.port;
  }

  stopping_ = false;
  server_thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  reaper_thread_ = std::thread([this] { reaper_main(); });
  started_ = true;
}

void CoordinatorServer::reaper_main() {
  std::unique_lock lock(impl_->reaper_mu);
  while (!stopping_) {
    impl_->reaper_cv.wait_for(
        lock, std::chrono::milliseconds(options_.reap_interval_ms),
        [this] { return stopping_.load(); });
    if (stopping_) break;
    coordinator_.release_expired();
  }
}

void CoordinatorServer::stop() {
  if (!started_) return;
  {
    std::lock_guard lock(impl_->reaper_mu);
    stopping_ = true;
  }
  impl_->reaper_cv.notify_all();
  impl_->server.stop();
  if (server_thread_.joinable()) server_thread_.join();
  if (reaper_thread_.joinable()) reaper_thread_.join();
  started_ = false;
}

std::string CoordinatorServer::base_url() const {
  return "http://" + options_.host + ":" + std::to_string(port_);
}

struct HttpCoordinatorClient::Impl {
  explicit Impl(const std::string& base_url) : client(base_url) {
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(30, 0);
  }
  httplib::Client client;
};

HttpCoordinatorClient::HttpCoordinatorClient(std::string base_url)
    : impl_(std::make_unique<Impl>(base_url)) {}

HttpCoordinatorClient::~HttpCoordinatorClient() = default;

namespace {

json require_json(const httplib::Result& result, const char* what) {
  if (!result) {
    throw CoordinatorUnreachable(std::string("coordinator unreachable: ") +
                                 what);
  }
  json body = json::parse(result->body, nullptr, false);
  if (body.is_discarded()) {
    throw std::runtime_error(std::string("coordinator sent non-JSON for ") +
                             what);
  }
  return body;
}

}  // namespace

AddOutcome HttpCoordinatorClient::add_resource(ResourceKind kind,
                                               const std::string& payload) {
  json request = {{"kind", to_string(kind)}, {"payload", payload}};
  auto result =
      impl_->client.Post("/resources", request.dump(), "application/json");
  json body = require_json(result, "add_resource");
  if (result->status == 400) {
    throw std::invalid_argument(body.value("error", "validation error"));
  }
  if (result->status != 200) {
    throw std::runtime_error("add_resource failed: HTTP " +
                             std::to_string(result->status));
  }
  return {body.at("id").get<std::string>(), body.at("created").get<bool>()};
}

std::optional<Resource> HttpCoordinatorClient::acquire_next(
    ResourceKind kind, const std::string& worker_id) {
  json request = {{"kind", to_string(kind)}, {"worker_id", worker_id}};
  auto result =
      impl_->client.Post("/resources/next", request.dump(), "application/json");
  json body = require_json(result, "acquire_next");
  if (result->status == 400) {
    throw std::invalid_argument(body.value("error", "validation error"));
  }
  if (result->status != 200) {
    throw std::runtime_error("acquire_next failed: HTTP " +
                             std::to_string(result->status));
  }
  if (body.at("resource").is_null()) return std::nullopt;
  const json& rj = body["resource"];
  Resource resource;
  resource.id = rj.at("id").get<std::string>();
  auto parsed_kind = resource_kind_from_string(rj.at("kind").get<std::string>());
  resource.kind = parsed_kind.value_or(kind);
  resource.payload = rj.at("payload").get<std::string>();
  resource.state = ResourceState::InProgress;
  return resource;
}

CompleteStatus HttpCoordinatorClient::complete(const std::string& resource_id,
                                               const std::string& worker_id,
                                               const std::string& result_text) {
  json request = {{"worker_id", worker_id}, {"result", result_text}};
  auto result = impl_->client.Post("/resources/" + resource_id + "/complete",
                                   request.dump(), "application/json");
  if (!result) throw CoordinatorUnreachable("coordinator unreachable: complete");
  switch (result->status) {
    case 200:
      return CompleteStatus::Ok;
    case 404:
      return CompleteStatus::NotFound;
    case 409:
      return CompleteStatus::StaleLease;
    case 422:
      return CompleteStatus::InvalidState;
    default:
      throw std::runtime_error("complete failed: HTTP " +
                               std::to_string(result->status));
  }
}

CoordinatorStats HttpCoordinatorClient::stats() {
  auto result = impl_->client.Get("/stats");
  json body = require_json(result, "stats");
  CoordinatorStats stats;
  const ResourceKind kinds[] = {ResourceKind::Keyword, ResourceKind::Channel,
                                ResourceKind::Video};
  for (ResourceKind kind : kinds) {
    const json& row = body.at(to_string(kind));
    auto& counts = stats.counts[static_cast<int>(kind)];
    counts[static_cast<int>(ResourceState::NotStarted)] =
        row.at("not_started").get<uint64_t>();
    counts[static_cast<int>(ResourceState::InProgress)] =
        row.at("in_progress").get<uint64_t>();
    counts[static_cast<int>(ResourceState::Done)] =
        row.at("done").get<uint64_t>();
  }
  return stats;
}

}  // namespace corpusforge
