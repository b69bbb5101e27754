#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include "corpusforge/coordinator_client.hpp"

namespace corpusforge {

// HTTP/JSON face of the coordinator:
//   POST /resources                {kind, payload}      -> {id, created}
//   POST /resources/next           {kind, worker_id}    -> {resource|null}
//   POST /resources/{id}/complete  {worker_id, result}  -> {ok}
//        409 stale-lease, 422 invalid-state, 404 unknown id
//   GET  /stats                    -> {kind: {not_started, in_progress, done}}
// A background reaper returns expired leases to the queue.
class CoordinatorServer {
 public:
  struct Options {
    std::string host = "127.0.0.1";
    int port = 0;  // 0 picks an ephemeral port
    int reap_interval_ms = 1000;
  };

  explicit CoordinatorServer(Coordinator& coordinator)
      : CoordinatorServer(coordinator, Options{}) {}
  CoordinatorServer(Coordinator& coordinator, Options options);
  ~CoordinatorServer();

  CoordinatorServer(const CoordinatorServer&) = delete;
  CoordinatorServer& operator=(const CoordinatorServer&) = delete;

  void start();  // serves on a background thread; throws when the bind fails
  void stop();
  bool running() const { return started_; }
  int port() const { return port_; }
  std::string base_url() const;

 private:
  void reaper_main();

  Coordinator& coordinator_;
  Options options_;
  int port_ = 0;
  std::atomic<bool> started_{false};
  std::atomic<bool> stopping_{false};
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread server_thread_;
  std::thread reaper_thread_;
};

// Worker-side client for the service above. Connection-level failures
// surface as CoordinatorUnreachable; protocol violations as runtime_error.
class HttpCoordinatorClient : public CoordinatorClient {
 public:
  explicit HttpCoordinatorClient(std::string base_url);
  ~HttpCoordinatorClient() override;

  AddOutcome add_resource(ResourceKind kind, const std::string& payload) override;
  std::optional<Resource> acquire_next(ResourceKind kind,
                                       const std::string& worker_id) override;
  CompleteStatus complete(const std::string& resource_id,
                          const std::string& worker_id,
                          const std::string& result) override;
  CoordinatorStats stats() override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace corpusforge
