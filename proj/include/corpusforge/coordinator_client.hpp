#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "corpusforge/coordinator.hpp"

namespace corpusforge {

class CoordinatorUnreachable : public std::runtime_error {
 public:
  explicit CoordinatorUnreachable(const std::string& what)
      : std::runtime_error(what) {}
};

// What workers see of the coordinator, whether it lives in-process or
// behind the HTTP service.
class CoordinatorClient {
 public:
  virtual ~CoordinatorClient() = default;

  virtual AddOutcome add_resource(ResourceKind kind,
                                  const std::string& payload) = 0;
  virtual std::optional<Resource> acquire_next(ResourceKind kind,
                                               const std::string& worker_id) = 0;
  virtual CompleteStatus complete(const std::string& resource_id,
                                  const std::string& worker_id,
                                  const std::string& result) = 0;
  virtual CoordinatorStats stats() = 0;
};

class LocalCoordinatorClient : public CoordinatorClient {
 public:
  explicit LocalCoordinatorClient(Coordinator& coordinator)
      : coordinator_(coordinator) {}

  AddOutcome add_resource(ResourceKind kind, const std::string& payload) override {
    return coordinator_.add_resource(kind, payload);
  }
  std::optional<Resource> acquire_next(ResourceKind kind,
                                       const std::string& worker_id) override {
    return coordinator_.acquire_next(kind, worker_id);
  }
  CompleteStatus complete(const std::string& resource_id,
                          const std::string& worker_id,
                          const std::string& result) override {
    return coordinator_.complete(resource_id, worker_id, result);
  }
  CoordinatorStats stats() override { return coordinator_.stats(); }

 private:
  Coordinator& coordinator_;
};

}  // namespace corpusforge
