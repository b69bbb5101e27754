#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace corpusforge {

enum class ResourceKind { Keyword = 0, Channel = 1, Video = 2 };
inline constexpr int kResourceKindCount = 3;

enum class ResourceState { NotStarted = 0, InProgress = 1, Done = 2 };

const char* to_string(ResourceKind kind);
const char* to_string(ResourceState state);
std::optional<ResourceKind> resource_kind_from_string(const std::string& s);

using MonotonicMs = int64_t;
using ClockFn = std::function<MonotonicMs()>;

// Default clock: steady_clock in milliseconds.
MonotonicMs steady_now_ms();

struct Lease {
  std::string worker_id;
  MonotonicMs expires_at = 0;
};

// A unit of coordinator-managed work. state == InProgress iff lease is
// present; (kind, payload) is the deduplication key.
struct Resource {
  std::string id;
  ResourceKind kind = ResourceKind::Keyword;
  std::string payload;
  ResourceState state = ResourceState::NotStarted;
  std::optional<Lease> lease;
  std::optional<std::string> result;
  std::optional<std::string> completed_by;
  uint64_t seq = 0;  // insertion order, drives FIFO dispatch
};

struct LeaseConfig {
  double duration_s = 300.0;
  ClockFn clock = steady_now_ms;
};

struct AddOutcome {
  std::string id;
  bool created = false;
};

enum class CompleteStatus { Ok, NotFound, StaleLease, InvalidState };

struct CoordinatorStats {
  // counts[kind][state]
  std::array<std::array<uint64_t, 3>, 3> counts{};

  uint64_t total() const {
    uint64_t n = 0;
    for (const auto& row : counts)
      for (uint64_t c : row) n += c;
    return n;
  }
  uint64_t by_state(ResourceState s) const {
    uint64_t n = 0;
    for (const auto& row : counts) n += row[static_cast<int>(s)];
    return n;
  }
};

// Mutation record; the store's append order is the linearization order of
// all state transitions, which makes a persisted journal double as an
// audit log.
struct JournalEvent {
  enum class Type { Add, Acquire, Complete, Expire };
  Type type = Type::Add;
  std::string id;
  ResourceKind kind = ResourceKind::Keyword;
  std::string payload;       // Add
  std::string worker_id;     // Acquire/Complete
  std::string result;        // Complete
  MonotonicMs expires_at = 0;  // Acquire
  MonotonicMs now = 0;
};

struct RecoveredState {
  std::vector<Resource> resources;
  uint64_t next_seq = 0;
};

// Persistence hook. Mutations land here while the coordinator lock is
// held; load() is called once at construction.
class ResourceStore {
 public:
  virtual ~ResourceStore() = default;
  virtual RecoveredState load() = 0;
  virtual void append(const JournalEvent& event) = 0;
};

class MemoryStore : public ResourceStore {
 public:
  RecoveredState load() override { return {}; }
  void append(const JournalEvent&) override {}
};

// Central registry of crawl work. Registers resources, leases them to
// workers, and tracks the not-started / in-progress / done lifecycle.
// Every operation is atomic; all mutations are serialized by one lock.
class Coordinator {
 public:
  explicit Coordinator(LeaseConfig config = {},
                       std::shared_ptr<ResourceStore> store = nullptr);

  // Idempotent on (kind, payload); empty payload is a validation error.
  AddOutcome add_resource(ResourceKind kind, const std::string& payload);

  // Leases the oldest NotStarted resource of the kind, or nullopt.
  std::optional<Resource> acquire_next(ResourceKind kind,
                                       const std::string& worker_id);

  CompleteStatus complete(const std::string& resource_id,
                          const std::string& worker_id,
                          const std::string& result);

  // Returns every lease with expires_at < now to NotStarted.
  std::size_t release_expired(MonotonicMs now);
  std::size_t release_expired();

  CoordinatorStats stats() const;
  std::optional<Resource> find(const std::string& resource_id) const;
  std::vector<Resource> snapshot() const;

  MonotonicMs now() const { return config_.clock(); }
  double lease_duration_s() const { return config_.duration_s; }

 private:
  AddOutcome add_locked(ResourceKind kind, const std::string& payload);
  void index_resource(std::size_t idx);

  LeaseConfig config_;
  std::shared_ptr<ResourceStore> store_;

  mutable std::mutex mu_;
  std::vector<Resource> resources_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::array<std::unordered_map<std::string, std::size_t>, 3> by_payload_;
  // NotStarted resources per kind, ordered by insertion seq.
  std::array<std::set<uint64_t>, 3> pending_;
  std::unordered_map<uint64_t, std::size_t> by_seq_;
  uint64_t next_seq_ = 0;
};

}  // namespace corpusforge
