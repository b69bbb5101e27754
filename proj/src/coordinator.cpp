#include "corpusforge/coordinator.hpp"

#include <chrono>
#include <stdexcept>

namespace corpusforge {

const char* to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::Keyword:
      return "keyword";
    case ResourceKind::Channel:
      return "channel";
    case ResourceKind::Video:
      return "video";
  }
  return "?";
}

const char* to_string(ResourceState state) {
  switch (state) {
    case ResourceState::NotStarted:
      return "not_started";
    case ResourceState::InProgress:
      return "in_progress";
    case ResourceState::Done:
      return "done";
  }
  return "?";
}

std::optional<ResourceKind> resource_kind_from_string(const std::string& s) {
  if (s == "keyword") return ResourceKind::Keyword;
  if (s == "channel") return ResourceKind::Channel;
  if (s == "video") return ResourceKind::Video;
  return std::nullopt;
}

MonotonicMs steady_now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

Coordinator::Coordinator(LeaseConfig config, std::shared_ptr<ResourceStore> store)
    : config_(std::move(config)),
      store_(store ? std::move(store) : std::make_shared<MemoryStore>()) {
  if (config_.duration_s <= 0) {
    throw std::invalid_argument("lease duration must be > 0");
  }
  if (!config_.clock) config_.clock = steady_now_ms;

  RecoveredState recovered = store_->load();
  next_seq_ = recovered.next_seq;
  MonotonicMs now = config_.clock();
  auto lease_ms = static_cast<MonotonicMs>(config_.duration_s * 1000.0);
  for (auto& res : recovered.resources) {
    // Leases do not survive a restart as wall intervals; renew them from
    // load time so the previous holder keeps its exclusivity window.
    if (res.state == ResourceState::InProgress && res.lease) {
      res.lease->expires_at = now + lease_ms;
    }
    std::size_t idx = resources_.size();
    resources_.push_back(std::move(res));
    index_resource(idx);
    if (resources_[idx].seq >= next_seq_) next_seq_ = resources_[idx].seq + 1;
  }
}

void Coordinator::index_resource(std::size_t idx) {
  const Resource& res = resources_[idx];
  by_id_[res.id] = idx;
  by_payload_[static_cast<int>(res.kind)][res.payload] = idx;
  by_seq_[res.seq] = idx;
  if (res.state == ResourceState::NotStarted) {
    pending_[static_cast<int>(res.kind)].insert(res.seq);
  }
}

AddOutcome Coordinator::add_resource(ResourceKind kind,
                                     const std::string& payload) {
  if (payload.empty()) {
    throw std::invalid_argument("resource payload must be non-empty");
  }
  std::lock_guard lock(mu_);
  return add_locked(kind, payload);
}

AddOutcome Coordinator::add_locked(ResourceKind kind,
                                   const std::string& payload) {
  auto& dedup = by_payload_[static_cast<int>(kind)];
  if (auto it = dedup.find(payload); it != dedup.end()) {
    return {resources_[it->second].id, false};
  }
  Resource res;
  res.seq = next_seq_++;
  res.id = "r-" + std::to_string(res.seq + 1);
  res.kind = kind;
  res.payload = payload;
  res.state = ResourceState::NotStarted;
  std::size_t idx = resources_.size();
  resources_.push_back(res);
  index_resource(idx);

  JournalEvent ev;
  ev.type = JournalEvent::Type::Add;
  ev.id = res.id;
  ev.kind = kind;
  ev.payload = payload;
  ev.now = config_.clock();
  store_->append(ev);
  return {res.id, true};
}

std::optional<Resource> Coordinator::acquire_next(ResourceKind kind,
                                                  const std::string& worker_id) {
  if (worker_id.empty()) {
    throw std::invalid_argument("worker_id must be non-empty");
  }
  std::lock_guard lock(mu_);
  auto& queue = pending_[static_cast<int>(kind)];
  if (queue.empty()) return std::nullopt;
  uint64_t seq = *queue.begin();
  queue.erase(queue.begin());
  Resource& res = resources_[by_seq_.at(seq)];

  MonotonicMs now = config_.clock();
  res.state = ResourceState::InProgress;
  res.lease = Lease{worker_id,
                    now + static_cast<MonotonicMs>(config_.duration_s * 1000.0)};

  JournalEvent ev;
  ev.type = JournalEvent::Type::Acquire;
  ev.id = res.id;
  ev.kind = res.kind;
  ev.worker_id = worker_id;
  ev.expires_at = res.lease->expires_at;
  ev.now = now;
  store_->append(ev);
  return res;
}

CompleteStatus Coordinator::complete(const std::string& resource_id,
                                     const std::string& worker_id,
                                     const std::string& result) {
  std::lock_guard lock(mu_);
  auto it = by_id_.find(resource_id);
  if (it == by_id_.end()) return CompleteStatus::NotFound;
  Resource& res = resources_[it->second];

  switch (res.state) {
    case ResourceState::NotStarted:
      return CompleteStatus::InvalidState;
    case ResourceState::Done:
      // Replayed completion from the worker that already finished.
      if (res.completed_by && *res.completed_by == worker_id) {
        return CompleteStatus::Ok;
      }
      return CompleteStatus::StaleLease;
    case ResourceState::InProgress:
      break;
  }
  if (!res.lease || res.lease->worker_id != worker_id) {
    return CompleteStatus::StaleLease;
  }

  res.state = ResourceState::Done;
  res.lease.reset();
  res.result = result;
  res.completed_by = worker_id;

  JournalEvent ev;
  ev.type = JournalEvent::Type::Complete;
  ev.id = res.id;
  ev.kind = res.kind;
  ev.worker_id = worker_id;
  ev.result = result;
  ev.now = config_.clock();
  store_->append(ev);
  return CompleteStatus::Ok;
}

std::size_t Coordinator::release_expired(MonotonicMs now) {
  std::lock_guard lock(mu_);
  std::size_t reclaimed = 0;
  for (Resource& res : resources_) {
    if (res.state != ResourceState::InProgress || !res.lease) continue;
    if (res.lease->expires_at >= now) continue;
    res.state = ResourceState::NotStarted;
    res.lease.reset();
    pending_[static_cast<int>(res.kind)].insert(res.seq);
    ++reclaimed;

    JournalEvent ev;
    ev.type = JournalEvent::Type::Expire;
    ev.id = res.id;
    ev.kind = res.kind;
    ev.now = now;
    store_->append(ev);
  }
  return reclaimed;
}

std::size_t Coordinator::release_expired() {
  return release_expired(config_.clock());
}

CoordinatorStats Coordinator::stats() const {
  std::lock_guard lock(mu_);
  CoordinatorStats out;
  for (const Resource& res : resources_) {
    out.counts[static_cast<int>(res.kind)][static_cast<int>(res.state)]++;
  }
  return out;
}

std::optional<Resource> Coordinator::find(const std::string& resource_id) const {
  std::lock_guard lock(mu_);
  auto it = by_id_.find(resource_id);
  if (it == by_id_.end()) return std::nullopt;
  return resources_[it->second];
}

std::vector<Resource> Coordinator::snapshot() const {
  std::lock_guard lock(mu_);
  return resources_;
}

}  // namespace corpusforge
