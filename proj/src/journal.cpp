#include "corpusforge/journal.hpp"

#include <cstdio>
#include <filesystem>
#include <unordered_map>

#include "json.hpp"

namespace corpusforge {

namespace {

using nlohmann::json;

json resource_to_json(const Resource& res) {
  json j;
  j["id"] = res.id;
  j["kind"] = to_string(res.kind);
  j["payload"] = res.payload;
  j["state"] = to_string(res.state);
  j["seq"] = res.seq;
  if (res.lease) {
    j["lease"] = {{"worker_id", res.lease->worker_id},
                  {"expires_at", res.lease->expires_at}};
  }
  if (res.result) j["result"] = *res.result;
  if (res.completed_by) j["completed_by"] = *res.completed_by;
  return j;
}

Resource resource_from_json(const json& j) {
  Resource res;
  res.id = j.at("id").get<std::string>();
  auto kind = resource_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw JournalError("unknown kind in snapshot");
  res.kind = *kind;
  res.payload = j.at("payload").get<std::string>();
  std::string state = j.at("state").get<std::string>();
  if (state == "not_started") {
    res.state = ResourceState::NotStarted;
  } else if (state == "in_progress") {
    res.state = ResourceState::InProgress;
  } else if (state == "done") {
    res.state = ResourceState::Done;
  } else {
    throw JournalError("unknown state in snapshot");
  }
  res.seq = j.at("seq").get<uint64_t>();
  if (j.contains("lease")) {
    Lease lease;
    lease.worker_id = j["lease"].at("worker_id").get<std::string>();
    lease.expires_at = j["lease"].at("expires_at").get<MonotonicMs>();
    res.lease = lease;
  }
  if (j.contains("result")) res.result = j["result"].get<std::string>();
  if (j.contains("completed_by")) {
    res.completed_by = j["completed_by"].get<std::string>();
  }
  return res;
}

json event_to_json(const JournalEvent& ev) {
  json j;
  switch (ev.type) {
    case JournalEvent::Type::Add:
      j["op"] = "add";
      j["id"] = ev.id;
      j["kind"] = to_string(ev.kind);
      j["payload"] = ev.payload;
      break;
    case JournalEvent::Type::Acquire:
      j["op"] = "acquire";
      j["id"] = ev.id;
      j["worker"] = ev.worker_id;
      j["expires_at"] = ev.expires_at;
      break;
    case JournalEvent::Type::Complete:
      j["op"] = "complete";
      j["id"] = ev.id;
      j["worker"] = ev.worker_id;
      j["result"] = ev.result;
      break;
    case JournalEvent::Type::Expire:
      j["op"] = "expire";
      j["id"] = ev.id;
      break;
  }
  j["now"] = ev.now;
  return j;
}

void apply_event(RecoveredState& state,
                 std::unordered_map<std::string, std::size_t>& by_id,
                 const json& j) {
  std::string op = j.at("op").get<std::string>();
  if (op == "add") {
    Resource res;
    res.id = j.at("id").get<std::string>();
    auto kind = resource_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw JournalError("unknown kind in event");
    res.kind = *kind;
    res.payload = j.at("payload").get<std::string>();
    res.state = ResourceState::NotStarted;
    res.seq = state.next_seq++;
    by_id[res.id] = state.resources.size();
    state.resources.push_back(std::move(res));
    return;
  }
  auto it = by_id.find(j.at("id").get<std::string>());
  if (it == by_id.end()) throw JournalError("event references unknown id");
  Resource& res = state.resources[it->second];
  if (op == "acquire") {
    res.state = ResourceState::InProgress;
    res.lease = Lease{j.at("worker").get<std::string>(),
                      j.at("expires_at").get<MonotonicMs>()};
  } else if (op == "complete") {
    res.state = ResourceState::Done;
    res.lease.reset();
    res.result = j.at("result").get<std::string>();
    res.completed_by = j.at("worker").get<std::string>();
  } else if (op == "expire") {
    res.state = ResourceState::NotStarted;
    res.lease.reset();
  } else {
    throw JournalError("unknown journal op: " + op);
  }
}

}  // namespace

JournalStore::JournalStore(std::string path, std::size_t compact_threshold)
    : path_(std::move(path)), compact_threshold_(compact_threshold) {
  if (compact_threshold_ == 0) compact_threshold_ = 1;
}

RecoveredState JournalStore::load() {
  std::lock_guard lock(mu_);
  state_ = {};
  mirror_by_id_.clear();

  std::ifstream in(path_);
  if (in) {
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    events_since_snapshot_ = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      json j;
      try {
        j = json::parse(lines[i]);
      } catch (const json::parse_error&) {
        if (i + 1 == lines.size()) break;  // torn tail from a crash
        throw JournalError("corrupt journal line " + std::to_string(i + 1));
      }
      if (j.value("op", "") == "snapshot") {
        state_ = {};
        mirror_by_id_.clear();
        state_.next_seq = j.at("next_seq").get<uint64_t>();
        for (const auto& rj : j.at("resources")) {
          Resource res = resource_from_json(rj);
          mirror_by_id_[res.id] = state_.resources.size();
          state_.resources.push_back(std::move(res));
        }
        events_since_snapshot_ = 0;
      } else {
        apply_event(state_, mirror_by_id_, j);
        ++events_since_snapshot_;
      }
    }
  }
  open_for_append();
  return state_;
}

void JournalStore::open_for_append() {
  out_.open(path_, std::ios::app);
  if (!out_) throw JournalError("cannot open journal: " + path_);
}

void JournalStore::append(const JournalEvent& event) {
  std::lock_guard lock(mu_);
  if (!out_.is_open()) open_for_append();
  json j = event_to_json(event);
  out_ << j.dump() << '\n';
  out_.flush();
  if (!out_) throw JournalError("journal write failed: " + path_);

  apply_event(state_, mirror_by_id_, j);

  if (++events_since_snapshot_ >= compact_threshold_) compact_locked();
}

void JournalStore::compact() {
  std::lock_guard lock(mu_);
  compact_locked();
}

void JournalStore::compact_locked() {
  json snap;
  snap["op"] = "snapshot";
  snap["next_seq"] = state_.next_seq;
  json arr = json::array();
  for (const Resource& res : state_.resources) {
    arr.push_back(resource_to_json(res));
  }
  snap["resources"] = std::move(arr);

  std::string tmp = path_ + ".tmp";
  {
    std::ofstream tmp_out(tmp, std::ios::trunc);
    if (!tmp_out) throw JournalError("cannot open temp journal: " + tmp);
    tmp_out << snap.dump() << '\n';
    tmp_out.flush();
    if (!tmp_out) throw JournalError("snapshot write failed: " + tmp);
  }
  out_.close();
  std::filesystem::rename(tmp, path_);
  events_since_snapshot_ = 0;
  open_for_append();
}

}  // namespace corpusforge
