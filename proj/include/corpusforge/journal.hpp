#pragma once

#include <cstddef>
#include <fstream>
#include <mutex>
#include <string>
#include <unordered_map>

#include "corpusforge/coordinator.hpp"

namespace corpusforge {

class JournalError : public std::runtime_error {
 public:
  explicit JournalError(const std::string& what) : std::runtime_error(what) {}
};

// Single-file append-only journal. Layout: an optional snapshot line
// followed by event lines, all JSON. load() materializes state by
// replaying events over the snapshot; a torn final line (crash mid-write)
// is ignored. Once appended events exceed compact_threshold the file is
// rewritten as a fresh snapshot via write-to-temp + rename.
class JournalStore : public ResourceStore {
 public:
  explicit JournalStore(std::string path, std::size_t compact_threshold = 4096);

  RecoveredState load() override;
  void append(const JournalEvent& event) override;

  // Exposed so operators (and tests) can force a compaction.
  void compact();

  const std::string& path() const { return path_; }

 private:
  void open_for_append();
  void compact_locked();

  std::string path_;
  std::size_t compact_threshold_;
  std::mutex mu_;
  std::ofstream out_;
  std::size_t events_since_snapshot_ = 0;
  RecoveredState state_;  // maintained in parallel so compaction never replays
  std::unordered_map<std::string, std::size_t> mirror_by_id_;
};

}  // namespace corpusforge
