#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "corpusforge/coordinator_http.hpp"
#include "corpusforge/curation.hpp"
#include "corpusforge/journal.hpp"
#include "corpusforge/platform_sim.hpp"

namespace corpusforge {

// One reviewable configuration artifact per run: a JSON file plus flag
// overrides. Keys mirror the field names below.
struct RunConfig {
  std::string coordinator_url = "http://127.0.0.1:8798";
  std::string platform = "sim";  // sim | live_stub
  std::string world_file;
  std::string out_dir = "out";
  std::string journal;  // coordinator persistence; empty = in-memory
  std::string host = "127.0.0.1";
  int port = 8798;
  double lease_seconds = 300.0;
  int crawl_workers = 1;
  int download_workers = 1;
  int max_pages = 10;
  bool require_cc = true;
  bool require_subtitles = true;
  bool strict_resolve = false;
  double threshold = 2.0;
  double cap = 20.0;
  double sweep_cap = 16.0;
  double corruption = 0.0;
  uint64_t seed = 42;
  uint64_t train_max = 1000000;
  uint64_t test_size = 1000;
  uint64_t harvest_limit = 0;  // 0 = feed everything
  int drain_polls = 5;
  int poll_wait_ms = 50;
  int reap_interval_ms = 500;
  bool verbose = false;

  void load_file(const std::string& path);
  // Flag override; throws std::invalid_argument on unknown keys or
  // unparsable values.
  void set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;
  void validate() const;
};

// Line-delimited JSON event log on stderr, active when config.verbose.
void log_event(const RunConfig& config, const std::string& event,
               const std::vector<std::pair<std::string, std::string>>& fields = {});

// Running coordinator service plus its backing state.
class ServeHandle {
 public:
  explicit ServeHandle(const RunConfig& config);
  ~ServeHandle();

  int port() const;
  std::string base_url() const;
  Coordinator& coordinator() { return *coordinator_; }
  void stop();

 private:
  std::shared_ptr<ResourceStore> store_;
  std::unique_ptr<Coordinator> coordinator_;
  std::unique_ptr<CoordinatorServer> server_;
};

std::unique_ptr<ServeHandle> cmd_serve_start(const RunConfig& config);

struct HarvestSummary {
  uint64_t documents_languages = 0;
  uint64_t unique_keywords = 0;
  uint64_t undecodable_lines = 0;
  uint64_t keywords_fed = 0;
  std::string report_path;
};

HarvestSummary cmd_harvest(const RunConfig& config, const std::string& dump_dir);

struct CrawlSummary {
  uint64_t keywords_processed = 0;
  uint64_t channels_processed = 0;
  uint64_t videos_added = 0;
  uint64_t channels_added = 0;
  uint64_t partial_crawls = 0;
};

CrawlSummary cmd_crawl(const RunConfig& config);

struct DownloadSummary {
  uint64_t videos_processed = 0;
  uint64_t records_written = 0;
  uint64_t downgraded_subtitles = 0;
  std::string manifest_path;
};

DownloadSummary cmd_download(const RunConfig& config);

struct CurateSummary {
  uint64_t pairs_scored = 0;
  uint64_t pairs_kept = 0;
  uint64_t train_size = 0;
  uint64_t test_size = 0;
  std::string out_dir;
};

CurateSummary cmd_curate(const RunConfig& config, const std::string& manifest_path);

struct StatsOutcome {
  uint64_t records = 0;
  std::string out_dir;
};

StatsOutcome cmd_stats(const RunConfig& config, const std::string& manifest_path);

// Utterance pairs reconstructed from a manifest's subtitle files; paths in
// the manifest are relative to its directory.
std::vector<UtterancePair> manifest_utterances(
    const std::vector<ManifestRecord>& records, const std::string& manifest_dir,
    Subset subset);
std::vector<UtterancePair> manifest_utterances(
    const std::vector<ManifestRecord>& records, const std::string& manifest_dir);

// The reference scorer: CTC log loss of the transcript against simulator
// posteriors. Unalignable pairs (empty label encoding, unknown utterance
// index) score +infinity.
Scorer make_reference_scorer(const PlatformSim& sim);

}  // namespace corpusforge
