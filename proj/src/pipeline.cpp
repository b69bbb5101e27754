#include "corpusforge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "corpusforge/crawl.hpp"
#include "corpusforge/ctc.hpp"
#include "corpusforge/download.hpp"
#include "corpusforge/harvester.hpp"
#include "corpusforge/reports.hpp"
#include "corpusforge/scripts.hpp"
#include "json.hpp"

namespace corpusforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool parse_bool(const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("expected a boolean, got: " + value);
}

template <typename T>
T parse_number(const std::string& value) {
  std::istringstream in(value);
  T out{};
  in >> out;
  if (in.fail() || !in.eof()) {
    throw std::invalid_argument("expected a number, got: " + value);
  }
  return out;
}

std::unique_ptr<PlatformAdapter> make_platform(const RunConfig& config,
                                               std::shared_ptr<PlatformSim>* sim_out) {
  if (config.platform == "sim") {
    if (config.world_file.empty()) {
      throw std::invalid_argument("platform 'sim' needs world_file");
    }
    auto sim = std::make_shared<PlatformSim>(WorldSpec::load_file(config.world_file));
    if (sim_out) *sim_out = sim;
    struct Holder : PlatformAdapter {
      std::shared_ptr<PlatformSim> sim;
      explicit Holder(std::shared_ptr<PlatformSim> s) : sim(std::move(s)) {}
      SearchPage search(const SearchQuery& q,
                        const std::optional<std::string>& c) override {
        return sim->search(q, c);
      }
      VideoRecord video_metadata(const std::string& id) override {
        return sim->video_metadata(id);
      }
      SearchPage channel_videos(const std::string& id,
                                const std::optional<std::string>& c) override {
        return sim->channel_videos(id, c);
      }
      AudioBuffer media(const std::string& id) override { return sim->media(id); }
      std::string subtitle(const std::string& id, const std::string& lang,
                           SubtitleKind kind) override {
        return sim->subtitle(id, lang, kind);
      }
    };
    return std::make_unique<Holder>(std::move(sim));
  }
  if (config.platform == "live_stub") {
    return std::make_unique<LiveStubAdapter>();
  }
  throw std::invalid_argument("unknown platform: " + config.platform);
}

}  // namespace

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      set(key, value.get<std::string>());
    } else {
      set(key, value.dump());
    }
  }
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "coordinator_url") {
    coordinator_url = value;
  } else if (key == "platform") {
    platform = value;
  } else if (key == "world_file") {
    world_file = value;
  } else if (key == "out_dir") {
    out_dir = value;
  } else if (key == "journal") {
    journal = value;
  } else if (key == "host") {
    host = value;
  } else if (key == "port") {
    port = parse_number<int>(value);
  } else if (key == "lease_seconds") {
    lease_seconds = parse_number<double>(value);
  } else if (key == "crawl_workers") {
    crawl_workers = parse_number<int>(value);
  } else if (key == "download_workers") {
    download_workers = parse_number<int>(value);
  } else if (key == "max_pages") {
    max_pages = parse_number<int>(value);
  } else if (key == "require_cc") {
    require_cc = parse_bool(value);
  } else if (key == "require_subtitles") {
    require_subtitles = parse_bool(value);
  } else if (key == "strict_resolve") {
    strict_resolve = parse_bool(value);
  } else if (key == "threshold") {
    threshold = parse_number<double>(value);
  } else if (key == "cap") {
    cap = parse_number<double>(value);
  } else if (key == "sweep_cap") {
    sweep_cap = parse_number<double>(value);
  } else if (key == "corruption") {
    corruption = parse_number<double>(value);
  } else if (key == "seed") {
    seed = parse_number<uint64_t>(value);
  } else if (key == "train_max") {
    train_max = parse_number<uint64_t>(value);
  } else if (key == "test_size") {
    test_size = parse_number<uint64_t>(value);
  } else if (key == "harvest_limit") {
    harvest_limit = parse_number<uint64_t>(value);
  } else if (key == "drain_polls") {
    drain_polls = parse_number<int>(value);
  } else if (key == "poll_wait_ms") {
    poll_wait_ms = parse_number<int>(value);
  } else if (key == "reap_interval_ms") {
    reap_interval_ms = parse_number<int>(value);
  } else if (key == "verbose") {
    verbose = parse_bool(value);
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

std::string RunConfig::get(const std::string& key) const {
  if (key == "coordinator_url") return coordinator_url;
  if (key == "platform") return platform;
  if (key == "world_file") return world_file;
  if (key == "out_dir") return out_dir;
  if (key == "journal") return journal;
  if (key == "host") return host;
  if (key == "port") return std::to_string(port);
  if (key == "lease_seconds") return std::to_string(lease_seconds);
  if (key == "crawl_workers") return std::to_string(crawl_workers);
  if (key == "download_workers") return std::to_string(download_workers);
  if (key == "max_pages") return std::to_string(max_pages);
  if (key == "require_cc") return require_cc ? "true" : "false";
  if (key == "require_subtitles") return require_subtitles ? "true" : "false";
  if (key == "strict_resolve") return strict_resolve ? "true" : "false";
  if (key == "threshold") return std::to_string(threshold);
  if (key == "cap") return std::to_string(cap);
  if (key == "sweep_cap") return std::to_string(sweep_cap);
  if (key == "corruption") return std::to_string(corruption);
  if (key == "seed") return std::to_string(seed);
  if (key == "train_max") return std::to_string(train_max);
  if (key == "test_size") return std::to_string(test_size);
  if (key == "harvest_limit") return std::to_string(harvest_limit);
  if (key == "drain_polls") return std::to_string(drain_polls);
  if (key == "poll_wait_ms") return std::to_string(poll_wait_ms);
  if (key == "reap_interval_ms") return std::to_string(reap_interval_ms);
  if (key == "verbose") return verbose ? "true" : "false";
  throw std::invalid_argument("unknown config key: " + key);
}

void RunConfig::validate() const {
  if (crawl_workers < 0 || download_workers < 0) {
    throw std::invalid_argument("worker counts must be >= 0");
  }
  if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");
  if (lease_seconds <= 0) throw std::invalid_argument("lease_seconds must be > 0");
  if (max_pages < 1) throw std::invalid_argument("max_pages must be >= 1");
  if (drain_polls < 1) throw std::invalid_argument("drain_polls must be >= 1");
  if (corruption < 0 || corruption > 1) {
    throw std::invalid_argument("corruption must be in [0, 1]");
  }
  if (platform != "sim" && platform != "live_stub") {
    throw std::invalid_argument("platform must be 'sim' or 'live_stub'");
  }
}

void log_event(const RunConfig& config, const std::string& event,
               const std::vector<std::pair<std::string, std::string>>& fields) {
  if (!config.verbose) return;
  json j;
  j["ts_ms"] = steady_now_ms();
  j["event"] = event;
  for (const auto& [key, value] : fields) j[key] = value;
  static std::mutex stderr_mu;
  std::lock_guard lock(stderr_mu);
  std::cerr << j.dump() << std::endl;
}

ServeHandle::ServeHandle(const RunConfig& config) {
  config.validate();
  if (config.journal.empty()) {
    store_ = std::make_shared<MemoryStore>();
  } else {
    store_ = std::make_shared<JournalStore>(config.journal);
  }
  LeaseConfig lease;
  lease.duration_s = config.lease_seconds;
  coordinator_ = std::make_unique<Coordinator>(lease, store_);
  CoordinatorServer::Options options;
  options.host = config.host;
  options.port = config.port;
  options.reap_interval_ms = config.reap_interval_ms;
  server_ = std::make_unique<CoordinatorServer>(*coordinator_, options);
  server_->start();
}

ServeHandle::~ServeHandle() { stop(); }

int ServeHandle::port() const { return server_->port(); }
std::string ServeHandle::base_url() const { return server_->base_url(); }

void ServeHandle::stop() {
  if (server_) server_->stop();
}

std::unique_ptr<ServeHandle> cmd_serve_start(const RunConfig& config) {
  auto handle = std::make_unique<ServeHandle>(config);
  log_event(config, "serve_started",
            {{"url", handle->base_url()},
             {"journal", config.journal.empty() ? "(memory)" : config.journal}});
  return handle;
}

HarvestSummary cmd_harvest(const RunConfig& config, const std::string& dump_dir) {
  config.validate();
  if (!fs::is_directory(dump_dir)) {
    throw std::invalid_argument("dump directory not found: " + dump_dir);
  }

  std::vector<KeywordEntry> all_entries;
  HarvestSummary summary;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dump_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dump: " + path.string());
    HarvestDiagnostics diagnostics;
    auto entries = extract_keywords(in, path.stem().string(), &diagnostics);
    summary.undecodable_lines += diagnostics.undecodable_lines;
    all_entries.insert(all_entries.end(), entries.begin(), entries.end());
    ++summary.documents_languages;
  }

  LanguageDistribution distribution = language_distribution(all_entries);
  summary.unique_keywords = distribution.total;

  fs::path report = fs::path(config.out_dir) / "harvest" / "keyword_languages.tsv";
  atomic_write_file(report.string(), distribution_report_tsv(distribution));
  summary.report_path = report.string();

  auto queue = prioritize(all_entries, distribution);
  HttpCoordinatorClient client(config.coordinator_url);
  summary.keywords_fed = feed_coordinator(queue, client, config.harvest_limit);

  log_event(config, "harvest_done",
            {{"unique_keywords", std::to_string(summary.unique_keywords)},
             {"fed", std::to_string(summary.keywords_fed)}});
  return summary;
}

CrawlSummary cmd_crawl(const RunConfig& config) {
  config.validate();
  std::shared_ptr<PlatformSim> sim;
  auto platform = make_platform(config, &sim);

  std::mutex mu;
  CrawlSummary summary;
  std::vector<std::thread> workers;
  std::vector<std::string> errors;
  int worker_count = std::max(1, config.crawl_workers);
  for (int i = 0; i < worker_count; ++i) {
    workers.emplace_back([&, i] {
      DiscoveryOptions options;
      options.worker_id = "crawl-" + std::to_string(i + 1);
      options.max_pages = config.max_pages;
      options.require_cc_license = config.require_cc;
      options.require_subtitles = config.require_subtitles;
      options.drain_polls = config.drain_polls;
      options.poll_wait_ms = config.poll_wait_ms;
      try {
        HttpCoordinatorClient client(config.coordinator_url);
        DiscoveryOutcome outcome = discovery_loop(client, *platform, options);
        std::lock_guard lock(mu);
        summary.keywords_processed += outcome.keywords_processed;
        summary.channels_processed += outcome.channels_processed;
        summary.videos_added += outcome.videos_added;
        summary.channels_added += outcome.channels_added;
        summary.partial_crawls += outcome.partial_crawls;
      } catch (const std::exception& e) {
        std::lock_guard lock(mu);
        errors.push_back(options.worker_id + ": " + e.what());
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (!errors.empty()) {
    throw std::runtime_error("crawl worker failed: " + errors.front());
  }
  log_event(config, "crawl_done",
            {{"videos_added", std::to_string(summary.videos_added)},
             {"partial_crawls", std::to_string(summary.partial_crawls)}});
  return summary;
}

DownloadSummary cmd_download(const RunConfig& config) {
  config.validate();
  std::shared_ptr<PlatformSim> sim;
  auto platform = make_platform(config, &sim);

  fs::create_directories(config.out_dir);
  fs::path manifest_path = fs::path(config.out_dir) / "manifest.jsonl";
  ManifestSink sink(manifest_path.string());

  std::mutex mu;
  DownloadSummary summary;
  summary.manifest_path = manifest_path.string();
  std::vector<std::thread> workers;
  std::vector<std::string> errors;
  int worker_count = std::max(1, config.download_workers);
  for (int i = 0; i < worker_count; ++i) {
    workers.emplace_back([&, i] {
      DownloadOptions options;
      options.worker_id = "download-" + std::to_string(i + 1);
      options.out_dir = config.out_dir;
      options.strict_resolve = config.strict_resolve;
      options.drain_polls = config.drain_polls;
      options.poll_wait_ms = config.poll_wait_ms;
      try {
        HttpCoordinatorClient client(config.coordinator_url);
        DownloadOutcome outcome = download_loop(client, *platform, sink, options);
        std::lock_guard lock(mu);
        summary.videos_processed += outcome.videos_processed;
        summary.records_written += outcome.records_written;
        summary.downgraded_subtitles += outcome.downgraded_subtitles;
      } catch (const std::exception& e) {
        std::lock_guard lock(mu);
        errors.push_back(options.worker_id + ": " + e.what());
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (!errors.empty()) {
    throw std::runtime_error("download worker failed: " + errors.front());
  }
  log_event(config, "download_done",
            {{"records", std::to_string(summary.records_written)}});
  return summary;
}

std::vector<UtterancePair> manifest_utterances(
    const std::vector<ManifestRecord>& records, const std::string& manifest_dir,
    Subset subset) {
  std::vector<UtterancePair> pairs;
  for (const auto& record : records) {
    if (record.subset != subset || !record.subtitle_path) continue;
    fs::path vtt_path = fs::path(manifest_dir) / *record.subtitle_path;
    std::ifstream in(vtt_path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("missing subtitle file: " + vtt_path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<Cue> cues = parse_webvtt(buffer.str());
    for (std::size_t i = 0; i < cues.size(); ++i) {
      UtterancePair pair;
      pair.video_id = record.video_id;
      pair.cue_index = i;
      pair.duration = cues[i].end - cues[i].start;
      pair.transcript = cues[i].text;
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

std::vector<UtterancePair> manifest_utterances(
    const std::vector<ManifestRecord>& records,
    const std::string& manifest_dir) {
  auto pairs = manifest_utterances(records, manifest_dir, Subset::Manual);
  auto automatic = manifest_utterances(records, manifest_dir, Subset::Automatic);
  pairs.insert(pairs.end(), automatic.begin(), automatic.end());
  return pairs;
}

Scorer make_reference_scorer(const PlatformSim& sim) {
  return [&sim](const UtterancePair& pair) -> double {
    std::vector<int> labels = encode_labels(pair.transcript);
    if (labels.empty()) {
      return std::numeric_limits<double>::infinity();
    }
    try {
      PosteriorMatrix posteriors = sim.posteriors(pair.video_id, pair.cue_index);
      return ctc_log_loss(posteriors, labels);
    } catch (const PlatformNotFound&) {
      return std::numeric_limits<double>::infinity();
    }
  };
}

CurateSummary cmd_curate(const RunConfig& config, const std::string& manifest_path) {
  config.validate();
  if (config.platform != "sim") {
    throw std::invalid_argument("curation scoring needs the sim platform");
  }
  std::shared_ptr<PlatformSim> sim;
  make_platform(config, &sim);
  sim->set_corruption(config.corruption);

  auto records = read_manifest(manifest_path);
  std::string manifest_dir = fs::path(manifest_path).parent_path().string();
  if (manifest_dir.empty()) manifest_dir = ".";

  auto pairs = manifest_utterances(records, manifest_dir);
  auto scored = score_corpus(std::move(pairs), make_reference_scorer(*sim));

  CurateSummary summary;
  summary.pairs_scored = scored.size();

  fs::path out_root = fs::path(config.out_dir) / "curation";
  CurationHeader header{config.threshold, config.cap, config.seed};

  atomic_write_file((out_root / "scores.jsonl").string(),
                    utterances_jsonl(scored));

  auto kept = filter_by_threshold(scored, config.threshold);
  summary.pairs_kept = kept.size();

  if (config.test_size >= kept.size()) {
    throw std::invalid_argument(
        "test_size must be < kept pairs (" + std::to_string(kept.size()) +
        " kept at threshold " + format_threshold(config.threshold) + ")");
  }
  SplitResult splits =
      sample_splits(kept, config.train_max, config.test_size, config.seed);
  summary.train_size = splits.train.size();
  summary.test_size = splits.test.size();
  atomic_write_file((out_root / "train.jsonl").string(),
                    utterances_jsonl(splits.train));
  atomic_write_file((out_root / "test.jsonl").string(),
                    utterances_jsonl(splits.test));

  // Fig-6-style sweep over integer thresholds with scores capped at the
  // sweep cap.
  std::vector<double> thresholds;
  for (int t = 1; t <= static_cast<int>(config.sweep_cap); ++t) {
    thresholds.push_back(static_cast<double>(t));
  }
  auto sweep = threshold_sweep(cap_scores(scored, config.sweep_cap), thresholds);
  CurationHeader sweep_header{config.threshold, config.sweep_cap, config.seed};
  atomic_write_file((out_root / "sweep.csv").string(),
                    sweep_csv(sweep, sweep_header));
  atomic_write_file((out_root / "sweep.json").string(),
                    sweep_json(sweep, sweep_header));

  auto scatter = score_duration_report(scored, config.cap);
  atomic_write_file((out_root / "score_scatter.csv").string(),
                    score_scatter_csv(scatter, header));
  atomic_write_file((out_root / "score_histogram.csv").string(),
                    score_histogram_csv(scatter, header));

  json summary_json;
  summary_json["threshold"] = config.threshold;
  summary_json["cap"] = config.cap;
  summary_json["seed"] = config.seed;
  summary_json["corruption"] = config.corruption;
  summary_json["pairs_scored"] = summary.pairs_scored;
  summary_json["pairs_kept"] = summary.pairs_kept;
  summary_json["train_size"] = summary.train_size;
  summary_json["test_size"] = summary.test_size;
  atomic_write_file((out_root / "summary.json").string(),
                    summary_json.dump(2) + "\n");

  summary.out_dir = out_root.string();
  log_event(config, "curate_done",
            {{"scored", std::to_string(summary.pairs_scored)},
             {"kept", std::to_string(summary.pairs_kept)}});
  return summary;
}

StatsOutcome cmd_stats(const RunConfig& config, const std::string& manifest_path) {
  config.validate();
  auto records = read_manifest(manifest_path);
  std::string manifest_dir = fs::path(manifest_path).parent_path().string();
  if (manifest_dir.empty()) manifest_dir = ".";

  fs::path out_root = fs::path(config.out_dir) / "stats";
  StatsOutcome outcome;
  outcome.records = records.size();
  outcome.out_dir = out_root.string();

  if (records.empty()) {
    // Zero-row reports: headers only.
    atomic_write_file((out_root / "video_duration_stats.csv").string(),
                      "stat,manual,automatic,unlabeled\n");
    atomic_write_file((out_root / "utterance_duration_stats.csv").string(),
                      "stat,manual,automatic\n");
    atomic_write_file((out_root / "text_length_stats.csv").string(),
                      "stat,manual,automatic\n");
    atomic_write_file((out_root / "language_hours.csv").string(),
                      "language,manual_hours,automatic_hours,unlabeled_hours,"
                      "total_hours\n");
    atomic_write_file((out_root / "scripts.csv").string(),
                      "rank,script,characters\n");
    atomic_write_file((out_root / "stats.json").string(), "{}\n");
    return outcome;
  }

  auto subset_values = [&](Subset subset, auto&& projector) {
    std::vector<double> values;
    for (const auto& record : records) {
      if (record.subset == subset) values.push_back(projector(record));
    }
    return values;
  };
  auto maybe_stats = [](const std::vector<double>& values)
      -> std::optional<StatsSummary> {
    if (values.empty()) return std::nullopt;
    return duration_stats(values);
  };

  // Raw video durations in hours per subset.
  auto video_hours = [](const ManifestRecord& r) { return r.duration / 3600.0; };
  std::vector<std::pair<std::string, std::optional<StatsSummary>>> video_columns{
      {"manual", maybe_stats(subset_values(Subset::Manual, video_hours))},
      {"automatic", maybe_stats(subset_values(Subset::Automatic, video_hours))},
      {"unlabeled", maybe_stats(subset_values(Subset::Unlabeled, video_hours))},
  };
  atomic_write_file((out_root / "video_duration_stats.csv").string(),
                    stats_table_csv(video_columns));

  // Utterance durations in seconds and text lengths in characters, from
  // the stored subtitle tracks.
  auto manual_pairs = manifest_utterances(records, manifest_dir, Subset::Manual);
  auto automatic_pairs =
      manifest_utterances(records, manifest_dir, Subset::Automatic);
  auto durations_of = [](const std::vector<UtterancePair>& pairs) {
    std::vector<double> values;
    values.reserve(pairs.size());
    for (const auto& pair : pairs) values.push_back(pair.duration);
    return values;
  };
  auto transcripts_of = [](const std::vector<UtterancePair>& pairs) {
    std::vector<std::string> values;
    values.reserve(pairs.size());
    for (const auto& pair : pairs) values.push_back(pair.transcript);
    return values;
  };

  std::vector<std::pair<std::string, std::optional<StatsSummary>>> utt_columns{
      {"manual", maybe_stats(durations_of(manual_pairs))},
      {"automatic", maybe_stats(durations_of(automatic_pairs))},
  };
  atomic_write_file((out_root / "utterance_duration_stats.csv").string(),
                    stats_table_csv(utt_columns));

  auto text_stats = [&](const std::vector<UtterancePair>& pairs)
      -> std::optional<StatsSummary> {
    if (pairs.empty()) return std::nullopt;
    return text_length_stats(transcripts_of(pairs));
  };
  std::vector<std::pair<std::string, std::optional<StatsSummary>>> text_columns{
      {"manual", text_stats(manual_pairs)},
      {"automatic", text_stats(automatic_pairs)},
  };
  atomic_write_file((out_root / "text_length_stats.csv").string(),
                    stats_table_csv(text_columns));

  LanguageHours hours = language_hours(records);
  atomic_write_file((out_root / "language_hours.csv").string(),
                    language_hours_csv(hours));

  std::vector<std::string> all_transcripts = transcripts_of(manual_pairs);
  for (auto& t : transcripts_of(automatic_pairs)) {
    all_transcripts.push_back(std::move(t));
  }
  auto ranked = detect_scripts(all_transcripts);
  atomic_write_file((out_root / "scripts.csv").string(), scripts_csv(ranked));

  json bundle;
  bundle["records"] = records.size();
  bundle["total_hours"] = hours.total();
  auto stats_json = [](const std::optional<StatsSummary>& s) -> json {
    if (!s) return nullptr;
    return {{"count", s->count}, {"mean", s->mean},   {"std", s->stddev},
            {"min", s->min},     {"max", s->max}};
  };
  bundle["video_duration_hours"] = {
      {"manual", stats_json(video_columns[0].second)},
      {"automatic", stats_json(video_columns[1].second)},
      {"unlabeled", stats_json(video_columns[2].second)}};
  bundle["utterance_duration_seconds"] = {
      {"manual", stats_json(utt_columns[0].second)},
      {"automatic", stats_json(utt_columns[1].second)}};
  bundle["text_length_characters"] = {
      {"manual", stats_json(text_columns[0].second)},
      {"automatic", stats_json(text_columns[1].second)}};
  json scripts_json = json::array();
  for (const auto& entry : ranked) {
    scripts_json.push_back(
        {{"script", to_string(entry.script)}, {"characters", entry.characters}});
  }
  bundle["scripts"] = std::move(scripts_json);
  json hours_json = json::object();
  for (const auto& [language, subset_hours] : hours.by_language) {
    hours_json[language] = {{"manual", subset_hours.manual},
                            {"automatic", subset_hours.automatic}};
  }
  bundle["language_hours"] = std::move(hours_json);
  bundle["unlabeled_hours"] = hours.unlabeled;
  atomic_write_file((out_root / "stats.json").string(), bundle.dump(2) + "\n");

  log_event(config, "stats_done", {{"records", std::to_string(records.size())}});
  return outcome;
}

}  // namespace corpusforge
