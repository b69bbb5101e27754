// Operator entry points. Everything goes through the shared library's C
// API; this binary is deliberately a thin shell.
//
// Exit codes: 0 success, 1 validation or runtime error, 2 partial
// completion (e.g. a crawl that lost pages).

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "corpusforge/capi.h"

namespace {

std::atomic<bool> g_stop{false};

void handle_signal(int) { g_stop = true; }

struct ConfigGuard {
  cf_config* config = nullptr;
  ~ConfigGuard() { cf_config_destroy(config); }
};

int report(cf_status status) {
  if (status == CF_OK) return 0;
  std::fprintf(stderr, "error (%s): %s\n", cf_status_name(status),
               cf_last_error());
  return status == CF_ERROR_PARTIAL ? 2 : 1;
}

int apply(cf_config* config, const char* key, const std::string& value) {
  return report(cf_config_set(config, key, value.c_str()));
}

// Defaults -> CORPUSFORGE_COORDINATOR_URL -> --config file -> flags.
int build_config(cf_config* config, const std::optional<std::string>& config_path,
                 bool verbose) {
  if (const char* url = std::getenv("CORPUSFORGE_COORDINATOR_URL")) {
    if (int rc = apply(config, "coordinator_url", url)) return rc;
  }
  if (config_path) {
    if (int rc = report(cf_config_load_file(config, config_path->c_str()))) {
      return rc;
    }
  }
  if (verbose) {
    if (int rc = apply(config, "verbose", "true")) return rc;
  }
  return 0;
}

template <typename T>
int apply_if(cf_config* config, const char* key, const std::optional<T>& value) {
  if (!value) return 0;
  if constexpr (std::is_same_v<T, std::string>) {
    return apply(config, key, *value);
  } else {
    return apply(config, key, std::to_string(*value));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"speech corpus collection and curation against a simulated "
               "video platform"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  bool verbose = false;
  app.add_option("--config", config_path, "run configuration JSON file")
      ->expected(1);
  app.add_flag("--verbose", verbose, "line-delimited JSON event log on stderr");

  // Shared overrides; only the values actually given reach the config.
  std::optional<std::string> coordinator_url, world_file, out_dir, journal, host;
  std::optional<int> port;
  std::optional<double> lease_seconds;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--coordinator", coordinator_url, "coordinator base URL");
    cmd->add_option("--world", world_file, "world spec JSON (sim platform)");
    cmd->add_option("--out", out_dir, "output directory");
  };

  CLI::App* serve = app.add_subcommand("serve", "run the coordinator service");
  serve->add_option("--host", host, "bind host");
  serve->add_option("--port", port, "bind port (0 = ephemeral)");
  serve->add_option("--journal", journal, "append-only journal file");
  serve->add_option("--lease-s", lease_seconds, "lease duration in seconds");

  CLI::App* harvest =
      app.add_subcommand("harvest", "extract keywords from dumps and feed them");
  std::string dump_dir;
  std::optional<uint64_t> harvest_limit;
  harvest->add_option("--dumps", dump_dir, "directory of <lang>.txt dump files")
      ->required();
  harvest->add_option("--limit", harvest_limit, "max keywords to feed (0 = all)");
  add_common(harvest);

  CLI::App* crawl = app.add_subcommand("crawl", "run discovery workers to drain");
  std::optional<int> crawl_workers, max_pages, drain_polls;
  crawl->add_option("--workers", crawl_workers, "discovery worker count");
  crawl->add_option("--max-pages", max_pages, "search pages per keyword");
  crawl->add_option("--drain-polls", drain_polls,
                    "consecutive empty polls before a worker exits");
  add_common(crawl);

  CLI::App* download =
      app.add_subcommand("download", "run download workers, write the manifest");
  std::optional<int> download_workers;
  std::optional<bool> strict_resolve;
  download->add_option("--workers", download_workers, "download worker count");
  download->add_flag("--strict", strict_resolve,
                     "strict subtitle resolution (agreeing mixed tracks stay "
                     "unlabeled)");
  add_common(download);

  CLI::App* curate =
      app.add_subcommand("curate", "score, filter and split a manifest");
  std::string curate_manifest;
  std::optional<double> threshold, cap, sweep_cap, corruption;
  std::optional<uint64_t> seed, train_max, test_size;
  curate->add_option("--manifest", curate_manifest, "manifest.jsonl path")
      ->required();
  curate->add_option("--threshold", threshold, "alignment score threshold");
  curate->add_option("--cap", cap, "score cap for scatter/histogram reports");
  curate->add_option("--sweep-cap", sweep_cap, "score cap for the sweep report");
  curate->add_option("--corruption", corruption,
                     "simulator posterior corruption in [0,1]");
  curate->add_option("--seed", seed, "sampling seed");
  curate->add_option("--train-max", train_max, "training split ceiling");
  curate->add_option("--test-size", test_size, "testing split size");
  add_common(curate);

  CLI::App* stats = app.add_subcommand("stats", "corpus statistics reports");
  std::string stats_manifest;
  stats->add_option("--manifest", stats_manifest, "manifest.jsonl path")
      ->required();
  add_common(stats);

  CLI::App* worldgen =
      app.add_subcommand("worldgen", "generate a synthetic world file");
  std::string world_out;
  uint64_t world_videos = 60;
  uint64_t world_seed = 1;
  int world_page_size = 10;
  worldgen->add_option("--out", world_out, "world JSON output path")->required();
  worldgen->add_option("--videos", world_videos, "video count");
  worldgen->add_option("--seed", world_seed, "generator seed");
  worldgen->add_option("--page-size", world_page_size, "listing page size");

  CLI11_PARSE(app, argc, argv);

  if (worldgen->parsed()) {
    return report(cf_worldgen_run(world_out.c_str(), world_videos, world_seed,
                                  world_page_size));
  }

  ConfigGuard guard;
  if (int rc = report(cf_config_create(&guard.config))) return rc;
  cf_config* config = guard.config;
  if (int rc = build_config(config, config_path, verbose)) return rc;
  if (int rc = apply_if(config, "coordinator_url", coordinator_url)) return rc;
  if (int rc = apply_if(config, "world_file", world_file)) return rc;
  if (int rc = apply_if(config, "out_dir", out_dir)) return rc;
  if (int rc = apply_if(config, "journal", journal)) return rc;
  if (int rc = apply_if(config, "host", host)) return rc;
  if (int rc = apply_if(config, "port", port)) return rc;
  if (int rc = apply_if(config, "lease_seconds", lease_seconds)) return rc;

  if (serve->parsed()) {
    cf_server* server = nullptr;
    if (int rc = report(cf_serve_start(config, &server))) return rc;
    std::printf("coordinator listening on port %d\n", cf_server_port(server));
    std::fflush(stdout);
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    while (!g_stop) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    cf_status status = cf_server_stop(server);
    cf_server_destroy(server);
    return report(status);
  }

  if (harvest->parsed()) {
    if (int rc = apply_if(config, "harvest_limit", harvest_limit)) return rc;
    uint64_t fed = 0;
    cf_status status = cf_harvest_run(config, dump_dir.c_str(), &fed);
    if (status == CF_OK) std::printf("keywords fed: %llu\n",
                                     static_cast<unsigned long long>(fed));
    return report(status);
  }

  if (crawl->parsed()) {
    if (int rc = apply_if(config, "crawl_workers", crawl_workers)) return rc;
    if (int rc = apply_if(config, "max_pages", max_pages)) return rc;
    if (int rc = apply_if(config, "drain_polls", drain_polls)) return rc;
    uint64_t videos = 0;
    cf_status status = cf_crawl_run(config, &videos);
    if (status == CF_OK || status == CF_ERROR_PARTIAL) {
      std::printf("videos discovered: %llu\n",
                  static_cast<unsigned long long>(videos));
    }
    return report(status);
  }

  if (download->parsed()) {
    if (int rc = apply_if(config, "download_workers", download_workers)) return rc;
    if (strict_resolve && *strict_resolve) {
      if (int rc = apply(config, "strict_resolve", "true")) return rc;
    }
    uint64_t records = 0;
    cf_status status = cf_download_run(config, &records);
    if (status == CF_OK) {
      std::printf("manifest records written: %llu\n",
                  static_cast<unsigned long long>(records));
    }
    return report(status);
  }

  if (curate->parsed()) {
    if (int rc = apply_if(config, "threshold", threshold)) return rc;
    if (int rc = apply_if(config, "cap", cap)) return rc;
    if (int rc = apply_if(config, "sweep_cap", sweep_cap)) return rc;
    if (int rc = apply_if(config, "corruption", corruption)) return rc;
    if (int rc = apply_if(config, "seed", seed)) return rc;
    if (int rc = apply_if(config, "train_max", train_max)) return rc;
    if (int rc = apply_if(config, "test_size", test_size)) return rc;
    uint64_t kept = 0;
    cf_status status = cf_curate_run(config, curate_manifest.c_str(), &kept);
    if (status == CF_OK) {
      std::printf("pairs kept: %llu\n", static_cast<unsigned long long>(kept));
    }
    return report(status);
  }

  if (stats->parsed()) {
    uint64_t records = 0;
    cf_status status = cf_stats_run(config, stats_manifest.c_str(), &records);
    if (status == CF_OK) {
      std::printf("manifest records: %llu\n",
                  static_cast<unsigned long long>(records));
    }
    return report(status);
  }

  return 1;
}
