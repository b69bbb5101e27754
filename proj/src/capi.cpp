#include "corpusforge/capi.h"

#include <cstring>
#include <string>

#include "corpusforge/pipeline.hpp"
#include "corpusforge/reports.hpp"
#include "corpusforge/worldgen.hpp"

namespace {

thread_local std::string g_last_error = "";

cf_status fail(cf_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions to status codes.
template <typename Fn>
cf_status guarded(Fn&& fn) {
  try {
    fn();
    return CF_OK;
  } catch (const std::invalid_argument& e) {
    return fail(CF_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const corpusforge::CoordinatorUnreachable& e) {
    return fail(CF_ERROR_UNREACHABLE, e.what());
  } catch (const corpusforge::PlatformNotFound& e) {
    return fail(CF_ERROR_NOT_FOUND, e.what());
  } catch (const corpusforge::PlatformUnavailable& e) {
    return fail(CF_ERROR_UNREACHABLE, e.what());
  } catch (const std::exception& e) {
    return fail(CF_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CF_ERROR_INTERNAL, "unknown error");
  }
}

}  // namespace

struct cf_config {
  corpusforge::RunConfig config;
};

struct cf_server {
  std::unique_ptr<corpusforge::ServeHandle> handle;
};

extern "C" {

const char* cf_version(void) { return "0.1.0"; }

const char* cf_status_name(cf_status status) {
  switch (status) {
    case CF_OK:
      return "ok";
    case CF_ERROR_INVALID_ARGUMENT:
      return "invalid-argument";
    case CF_ERROR_NOT_FOUND:
      return "not-found";
    case CF_ERROR_IO:
      return "io-error";
    case CF_ERROR_UNREACHABLE:
      return "unreachable";
    case CF_ERROR_PARTIAL:
      return "partial";
    case CF_ERROR_INTERNAL:
      return "internal";
  }
  return "?";
}

const char* cf_last_error(void) { return g_last_error.c_str(); }

cf_status cf_config_create(cf_config** out) {
  if (!out) return fail(CF_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new cf_config(); });
}

void cf_config_destroy(cf_config* config) { delete config; }

cf_status cf_config_load_file(cf_config* config, const char* path) {
  if (!config || !path) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "config/path is NULL");
  }
  return guarded([&] { config->config.load_file(path); });
}

cf_status cf_config_set(cf_config* config, const char* key, const char* value) {
  if (!config || !key || !value) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "config/key/value is NULL");
  }
  return guarded([&] { config->config.set(key, value); });
}

cf_status cf_config_get(const cf_config* config, const char* key, char* buf,
                        size_t buflen) {
  if (!config || !key || !buf || buflen == 0) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "config/key/buffer is NULL or empty");
  }
  return guarded([&] {
    std::string value = config->config.get(key);
    std::size_t n = std::min(buflen - 1, value.size());
    std::memcpy(buf, value.data(), n);
    buf[n] = '\0';
  });
}

cf_status cf_serve_start(const cf_config* config, cf_server** out) {
  if (!config || !out) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "config/out is NULL");
  }
  return guarded([&] {
    auto server = new cf_server();
    try {
      server->handle = corpusforge::cmd_serve_start(config->config);
    } catch (...) {
      delete server;
      throw;
    }
    *out = server;
  });
}

int cf_server_port(const cf_server* server) {
  return server && server->handle ? server->handle->port() : -1;
}

cf_status cf_server_stop(cf_server* server) {
  if (!server || !server->handle) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "server is NULL");
  }
  return guarded([&] { server->handle->stop(); });
}

void cf_server_destroy(cf_server* server) { delete server; }

cf_status cf_harvest_run(const cf_config* config, const char* dump_dir,
                         uint64_t* keywords_fed) {
  if (!config || !dump_dir) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "config/dump_dir is NULL");
  }
  return guarded([&] {
    auto summary = corpusforge::cmd_harvest(config->config, dump_dir);
    if (keywords_fed) *keywords_fed = summary.keywords_fed;
  });
}

cf_status cf_crawl_run(const cf_config* config, uint64_t* videos_added) {
  if (!config) return fail(CF_ERROR_INVALID_ARGUMENT, "config is NULL");
  uint64_t partial = 0;
  cf_status status = guarded([&] {
    auto summary = corpusforge::cmd_crawl(config->config);
    if (videos_added) *videos_added = summary.videos_added;
    partial = summary.partial_crawls;
  });
  if (status == CF_OK && partial > 0) {
    return fail(CF_ERROR_PARTIAL,
                std::to_string(partial) + " partial crawl(s)");
  }
  return status;
}

cf_status cf_download_run(const cf_config* config, uint64_t* records_written) {
  if (!config) return fail(CF_ERROR_INVALID_ARGUMENT, "config is NULL");
  return guarded([&] {
    auto summary = corpusforge::cmd_download(config->config);
    if (records_written) *records_written = summary.records_written;
  });
}

cf_status cf_curate_run(const cf_config* config, const char* manifest_path,
                        uint64_t* pairs_kept) {
  if (!config || !manifest_path) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "config/manifest is NULL");
  }
  return guarded([&] {
    auto summary = corpusforge::cmd_curate(config->config, manifest_path);
    if (pairs_kept) *pairs_kept = summary.pairs_kept;
  });
}

cf_status cf_stats_run(const cf_config* config, const char* manifest_path,
                       uint64_t* records) {
  if (!config || !manifest_path) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "config/manifest is NULL");
  }
  return guarded([&] {
    auto outcome = corpusforge::cmd_stats(config->config, manifest_path);
    if (records) *records = outcome.records;
  });
}

cf_status cf_worldgen_run(const char* out_path, uint64_t video_count,
                          uint64_t seed, int page_size) {
  if (!out_path) return fail(CF_ERROR_INVALID_ARGUMENT, "out_path is NULL");
  if (video_count == 0) {
    return fail(CF_ERROR_INVALID_ARGUMENT, "video_count must be > 0");
  }
  return guarded([&] {
    corpusforge::WorldGenOptions options;
    options.video_count = video_count;
    options.seed = seed;
    options.page_size = page_size;
    corpusforge::WorldSpec world = corpusforge::generate_world(options);
    corpusforge::atomic_write_file(out_path, world.to_json());
  });
}

}  // extern "C"
