/* C API of the corpusforge shared library.
 *
 * Everything operates on opaque handles and returns a cf_status; the
 * thread-local cf_last_error() carries the human-readable detail of the
 * most recent failure on the calling thread. Handles are not thread-safe
 * unless noted; a running server handle may be stopped from another
 * thread.
 */
#ifndef CORPUSFORGE_CAPI_H
#define CORPUSFORGE_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
  CF_OK = 0,
  CF_ERROR_INVALID_ARGUMENT = 1,
  CF_ERROR_NOT_FOUND = 2,
  CF_ERROR_IO = 3,
  CF_ERROR_UNREACHABLE = 4,
  CF_ERROR_PARTIAL = 5, /* command finished but some work was incomplete */
  CF_ERROR_INTERNAL = 6
} cf_status;

typedef struct cf_config cf_config;
typedef struct cf_server cf_server;

const char* cf_version(void);
const char* cf_status_name(cf_status status);

/* Detail message for the last failing call on this thread. Never NULL. */
const char* cf_last_error(void);

/* Configuration: defaults, then an optional JSON file, then overrides. */
cf_status cf_config_create(cf_config** out);
void cf_config_destroy(cf_config* config);
cf_status cf_config_load_file(cf_config* config, const char* path);
cf_status cf_config_set(cf_config* config, const char* key, const char* value);
/* Copies the value into buf (NUL-terminated, truncating). */
cf_status cf_config_get(const cf_config* config, const char* key, char* buf,
                        size_t buflen);

/* Coordinator service. The server owns its coordinator and store. */
cf_status cf_serve_start(const cf_config* config, cf_server** out);
int cf_server_port(const cf_server* server);
cf_status cf_server_stop(cf_server* server);
void cf_server_destroy(cf_server* server);

/* Commands. Out-parameters may be NULL when the caller does not care. */
cf_status cf_harvest_run(const cf_config* config, const char* dump_dir,
                         uint64_t* keywords_fed);
cf_status cf_crawl_run(const cf_config* config, uint64_t* videos_added);
cf_status cf_download_run(const cf_config* config, uint64_t* records_written);
cf_status cf_curate_run(const cf_config* config, const char* manifest_path,
                        uint64_t* pairs_kept);
cf_status cf_stats_run(const cf_config* config, const char* manifest_path,
                       uint64_t* records);

/* Deterministic synthetic world files (fixtures, demos). */
cf_status cf_worldgen_run(const char* out_path, uint64_t video_count,
                          uint64_t seed, int page_size);

#ifdef __cplusplus
}
#endif

#endif /* CORPUSFORGE_CAPI_H */
