#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "corpusforge/coordinator_client.hpp"
#include "corpusforge/platform.hpp"

namespace corpusforge {

struct CrawlResult {
  std::vector<std::string> video_ids;  // rank order, first occurrence wins
  bool partial = false;                // a page failed; ids cover pages before it
};

// Follows search pages up to query.max_pages, deduplicates, and re-verifies
// the query's filter flags against video metadata: a video failing the
// license re-check is dropped, a video lacking subtitles stays (unlabeled
// material is still wanted).
CrawlResult crawl_search(PlatformAdapter& platform, const SearchQuery& query);

// Channel id from a video's metadata. Propagates PlatformNotFound.
std::string extract_channel(PlatformAdapter& platform,
                            const std::string& video_id);

// Every video of the channel in upload order, following pagination to the
// end.
std::vector<std::string> enumerate_channel(PlatformAdapter& platform,
                                           const std::string& channel_id);

struct DiscoveryOptions {
  std::string worker_id = "discovery";
  int max_pages = 10;
  bool require_cc_license = true;
  bool require_subtitles = true;
  // The loop exits after this many consecutive polls found no Keyword and
  // no Channel work.
  int drain_polls = 5;
  int poll_wait_ms = 20;
  std::function<void()> on_idle;  // optional hook between empty polls
};

struct DiscoveryOutcome {
  uint64_t keywords_processed = 0;
  uint64_t channels_processed = 0;
  uint64_t videos_added = 0;
  uint64_t channels_added = 0;
  uint64_t partial_crawls = 0;
};

// One discovery worker: drains Keyword resources through crawl_search
// (registering every hit as a Video and its channel as a Channel), drains
// Channel resources through enumerate_channel, and completes each resource
// it finishes. Safe to run on any number of threads against one
// coordinator.
DiscoveryOutcome discovery_loop(CoordinatorClient& coordinator,
                                PlatformAdapter& platform,
                                const DiscoveryOptions& options);

}  // namespace corpusforge
