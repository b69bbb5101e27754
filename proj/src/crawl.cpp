#include "corpusforge/crawl.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace corpusforge {

CrawlResult crawl_search(PlatformAdapter& platform, const SearchQuery& query) {
  if (query.keyword.empty()) {
    throw std::invalid_argument("search keyword must be non-empty");
  }
  if (query.max_pages < 1) {
    throw std::invalid_argument("max_pages must be >= 1");
  }

  CrawlResult result;
  std::set<std::string> seen;
  std::optional<std::string> continuation;
  for (int page = 0; page < query.max_pages; ++page) {
    SearchPage search_page;
    try {
      search_page = platform.search(query, continuation);
    } catch (const PlatformError&) {
      result.partial = true;  // keep pages 1..k-1
      return result;
    }
    for (const auto& id : search_page.video_ids) {
      if (!seen.insert(id).second) continue;
      // The platform already filtered, but a live backend may lie; check
      // the metadata ourselves. Licensing failures drop the video,
      // missing subtitles do not (unlabeled material stays useful).
      VideoRecord metadata;
      try {
        metadata = platform.video_metadata(id);
      } catch (const PlatformNotFound&) {
        continue;
      } catch (const PlatformError&) {
        result.partial = true;
        return result;
      }
      if (query.require_cc_license && !metadata.license_cc) continue;
      result.video_ids.push_back(id);
    }
    if (!search_page.continuation) break;
    continuation = search_page.continuation;
  }
  return result;
}

std::string extract_channel(PlatformAdapter& platform,
                            const std::string& video_id) {
  return platform.video_metadata(video_id).channel_id;
}

std::vector<std::string> enumerate_channel(PlatformAdapter& platform,
                                           const std::string& channel_id) {
  std::vector<std::string> ids;
  std::optional<std::string> continuation;
  while (true) {
    SearchPage page = platform.channel_videos(channel_id, continuation);
    ids.insert(ids.end(), page.video_ids.begin(), page.video_ids.end());
    if (!page.continuation) break;
    continuation = page.continuation;
  }
  return ids;
}

namespace {

// Keyword resource: search, register hits and their channels.
bool process_keyword(CoordinatorClient& coordinator, PlatformAdapter& platform,
                     const Resource& resource, const DiscoveryOptions& options,
                     DiscoveryOutcome& outcome) {
  SearchQuery query;
  query.keyword = resource.payload;
  query.require_cc_license = options.require_cc_license;
  query.require_subtitles = options.require_subtitles;
  query.max_pages = options.max_pages;

  CrawlResult crawl = crawl_search(platform, query);
  for (const auto& video_id : crawl.video_ids) {
    if (coordinator.add_resource(ResourceKind::Video, video_id).created) {
      ++outcome.videos_added;
    }
    try {
      std::string channel = extract_channel(platform, video_id);
      if (coordinator.add_resource(ResourceKind::Channel, channel).created) {
        ++outcome.channels_added;
      }
    } catch (const PlatformNotFound&) {
      // metadata raced away; the video itself stays registered
    }
  }
  if (crawl.partial) ++outcome.partial_crawls;

  std::ostringstream summary;
  summary << "videos=" << crawl.video_ids.size();
  if (crawl.partial) summary << " partial=true";
  coordinator.complete(resource.id, options.worker_id, summary.str());
  ++outcome.keywords_processed;
  return true;
}

bool process_channel(CoordinatorClient& coordinator, PlatformAdapter& platform,
                     const Resource& resource, const DiscoveryOptions& options,
                     DiscoveryOutcome& outcome) {
  std::vector<std::string> ids;
  try {
    ids = enumerate_channel(platform, resource.payload);
  } catch (const PlatformNotFound&) {
    coordinator.complete(resource.id, options.worker_id, "error=not-found");
    ++outcome.channels_processed;
    return true;
  }
  for (const auto& video_id : ids) {
    if (coordinator.add_resource(ResourceKind::Video, video_id).created) {
      ++outcome.videos_added;
    }
  }
  coordinator.complete(resource.id, options.worker_id,
                       "videos=" + std::to_string(ids.size()));
  ++outcome.channels_processed;
  return true;
}

}  // namespace

DiscoveryOutcome discovery_loop(CoordinatorClient& coordinator,
                                PlatformAdapter& platform,
                                const DiscoveryOptions& options) {
  DiscoveryOutcome outcome;
  int empty_polls = 0;
  while (empty_polls < options.drain_polls) {
    bool worked = false;

    if (auto resource =
            coordinator.acquire_next(ResourceKind::Keyword, options.worker_id)) {
      try {
        worked = process_keyword(coordinator, platform, *resource, options,
                                 outcome);
      } catch (const PlatformUnavailable&) {
        worked = true;  // resource returns via lease expiry
      }
    }

    if (auto resource =
            coordinator.acquire_next(ResourceKind::Channel, options.worker_id)) {
      try {
        worked = process_channel(coordinator, platform, *resource, options,
                                 outcome) ||
                 worked;
      } catch (const PlatformUnavailable&) {
        worked = true;
      }
    }

    if (worked) {
      empty_polls = 0;
    } else {
      ++empty_polls;
      if (options.on_idle) options.on_idle();
      if (empty_polls < options.drain_polls && options.poll_wait_ms > 0) {
        std::this_thread::sleep_for(
            std::chrono::milliseconds(options.poll_wait_ms));
      }
    }
  }
  return outcome;
}

}  // namespace corpusforge
