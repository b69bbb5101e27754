#pragma once

#include <cstdint>
#include <vector>

#include "corpusforge/platform_sim.hpp"

namespace corpusforge {

struct WorldGenOptions {
  std::size_t video_count = 60;
  uint64_t seed = 1;
  int page_size = 10;
};

// Deterministic synthetic worlds for fixtures and stress runs. The
// generated population covers every classification case (lone manual,
// lone automatic, agreeing mix, conflicting languages, duplicate kinds,
// no subtitles), includes non-CC videos, noisy subtitle tracks whose text
// diverges from the spoken ground truth, and channels reachable only
// through channel expansion. Channels whose videos carry only "hidden"
// title keywords stay outside any crawl seeded from the public vocabulary.
WorldSpec generate_world(const WorldGenOptions& options);

// The public query vocabulary generated worlds draw title keywords from.
std::vector<std::string> worldgen_public_keywords();

}  // namespace corpusforge
