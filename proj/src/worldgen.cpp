#include "corpusforge/worldgen.hpp"

#include <cmath>
#include <cstdio>

#include "corpusforge/rng.hpp"

namespace corpusforge {

namespace {

const char* kWords[] = {
    "the",    "quick",  "brown",   "fox",     "jumps",  "over",
    "lazy",   "dog",    "speech",  "corpus",  "audio",  "video",
    "channel", "worker", "language", "model",  "data",   "sound",
    "voice",  "record", "signal",  "stream",  "frame",  "token",
    "word",   "noise",  "music",   "talk",    "story",  "lesson",
};
constexpr std::size_t kWordCount = sizeof(kWords) / sizeof(kWords[0]);

const char* kLanguages[] = {"en", "de", "fr", "es", "ru"};

std::string zero_pad(std::size_t value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*zu", width, value);
  return buf;
}

std::string make_sentence(SplitMix64& rng, std::size_t words) {
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    if (i > 0) text.push_back(' ');
    text += kWords[rng.below(kWordCount)];
  }
  return text;
}

// Swap roughly half the words for different ones; models a subtitle that
// does not transcribe the actual speech.
std::string corrupt_sentence(SplitMix64& rng, const std::string& text) {
  std::string out;
  std::size_t word_start = 0;
  bool flip = true;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ' ') {
      if (flip) {
        out += kWords[rng.below(kWordCount)];
      } else {
        out += text.substr(word_start, i - word_start);
      }
      flip = !flip;
      if (i != text.size()) out.push_back(' ');
      word_start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> worldgen_public_keywords() {
  std::vector<std::string> keywords;
  for (std::size_t i = 0; i < 8; ++i) keywords.push_back("topic" + zero_pad(i, 2));
  return keywords;
}

WorldSpec generate_world(const WorldGenOptions& options) {
  SplitMix64 rng(options.seed * 0x9E3779B97F4A7C15ULL + 0xDA3E39CB94B95BDBULL);
  WorldSpec world;
  world.page_size = options.page_size;

  std::vector<std::string> public_keywords = worldgen_public_keywords();
  std::vector<std::string> hidden_keywords;
  for (std::size_t i = 0; i < 4; ++i) {
    hidden_keywords.push_back("hidden" + zero_pad(i, 2));
  }

  std::size_t channel_count = std::max<std::size_t>(2, options.video_count / 4);

  for (std::size_t i = 0; i < options.video_count; ++i) {
    VideoSpec video;
    video.id = "v" + zero_pad(i, 4);
    std::size_t channel = rng.below(channel_count);
    video.channel_id = "c" + zero_pad(channel, 3);
    video.audio_seed = rng.next();

    // Every fifth channel is reachable only through channel expansion or
    // not at all: its videos carry hidden title keywords.
    bool hidden_channel = (channel % 5) == 4;
    const auto& vocabulary = hidden_channel ? hidden_keywords : public_keywords;
    std::size_t keyword_count = 1 + rng.below(3);
    for (std::size_t k = 0; k < keyword_count; ++k) {
      video.title_keywords.push_back(vocabulary[rng.below(vocabulary.size())]);
    }

    video.license_cc = rng.below(100) < 85;

    std::size_t utterance_count = 1 + rng.below(5);
    double cursor = 0.2 + 0.1 * static_cast<double>(rng.below(5));
    for (std::size_t u = 0; u < utterance_count; ++u) {
      TimedText utterance;
      utterance.text = make_sentence(rng, 2 + rng.below(7));
      double span = 0.35 + 0.065 * static_cast<double>(utterance.text.size());
      utterance.start = cursor;
      utterance.end = cursor + span;
      cursor = utterance.end + 0.2 + 0.05 * static_cast<double>(rng.below(10));
      video.spoken_text.push_back(std::move(utterance));
    }
    video.duration_s = std::ceil(cursor + 0.5);

    const std::string language = kLanguages[rng.below(5)];
    const std::string other_language =
        language == "en" ? std::string("fr") : std::string("en");

    auto accurate_cues = [&] {
      std::vector<Cue> cues;
      for (const auto& utterance : video.spoken_text) {
        cues.push_back({utterance.start, utterance.end, utterance.text});
      }
      return cues;
    };
    auto noisy_cues = [&] {
      std::vector<Cue> cues;
      for (const auto& utterance : video.spoken_text) {
        cues.push_back(
            {utterance.start, utterance.end, corrupt_sentence(rng, utterance.text)});
      }
      return cues;
    };

    switch (i % 8) {
      case 0:  // lone manual, accurate
      case 1:
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Manual, accurate_cues()});
        break;
      case 2:  // lone automatic, accurate
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Automatic, accurate_cues()});
        break;
      case 3:  // manual + automatic agreeing on language
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Manual, accurate_cues()});
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Automatic, noisy_cues()});
        break;
      case 4:  // conflicting manual languages
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Manual, accurate_cues()});
        video.subtitle_tracks.push_back(
            {other_language, SubtitleKind::Manual, accurate_cues()});
        break;
      case 5:  // duplicate automatic kind, same language
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Automatic, accurate_cues()});
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Automatic, noisy_cues()});
        break;
      case 6:  // lone manual that misrepresents the speech
        video.subtitle_tracks.push_back(
            {language, SubtitleKind::Manual, noisy_cues()});
        break;
      case 7:  // no subtitles at all
        break;
    }

    world.videos.push_back(std::move(video));
  }
  world.validate();
  return world;
}

}  // namespace corpusforge
