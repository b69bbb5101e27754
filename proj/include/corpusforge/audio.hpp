#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace corpusforge {

// Interleaved 16-bit PCM.
struct AudioBuffer {
  int sample_rate = 0;
  int channels = 0;
  std::vector<int16_t> samples;

  std::size_t frame_count() const {
    return channels > 0 ? samples.size() / static_cast<std::size_t>(channels)
                        : 0;
  }
  double duration_seconds() const {
    return sample_rate > 0
               ? static_cast<double>(frame_count()) / sample_rate
               : 0.0;
  }
};

class EmptyAudioError : public std::runtime_error {
 public:
  EmptyAudioError() : std::runtime_error("empty audio") {}
};

inline constexpr int kTargetSampleRate = 24000;

// Converts any-rate multichannel PCM to the storage contract: one channel
// (per-frame channel mean), 24 kHz (linear resampling), 16-bit samples.
// Output length is round(frames * 24000 / rate). Input already meeting the
// contract passes through untouched. Throws EmptyAudioError when the input
// has no frames and std::invalid_argument on nonsense rates/channels.
AudioBuffer normalize_audio(const AudioBuffer& raw);

// RIFF/WAVE, PCM 16-bit little-endian. Writing accepts any rate/channel
// combination (the simulator ships source media as WAV too); files at rest
// in a corpus are normalized beforehand.
void write_wav(const std::string& path, const AudioBuffer& audio);
AudioBuffer read_wav(const std::string& path);

std::vector<uint8_t> encode_wav(const AudioBuffer& audio);
AudioBuffer decode_wav(const uint8_t* data, std::size_t size);

}  // namespace corpusforge
