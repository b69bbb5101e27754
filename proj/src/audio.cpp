#include "corpusforge/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace corpusforge {

namespace {

int16_t clamp16(double v) {
  if (v > 32767.0) return 32767;
  if (v < -32768.0) return -32768;
  return static_cast<int16_t>(std::lround(v));
}

std::vector<double> downmix_mono(const AudioBuffer& raw) {
  std::size_t frames = raw.frame_count();
  std::vector<double> mono(frames);
  if (raw.channels == 1) {
    for (std::size_t i = 0; i < frames; ++i) mono[i] = raw.samples[i];
    return mono;
  }
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (int c = 0; c < raw.channels; ++c) {
      acc += raw.samples[i * raw.channels + c];
    }
    mono[i] = acc / raw.channels;
  }
  return mono;
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xFF));
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
}

uint32_t get_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t get_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

AudioBuffer normalize_audio(const AudioBuffer& raw) {
  if (raw.channels < 1) throw std::invalid_argument("audio needs >= 1 channel");
  if (raw.sample_rate < 1) throw std::invalid_argument("bad sample rate");
  if (raw.samples.size() % static_cast<std::size_t>(raw.channels) != 0) {
    throw std::invalid_argument("sample count not a multiple of channels");
  }
  if (raw.frame_count() == 0) throw EmptyAudioError();

  // Already at contract: passthrough keeps samples bit-identical.
  if (raw.channels == 1 && raw.sample_rate == kTargetSampleRate) {
    return raw;
  }

  std::vector<double> mono = downmix_mono(raw);

  AudioBuffer out;
  out.sample_rate = kTargetSampleRate;
  out.channels = 1;
  if (raw.sample_rate == kTargetSampleRate) {
    out.samples.resize(mono.size());
    for (std::size_t i = 0; i < mono.size(); ++i) {
      out.samples[i] = clamp16(mono[i]);
    }
    return out;
  }

  std::size_t in_len = mono.size();
  auto out_len = static_cast<std::size_t>(std::llround(
      static_cast<double>(in_len) * kTargetSampleRate / raw.sample_rate));
  out.samples.resize(out_len);
  double step = static_cast<double>(raw.sample_rate) / kTargetSampleRate;
  for (std::size_t i = 0; i < out_len; ++i) {
    double pos = i * step;
    auto idx = static_cast<std::size_t>(pos);
    if (idx >= in_len - 1) {
      out.samples[i] = clamp16(mono[in_len - 1]);
      continue;
    }
    double frac = pos - static_cast<double>(idx);
    out.samples[i] = clamp16(mono[idx] * (1.0 - frac) + mono[idx + 1] * frac);
  }
  return out;
}

std::vector<uint8_t> encode_wav(const AudioBuffer& audio) {
  if (audio.channels < 1 || audio.sample_rate < 1) {
    throw std::invalid_argument("bad audio format");
  }
  uint32_t data_bytes = static_cast<uint32_t>(audio.samples.size() * 2);
  uint32_t byte_rate = static_cast<uint32_t>(audio.sample_rate) *
                       static_cast<uint32_t>(audio.channels) * 2;
  uint16_t block_align = static_cast<uint16_t>(audio.channels * 2);

  std::vector<uint8_t> out;
  out.reserve(44 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, static_cast<uint16_t>(audio.channels));
  put_u32(out, static_cast<uint32_t>(audio.sample_rate));
  put_u32(out, byte_rate);
  put_u16(out, block_align);
  put_u16(out, 16);  // bits per sample
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_bytes);
  for (int16_t s : audio.samples) {
    out.push_back(static_cast<uint8_t>(s & 0xFF));
    out.push_back(static_cast<uint8_t>((s >> 8) & 0xFF));
  }
  return out;
}

AudioBuffer decode_wav(const uint8_t* data, std::size_t size) {
  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0) {
    throw std::invalid_argument("not a RIFF/WAVE file");
  }
  AudioBuffer audio;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const uint8_t* hdr = data + pos;
    uint32_t chunk_size = get_u32(hdr + 4);
    std::size_t body = pos + 8;
    if (body + chunk_size > size) {
      throw std::invalid_argument("truncated WAV chunk");
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw std::invalid_argument("short fmt chunk");
      uint16_t format = get_u16(data + body);
      if (format != 1) throw std::invalid_argument("only PCM supported");
      audio.channels = get_u16(data + body + 2);
      audio.sample_rate = static_cast<int>(get_u32(data + body + 4));
      uint16_t bits = get_u16(data + body + 14);
      if (bits != 16) throw std::invalid_argument("only 16-bit supported");
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      if (!have_fmt) throw std::invalid_argument("data before fmt");
      std::size_t count = chunk_size / 2;
      audio.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const uint8_t* p = data + body + i * 2;
        audio.samples[i] =
            static_cast<int16_t>(static_cast<uint16_t>(p[0] | (p[1] << 8)));
      }
      return audio;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }
  throw std::invalid_argument("missing data chunk");
}

void write_wav(const std::string& path, const AudioBuffer& audio) {
  std::vector<uint8_t> bytes = encode_wav(audio);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write: " + path);
}

AudioBuffer read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return decode_wav(bytes.data(), bytes.size());
}

}  // namespace corpusforge
