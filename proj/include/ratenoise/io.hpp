#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratenoise/signal.hpp"

namespace ratenoise {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `bytes` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

/// Volts to 16-bit PCM: round(v / full_scale * 32767), saturated to
/// [-32768, 32767].
std::int16_t volts_to_pcm(double volts, double full_scale);
double pcm_to_volts(std::int16_t pcm, double full_scale);

/// Mono 16-bit little-endian PCM RIFF/WAVE.
void write_wav(const std::filesystem::path& path, const DiscreteSignal& s, double full_scale);
std::string encode_wav(const DiscreteSignal& s, double full_scale);

/// Reads back the format written by write_wav. Other encodings, channel
/// counts and bit depths are rejected.
DiscreteSignal read_wav(const std::filesystem::path& path, double full_scale);
DiscreteSignal decode_wav(const std::string& bytes, double full_scale);

/// Space-separated "x y" rows, no header, 9 significant digits.
void write_csv(const std::filesystem::path& path, std::span<const double> xs, std::span<const double> ys);
/// Signal as (time in seconds, value) rows.
void write_csv(const std::filesystem::path& path, const DiscreteSignal& s);
std::vector<std::pair<double, double>> read_csv(const std::filesystem::path& path);

}  // namespace ratenoise
