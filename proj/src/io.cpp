#include "ratenoise/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ratenoise {

namespace fs = std::filesystem;

namespace {

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((v >> shift) & 0xff));
}

std::uint16_t get_u16(const std::string& in, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<std::uint8_t>(in[at]) |
                                    (static_cast<std::uint8_t>(in[at + 1]) << 8));
}

std::uint32_t get_u32(const std::string& in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<std::uint8_t>(in[at + static_cast<std::size_t>(i)]);
  return v;
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_full_scale(double full_scale) {
  if (!(full_scale > 0.0) || !std::isfinite(full_scale)) throw std::invalid_argument("full scale must be positive");
}

}  // namespace

void write_file_atomic(const fs::path& path, const std::string& bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

std::int16_t volts_to_pcm(double volts, double full_scale) {
  const double scaled = std::nearbyint(volts / full_scale * 32767.0);
  return static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
}

double pcm_to_volts(std::int16_t pcm, double full_scale) { return static_cast<double>(pcm) / 32767.0 * full_scale; }

std::string encode_wav(const DiscreteSignal& s, double full_scale) {
  require_full_scale(full_scale);
  const double rate = s.rate().hz();
  if (rate != std::floor(rate) || rate > 4294967295.0) {
    throw std::invalid_argument("WAV needs an integral sample rate, got " + std::to_string(rate));
  }
  const auto data_bytes = static_cast<std::uint32_t>(s.size() * 2);
  const auto rate_u = static_cast<std::uint32_t>(rate);

  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, rate_u);
  put_u32(out, rate_u * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  out += "data";
  put_u32(out, data_bytes);
  for (double v : s.samples()) put_u16(out, static_cast<std::uint16_t>(volts_to_pcm(v, full_scale)));
  return out;
}

void write_wav(const fs::path& path, const DiscreteSignal& s, double full_scale) {
  write_file_atomic(path, encode_wav(s, full_scale));
}

DiscreteSignal decode_wav(const std::string& in, double full_scale) {
  require_full_scale(full_scale);
  if (in.size() < 12 || in.compare(0, 4, "RIFF") != 0 || in.compare(8, 4, "WAVE") != 0) {
    throw IoError("not a RIFF/WAVE file");
  }
  std::size_t at = 12;
  bool have_fmt = false;
  std::uint32_t rate = 0;
  while (at + 8 <= in.size()) {
    const std::string id = in.substr(at, 4);
    const std::uint32_t size = get_u32(in, at + 4);
    const std::size_t body = at + 8;
    if (body + size > in.size()) throw IoError("truncated '" + id + "' chunk");
    if (id == "fmt ") {
      if (size < 16) throw IoError("short fmt chunk");
      const auto format = get_u16(in, body);
      const auto channels = get_u16(in, body + 2);
      const auto bits = get_u16(in, body + 14);
      if (format != 1 || channels != 1 || bits != 16) {
        throw IoError("only mono 16-bit PCM is supported (format " + std::to_string(format) + ", " +
                      std::to_string(channels) + " channels, " + std::to_string(bits) + " bits)");
      }
      rate = get_u32(in, body + 4);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw IoError("data chunk before fmt chunk");
      std::vector<double> samples(size / 2);
      for (std::size_t k = 0; k < samples.size(); ++k) {
        samples[k] = pcm_to_volts(static_cast<std::int16_t>(get_u16(in, body + 2 * k)), full_scale);
      }
      return {SampleRate(static_cast<double>(rate)), std::move(samples)};
    }
    at = body + size + (size & 1);
  }
  throw IoError("no data chunk");
}

DiscreteSignal read_wav(const fs::path& path, double full_scale) { return decode_wav(read_all(path), full_scale); }

void write_csv(const fs::path& path, std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("CSV columns differ in length");
  std::string out;
  out.reserve(xs.size() * 32);
  char line[64];
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const int len = std::snprintf(line, sizeof line, "%.9g %.9g\n", xs[k], ys[k]);
    out.append(line, static_cast<std::size_t>(len));
  }
  write_file_atomic(path, out);
}

void write_csv(const fs::path& path, const DiscreteSignal& s) {
  std::vector<double> times(s.size());
  for (std::size_t k = 0; k < times.size(); ++k) times[k] = static_cast<double>(k) / s.rate().hz();
  write_csv(path, times, s.samples());
}

std::vector<std::pair<double, double>> read_csv(const fs::path& path) {
  std::istringstream in(read_all(path));
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    double x = 0.0;
    double y = 0.0;
    if (!(fields >> x >> y)) throw IoError("malformed CSV row: " + line);
    rows.emplace_back(x, y);
  }
  return rows;
}

}  // namespace ratenoise
