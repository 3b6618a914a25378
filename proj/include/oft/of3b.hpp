#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "oft/field.hpp"

namespace oft {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// OF3B: "OF3B", u32 version, u8 domain, 3×u64 dims, 3×f64 spacing, 3×f64 origin,
/// then c0..c7 per point as f64, row-major with n3 fastest. All little-endian.
namespace of3b {

inline constexpr std::array<char, 4> kMagic{'O', 'F', '3', 'B'};
inline constexpr std::uint32_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 4 + 4 + 1 + 3 * 8 + 3 * 8 + 3 * 8;

template <class T>
void put(std::vector<unsigned char>& out, T value) {
  auto raw = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  out.insert(out.end(), raw.begin(), raw.end());
}

template <class T>
T get(const std::vector<unsigned char>& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw FormatError("OF3B: truncated data");
  std::array<unsigned char, sizeof(T)> raw;
  std::memcpy(raw.data(), in.data() + pos, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  pos += sizeof(T);
  return std::bit_cast<T>(raw);
}

inline std::vector<unsigned char> encode(const OctField3& u) {
  std::vector<unsigned char> out;
  out.reserve(kHeaderSize + 64 * u.size());
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  put<std::uint32_t>(out, kVersion);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(u.domain()));
  for (int a = 0; a < 3; ++a) put<std::uint64_t>(out, u.grid().shape[a]);
  for (int a = 0; a < 3; ++a) put<double>(out, u.grid().spacing[a]);
  for (int a = 0; a < 3; ++a) put<double>(out, u.grid().origin[a]);
  for (const auto& v : u.data())
    for (std::size_t i = 0; i < 8; ++i) put<double>(out, v[i]);
  return out;
}

inline OctField3 decode(const std::vector<unsigned char>& in) {
  if (in.size() < kHeaderSize) throw FormatError("OF3B: file shorter than header");
  if (!std::equal(kMagic.begin(), kMagic.end(), in.begin())) throw FormatError("OF3B: bad magic");
  std::size_t pos = 4;
  const auto version = get<std::uint32_t>(in, pos);
  if (version != kVersion) throw FormatError("OF3B: unsupported version " + std::to_string(version));
  const auto domain = get<std::uint8_t>(in, pos);
  if (domain > 1) throw FormatError("OF3B: bad domain flag " + std::to_string(domain));
  Shape shape;
  Vec3 spacing, origin;
  for (int a = 0; a < 3; ++a) shape[a] = get<std::uint64_t>(in, pos);
  for (int a = 0; a < 3; ++a) spacing[a] = get<double>(in, pos);
  for (int a = 0; a < 3; ++a) origin[a] = get<double>(in, pos);
  for (int a = 0; a < 3; ++a)
    if (shape[a] == 0 || shape[a] > (std::uint64_t{1} << 20)) throw FormatError("OF3B: bad dimensions");
  const std::size_t points = volume(shape);
  const std::size_t payload = in.size() - kHeaderSize;
  if (payload % 64 != 0 || payload / 64 != points) throw FormatError("OF3B: payload length does not match dimensions");
  SamplingGrid grid;
  try {
    grid = SamplingGrid(shape, spacing, origin);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("OF3B: ") + e.what());
  }
  std::vector<Octonion> data(points);
  for (auto& v : data)
    for (std::size_t i = 0; i < 8; ++i) v[i] = get<double>(in, pos);
  return OctField3(grid, static_cast<Domain>(domain), std::move(data));
}

inline void write_file(const std::string& path, const OctField3& u) {
  const auto bytes = encode(u);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

inline OctField3 read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open " + path);
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return decode(bytes);
}

}  // namespace of3b
}  // namespace oft
