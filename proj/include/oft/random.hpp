#pragma once

#include <cstdint>

#include "oft/field.hpp"
#include "oft/octonion.hpp"
#include "oft/quad_complex.hpp"

namespace oft {

/// splitmix64; small, seedable and identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

 private:
  std::uint64_t state_;
};

enum class FieldKind { octonion, real, complex };

inline Octonion random_octonion(SplitMix64& rng) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = rng.symmetric();
  return o;
}

inline QuadComplex random_quad_complex(SplitMix64& rng) { return from_octonion(random_octonion(rng)); }

/// Field with coefficients uniform in [-1, 1); only c0 for real, c0 and c1 for complex.
inline OctField3 random_field(const SamplingGrid& grid, SplitMix64& rng, FieldKind kind = FieldKind::octonion) {
  const std::size_t populated = kind == FieldKind::octonion ? 8 : kind == FieldKind::complex ? 2 : 1;
  OctField3 u(grid, Domain::space);
  for (auto& v : u.data())
    for (std::size_t i = 0; i < populated; ++i) v[i] = rng.symmetric();
  return u;
}

inline OctField3 random_field(const Shape& shape, SplitMix64& rng, FieldKind kind = FieldKind::octonion) {
  return random_field(SamplingGrid(shape), rng, kind);
}

}  // namespace oft
