#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace oft {

enum class Partial { x1, x2, x3, x1x2, x1x3, x2x3, x1x2x3, x1x1, x2x2, x3x3 };

inline constexpr std::array<Partial, 10> kAllPartials{Partial::x1,   Partial::x2,   Partial::x3,     Partial::x1x2,
                                                      Partial::x1x3, Partial::x2x3, Partial::x1x2x3, Partial::x1x1,
                                                      Partial::x2x2, Partial::x3x3};

/// Transform rule of a derivative of a real field:
/// OFT(∂u)(f) = sign · U(reflect_mask f) · (Π_{a in axes} 2πf_a) · e_unit.
struct PartialRule {
  std::array<int, 3> order;  // derivative order per axis
  unsigned reflect_mask;     // frequency axes negated in U
  std::size_t unit;          // basis unit of the right factor
  double sign;
};

inline constexpr PartialRule rule(Partial p) {
  switch (p) {
    case Partial::x1: return {{1, 0, 0}, 6u, 1, 1.0};
    case Partial::x2: return {{0, 1, 0}, 4u, 2, 1.0};
    case Partial::x3: return {{0, 0, 1}, 0u, 4, 1.0};
    case Partial::x1x2: return {{1, 1, 0}, 6u, 3, 1.0};
    case Partial::x1x3: return {{1, 0, 1}, 4u, 5, 1.0};
    case Partial::x2x3: return {{0, 1, 1}, 5u, 6, 1.0};
    case Partial::x1x2x3: return {{1, 1, 1}, 5u, 7, 1.0};
    case Partial::x1x1: return {{2, 0, 0}, 0u, 0, -1.0};
    case Partial::x2x2: return {{0, 2, 0}, 0u, 0, -1.0};
    case Partial::x3x3: return {{0, 0, 2}, 0u, 0, -1.0};
  }
  return {{0, 0, 0}, 0u, 0, 1.0};
}

inline std::string to_string(Partial p) {
  switch (p) {
    case Partial::x1: return "x1";
    case Partial::x2: return "x2";
    case Partial::x3: return "x3";
    case Partial::x1x2: return "x1x2";
    case Partial::x1x3: return "x1x3";
    case Partial::x2x3: return "x2x3";
    case Partial::x1x2x3: return "x1x2x3";
    case Partial::x1x1: return "x1x1";
    case Partial::x2x2: return "x2x2";
    case Partial::x3x3: return "x3x3";
  }
  return "?";
}

inline std::optional<Partial> parse_partial(std::string_view s) {
  for (Partial p : kAllPartials)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

}  // namespace oft
