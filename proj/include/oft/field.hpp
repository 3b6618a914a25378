#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oft/octonion.hpp"

namespace oft {

using Shape = std::array<std::size_t, 3>;
using Index3 = std::array<std::size_t, 3>;
using Vec3 = std::array<double, 3>;

enum class Domain : unsigned char { space = 0, frequency = 1 };

class ShapeMismatch : public std::invalid_argument {
 public:
  ShapeMismatch(const Shape& a, const Shape& b)
      : std::invalid_argument("shape mismatch: " + to_string(a) + " vs " + to_string(b)) {}

  static std::string to_string(const Shape& s) {
    return std::to_string(s[0]) + "x" + std::to_string(s[1]) + "x" + std::to_string(s[2]);
  }
};

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::size_t volume(const Shape& s) { return s[0] * s[1] * s[2]; }

/// n -> (N - n) mod N; the grid version of negating a coordinate or frequency.
inline std::size_t reflect(std::size_t n, std::size_t extent) { return n == 0 ? 0 : extent - n; }

/// Signed frequency index: k for k < N/2 (rounded up), k - N otherwise.
inline long signed_index(std::size_t k, std::size_t extent) {
  return 2 * k < extent ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(extent);
}

struct SamplingGrid {
  Shape shape{1, 1, 1};
  Vec3 spacing{1.0, 1.0, 1.0};
  Vec3 origin{0.0, 0.0, 0.0};

  SamplingGrid() = default;
  explicit SamplingGrid(Shape s, Vec3 d = {1.0, 1.0, 1.0}, Vec3 o = {0.0, 0.0, 0.0})
      : shape(s), spacing(d), origin(o) {
    for (int a = 0; a < 3; ++a) {
      if (shape[a] == 0) throw std::invalid_argument("grid extents must be positive");
      if (!(spacing[a] > 0)) throw std::invalid_argument("grid spacings must be positive");
    }
  }

  std::size_t size() const { return volume(shape); }

  double coordinate(int axis, std::size_t n) const {
    return origin[axis] + static_cast<double>(n) * spacing[axis];
  }

  /// Frequency of index k on one axis, signed: k -> signed_index(k) / (N Δ).
  double frequency(int axis, std::size_t k) const {
    return static_cast<double>(signed_index(k, shape[axis])) /
           (static_cast<double>(shape[axis]) * spacing[axis]);
  }

  bool operator==(const SamplingGrid&) const = default;
};

/// Dense N1 x N2 x N3 field of octonions, row-major with n3 fastest.
class OctField3 {
 public:
  OctField3() = default;
  explicit OctField3(SamplingGrid grid, Domain domain = Domain::space)
      : grid_(grid), domain_(domain), data_(grid.size()) {}
  explicit OctField3(Shape shape, Domain domain = Domain::space)
      : OctField3(SamplingGrid(shape), domain) {}
  OctField3(SamplingGrid grid, Domain domain, std::vector<Octonion> data)
      : grid_(grid), domain_(domain), data_(std::move(data)) {
    if (data_.size() != grid_.size())
      throw std::invalid_argument("field data length does not match grid volume");
  }

  const SamplingGrid& grid() const { return grid_; }
  const Shape& shape() const { return grid_.shape; }
  std::size_t extent(int axis) const { return grid_.shape[axis]; }
  std::size_t size() const { return data_.size(); }
  Domain domain() const { return domain_; }
  void set_domain(Domain d) { domain_ = d; }

  std::size_t linear(std::size_t n1, std::size_t n2, std::size_t n3) const {
    return (n1 * grid_.shape[1] + n2) * grid_.shape[2] + n3;
  }
  std::size_t linear(const Index3& n) const { return linear(n[0], n[1], n[2]); }

  Octonion& operator()(std::size_t n1, std::size_t n2, std::size_t n3) {
    return data_[linear(n1, n2, n3)];
  }
  const Octonion& operator()(std::size_t n1, std::size_t n2, std::size_t n3) const {
    return data_[linear(n1, n2, n3)];
  }
  Octonion& operator[](std::size_t i) { return data_[i]; }
  const Octonion& operator[](std::size_t i) const { return data_[i]; }

  std::vector<Octonion>& data() { return data_; }
  const std::vector<Octonion>& data() const { return data_; }

  /// Value at the index reflected on the axes selected by the mask (bit a = axis a).
  const Octonion& reflected(std::size_t n1, std::size_t n2, std::size_t n3, unsigned mask) const {
    if (mask & 1u) n1 = reflect(n1, grid_.shape[0]);
    if (mask & 2u) n2 = reflect(n2, grid_.shape[1]);
    if (mask & 4u) n3 = reflect(n3, grid_.shape[2]);
    return (*this)(n1, n2, n3);
  }

  /// Calls fn(n1, n2, n3, value&) for every point in storage order.
  template <class Fn>
  void for_each_index(Fn&& fn) {
    std::size_t i = 0;
    for (std::size_t a = 0; a < grid_.shape[0]; ++a)
      for (std::size_t b = 0; b < grid_.shape[1]; ++b)
        for (std::size_t c = 0; c < grid_.shape[2]; ++c) fn(a, b, c, data_[i++]);
  }
  template <class Fn>
  void for_each_index(Fn&& fn) const {
    std::size_t i = 0;
    for (std::size_t a = 0; a < grid_.shape[0]; ++a)
      for (std::size_t b = 0; b < grid_.shape[1]; ++b)
        for (std::size_t c = 0; c < grid_.shape[2]; ++c) fn(a, b, c, data_[i++]);
  }

  OctField3& operator+=(const OctField3& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  OctField3& operator-=(const OctField3& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  OctField3& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend OctField3 operator+(OctField3 a, const OctField3& b) { return a += b; }
  friend OctField3 operator-(OctField3 a, const OctField3& b) { return a -= b; }
  friend OctField3 operator*(OctField3 a, double s) { return a *= s; }
  friend OctField3 operator*(double s, OctField3 a) { return a *= s; }

  void require_same_shape(const OctField3& o) const {
    if (o.shape() != shape()) throw ShapeMismatch(shape(), o.shape());
  }

  /// True when every coefficient e1..e7 is exactly zero.
  bool is_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const Octonion& o) {
      for (std::size_t i = 1; i < 8; ++i)
        if (o[i] != 0.0) return false;
      return true;
    });
  }
  /// True when only the 1 and e1 coefficients are populated.
  bool is_complex() const {
    return std::all_of(data_.begin(), data_.end(), [](const Octonion& o) {
      for (std::size_t i = 2; i < 8; ++i)
        if (o[i] != 0.0) return false;
      return true;
    });
  }

 private:
  SamplingGrid grid_;
  Domain domain_ = Domain::space;
  std::vector<Octonion> data_;
};

/// New field with the same grid where value(n) = fn(n1, n2, n3, u(n)).
template <class Fn>
OctField3 map_indexed(const OctField3& u, Fn&& fn) {
  OctField3 out(u.grid(), u.domain());
  std::size_t i = 0;
  for (std::size_t a = 0; a < u.extent(0); ++a)
    for (std::size_t b = 0; b < u.extent(1); ++b)
      for (std::size_t c = 0; c < u.extent(2); ++c, ++i) out[i] = fn(a, b, c, u[i]);
  return out;
}

/// u(±n1, ±n2, ±n3) with reflection on the masked axes.
inline OctField3 reflect_field(const OctField3& u, unsigned mask) {
  return map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion&) {
    return u.reflected(a, b, c, mask);
  });
}

/// Circular translation along one axis: out(n) = u(n - m).
inline OctField3 circular_shift(const OctField3& u, int axis, long m) {
  const auto n = static_cast<long>(u.extent(axis));
  const std::size_t s = static_cast<std::size_t>(((m % n) + n) % n);
  return map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion&) {
    Index3 idx{a, b, c};
    idx[axis] = (idx[axis] + u.extent(axis) - s) % u.extent(axis);
    return u(idx[0], idx[1], idx[2]);
  });
}

/// Right-multiplies every sample by a constant: u(n)·c.
inline OctField3 right_multiply(const OctField3& u, const Octonion& c) {
  return map_indexed(u, [&](std::size_t, std::size_t, std::size_t, const Octonion& v) { return v * c; });
}

/// max_n |a(n) - b(n)| over all coefficients.
inline double max_abs_diff(const OctField3& a, const OctField3& b) {
  a.require_same_shape(b);
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const OctField3& a) {
  double m = 0;
  for (const auto& v : a.data()) m = std::max(m, max_abs(v));
  return m;
}

/// max|a - b| / max|b|, falling back to the absolute error when b vanishes.
inline double max_rel_diff(const OctField3& a, const OctField3& ref) {
  const double scale = max_abs(ref);
  const double d = max_abs_diff(a, ref);
  return scale > 0 ? d / scale : d;
}

/// Direct circular convolution (u ⊛ v)(n) = Σ_m u(m)·v(n − m), O(N^6).
inline OctField3 circular_convolution(const OctField3& u, const OctField3& v) {
  u.require_same_shape(v);
  const Shape s = u.shape();
  return map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion&) {
    Octonion acc;
    u.for_each_index([&](std::size_t i, std::size_t j, std::size_t k, const Octonion& x) {
      acc += x * v((a + s[0] - i) % s[0], (b + s[1] - j) % s[1], (c + s[2] - k) % s[2]);
    });
    return acc;
  });
}

}  // namespace oft
