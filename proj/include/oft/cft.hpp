#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oft/field.hpp"

namespace oft {

using cplx = std::complex<double>;

enum class Direction { forward, inverse };

/// Dense complex 3-D grid, same layout as OctField3.
struct ComplexGrid {
  Shape shape{1, 1, 1};
  std::vector<cplx> data;

  ComplexGrid() = default;
  explicit ComplexGrid(Shape s) : shape(s), data(volume(s)) {}

  cplx& operator()(std::size_t a, std::size_t b, std::size_t c) {
    return data[(a * shape[1] + b) * shape[2] + c];
  }
  const cplx& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data[(a * shape[1] + b) * shape[2] + c];
  }
  const cplx& reflected(std::size_t a, std::size_t b, std::size_t c, unsigned mask) const {
    if (mask & 1u) a = reflect(a, shape[0]);
    if (mask & 2u) b = reflect(b, shape[1]);
    if (mask & 4u) c = reflect(c, shape[2]);
    return (*this)(a, b, c);
  }
};

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// e^{sign·2πi·k/n}, with k reduced mod n so large products stay accurate.
inline cplx twiddle(std::size_t k, std::size_t n, double sign) {
  const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

/// Precomputed per-length transform plan: radix-2 when possible, O(n^2) DFT otherwise.
class LinePlan {
 public:
  LinePlan(std::size_t n, Direction dir) : n_(n), sign_(dir == Direction::forward ? -1.0 : 1.0) {
    if (is_power_of_two(n_)) {
      roots_.resize(n_ / 2);
      for (std::size_t k = 0; k < n_ / 2; ++k) roots_[k] = twiddle(k, n_, sign_);
    } else {
      roots_.resize(n_);
      for (std::size_t k = 0; k < n_; ++k) roots_[k] = twiddle(k, n_, sign_);
    }
  }

  void run(std::span<cplx> x, std::vector<cplx>& scratch) const {
    if (n_ <= 1) return;
    if (is_power_of_two(n_))
      radix2(x);
    else
      naive(x, scratch);
  }

 private:
  void radix2(std::span<cplx> x) const {
    for (std::size_t i = 1, j = 0; i < n_; ++i) {
      std::size_t bit = n_ >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t stride = n_ / len;
      for (std::size_t i = 0; i < n_; i += len) {
        for (std::size_t k = 0; k < len / 2; ++k) {
          const cplx t = roots_[k * stride] * x[i + k + len / 2];
          x[i + k + len / 2] = x[i + k] - t;
          x[i + k] += t;
        }
      }
    }
  }

  void naive(std::span<cplx> x, std::vector<cplx>& scratch) const {
    scratch.assign(n_, cplx{});
    for (std::size_t k = 0; k < n_; ++k) {
      cplx acc{};
      for (std::size_t j = 0; j < n_; ++j) acc += x[j] * roots_[(j * k) % n_];
      scratch[k] = acc;
    }
    std::copy(scratch.begin(), scratch.end(), x.begin());
  }

  std::size_t n_;
  double sign_;
  std::vector<cplx> roots_;
};

}  // namespace detail

/// Separable complex DFT along all three axes. Forward is unnormalized
/// (kernel e^{-2πi k·n/N}); inverse uses e^{+2πi k·n/N} and divides by N1·N2·N3.
inline ComplexGrid cft3(ComplexGrid v, Direction dir) {
  const Shape s = v.shape;
  std::vector<cplx> line, scratch;
  for (int axis = 0; axis < 3; ++axis) {
    const std::size_t n = s[axis];
    if (n <= 1) continue;
    const detail::LinePlan plan(n, dir);
    line.resize(n);
    const std::size_t stride = axis == 0 ? s[1] * s[2] : axis == 1 ? s[2] : 1;
    const std::size_t outer = axis == 0 ? 1 : axis == 1 ? s[0] : s[0] * s[1];
    const std::size_t inner = axis == 0 ? s[1] * s[2] : axis == 1 ? s[2] : 1;
    // Lines are visited in a fixed order; each line is transformed independently.
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner; ++i) {
        const std::size_t base = axis == 0 ? i : axis == 1 ? o * s[1] * s[2] + i : o * s[2];
        for (std::size_t j = 0; j < n; ++j) line[j] = v.data[base + j * stride];
        plan.run(line, scratch);
        for (std::size_t j = 0; j < n; ++j) v.data[base + j * stride] = line[j];
      }
    }
  }
  if (dir == Direction::inverse) {
    const double scale = 1.0 / static_cast<double>(volume(s));
    for (auto& z : v.data) z *= scale;
  }
  return v;
}

}  // namespace oft
