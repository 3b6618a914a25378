#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oft/field.hpp"
#include "oft/octonion.hpp"

namespace oft {

/// Symmetric box [-h_i, h_i] split into steps_i midpoint cells per axis.
struct QuadratureBox {
  Vec3 half_width{5.0, 5.0, 5.0};
  std::array<std::size_t, 3> steps{100, 100, 100};

  void validate() const {
    for (int a = 0; a < 3; ++a) {
      if (!(half_width[a] > 0) || steps[a] == 0)
        throw std::invalid_argument("quadrature box needs positive half-widths and step counts");
    }
  }
  double step(int axis) const { return 2.0 * half_width[axis] / static_cast<double>(steps[axis]); }
  double node(int axis, std::size_t j) const {
    return -half_width[axis] + (static_cast<double>(j) + 0.5) * step(axis);
  }
};

/// Function values on the midpoint nodes of a box, stored with the first axis fastest.
class QuadratureSamples {
 public:
  template <class Fn>
  QuadratureSamples(Fn&& f, QuadratureBox box) : box_(box) {
    box_.validate();
    values_.resize(box_.steps[0] * box_.steps[1] * box_.steps[2]);
    std::size_t i = 0;
    for (std::size_t n3 = 0; n3 < box_.steps[2]; ++n3)
      for (std::size_t n2 = 0; n2 < box_.steps[1]; ++n2)
        for (std::size_t n1 = 0; n1 < box_.steps[0]; ++n1)
          values_[i++] = Octonion(f(Vec3{box_.node(0, n1), box_.node(1, n2), box_.node(2, n3)}));
  }

  const QuadratureBox& box() const { return box_; }

  /// Midpoint-rule approximation of ∫ ((u(x)·e^{−e1 2πf1x1})·e^{−e2 2πf2x2})·e^{−e4 2πf3x3} dx.
  /// Right multiplication is ℝ-linear, so each kernel factor is applied once per partial sum
  /// while the left-to-right order is kept.
  Octonion transform(const Vec3& freq) const {
    const auto s = box_.steps;
    std::array<std::vector<double>, 3> cosines, sines;
    for (int a = 0; a < 3; ++a) {
      cosines[a].resize(s[a]);
      sines[a].resize(s[a]);
      for (std::size_t j = 0; j < s[a]; ++j) {
        const double angle = -2.0 * std::numbers::pi * freq[a] * box_.node(a, j);
        cosines[a][j] = std::cos(angle);
        sines[a][j] = std::sin(angle);
      }
    }
    // o·e^{unit·θ} = o cosθ + (o·unit) sinθ
    const auto rotate = [](const Octonion& o, std::size_t unit, double c, double sn) {
      return o * c + right_mul_unit(o, unit) * sn;
    };
    Octonion total;
    std::size_t i = 0;
    for (std::size_t n3 = 0; n3 < s[2]; ++n3) {
      Octonion plane;
      for (std::size_t n2 = 0; n2 < s[1]; ++n2) {
        Octonion line;
        for (std::size_t n1 = 0; n1 < s[0]; ++n1, ++i) line += rotate(values_[i], 1, cosines[0][n1], sines[0][n1]);
        plane += rotate(line, 2, cosines[1][n2], sines[1][n2]);
      }
      total += rotate(plane, 4, cosines[2][n3], sines[2][n3]);
    }
    return total * (box_.step(0) * box_.step(1) * box_.step(2));
  }

 private:
  QuadratureBox box_;
  std::vector<Octonion> values_;
};

/// Quadrature transform of f at one frequency.
template <class Fn>
Octonion quad_oft(Fn&& f, const Vec3& freq, const QuadratureBox& box = {}) {
  return QuadratureSamples(std::forward<Fn>(f), box).transform(freq);
}

}  // namespace oft
