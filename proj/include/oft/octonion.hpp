#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace oft {

class ZeroOctonion : public std::domain_error {
 public:
  explicit ZeroOctonion(double norm)
      : std::domain_error("octonion is not invertible (norm below epsilon)"), norm_(norm) {}
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

/// Quaternion over basis {1, e1, e2, e3} with e1*e2 = e3. Only used as the
/// building block of the Cayley-Dickson doubling below.
struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
};

/// Octonion r0 + r1 e1 + ... + r7 e7, stored as the pair of quaternions
/// (r0..r3) + (r4..r7)·e4.
class Octonion {
 public:
  static constexpr std::size_t kDim = 8;

  constexpr Octonion() = default;
  constexpr Octonion(double re) : c_{re, 0, 0, 0, 0, 0, 0, 0} {}  // NOLINT: real embedding
  constexpr explicit Octonion(const std::array<double, kDim>& c) : c_(c) {}
  constexpr Octonion(double c0, double c1, double c2, double c3, double c4, double c5,
                     double c6, double c7)
      : c_{c0, c1, c2, c3, c4, c5, c6, c7} {}

  /// Basis element e_i (e_0 = 1).
  static constexpr Octonion unit(std::size_t i) {
    Octonion o;
    o.c_[i] = 1.0;
    return o;
  }

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }
  constexpr const std::array<double, kDim>& coeffs() const { return c_; }

  constexpr double real() const { return c_[0]; }
  constexpr Octonion imag() const {
    Octonion o = *this;
    o.c_[0] = 0.0;
    return o;
  }

  constexpr Quaternion low() const { return {c_[0], c_[1], c_[2], c_[3]}; }
  constexpr Quaternion high() const { return {c_[4], c_[5], c_[6], c_[7]}; }
  static constexpr Octonion from_pair(const Quaternion& q0, const Quaternion& q1) {
    return {q0.w, q0.x, q0.y, q0.z, q1.w, q1.x, q1.y, q1.z};
  }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  constexpr Octonion& operator/=(double s) {
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
  friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
  friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
  friend constexpr Octonion operator/(Octonion a, double s) { return a /= s; }

  /// Cayley-Dickson product (q0,q1)(p0,p1) = (q0 p0 - p1* q1, p1 q0 + q1 p0*).
  friend constexpr Octonion operator*(const Octonion& a, const Octonion& b) {
    const Quaternion q0 = a.low(), q1 = a.high();
    const Quaternion p0 = b.low(), p1 = b.high();
    return from_pair(q0 * p0 - p1.conj() * q1, p1 * q0 + q1 * p0.conj());
  }

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<double, kDim> c_{};
};

inline constexpr Octonion mul(const Octonion& a, const Octonion& b) { return a * b; }

inline constexpr Octonion conj(const Octonion& o) {
  Octonion r = -o;
  r[0] = o[0];
  return r;
}

inline constexpr double norm2(const Octonion& o) {
  double s = 0;
  for (std::size_t i = 0; i < Octonion::kDim; ++i) s += o[i] * o[i];
  return s;
}

inline double norm(const Octonion& o) { return std::sqrt(norm2(o)); }

/// Largest absolute coefficient; the max-norm used for residuals.
inline double max_abs(const Octonion& o) {
  double m = 0;
  for (std::size_t i = 0; i < Octonion::kDim; ++i) m = std::max(m, std::abs(o[i]));
  return m;
}

inline Octonion inverse(const Octonion& o, double epsilon = 1e-300) {
  const double n = norm(o);
  if (!(n > epsilon)) throw ZeroOctonion(n);
  return conj(o) / (n * n);
}

/// exp(o) = e^{Re o} (cos|v| + v/|v| sin|v|) with v = Im o.
inline Octonion exp(const Octonion& o) {
  const Octonion v = o.imag();
  const double a = norm(v);
  const double scale = std::exp(o.real());
  // sin(a)/a -> 1 below the threshold; the next Taylor term is a^2/6 < 2e-17.
  const double sinc = a < 1e-8 ? 1.0 : std::sin(a) / a;
  Octonion r = v * (scale * sinc);
  r[0] = scale * std::cos(a);
  return r;
}

/// exp(unit_i * angle) = cos(angle) + e_i sin(angle) for a basis unit e_i, i in 1..7.
inline Octonion exp_unit(std::size_t i, double angle) {
  Octonion r(std::cos(angle));
  r[i] = std::sin(angle);
  return r;
}

struct Polar {
  double magnitude;
  Octonion axis;  // pure unit octonion
  double angle;   // in [0, pi]
};

/// o = |o| (cos θ + μ sin θ). A real o gets axis e1 and θ ∈ {0, π}.
inline Polar polar(const Octonion& o, double epsilon = 1e-300) {
  const double mag = norm(o);
  if (!(mag > epsilon)) throw ZeroOctonion(mag);
  const Octonion v = o.imag();
  const double vn = norm(v);
  if (vn == 0.0) return {mag, Octonion::unit(1), o.real() > 0 ? 0.0 : std::numbers::pi};
  return {mag, v / vn, std::atan2(vn, o.real())};
}

/// 8x8 table of basis products: e_i * e_j = sign * e_index.
struct BasisProduct {
  int sign;
  std::size_t index;
  friend constexpr bool operator==(const BasisProduct&, const BasisProduct&) = default;
};
using MultiplicationTable = std::array<std::array<BasisProduct, 8>, 8>;

/// Tabulates any bilinear product over the 8 basis elements.
template <class Mul>
constexpr MultiplicationTable tabulate_basis_products(Mul&& mul_fn) {
  MultiplicationTable t{};
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Octonion p = mul_fn(Octonion::unit(i), Octonion::unit(j));
      for (std::size_t k = 0; k < 8; ++k) {
        if (p[k] != 0.0) t[i][j] = {p[k] > 0 ? 1 : -1, k};
      }
    }
  }
  return t;
}

inline constexpr MultiplicationTable octonion_table() {
  return tabulate_basis_products([](const Octonion& a, const Octonion& b) { return a * b; });
}

/// o·e_i through the basis table; a signed permutation of the coefficients.
inline constexpr Octonion right_mul_unit(const Octonion& o, std::size_t i) {
  constexpr MultiplicationTable table = octonion_table();
  Octonion r;
  for (std::size_t k = 0; k < Octonion::kDim; ++k) r[table[k][i].index] += table[k][i].sign * o[k];
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const Octonion& o) {
  os << '(';
  for (std::size_t i = 0; i < Octonion::kDim; ++i) os << (i ? ", " : "") << o[i];
  return os << ')';
}

}  // namespace oft
