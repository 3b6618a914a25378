#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "oft/octonion.hpp"

namespace oft {

using cplx = std::complex<double>;

class SingularElement : public std::domain_error {
 public:
  explicit SingularElement(cplx delta)
      : std::domain_error("quadruple-complex element has no inverse (delta ~ 0)"), delta_(delta) {}
  cplx delta() const noexcept { return delta_; }

 private:
  cplx delta_;
};

/// Element of the commutative algebra F written as
/// s0 + s1·e2 + s2·e4 + s3·(e2·e4) with complex s_i = c_{2i} + c_{2i+1} e1.
/// Holds the same eight reals as the matching Octonion.
class QuadComplex {
 public:
  constexpr QuadComplex() = default;
  constexpr QuadComplex(cplx s0, cplx s1, cplx s2, cplx s3) : s_{s0, s1, s2, s3} {}
  constexpr QuadComplex(double re) : s_{cplx(re), cplx{}, cplx{}, cplx{}} {}  // NOLINT

  constexpr const cplx& operator[](std::size_t i) const { return s_[i]; }
  constexpr cplx& operator[](std::size_t i) { return s_[i]; }

  QuadComplex& operator+=(const QuadComplex& o) {
    for (std::size_t i = 0; i < 4; ++i) s_[i] += o.s_[i];
    return *this;
  }
  QuadComplex& operator-=(const QuadComplex& o) {
    for (std::size_t i = 0; i < 4; ++i) s_[i] -= o.s_[i];
    return *this;
  }
  QuadComplex& operator*=(cplx a) {
    for (auto& v : s_) v *= a;
    return *this;
  }
  friend QuadComplex operator+(QuadComplex a, const QuadComplex& b) { return a += b; }
  friend QuadComplex operator-(QuadComplex a, const QuadComplex& b) { return a -= b; }
  friend QuadComplex operator-(QuadComplex a) { return a *= -1.0; }
  friend QuadComplex operator*(QuadComplex a, cplx s) { return a *= s; }
  friend QuadComplex operator*(cplx s, QuadComplex a) { return a *= s; }

  friend bool operator==(const QuadComplex&, const QuadComplex&) = default;

 private:
  std::array<cplx, 4> s_{};
};

/// The ⊙ product.
inline QuadComplex qmul(const QuadComplex& s, const QuadComplex& t) {
  return {s[0] * t[0] - s[1] * t[1] - s[2] * t[2] + s[3] * t[3],
          s[0] * t[1] + s[1] * t[0] - s[2] * t[3] - s[3] * t[2],
          s[0] * t[2] + s[2] * t[0] - s[1] * t[3] - s[3] * t[1],
          s[0] * t[3] + s[3] * t[0] + s[1] * t[2] + s[2] * t[1]};
}

inline QuadComplex from_octonion(const Octonion& o) {
  return {cplx(o[0], o[1]), cplx(o[2], o[3]), cplx(o[4], o[5]), cplx(o[6], o[7])};
}

inline Octonion to_octonion(const QuadComplex& q) {
  return {q[0].real(), q[0].imag(), q[1].real(), q[1].imag(),
          q[2].real(), q[2].imag(), q[3].real(), q[3].imag()};
}

/// δ = ((s0 - s3)^2 + (s1 + s2)^2)((s0 + s3)^2 + (s1 - s2)^2), which equals the
/// determinant of x -> s ⊙ x.
inline cplx delta(const QuadComplex& s) {
  const cplx a = s[0] - s[3], b = s[1] + s[2];
  const cplx c = s[0] + s[3], d = s[1] - s[2];
  return (a * a + b * b) * (c * c + d * d);
}

inline double max_abs(const QuadComplex& s) {
  double m = 0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(s[i]));
  return m;
}

/// Threshold below which |δ| counts as zero. δ is quartic in the coefficients, so
/// the threshold scales with max|s_i|^4.
inline double singular_threshold(const QuadComplex& s, double rel_epsilon = 1e-12) {
  const double scale = max_abs(s);
  return rel_epsilon * scale * scale * scale * scale;
}

inline bool is_invertible(const QuadComplex& s, double rel_epsilon = 1e-12) {
  const double m = std::abs(delta(s));
  return m > singular_threshold(s, rel_epsilon) && m > 0.0;
}

/// Closed-form ⊙-inverse. Throws SingularElement when |δ| is below threshold.
inline QuadComplex qinv(const QuadComplex& s, double rel_epsilon = 1e-12) {
  const cplx d = delta(s);
  if (!(std::abs(d) > singular_threshold(s, rel_epsilon)) || d == cplx{}) throw SingularElement(d);
  const cplx s0 = s[0], s1 = s[1], s2 = s[2], s3 = s[3];
  const cplx q0 = s0 * s0, q1 = s1 * s1, q2 = s2 * s2, q3 = s3 * s3;
  const QuadComplex num{s0 * (q0 + q1 + q2 - q3) + 2.0 * s1 * s2 * s3,
                        -s1 * (q0 + q1 - q2 + q3) - 2.0 * s0 * s2 * s3,
                        -s2 * (q0 - q1 + q2 + q3) - 2.0 * s0 * s1 * s3,
                        s3 * (-q0 + q1 + q2 + q3) + 2.0 * s0 * s1 * s2};
  return num * (1.0 / d);
}

inline MultiplicationTable quad_complex_table() {
  return tabulate_basis_products([](const Octonion& a, const Octonion& b) {
    return to_octonion(qmul(from_octonion(a), from_octonion(b)));
  });
}

}  // namespace oft
