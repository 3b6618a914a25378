#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "oft/oft.hpp"

namespace testing_support {

using oft::cplx;
using oft::Octonion;

/// Basis tables copied by hand; entry ±(k+1) means ±e_k (e_0 = 1).
using SignedTable = std::array<std::array<int, 8>, 8>;

inline constexpr SignedTable kOctonionTable{{
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, 4, -3, 6, -5, -8, 7},
    {3, -4, -1, 2, 7, 8, -5, -6},
    {4, 3, -2, -1, 8, -7, 6, -5},
    {5, -6, -7, -8, -1, 2, 3, 4},
    {6, 5, -8, 7, -2, -1, -4, 3},
    {7, 8, 5, -6, -3, 4, -1, -2},
    {8, -7, 6, 5, -4, -3, 2, -1},
}};

inline constexpr SignedTable kQuadComplexTable{{
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, 4, -3, 6, -5, 8, -7},
    {3, 4, -1, -2, 7, 8, -5, -6},
    {4, -3, -2, 1, 8, -7, -6, 5},
    {5, 6, 7, 8, -1, -2, -3, -4},
    {6, -5, 8, -7, -2, 1, -4, 3},
    {7, 8, -5, -6, -3, -4, 1, 2},
    {8, -7, -6, 5, -4, 3, 2, -1},
}};

inline Octonion from_signed(int v) {
  Octonion o = Octonion::unit(static_cast<std::size_t>(std::abs(v) - 1));
  return v < 0 ? -o : o;
}

using Matrix4 = std::array<std::array<cplx, 4>, 4>;
using Vector4 = std::array<cplx, 4>;

/// Matrix of x -> a ⊙ x, column j = a ⊙ (unit j).
inline Matrix4 multiplication_matrix(const oft::QuadComplex& a) {
  Matrix4 m{};
  for (std::size_t j = 0; j < 4; ++j) {
    oft::QuadComplex unit;
    unit[j] = 1.0;
    const oft::QuadComplex col = oft::qmul(a, unit);
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col[i];
  }
  return m;
}

/// Gaussian elimination with partial pivoting; returns the determinant and solves m x = b in place.
inline cplx eliminate(Matrix4 m, Vector4* b) {
  cplx det = 1.0;
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (m[pivot][c] == cplx{}) return 0.0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      if (b) std::swap((*b)[pivot], (*b)[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < 4; ++r) {
      const cplx f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
      if (b) (*b)[r] -= f * (*b)[c];
    }
  }
  if (b) {
    for (std::size_t r = 4; r-- > 0;) {
      cplx s = (*b)[r];
      for (std::size_t k = r + 1; k < 4; ++k) s -= m[r][k] * (*b)[k];
      (*b)[r] = s / m[r][r];
    }
  }
  return det;
}

inline cplx determinant(const oft::QuadComplex& a) { return eliminate(multiplication_matrix(a), nullptr); }

/// Solves a ⊙ x = 1.
inline oft::QuadComplex solve_inverse(const oft::QuadComplex& a) {
  Vector4 rhs{1.0, 0.0, 0.0, 0.0};
  eliminate(multiplication_matrix(a), &rhs);
  return {rhs[0], rhs[1], rhs[2], rhs[3]};
}

inline double max_abs_diff(const oft::QuadComplex& a, const oft::QuadComplex& b) {
  return oft::max_abs(a - b);
}

/// Direct 1-D DFT, sign −1 forward.
inline std::vector<cplx> naive_dft(const std::vector<cplx>& x, double sign = -1.0) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      out[k] += x[j] * std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(n));
  return out;
}

/// Truncated power series Σ_{k<terms} o^k / k!.
inline Octonion exp_series(const Octonion& o, int terms = 30) {
  Octonion sum, term(1.0);
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term = (term * o) / static_cast<double>(k + 1);
  }
  return sum;
}

/// On a 2×2×2 grid every kernel factor is ±1, so U[k] = Σ_n (−1)^{k·n} u[n].
inline oft::OctField3 expand_2x2x2(const oft::OctField3& u) {
  oft::OctField3 out(u.grid(), oft::Domain::frequency);
  out.for_each_index([&](std::size_t k1, std::size_t k2, std::size_t k3, Octonion& acc) {
    u.for_each_index([&](std::size_t n1, std::size_t n2, std::size_t n3, const Octonion& v) {
      acc += ((k1 * n1 + k2 * n2 + k3 * n3) % 2 == 0) ? v : -v;
    });
  });
  return out;
}

/// u_t − Δu per coefficient through the complex FFT (axis 0 = t), without any octonion algebra.
inline oft::OctField3 spectral_heat_operator(const oft::OctField3& u) {
  const auto& g = u.grid();
  oft::OctField3 out(g, oft::Domain::space);
  for (std::size_t slot = 0; slot < 8; ++slot) {
    oft::ComplexGrid z(u.shape());
    for (std::size_t i = 0; i < u.size(); ++i) z.data[i] = u[i][slot];
    z = oft::cft3(z, oft::Direction::forward);
    std::size_t i = 0;
    for (std::size_t a = 0; a < g.shape[0]; ++a)
      for (std::size_t b = 0; b < g.shape[1]; ++b)
        for (std::size_t c = 0; c < g.shape[2]; ++c, ++i) {
          const double wt = 2 * std::numbers::pi * g.frequency(0, a);
          const double w1 = 2 * std::numbers::pi * g.frequency(1, b);
          const double w2 = 2 * std::numbers::pi * g.frequency(2, c);
          z.data[i] *= cplx(w1 * w1 + w2 * w2, wt);
        }
    z = oft::cft3(z, oft::Direction::inverse);
    for (std::size_t j = 0; j < u.size(); ++j) out[j][slot] = z.data[j].real();
  }
  return out;
}

/// Path to the oftool binary, provided by the build.
inline std::string tool_path() {
#ifdef OFTOOL_PATH
  return OFTOOL_PATH;
#else
  return "oftool";
#endif
}

/// Scratch directory unique to the calling test binary.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("oft_test_" + name);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace testing_support
