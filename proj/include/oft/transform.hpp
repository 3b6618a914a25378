#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "oft/cft.hpp"
#include "oft/field.hpp"
#include "oft/octonion.hpp"

namespace oft {

namespace detail {

inline void require_domain(const OctField3& u, Domain expected, const char* op) {
  if (u.domain() != expected) {
    throw DomainMismatch(std::string(op) + ": expected a " +
                         (expected == Domain::space ? "space" : "frequency") + "-domain field");
  }
}

/// Complex grid re(n) + i·im(n) taken from two coefficient slots of u.
inline ComplexGrid complex_slots(const OctField3& u, std::size_t re, std::size_t im, double im_sign = 1.0) {
  ComplexGrid z(u.shape());
  for (std::size_t i = 0; i < u.size(); ++i) z.data[i] = cplx(u[i][re], im_sign * u[i][im]);
  return z;
}

inline Octonion embed(cplx z, std::size_t re_slot, std::size_t im_slot) {
  Octonion o;
  o[re_slot] = z.real();
  o[im_slot] = z.imag();
  return o;
}

/// cos/sin of 2π·(k·n mod N)/N for all k, n of one axis.
struct KernelTable {
  std::size_t n;
  std::vector<double> c, s;
  explicit KernelTable(std::size_t extent) : n(extent), c(extent * extent), s(extent * extent) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
        c[k * n + j] = std::cos(a);
        s[k * n + j] = std::sin(a);
      }
    }
  }
  /// e^{unit · sign · 2π k j / N}
  Octonion kernel(std::size_t unit, double sign, std::size_t k, std::size_t j) const {
    Octonion o(c[k * n + j]);
    o[unit] = sign * s[k * n + j];
    return o;
  }
};

/// Octonion spectrum of a complex-valued field from its complex DFT Z:
/// ¼(Z(1−e3) + Z(k1,−k2,k3)(1+e3))(1−e5) + ¼(Z(k1,k2,−k3)(1−e3) + Z(k1,−k2,−k3)(1+e3))(1+e5).
inline OctField3 spectrum_of_complex(const ComplexGrid& z, const SamplingGrid& grid) {
  const Octonion m3 = Octonion(1.0) - Octonion::unit(3), p3 = Octonion(1.0) + Octonion::unit(3);
  const Octonion m5 = Octonion(1.0) - Octonion::unit(5), p5 = Octonion(1.0) + Octonion::unit(5);
  OctField3 out(grid, Domain::frequency);
  out.for_each_index([&](std::size_t a, std::size_t b, std::size_t c, Octonion& v) {
    const Octonion z0 = embed(z(a, b, c), 0, 1);
    const Octonion z2 = embed(z.reflected(a, b, c, 2u), 0, 1);
    const Octonion z3 = embed(z.reflected(a, b, c, 4u), 0, 1);
    const Octonion z23 = embed(z.reflected(a, b, c, 6u), 0, 1);
    v = ((z0 * m3 + z2 * p3) * m5 + (z3 * m3 + z23 * p3) * p5) * 0.25;
  });
  return out;
}

/// Inverse transform of a spectrum whose values lie in span{1, e4}, given the
/// inverse complex DFT ẑ of that spectrum read as x0 + i·x4:
/// ¼(ẑ(1+e6) + ẑ(n1,−n2,n3)(1−e6))(1+e5) + ¼(ẑ(−n1,n2,n3)(1+e6) + ẑ(−n1,−n2,n3)(1−e6))(1−e5).
inline OctField3 signal_of_e4_spectrum(const ComplexGrid& zhat, const SamplingGrid& grid) {
  const Octonion p6 = Octonion(1.0) + Octonion::unit(6), m6 = Octonion(1.0) - Octonion::unit(6);
  const Octonion p5 = Octonion(1.0) + Octonion::unit(5), m5 = Octonion(1.0) - Octonion::unit(5);
  OctField3 out(grid, Domain::space);
  out.for_each_index([&](std::size_t a, std::size_t b, std::size_t c, Octonion& v) {
    const Octonion z0 = embed(zhat(a, b, c), 0, 4);
    const Octonion z2 = embed(zhat.reflected(a, b, c, 2u), 0, 4);
    const Octonion z1 = embed(zhat.reflected(a, b, c, 1u), 0, 4);
    const Octonion z12 = embed(zhat.reflected(a, b, c, 3u), 0, 4);
    v = ((z0 * p6 + z2 * m6) * p5 + (z1 * p6 + z12 * m6) * m5) * 0.25;
  });
  return out;
}

}  // namespace detail

/// Reference transform, literal sum with left-to-right kernel products:
/// U[k] = Σ_n ((u[n]·e^{−e1 2πk1n1/N1})·e^{−e2 2πk2n2/N2})·e^{−e4 2πk3n3/N3}.
inline OctField3 dsoft_naive(const OctField3& u) {
  detail::require_domain(u, Domain::space, "dsoft_naive");
  const detail::KernelTable t1(u.extent(0)), t2(u.extent(1)), t3(u.extent(2));
  OctField3 out(u.grid(), Domain::frequency);
  out.for_each_index([&](std::size_t k1, std::size_t k2, std::size_t k3, Octonion& acc) {
    u.for_each_index([&](std::size_t n1, std::size_t n2, std::size_t n3, const Octonion& v) {
      acc += ((v * t1.kernel(1, -1.0, k1, n1)) * t2.kernel(2, -1.0, k2, n2)) * t3.kernel(4, -1.0, k3, n3);
    });
  });
  return out;
}

/// Reference inverse: u[n] = (1/N) Σ_k ((U[k]·e^{+e4 ·})·e^{+e2 ·})·e^{+e1 ·}.
inline OctField3 idsoft_naive(const OctField3& spectrum) {
  detail::require_domain(spectrum, Domain::frequency, "idsoft_naive");
  const detail::KernelTable t1(spectrum.extent(0)), t2(spectrum.extent(1)), t3(spectrum.extent(2));
  const double scale = 1.0 / static_cast<double>(spectrum.size());
  OctField3 out(spectrum.grid(), Domain::space);
  out.for_each_index([&](std::size_t n1, std::size_t n2, std::size_t n3, Octonion& acc) {
    spectrum.for_each_index([&](std::size_t k1, std::size_t k2, std::size_t k3, const Octonion& v) {
      acc += ((v * t3.kernel(4, 1.0, k3, n3)) * t2.kernel(2, 1.0, k2, n2)) * t1.kernel(1, 1.0, k1, n1);
    });
    acc *= scale;
  });
  return out;
}

/// Forward transform through four complex 3-D DFTs. u is split as
/// v0 + v1·e2 + v2·e4 + (v3·e2)·e4 with e1-complex v_i, and the pieces recombine as
/// V0 + V1(−k1,k2,−k3)·e2 + V2(−k1,−k2,k3)·e4 + (V3(k1,−k2,−k3)·e2)·e4.
inline OctField3 dsoft_fast(const OctField3& u) {
  detail::require_domain(u, Domain::space, "dsoft_fast");
  std::array<OctField3, 4> parts;
  for (std::size_t j = 0; j < 4; ++j) {
    parts[j] = detail::spectrum_of_complex(
        cft3(detail::complex_slots(u, 2 * j, 2 * j + 1), Direction::forward), u.grid());
  }
  const Octonion e2 = Octonion::unit(2), e4 = Octonion::unit(4);
  OctField3 out(u.grid(), Domain::frequency);
  out.for_each_index([&](std::size_t a, std::size_t b, std::size_t c, Octonion& v) {
    v = parts[0](a, b, c) + parts[1].reflected(a, b, c, 5u) * e2 + parts[2].reflected(a, b, c, 3u) * e4 +
        (parts[3].reflected(a, b, c, 6u) * e2) * e4;
  });
  return out;
}

/// Inverse transform through four complex inverse DFTs in the (1, e4) subfield.
/// U is grouped as W0 + W1·e1 + W2·e2 + (W3·e1)·e2 with W_j ∈ span{1, e4}.
inline OctField3 idsoft(const OctField3& spectrum) {
  detail::require_domain(spectrum, Domain::frequency, "idsoft");
  // (slot of the 1 part, slot of the e4 part, sign of the e4 part)
  constexpr std::array<std::array<int, 3>, 4> groups{{{0, 4, 1}, {1, 5, -1}, {2, 6, -1}, {3, 7, 1}}};
  std::array<OctField3, 4> parts;
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& g = groups[j];
    const ComplexGrid w = detail::complex_slots(spectrum, static_cast<std::size_t>(g[0]),
                                                static_cast<std::size_t>(g[1]), g[2]);
    parts[j] = detail::signal_of_e4_spectrum(cft3(w, Direction::inverse), spectrum.grid());
  }
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2);
  OctField3 out(spectrum.grid(), Domain::space);
  out.for_each_index([&](std::size_t a, std::size_t b, std::size_t c, Octonion& v) {
    v = parts[0](a, b, c) + parts[1].reflected(a, b, c, 6u) * e1 + parts[2].reflected(a, b, c, 5u) * e2 +
        (parts[3].reflected(a, b, c, 3u) * e1) * e2;
  });
  return out;
}

inline OctField3 dsoft(const OctField3& u) { return dsoft_fast(u); }

/// Parity label for component p: bit a of p set means odd along axis a.
/// Names follow u_xyz with x for the first axis, e.g. 1 -> "oee".
inline std::string parity_name(unsigned p) {
  std::string s(3, 'e');
  for (unsigned a = 0; a < 3; ++a)
    if (p & (1u << a)) s[a] = 'o';
  return s;
}

/// Eight components u_p(n) = (1/8) Σ_mask σ_p(mask) u(reflect_mask(n)), where σ flips sign
/// once per reflected axis that p marks as odd. Component index p as in parity_name.
inline std::array<OctField3, 8> parity_components(const OctField3& u) {
  std::array<OctField3, 8> out;
  for (unsigned p = 0; p < 8; ++p) {
    out[p] = map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion&) {
      Octonion acc;
      for (unsigned mask = 0; mask < 8; ++mask) {
        const bool negative = std::popcount(mask & p) % 2 == 1;
        const Octonion& v = u.reflected(a, b, c, mask);
        if (negative)
          acc -= v;
        else
          acc += v;
      }
      return acc * 0.125;
    });
  }
  return out;
}

/// Transform applied twice, scaled once by 1/(N1N2N3) and labelled as space domain.
inline OctField3 double_oft(const OctField3& u) {
  OctField3 once = dsoft_fast(u);
  once.set_domain(Domain::space);
  OctField3 twice = dsoft_fast(once) * (1.0 / static_cast<double>(u.size()));
  twice.set_domain(Domain::space);
  return twice;
}

/// For complex-valued u, the double transform on the grid equals
/// ½(−u + u(−n1,−n2,n3) + u(−n1,n2,−n3) + u(n1,−n2,−n3)).
inline OctField3 double_oft_expected(const OctField3& u) {
  return map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion& v) {
    return (-v + u.reflected(a, b, c, 3u) + u.reflected(a, b, c, 5u) + u.reflected(a, b, c, 6u)) * 0.5;
  });
}

/// Max-norm residual between the double transform and its reflection formula.
inline double double_oft_check(const OctField3& u) {
  detail::require_domain(u, Domain::space, "double_oft_check");
  if (!u.is_complex()) throw std::invalid_argument("double_oft_check: field must be complex-valued (c2..c7 = 0)");
  return max_abs_diff(double_oft(u), double_oft_expected(u));
}

/// Σ_n u(n)·conj(v(n)).
inline Octonion inner_product(const OctField3& u, const OctField3& v) {
  u.require_same_shape(v);
  Octonion acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * conj(v[i]);
  return acc;
}

/// Σ_n |u(n)|².
inline double energy(const OctField3& u) {
  double acc = 0;
  for (const auto& v : u.data()) acc += norm2(v);
  return acc;
}

}  // namespace oft
