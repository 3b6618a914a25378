#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "oft/field.hpp"
#include "oft/partial.hpp"
#include "oft/quad_complex.hpp"
#include "oft/transform.hpp"

namespace oft {

enum class Provenance { FromImpulse, Composed, Symbol };

/// Frequency response of a 3-D LTI system, held in the quadruple-complex view.
struct LtiSystem {
  SamplingGrid grid;
  std::vector<QuadComplex> response;
  Provenance provenance = Provenance::Composed;
  std::vector<Index3> singular_set;

  const Shape& shape() const { return grid.shape; }
};

/// Pointwise symbol of a differential operator.
struct PdeSymbol {
  SamplingGrid grid;
  std::vector<QuadComplex> values;
  std::vector<Index3> singular_set;
};

namespace detail {

inline void require_same_shape(const Shape& a, const Shape& b) {
  if (a != b) throw ShapeMismatch(a, b);
}

inline Index3 unravel(std::size_t i, const Shape& s) {
  return {i / (s[1] * s[2]), (i / s[2]) % s[1], i % s[2]};
}

/// 2π times the signed grid frequency of every index on one axis.
inline std::vector<double> angular_frequencies(const SamplingGrid& g, int axis) {
  std::vector<double> w(g.shape[axis]);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = 2.0 * std::numbers::pi * g.frequency(axis, k);
  return w;
}

template <class Fn>
std::vector<QuadComplex> pointwise(const std::vector<QuadComplex>& a, const std::vector<QuadComplex>& b, Fn&& fn) {
  std::vector<QuadComplex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fn(a[i], b[i]);
  return out;
}

inline std::vector<Index3> singular_indices(const std::vector<QuadComplex>& values, const Shape& s) {
  std::vector<Index3> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!is_invertible(values[i])) out.push_back(unravel(i, s));
  return out;
}

}  // namespace detail

/// System whose response is the transform of a real impulse response h.
inline LtiSystem from_impulse(const OctField3& h) {
  if (!h.is_real()) throw std::invalid_argument("impulse response must be real-valued");
  OctField3 spectrum = dsoft(h);
  LtiSystem sys{h.grid(), std::vector<QuadComplex>(h.size()), Provenance::FromImpulse, {}};
  for (std::size_t i = 0; i < h.size(); ++i) sys.response[i] = from_octonion(spectrum[i]);
  return sys;
}

inline LtiSystem from_symbol(const PdeSymbol& symbol) {
  return {symbol.grid, symbol.values, Provenance::Symbol, symbol.singular_set};
}

inline LtiSystem constant_system(const SamplingGrid& grid, const QuadComplex& value) {
  return {grid, std::vector<QuadComplex>(grid.size(), value), Provenance::Composed, {}};
}

inline LtiSystem identity_system(const SamplingGrid& grid) { return constant_system(grid, QuadComplex(1.0)); }

/// idsoft(H ⊙ dsoft(u)).
inline OctField3 apply(const LtiSystem& sys, const OctField3& u) {
  detail::require_same_shape(sys.shape(), u.shape());
  OctField3 spectrum = dsoft(u);
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    spectrum[i] = to_octonion(qmul(sys.response[i], from_octonion(spectrum[i])));
  return idsoft(spectrum);
}

inline LtiSystem cascade(const LtiSystem& s1, const LtiSystem& s2) {
  detail::require_same_shape(s1.shape(), s2.shape());
  return {s1.grid, detail::pointwise(s1.response, s2.response, qmul), Provenance::Composed, {}};
}

inline LtiSystem parallel(const LtiSystem& s1, const LtiSystem& s2) {
  detail::require_same_shape(s1.shape(), s2.shape());
  return {s1.grid,
          detail::pointwise(s1.response, s2.response, [](const QuadComplex& a, const QuadComplex& b) { return a + b; }),
          Provenance::Composed,
          {}};
}

/// Closed loop (1 + H1⊙H2)^{-1} ⊙ H1. Where the bracket is not invertible the response
/// is set to 0 and the index is listed in singular_set.
inline LtiSystem feedback(const LtiSystem& s1, const LtiSystem& s2) {
  detail::require_same_shape(s1.shape(), s2.shape());
  LtiSystem out{s1.grid, std::vector<QuadComplex>(s1.response.size()), Provenance::Composed, {}};
  for (std::size_t i = 0; i < out.response.size(); ++i) {
    const QuadComplex loop = QuadComplex(1.0) + qmul(s1.response[i], s2.response[i]);
    if (is_invertible(loop))
      out.response[i] = qmul(qinv(loop), s1.response[i]);
    else
      out.singular_set.push_back(detail::unravel(i, out.shape()));
  }
  return out;
}

/// Symbol of a partial derivative for real fields: sign · Π(2πf_a)^{order_a} · e_unit.
inline PdeSymbol derivative_symbol(const SamplingGrid& grid, Partial p) {
  const auto r = rule(p);
  const std::array<std::vector<double>, 3> w{detail::angular_frequencies(grid, 0), detail::angular_frequencies(grid, 1),
                                             detail::angular_frequencies(grid, 2)};
  PdeSymbol sym{grid, std::vector<QuadComplex>(grid.size()), {}};
  std::size_t i = 0;
  for (std::size_t a = 0; a < grid.shape[0]; ++a)
    for (std::size_t b = 0; b < grid.shape[1]; ++b)
      for (std::size_t c = 0; c < grid.shape[2]; ++c, ++i) {
        const Index3 k{a, b, c};
        double weight = r.sign;
        for (int ax = 0; ax < 3; ++ax)
          for (int j = 0; j < r.order[ax]; ++j) weight *= w[ax][k[ax]];
        sym.values[i] = from_octonion(Octonion::unit(r.unit) * weight);
      }
  sym.singular_set = detail::singular_indices(sym.values, grid.shape);
  return sym;
}

enum class PdeKind { heat, wave };

inline std::string to_string(PdeKind k) { return k == PdeKind::heat ? "heat" : "wave"; }

/// Axis 0 is time (frequency τ), axes 1 and 2 are space.
/// heat: u_t − Δu = f has symbol (2πf1)² + (2πf2)² + (2πτ)e1.
/// wave: u_tt − Δu = f has symbol (2πf1)² + (2πf2)² − (2πτ)².
inline PdeSymbol pde_symbol(const SamplingGrid& grid, PdeKind kind) {
  const auto wt = detail::angular_frequencies(grid, 0);
  const auto w1 = detail::angular_frequencies(grid, 1);
  const auto w2 = detail::angular_frequencies(grid, 2);
  PdeSymbol sym{grid, std::vector<QuadComplex>(grid.size()), {}};
  std::size_t i = 0;
  for (std::size_t a = 0; a < grid.shape[0]; ++a)
    for (std::size_t b = 0; b < grid.shape[1]; ++b)
      for (std::size_t c = 0; c < grid.shape[2]; ++c, ++i) {
        const double spatial = w1[b] * w1[b] + w2[c] * w2[c];
        sym.values[i] = kind == PdeKind::heat ? QuadComplex(cplx(spatial, wt[a]), {}, {}, {})
                                              : QuadComplex(spatial - wt[a] * wt[a]);
      }
  if (kind == PdeKind::heat) {
    sym.singular_set = detail::singular_indices(sym.values, grid.shape);
  } else {
    // The cone a = (2πτ)² is exact only in real arithmetic; detect it relative to the largest value.
    double largest = 0;
    for (const auto& v : sym.values) largest = std::max(largest, max_abs(v));
    for (std::size_t j = 0; j < sym.values.size(); ++j)
      if (max_abs(sym.values[j]) <= 1e-9 * largest) sym.singular_set.push_back(detail::unravel(j, grid.shape));
  }
  return sym;
}

/// Explicit heat-symbol inverse (a − b e1)/(a² + b²) with a = (2πf1)² + (2πf2)², b = 2πτ.
inline QuadComplex heat_symbol_inverse(double a, double b) {
  const double d = a * a + b * b;
  if (d == 0.0) throw SingularElement(cplx{});
  return QuadComplex(cplx(a / d, -b / d), {}, {}, {});
}

class NonSolvable : public std::runtime_error {
 public:
  explicit NonSolvable(std::vector<Index3> indices)
      : std::runtime_error("forcing has nonzero content at " + std::to_string(indices.size()) +
                           " singular frequencies"),
        indices_(std::move(indices)) {}
  const std::vector<Index3>& indices() const noexcept { return indices_; }

 private:
  std::vector<Index3> indices_;
};

struct PdeSolution {
  OctField3 field;
  std::vector<Index3> singular_set;
  std::vector<Index3> obstructions;  // singular indices where the forcing spectrum is nonzero

  bool solvable() const { return obstructions.empty(); }
};

inline void require_solvable(const PdeSolution& s) {
  if (!s.solvable()) throw NonSolvable(s.obstructions);
}

/// U = symbol^{-1} ⊙ F off the singular set and 0 on it. Forcing content on the singular
/// set above 1e-10·max|F| is reported as an obstruction.
inline PdeSolution solve_pde(const OctField3& f, PdeKind kind) {
  if (f.domain() != Domain::space) throw DomainMismatch("solve_pde: forcing must be a space-domain field");
  const PdeSymbol sym = pde_symbol(f.grid(), kind);
  OctField3 spectrum = dsoft(f);
  const double scale = max_abs(spectrum);
  PdeSolution out{OctField3(f.grid()), sym.singular_set, {}};
  std::vector<bool> singular(f.size(), false);
  for (const Index3& k : sym.singular_set) {
    const std::size_t i = spectrum.linear(k);
    singular[i] = true;
    if (max_abs(spectrum[i]) > 1e-10 * scale) out.obstructions.push_back(k);
  }
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    spectrum[i] = singular[i] ? Octonion() : to_octonion(qmul(qinv(sym.values[i], 0.0), from_octonion(spectrum[i])));
  }
  out.field = idsoft(spectrum);
  out.field.set_domain(Domain::space);
  return out;
}

inline PdeSolution solve_heat(const OctField3& f) { return solve_pde(f, PdeKind::heat); }
inline PdeSolution solve_wave(const OctField3& f) { return solve_pde(f, PdeKind::wave); }

/// max-norm of the spectral residual symbol ⊙ U − F, with singular frequencies excluded.
inline double pde_residual(const OctField3& u, const OctField3& f, PdeKind kind) {
  u.require_same_shape(f);
  const PdeSymbol sym = pde_symbol(u.grid(), kind);
  OctField3 lhs = dsoft(u), rhs = dsoft(f);
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = to_octonion(qmul(sym.values[i], from_octonion(lhs[i])));
  for (const Index3& k : sym.singular_set) {
    lhs[lhs.linear(k)] = Octonion();
    rhs[rhs.linear(k)] = Octonion();
  }
  return max_abs_diff(idsoft(lhs), idsoft(rhs));
}

}  // namespace oft
