#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "oft/field.hpp"
#include "oft/octonion.hpp"
#include "oft/partial.hpp"
#include "oft/quad_complex.hpp"
#include "oft/quadrature.hpp"
#include "oft/random.hpp"
#include "oft/transform.hpp"

namespace oft {

struct TheoremReport {
  std::string name;
  std::string family;
  double residual = 0;
  double tolerance = 0;
  bool passed = false;
  std::string config;
};

inline TheoremReport make_report(std::string name, std::string family, double residual, double tolerance,
                                 std::string config) {
  // NaN residuals fail.
  const bool ok = residual <= tolerance;
  return {std::move(name), std::move(family), residual, tolerance, ok, std::move(config)};
}

/// `name residual tolerance PASS|FAIL`
inline std::string format_report(const TheoremReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.6e %.1e ", r.residual, r.tolerance);
  return r.name + buf + (r.passed ? "PASS" : "FAIL");
}

inline constexpr double kGridTolerance = 1e-10;
inline constexpr double kQuadratureTolerance = 1e-4;
inline constexpr double kScalingTolerance = 1e-5;

/// Separable Gaussian Π exp(−π ((x_a − c_a)/w_a)²).
struct Gaussian {
  Vec3 center{0.0, 0.0, 0.0};
  Vec3 width{1.0, 1.0, 1.0};

  double factor(int a, double x) const {
    const double d = (x - center[a]) / width[a];
    return std::exp(-std::numbers::pi * d * d);
  }
  double operator()(const Vec3& x) const { return factor(0, x[0]) * factor(1, x[1]) * factor(2, x[2]); }

  /// Closed-form partial derivative.
  double derivative(Partial p, const Vec3& x) const {
    const auto r = rule(p);
    double v = 1.0;
    for (int a = 0; a < 3; ++a) {
      const double w2 = width[a] * width[a];
      const double slope = -2.0 * std::numbers::pi * (x[a] - center[a]) / w2;
      const double g = factor(a, x[a]);
      if (r.order[a] == 0)
        v *= g;
      else if (r.order[a] == 1)
        v *= slope * g;
      else
        v *= (slope * slope - 2.0 * std::numbers::pi / w2) * g;
    }
    return v;
  }

  std::string describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "gaussian center=(%g,%g,%g) width=(%g,%g,%g)", center[0], center[1],
                  center[2], width[0], width[1], width[2]);
    return buf;
  }
};

/// Off-centre Gaussian, so that every parity component of its spectrum is populated.
inline Gaussian standard_gaussian() { return {{0.15, -0.1, 0.05}, {1.0, 1.0, 1.0}}; }

inline constexpr std::array<Vec3, 6> kProbeFrequencies{
    {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.5, -0.5, 0.25}, {-1.0, 0.75, -0.5}, {2.0, -1.0, 1.0}, {0.25, 1.5, -2.0}}};

namespace detail {

inline Vec3 reflect_frequency(Vec3 f, unsigned mask) {
  for (int a = 0; a < 3; ++a)
    if (mask & (1u << a)) f[a] = -f[a];
  return f;
}

inline std::string box_description(const QuadratureBox& box) {
  char buf[96];
  std::snprintf(buf, sizeof buf, " box=%g step=%g", box.half_width[0], box.step(0));
  return buf;
}

inline std::string shape_description(const OctField3& u) { return ShapeMismatch::to_string(u.shape()); }

inline const char* axis_name(int axis) {
  static constexpr const char* names[] = {"x1", "x2", "x3"};
  return names[axis];
}

inline constexpr std::array<std::size_t, 3> kAxisUnit{1, 2, 4};
/// Frequency axes negated by the sine-modulation and shift rows.
inline constexpr std::array<unsigned, 3> kOddReflection{6u, 4u, 0u};

/// max|L − R| / max(1, max|L|)
inline double grid_residual(const OctField3& lhs, const OctField3& rhs) {
  return max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(lhs));
}

/// u(n)·w(n_axis) for a real weight along one axis.
template <class Weight>
OctField3 weight_along(const OctField3& u, int axis, Weight&& w) {
  return map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion& v) {
    const Index3 n{a, b, c};
    return v * w(n[axis]);
  });
}

inline double phase(std::size_t k, long m, std::size_t extent) {
  const long n = static_cast<long>(extent);
  const long km = (static_cast<long>(k) * (((m % n) + n) % n)) % n;
  return 2.0 * std::numbers::pi * static_cast<double>(km) / static_cast<double>(extent);
}

}  // namespace detail

// ---- quadrature rows -------------------------------------------------------

/// OFT of u(x1/a, x2/b, x3/c) against |abc| U(a f1, b f2, c f3) over the probe set.
inline TheoremReport verify_scaling(const Gaussian& g, double a, double b, double c, const QuadratureBox& box = {}) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("verify_scaling: factors must be nonzero");
  const QuadratureSamples scaled([&](const Vec3& x) { return g({x[0] / a, x[1] / b, x[2] / c}); }, box);
  const QuadratureSamples plain(g, box);
  double residual = 0;
  for (const Vec3& f : kProbeFrequencies) {
    const Octonion lhs = scaled.transform(f);
    const Octonion rhs = plain.transform({a * f[0], b * f[1], c * f[2]}) * std::abs(a * b * c);
    residual = std::max(residual, max_abs(lhs - rhs));
  }
  char name[96];
  std::snprintf(name, sizeof name, "scaling_a%g_b%g_c%g", a, b, c);
  return make_report(name, "scaling", residual, kScalingTolerance, g.describe() + detail::box_description(box));
}

/// OFT of an analytic derivative against the reflect-and-multiply rule.
inline TheoremReport verify_derivative(const Gaussian& g, Partial p, const QuadratureBox& box = {}) {
  const auto r = rule(p);
  const QuadratureSamples du([&](const Vec3& x) { return g.derivative(p, x); }, box);
  const QuadratureSamples u(g, box);
  double residual = 0;
  for (const Vec3& f : kProbeFrequencies) {
    double weight = r.sign;
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < r.order[a]; ++k) weight *= 2.0 * std::numbers::pi * f[a];
    const Octonion lhs = du.transform(f);
    const Octonion rhs = (u.transform(detail::reflect_frequency(f, r.reflect_mask)) * weight) * Octonion::unit(r.unit);
    residual = std::max(residual, max_abs(lhs - rhs));
  }
  return make_report("derivative_" + to_string(p), "derivative", residual, kQuadratureTolerance,
                     g.describe() + detail::box_description(box));
}

/// Central difference of U along one frequency axis against the V- and W-forms built
/// from v(x) = −2π x_axis u(x) and w = v·e_{2^axis}.
inline TheoremReport verify_oft_differentiation(const Gaussian& g, int axis, const QuadratureBox& box = {},
                                                double h = 1e-4) {
  static constexpr std::array<unsigned, 3> v_reflect{6u, 4u, 0u};
  static constexpr std::array<unsigned, 3> w_reflect{0u, 1u, 3u};
  const Octonion unit = Octonion::unit(detail::kAxisUnit[axis]);
  const QuadratureSamples u(g, box);
  const QuadratureSamples v([&](const Vec3& x) { return Octonion(-2.0 * std::numbers::pi * x[axis] * g(x)); }, box);
  const QuadratureSamples w([&](const Vec3& x) { return Octonion(-2.0 * std::numbers::pi * x[axis] * g(x)) * unit; },
                            box);
  double residual = 0;
  for (const Vec3& f : kProbeFrequencies) {
    Vec3 up = f, down = f;
    up[axis] += h;
    down[axis] -= h;
    const Octonion lhs = (u.transform(up) - u.transform(down)) / (2.0 * h);
    const Octonion v_form = v.transform(detail::reflect_frequency(f, v_reflect[axis])) * unit;
    const Octonion w_form = w.transform(detail::reflect_frequency(f, w_reflect[axis]));
    residual = std::max({residual, max_abs(lhs - v_form), max_abs(lhs - w_form)});
  }
  char cfg[48];
  std::snprintf(cfg, sizeof cfg, " h=%g", h);
  return make_report(std::string("oft_differentiation_") + detail::axis_name(axis), "oft_differentiation", residual,
                     kQuadratureTolerance, g.describe() + detail::box_description(box) + cfg);
}

/// |U(f)| at |f| = 4 stays below 1e-6 and below every |U| at |f| = 1.
inline TheoremReport verify_riemann_lebesgue(const Gaussian& g, const QuadratureBox& box = {}) {
  const QuadratureSamples u(g, box);
  const double s = 1.0 / std::sqrt(3.0);
  const std::array<Vec3, 4> dirs{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {s, -s, s}}};
  double near = std::numeric_limits<double>::infinity(), far = 0;
  for (const Vec3& d : dirs) {
    near = std::min(near, norm(u.transform(d)));
    far = std::max(far, norm(u.transform({4 * d[0], 4 * d[1], 4 * d[2]})));
  }
  const double residual = far < near ? far : std::numeric_limits<double>::infinity();
  return make_report("riemann_lebesgue", "riemann_lebesgue", residual, 1e-6,
                     g.describe() + detail::box_description(box));
}

// ---- grid rows ---------------------------------------------------------------

/// dsoft(u·cos(2πk0 n/N)) = ½(U(k + k0) + U(k − k0)) along the axis.
inline TheoremReport verify_modulation_cos(const OctField3& u, int axis, long k0) {
  const std::size_t n = u.extent(axis);
  const OctField3 lhs = dsoft(detail::weight_along(u, axis, [&](std::size_t j) { return std::cos(detail::phase(j, k0, n)); }));
  const OctField3 spectrum = dsoft(u);
  const OctField3 rhs = (circular_shift(spectrum, axis, -k0) + circular_shift(spectrum, axis, k0)) * 0.5;
  return make_report(std::string("modulation_cos_") + detail::axis_name(axis) + "_n" + std::to_string(n),
                     "modulation_cos", detail::grid_residual(lhs, rhs), kGridTolerance,
                     detail::shape_description(u) + " k0=" + std::to_string(k0));
}

/// dsoft(u·sin(2πk0 n/N)) = ½(Ũ(k + k0) − Ũ(k − k0))·e_axis, Ũ = U with the row's frequency reflection.
inline TheoremReport verify_modulation_sin(const OctField3& u, int axis, long k0) {
  const std::size_t n = u.extent(axis);
  const OctField3 lhs = dsoft(detail::weight_along(u, axis, [&](std::size_t j) { return std::sin(detail::phase(j, k0, n)); }));
  const OctField3 reflected = reflect_field(dsoft(u), detail::kOddReflection[axis]);
  const OctField3 rhs = right_multiply((circular_shift(reflected, axis, -k0) - circular_shift(reflected, axis, k0)) * 0.5,
                                       Octonion::unit(detail::kAxisUnit[axis]));
  return make_report(std::string("modulation_sin_") + detail::axis_name(axis) + "_n" + std::to_string(n),
                     "modulation_sin", detail::grid_residual(lhs, rhs), kGridTolerance,
                     detail::shape_description(u) + " k0=" + std::to_string(k0));
}

/// dsoft(u·exp(−e_axis 2πk0 n/N)): a pure shift on the first axis, a four-term
/// combination with a reflected spectrum on the other two.
inline TheoremReport verify_modulation_exp(const OctField3& u, int axis, long k0) {
  const std::size_t n = u.extent(axis);
  const std::size_t unit = detail::kAxisUnit[axis];
  const OctField3 modulated = map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion& v) {
    const Index3 idx{a, b, c};
    return v * exp_unit(unit, -detail::phase(idx[axis], k0, n));
  });
  const OctField3 lhs = dsoft(modulated);
  const OctField3 spectrum = dsoft(u);
  OctField3 rhs;
  if (axis == 0) {
    rhs = circular_shift(spectrum, 0, -k0);
  } else {
    const OctField3 reflected = reflect_field(spectrum, axis == 1 ? 1u : 3u);
    rhs = (circular_shift(spectrum, axis, -k0) + circular_shift(spectrum, axis, k0) +
           circular_shift(reflected, axis, -k0) - circular_shift(reflected, axis, k0)) *
          0.5;
  }
  return make_report(std::string("modulation_exp_") + detail::axis_name(axis) + "_n" + std::to_string(n),
                     "modulation_exp", detail::grid_residual(lhs, rhs), kGridTolerance,
                     detail::shape_description(u) + " k0=" + std::to_string(k0));
}

/// dsoft(u(n − m)) = cos(2πkm/N) U(k) − sin(2πkm/N) Ũ(k)·e_axis.
inline TheoremReport verify_shift(const OctField3& u, int axis, long m) {
  const std::size_t n = u.extent(axis);
  const OctField3 lhs = dsoft(circular_shift(u, axis, m));
  const OctField3 spectrum = dsoft(u);
  const Octonion unit = Octonion::unit(detail::kAxisUnit[axis]);
  const OctField3 rhs = map_indexed(spectrum, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion& v) {
    const Index3 k{a, b, c};
    const double angle = detail::phase(k[axis], m, n);
    return v * std::cos(angle) - (spectrum.reflected(a, b, c, detail::kOddReflection[axis]) * unit) * std::sin(angle);
  });
  return make_report(std::string("shift_") + detail::axis_name(axis) + "_n" + std::to_string(n), "shift",
                     detail::grid_residual(lhs, rhs), kGridTolerance,
                     detail::shape_description(u) + " m=" + std::to_string(m));
}

/// Spectrum of a real field assembled coefficient by coefficient from direct cosine/sine
/// sums of its parity components: coefficient p = ±U_p with the sign pattern (+,−,−,+,−,+,+,−).
inline OctField3 parity_spectrum(const OctField3& u) {
  if (!u.is_real()) throw std::invalid_argument("parity_spectrum: field must be real-valued");
  static constexpr std::array<double, 8> sign{1, -1, -1, 1, -1, 1, 1, -1};
  const auto parts = parity_components(u);
  const Shape s = u.shape();
  std::array<detail::KernelTable, 3> tables{detail::KernelTable(s[0]), detail::KernelTable(s[1]),
                                            detail::KernelTable(s[2])};
  OctField3 out(u.grid(), Domain::frequency);
  out.for_each_index([&](std::size_t k1, std::size_t k2, std::size_t k3, Octonion& acc) {
    const Index3 k{k1, k2, k3};
    for (unsigned p = 0; p < 8; ++p) {
      double sum = 0;
      parts[p].for_each_index([&](std::size_t n1, std::size_t n2, std::size_t n3, const Octonion& v) {
        const Index3 n{n1, n2, n3};
        double t = v[0];
        for (int a = 0; a < 3; ++a) {
          const auto& tab = tables[a];
          t *= (p & (1u << a)) ? tab.s[k[a] * tab.n + n[a]] : tab.c[k[a] * tab.n + n[a]];
        }
        sum += t;
      });
      acc[p] = sign[p] * sum;
    }
  });
  return out;
}

/// Convolution rule for real fields: V·(c0 + c4e4) + V(k1,−k2,−k3)·(c1e1 + c3e3)
/// + V(k1,k2,−k3)·(c2e2 + c5e5) + V(−k1,k2,−k3)·(c6e6 + c7e7), c = coefficients of U.
inline OctField3 convolution_rule(const OctField3& parity_spec_u, const OctField3& spectrum_v) {
  const auto pick = [](const Octonion& o, std::initializer_list<std::size_t> slots) {
    Octonion r;
    for (std::size_t i : slots) r[i] = o[i];
    return r;
  };
  return map_indexed(spectrum_v, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion& v) {
    const Octonion& cu = parity_spec_u(a, b, c);
    return v * pick(cu, {0, 4}) + spectrum_v.reflected(a, b, c, 6u) * pick(cu, {1, 3}) +
           spectrum_v.reflected(a, b, c, 4u) * pick(cu, {2, 5}) + spectrum_v.reflected(a, b, c, 5u) * pick(cu, {6, 7});
  });
}

/// dsoft(u ⊛ v) against the parity rule, its commuted form, and the ⊙ product of spectra.
inline TheoremReport verify_convolution(const OctField3& u, const OctField3& v) {
  if (!u.is_real() || !v.is_real()) throw std::invalid_argument("verify_convolution: fields must be real-valued");
  const OctField3 lhs = dsoft(circular_convolution(u, v));
  const OctField3 spec_u = dsoft(u), spec_v = dsoft(v);
  const OctField3 rhs = convolution_rule(parity_spectrum(u), spec_v);
  const OctField3 commuted = convolution_rule(parity_spectrum(v), spec_u);
  const OctField3 odot = map_indexed(spec_u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion& x) {
    return to_octonion(qmul(from_octonion(spec_v(a, b, c)), from_octonion(x)));
  });
  const double residual = std::max({detail::grid_residual(lhs, rhs), detail::grid_residual(lhs, commuted),
                                    detail::grid_residual(lhs, odot)});
  return make_report("convolution_n" + std::to_string(u.extent(0)), "convolution", residual, kGridTolerance,
                     detail::shape_description(u) + " real pair; parity, commuted and odot forms");
}

/// Σ u v = Σ U·conj(V)/N for real u, v; the imaginary part of the right side must vanish.
inline TheoremReport verify_parseval(const OctField3& u, const OctField3& v) {
  if (!u.is_real() || !v.is_real()) throw std::invalid_argument("verify_parseval: fields must be real-valued");
  const double lhs = inner_product(u, v).real();
  const Octonion rhs = inner_product(dsoft(u), dsoft(v)) / static_cast<double>(u.size());
  const double residual = max_abs(rhs - Octonion(lhs)) / std::max(1.0, std::abs(lhs));
  return make_report("parseval_n" + std::to_string(u.extent(0)), "parseval", residual, kGridTolerance,
                     detail::shape_description(u) + " real pair");
}

/// Σ|u|² = Σ|U|²/N for octonion-valued u.
inline TheoremReport verify_plancherel(const OctField3& u) {
  const double lhs = energy(u);
  const double rhs = energy(dsoft(u)) / static_cast<double>(u.size());
  return make_report("plancherel_n" + std::to_string(u.extent(0)), "plancherel",
                     std::abs(lhs - rhs) / std::max(1.0, lhs), kGridTolerance,
                     detail::shape_description(u) + " octonion field");
}

inline TheoremReport verify_period4(const OctField3& complex_field) {
  return make_report("period4_n" + std::to_string(complex_field.extent(0)), "period4",
                     double_oft_check(complex_field), kGridTolerance,
                     detail::shape_description(complex_field) + " complex field");
}

/// Two double transforms (four transforms) return the field.
inline TheoremReport verify_period4_fourfold(const OctField3& u) {
  const double residual = max_abs_diff(double_oft(double_oft(u)), u);
  return make_report("period4_fourfold_n" + std::to_string(u.extent(0)), "period4", residual, 1e-9,
                     detail::shape_description(u) + " octonion field");
}

// ---- falsification witnesses ---------------------------------------------------

struct WitnessReport {
  std::string name;
  double gap = 0;
  double threshold = 0;
  bool triggered = false;
};

/// dsoft(c·u) differs from c·dsoft(u) for c = 1 + e3 + e5; gap relative to max|dsoft(u)|.
inline WitnessReport non_octonion_linearity_witness(const OctField3& u) {
  const Octonion c = Octonion(1.0) + Octonion::unit(3) + Octonion::unit(5);
  const OctField3 scaled = map_indexed(u, [&](std::size_t, std::size_t, std::size_t, const Octonion& v) { return c * v; });
  const OctField3 spectrum = dsoft(u);
  const OctField3 rhs = map_indexed(spectrum, [&](std::size_t, std::size_t, std::size_t, const Octonion& v) { return c * v; });
  const double gap = max_abs_diff(dsoft(scaled), rhs) / max_abs(spectrum);
  return {"non_octonion_linearity", gap, 1e-3, gap > 1e-3};
}

/// The inner-product identity fails for octonion-valued pairs.
inline WitnessReport octonion_parseval_witness(const OctField3& u, const OctField3& v) {
  const Octonion lhs = inner_product(u, v);
  const Octonion rhs = inner_product(dsoft(u), dsoft(v)) / static_cast<double>(u.size());
  const double gap = max_abs(lhs - rhs) / std::max(1.0, max_abs(lhs));
  return {"octonion_parseval", gap, 1e-3, gap > 1e-3};
}

inline std::string format_witness(const WitnessReport& w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " %.6e %.1e ", w.gap, w.threshold);
  return w.name + buf + (w.triggered ? "TRIGGERED" : "SILENT");
}

// ---- full suite ------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "convolution", "derivative", "modulation_cos", "modulation_exp", "modulation_sin", "oft_differentiation",
      "parseval",    "period4",    "plancherel",     "riemann_lebesgue", "scaling",      "shift"};
  return names;
}

/// Every verifier, grid rows once per size (cubic grids), quadrature rows once when
/// `sizes` is non-empty. An empty `suite` selects everything. Sorted by name.
inline std::vector<TheoremReport> run_all(std::uint64_t seed, const std::vector<std::size_t>& sizes,
                                          const std::string& suite = "") {
  std::vector<TheoremReport> out;
  if (sizes.empty()) return out;
  const auto wanted = [&](const char* family) { return suite.empty() || suite == family; };

  for (std::size_t n : sizes) {
    SplitMix64 rng(seed ^ (0x9E3779B97F4A7C15ull * n));
    const SamplingGrid grid(Shape{n, n, n});
    const OctField3 u = random_field(grid, rng);
    const OctField3 ur = random_field(grid, rng, FieldKind::real);
    const OctField3 vr = random_field(grid, rng, FieldKind::real);
    const OctField3 uc = random_field(grid, rng, FieldKind::complex);
    const long k0 = 3, m = 3;
    for (int axis = 0; axis < 3; ++axis) {
      if (wanted("modulation_cos")) out.push_back(verify_modulation_cos(u, axis, k0));
      if (wanted("modulation_sin")) out.push_back(verify_modulation_sin(u, axis, k0));
      if (wanted("modulation_exp")) out.push_back(verify_modulation_exp(u, axis, k0));
      if (wanted("shift")) out.push_back(verify_shift(u, axis, m));
    }
    if (wanted("convolution")) out.push_back(verify_convolution(ur, vr));
    if (wanted("parseval")) out.push_back(verify_parseval(ur, vr));
    if (wanted("plancherel")) out.push_back(verify_plancherel(u));
    if (wanted("period4")) {
      out.push_back(verify_period4(uc));
      out.push_back(verify_period4_fourfold(u));
    }
  }

  const Gaussian g = standard_gaussian();
  if (wanted("scaling")) {
    out.push_back(verify_scaling(g, 2.0, 1.0, 1.0));
    out.push_back(verify_scaling(g, -1.0, 0.5, 1.5));
  }
  if (wanted("derivative"))
    for (Partial p : kAllPartials) out.push_back(verify_derivative(g, p));
  if (wanted("oft_differentiation"))
    for (int axis = 0; axis < 3; ++axis) out.push_back(verify_oft_differentiation(g, axis));
  if (wanted("riemann_lebesgue")) out.push_back(verify_riemann_lebesgue(g));

  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace oft
