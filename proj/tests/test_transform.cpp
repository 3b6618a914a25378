#include <gtest/gtest.h>

#include "support.hpp"

using namespace oft;

namespace {

double rel(const OctField3& a, const OctField3& ref) { return max_abs_diff(a, ref) / std::max(1.0, max_abs(ref)); }

OctField3 spectrum_domain(OctField3 u) {
  u.set_domain(Domain::frequency);
  return u;
}

}  // namespace

TEST(Transform, DeltaGivesOnes) {
  OctField3 u(Shape{4, 4, 4});
  u(0, 0, 0) = Octonion(1.0);
  for (const auto& f : {dsoft_fast(u), dsoft_naive(u)}) {
    EXPECT_EQ(f.domain(), Domain::frequency);
    for (const auto& v : f.data()) EXPECT_LE(max_abs(v - Octonion(1.0)), 1e-15);
  }
}

TEST(Transform, ConstantConcentratesAtZeroFrequency) {
  OctField3 u(Shape{4, 3, 2});
  for (auto& v : u.data()) v = Octonion(1.0);
  const OctField3 f = dsoft_fast(u);
  EXPECT_LE(max_abs(f(0, 0, 0) - Octonion(24.0)), 1e-13);
  f.for_each_index([](std::size_t a, std::size_t b, std::size_t c, const Octonion& v) {
    if (a + b + c > 0) {
      EXPECT_LE(max_abs(v), 1e-13);
    }
  });
}

TEST(Transform, TwoPointGridIsSignedSum) {
  SplitMix64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const OctField3 u = random_field(Shape{2, 2, 2}, rng);
    const OctField3 ref = testing_support::expand_2x2x2(u);
    EXPECT_LE(max_abs_diff(dsoft_naive(u), ref), 1e-14);
    EXPECT_LE(max_abs_diff(dsoft_fast(u), ref), 1e-14);
  }
}

TEST(Transform, FastMatchesNaive) {
  SplitMix64 rng(2);
  for (Shape s : {Shape{4, 4, 4}, Shape{3, 5, 6}, Shape{1, 4, 7}, Shape{6, 6, 6}}) {
    const OctField3 u = random_field(s, rng);
    EXPECT_LE(rel(dsoft_fast(u), dsoft_naive(u)), 1e-12);
    const OctField3 spec = spectrum_domain(random_field(s, rng));
    EXPECT_LE(rel(idsoft(spec), idsoft_naive(spec)), 1e-12);
  }
}

TEST(Transform, FastMatchesNaiveForRestrictedValues) {
  SplitMix64 rng(3);
  for (FieldKind kind : {FieldKind::real, FieldKind::complex}) {
    const OctField3 u = random_field(Shape{4, 5, 4}, rng, kind);
    EXPECT_LE(rel(dsoft_fast(u), dsoft_naive(u)), 1e-12);
  }
}

TEST(Transform, RoundTrip) {
  SplitMix64 rng(4);
  for (Shape s : {Shape{8, 8, 8}, Shape{3, 5, 6}, Shape{2, 1, 9}}) {
    const OctField3 u = random_field(s, rng);
    const OctField3 back = idsoft(dsoft(u));
    EXPECT_EQ(back.domain(), Domain::space);
    EXPECT_LE(rel(back, u), 1e-12);
    const OctField3 spec = spectrum_domain(random_field(s, rng));
    EXPECT_LE(rel(dsoft(idsoft(spec)), spec), 1e-12);
  }
  const OctField3 u = random_field(Shape{4, 3, 4}, rng);
  EXPECT_LE(rel(idsoft_naive(dsoft_naive(u)), u), 1e-12);
}

TEST(Transform, RealLinear) {
  SplitMix64 rng(5);
  const OctField3 u = random_field(Shape{4, 4, 4}, rng), v = random_field(Shape{4, 4, 4}, rng);
  const double a = 1.7, b = -0.3;
  EXPECT_LE(rel(dsoft(u * a + v * b), dsoft(u) * a + dsoft(v) * b), 1e-13);
}

TEST(Transform, NotLinearOverOctonions) {
  SplitMix64 rng(6);
  const auto w = non_octonion_linearity_witness(random_field(Shape{4, 4, 4}, rng));
  EXPECT_TRUE(w.triggered) << format_witness(w);
}

TEST(Transform, RejectsWrongDomain) {
  OctField3 space(Shape{2, 2, 2});
  OctField3 freq(Shape{2, 2, 2}, Domain::frequency);
  EXPECT_THROW(dsoft(freq), DomainMismatch);
  EXPECT_THROW(dsoft_naive(freq), DomainMismatch);
  EXPECT_THROW(idsoft(space), DomainMismatch);
  EXPECT_THROW(idsoft_naive(space), DomainMismatch);
  EXPECT_NO_THROW(dsoft(space));
}

TEST(Transform, ParityComponentsSumToField) {
  SplitMix64 rng(7);
  const OctField3 u = random_field(Shape{4, 5, 6}, rng);
  const auto parts = parity_components(u);
  OctField3 sum(u.grid());
  for (const auto& p : parts) sum += p;
  EXPECT_LE(max_abs_diff(sum, u), 1e-14);
  for (unsigned p = 0; p < 8; ++p) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      const double sign = std::popcount(mask & p) % 2 ? -1.0 : 1.0;
      EXPECT_LE(max_abs_diff(reflect_field(parts[p], mask), parts[p] * sign), 1e-15) << parity_name(p);
    }
  }
  EXPECT_EQ(parity_name(0), "eee");
  EXPECT_EQ(parity_name(1), "oee");
  EXPECT_EQ(parity_name(6), "eoo");
}

// A real field's parity component p lands entirely in coefficient p of the spectrum.
TEST(Transform, RealParityComponentsOccupyOneSlot) {
  SplitMix64 rng(8);
  const OctField3 u = random_field(Shape{4, 6, 5}, rng, FieldKind::real);
  const auto parts = parity_components(u);
  for (unsigned p = 0; p < 8; ++p) {
    const OctField3 f = dsoft(parts[p]);
    for (const auto& v : f.data())
      for (std::size_t slot = 0; slot < 8; ++slot)
        if (slot != p) {
          EXPECT_LE(std::abs(v[slot]), 1e-12) << parity_name(p) << " slot " << slot;
        }
  }
}

TEST(Transform, DeltaHasOnlyEvenPart) {
  OctField3 u(Shape{4, 4, 4});
  u(0, 0, 0) = Octonion(1.0);
  const auto parts = parity_components(u);
  EXPECT_EQ(max_abs_diff(parts[0], u), 0.0);
  for (unsigned p = 1; p < 8; ++p) EXPECT_EQ(max_abs(parts[p]), 0.0);
}

TEST(Transform, DoubleTransformOfComplexField) {
  SplitMix64 rng(9);
  for (Shape s : {Shape{8, 8, 8}, Shape{4, 6, 5}, Shape{3, 3, 7}}) {
    const OctField3 u = random_field(s, rng, FieldKind::complex);
    EXPECT_LE(double_oft_check(u), 1e-12);
  }
}

TEST(Transform, DoubleTransformOfEvenRealField) {
  SplitMix64 rng(10);
  const OctField3 even = parity_components(random_field(Shape{6, 6, 6}, rng, FieldKind::real))[0];
  EXPECT_LE(max_abs_diff(double_oft(even), even), 1e-13);
}

TEST(Transform, DoubleTransformSelfTermIsNegative) {
  SplitMix64 rng(11);
  const OctField3 u = random_field(Shape{4, 4, 4}, rng, FieldKind::complex);
  const OctField3 positive = map_indexed(u, [&](std::size_t a, std::size_t b, std::size_t c, const Octonion& v) {
    return (v + u.reflected(a, b, c, 5u) + u.reflected(a, b, c, 3u) - u.reflected(a, b, c, 6u)) * 0.5;
  });
  EXPECT_GT(max_abs_diff(double_oft(u), positive), 0.1);
  EXPECT_LE(max_abs_diff(double_oft(u), double_oft_expected(u)), 1e-13);
}

TEST(Transform, DoubleTransformCheckRequiresComplexField) {
  SplitMix64 rng(12);
  EXPECT_THROW(double_oft_check(random_field(Shape{2, 2, 2}, rng)), std::invalid_argument);
  EXPECT_THROW(double_oft_check(OctField3(Shape{2, 2, 2}, Domain::frequency)), DomainMismatch);
}

TEST(Transform, FourDoubleTransformsAreIdentity) {
  SplitMix64 rng(13);
  for (Shape s : {Shape{8, 8, 8}, Shape{3, 4, 5}}) {
    const OctField3 u = random_field(s, rng);
    EXPECT_LE(max_abs_diff(double_oft(double_oft(u)), u), 1e-12);
  }
}

TEST(Transform, InnerProductAndEnergy) {
  SplitMix64 rng(14);
  const OctField3 u = random_field(Shape{3, 3, 3}, rng);
  EXPECT_NEAR(inner_product(u, u).real(), energy(u), 1e-12);
  EXPECT_LE(max_abs(inner_product(u, u).imag()), 1e-12);
  EXPECT_THROW(inner_product(u, OctField3(Shape{3, 3, 2})), ShapeMismatch);
}
