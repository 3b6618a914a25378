#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace oft;
using testing_support::exp_series;
using testing_support::from_signed;
using testing_support::kOctonionTable;

namespace {

double rel(const Octonion& a, const Octonion& b) { return max_abs(a - b) / std::max(1.0, max_abs(b)); }

}  // namespace

TEST(Octonion, BasisTableMatchesHandCopy) {
  const auto generated = octonion_table();
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Octonion expected = from_signed(kOctonionTable[i][j]);
      EXPECT_EQ(Octonion::unit(i) * Octonion::unit(j), expected) << "e" << i << " * e" << j;
      EXPECT_EQ(generated[i][j].index, static_cast<std::size_t>(std::abs(kOctonionTable[i][j]) - 1));
      EXPECT_EQ(generated[i][j].sign, kOctonionTable[i][j] > 0 ? 1 : -1);
    }
  }
}

TEST(Octonion, NamedProducts) {
  EXPECT_EQ(Octonion::unit(1) * Octonion::unit(2), Octonion::unit(3));
  EXPECT_EQ(Octonion::unit(5) * Octonion::unit(3), Octonion::unit(6));
  EXPECT_EQ((Octonion::unit(1) * Octonion::unit(2)) * Octonion::unit(4), Octonion::unit(7));
  EXPECT_EQ(Octonion::unit(1) * (Octonion::unit(2) * Octonion::unit(4)), -Octonion::unit(7));
}

TEST(Octonion, RightMultiplicationByUnitMatchesProduct) {
  SplitMix64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Octonion o = random_octonion(rng);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(right_mul_unit(o, i), o * Octonion::unit(i));
  }
}

TEST(Octonion, IdentityElement) {
  SplitMix64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Octonion o = random_octonion(rng);
    EXPECT_EQ(Octonion(1.0) * o, o);
    EXPECT_EQ(o * Octonion(1.0), o);
  }
}

TEST(Octonion, Conjugation) {
  EXPECT_EQ(conj(Octonion(1.0) + Octonion::unit(7)), Octonion(1.0) - Octonion::unit(7));
  const Octonion e2 = Octonion::unit(2), e5 = Octonion::unit(5);
  EXPECT_EQ(conj(e2 * e5), conj(e5) * conj(e2));
  SplitMix64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    EXPECT_EQ(conj(conj(a)), a);
    EXPECT_LE(rel(conj(a * b), conj(b) * conj(a)), 1e-15);
    EXPECT_NEAR((a * conj(a)).real(), norm2(a), 1e-14);
  }
}

TEST(Octonion, NormIsMultiplicative) {
  SplitMix64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    EXPECT_NEAR(norm(a * b), norm(a) * norm(b), 8 * std::numeric_limits<double>::epsilon() * norm(a) * norm(b));
  }
}

TEST(Octonion, Inverse) {
  EXPECT_EQ(inverse(Octonion(2.0)), Octonion(0.5));
  EXPECT_EQ(inverse(Octonion::unit(3)), -Octonion::unit(3));
  SplitMix64 rng(4);
  for (int t = 0; t < 1000; ++t) {
    const Octonion o = random_octonion(rng);
    EXPECT_LE(rel(o * inverse(o), Octonion(1.0)), 1e-12);
  }
  EXPECT_THROW(inverse(Octonion()), ZeroOctonion);
  EXPECT_THROW(inverse(Octonion(1e-301)), ZeroOctonion);
}

TEST(Octonion, ExponentialClosedForm) {
  EXPECT_EQ(oft::exp(Octonion()), Octonion(1.0));
  EXPECT_LE(rel(oft::exp(Octonion::unit(1) * (std::numbers::pi / 2)), Octonion::unit(1)), 1e-16);
  EXPECT_LE(rel(oft::exp(Octonion::unit(4) * 1e-10), Octonion(1.0) + Octonion::unit(4) * 1e-10), 1e-16);
  SplitMix64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    Octonion o = random_octonion(rng);
    o = o * (3.0 * rng.unit() / norm(o));  // |o| < 3
    EXPECT_LE(rel(oft::exp(o), exp_series(o)), 1e-12);
  }
}

TEST(Octonion, ExponentialOfCommutingPairs) {
  SplitMix64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = random_octonion(rng);
    const Octonion b = Octonion(rng.symmetric()) + a * rng.symmetric();  // polynomial in a
    EXPECT_LE(rel(oft::exp(a + b), oft::exp(a) * oft::exp(b)), 1e-10);
  }
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2);
  EXPECT_GT(max_abs(oft::exp(e1 + e2) - oft::exp(e1) * oft::exp(e2)), 1e-3);
}

TEST(Octonion, CosineAndSineFromExponentials) {
  SplitMix64 rng(7);
  for (std::size_t i = 1; i < 8; ++i) {
    const Octonion mu = Octonion::unit(i);
    for (int t = 0; t < 100; ++t) {
      const double alpha = 10.0 * rng.symmetric();
      const Octonion c = (oft::exp(mu * alpha) + oft::exp(mu * -alpha)) * 0.5;
      const Octonion s = ((oft::exp(mu * alpha) - oft::exp(mu * -alpha)) * -mu) * 0.5;
      EXPECT_LE(max_abs(c - Octonion(std::cos(alpha))), 1e-14);
      EXPECT_LE(max_abs(s - Octonion(std::sin(alpha))), 1e-14);
    }
  }
}

TEST(Octonion, Polar) {
  const Polar p2 = polar(Octonion(2.0));
  EXPECT_EQ(p2.magnitude, 2.0);
  EXPECT_EQ(p2.axis, Octonion::unit(1));
  EXPECT_EQ(p2.angle, 0.0);
  const Polar pn = polar(Octonion(-3.0));
  EXPECT_EQ(pn.angle, std::numbers::pi);
  const Polar pe = polar(Octonion::unit(2));
  EXPECT_DOUBLE_EQ(pe.magnitude, 1.0);
  EXPECT_EQ(pe.axis, Octonion::unit(2));
  EXPECT_DOUBLE_EQ(pe.angle, std::numbers::pi / 2);
  EXPECT_THROW(polar(Octonion()), ZeroOctonion);

  SplitMix64 rng(8);
  for (int t = 0; t < 1000; ++t) {
    const Octonion o = random_octonion(rng);
    const Polar p = polar(o);
    EXPECT_NEAR(norm(p.axis), 1.0, 1e-15);
    EXPECT_EQ(p.axis.real(), 0.0);
    EXPECT_GE(p.angle, 0.0);
    EXPECT_LE(p.angle, std::numbers::pi);
    EXPECT_LE(rel(oft::exp(p.axis * p.angle) * p.magnitude, o), 1e-12);
  }
}

TEST(Octonion, AlternativeAndFlexible) {
  SplitMix64 rng(9);
  for (int t = 0; t < 10000; ++t) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    const double scale = std::max(1.0, norm(a) * norm(a) * norm(b));
    EXPECT_LE(max_abs(a * (a * b) - (a * a) * b) / scale, 1e-12);
    EXPECT_LE(max_abs((a * b) * b - a * (b * b)) / scale, 1e-12);
    EXPECT_LE(max_abs(a * (b * a) - (a * b) * a) / scale, 1e-12);
  }
}

TEST(Octonion, NotAssociative) {
  SplitMix64 rng(10);
  const Octonion a = random_octonion(rng), b = random_octonion(rng), c = random_octonion(rng);
  EXPECT_GT(max_abs((a * b) * c - a * (b * c)), 1e-3);
}

// Rearrangements that the fast transform paths depend on.
TEST(Octonion, KernelReorderingIdentities) {
  SplitMix64 rng(12);
  const Octonion e2 = Octonion::unit(2), e4 = Octonion::unit(4);
  for (int t = 0; t < 1000; ++t) {
    const Octonion o = random_octonion(rng);
    const double a1 = 5 * rng.symmetric(), a2 = 5 * rng.symmetric(), a3 = 5 * rng.symmetric();
    const auto E = [](std::size_t u, double a) { return exp_unit(u, a); };

    EXPECT_LE(max_abs((((o * e2) * E(1, -a1)) * E(2, -a2)) * E(4, -a3) - (((o * E(1, a1)) * E(2, -a2)) * E(4, a3)) * e2),
              1e-12);
    EXPECT_LE(max_abs((((o * e4) * E(1, -a1)) * E(2, -a2)) * E(4, -a3) - (((o * E(1, a1)) * E(2, a2)) * E(4, -a3)) * e4),
              1e-12);
    EXPECT_LE(max_abs(((((o * e2) * e4) * E(1, -a1)) * E(2, -a2)) * E(4, -a3) -
                      ((((o * E(1, -a1)) * E(2, a2)) * E(4, a3)) * e2) * e4),
              1e-12);

    const Octonion ei = Octonion::unit(1 + static_cast<std::size_t>(rng.next() % 7));
    const double x1 = 5 * rng.symmetric(), x2 = 5 * rng.symmetric(), x3 = 5 * rng.symmetric();
    EXPECT_LE(max_abs((((ei * E(1, -a1)) * E(2, -a2)) * E(4, -a3)) * E(4, x3) -
                      ((ei * E(1, -a1)) * E(2, -a2)) * (E(4, -a3) * E(4, x3))),
              1e-12);
    EXPECT_LE(max_abs(((ei * E(1, -a1)) * E(2, -a2)) * E(2, x2) - (ei * E(1, -a1)) * (E(2, -a2) * E(2, x2))), 1e-12);
    EXPECT_LE(max_abs((ei * E(1, -a1)) * E(1, x1) - ei * (E(1, -a1) * E(1, x1))), 1e-12);
  }
}
