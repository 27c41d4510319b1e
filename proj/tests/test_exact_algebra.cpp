#include <gtest/gtest.h>

#include "higgs/error.hpp"
#include "higgs/series.hpp"
#include "higgs/sqrt_laurent.hpp"
#include "support.hpp"

using namespace higgs;
using testsupport::randomPoly;
using testsupport::randomUniPoly;

namespace {

RingPtr abg() { return makeRing({{"a", 1}, {"b", 2}, {"g", 3}}); }

template <class F>
void expectError(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
}

TEST(Rational, NoOverflow) {
  Rational big = Rational::pow(Rational(10), 40);
  EXPECT_EQ((big * big / big), big);
  EXPECT_EQ(factorial(25).to_string(), "15511210043330985984000000");
}

TEST(Rational, Errors) {
  expectError(ErrorKind::DivisionByZero, [] { (void)(Rational(1) / Rational(0)); });
  expectError(ErrorKind::DivisionByZero, [] { (void)Rational::parse("1/0"); });
  expectError(ErrorKind::Parse, [] { (void)Rational::parse("1/-2"); });
  expectError(ErrorKind::Parse, [] { (void)Rational::parse("x"); });
}

TEST(Rational, Binomials) {
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(3, -1), Rational(0));
  EXPECT_EQ(binomial(-2, 1), Rational(0));
  EXPECT_EQ(binomial(2, 3), Rational(0));
  EXPECT_EQ(binomial(Rational(1, 2), 2), Rational(-1, 8));
  EXPECT_EQ(binomial(Rational(-3), 2), Rational(6));
}

TEST(MultiPoly, Examples) {
  const RingPtr R = abg();
  const MultiPoly a = MultiPoly::variable(R, "a"), b = MultiPoly::variable(R, "b"), g = MultiPoly::variable(R, "g");
  EXPECT_EQ((a * a).to_string(), "1*a^2");
  const MultiPoly gstar = g * Rational(2) + a * b;
  EXPECT_TRUE(gstar.isHomogeneous());
  EXPECT_EQ(gstar.degree(), 3);
  EXPECT_EQ(((a * a + b) * Rational(1, 2)) * Rational(2), a * a + b);
}

TEST(MultiPoly, CanonicalText) {
  const RingPtr R = abg();
  const MultiPoly p = parsePoly(R, "3/2*a^2*b + -1*g");
  EXPECT_EQ(p.to_string(), "3/2*a^2*b + -1*g");
  EXPECT_EQ(parsePoly(R, "g + a*b").to_string(), "1*a*b + 1*g");
  EXPECT_EQ(MultiPoly(R).to_string(), "0");
  expectError(ErrorKind::Parse, [&] { (void)parsePoly(R, "3*z"); });
  EXPECT_EQ(parsePoly(R, "a^2 - 2*a*b - g"), parsePoly(R, "1*a^2 + -2*a*b + -1*g"));
  EXPECT_EQ(parsePoly(R, "-a - 1/2*b"), parsePoly(R, "-1*a + -1/2*b"));
  expectError(ErrorKind::Parse, [&] { (void)parsePoly(R, "a -"); });
}

TEST(MultiPoly, ArityMismatch) {
  const MultiPoly p = MultiPoly::variable(abg(), "a");
  const MultiPoly q = MultiPoly::variable(makeRing({{"x", 1}}), "x");
  expectError(ErrorKind::ArityMismatch, [&] { (void)(p + q); });
  expectError(ErrorKind::ArityMismatch, [&] { (void)(p * q); });
}

TEST(MultiPoly, RingAxiomsRandomized) {
  std::mt19937 rng(20240611);
  const RingPtr R = abg();
  for (int i = 0; i < 200; ++i) {
    const MultiPoly x = randomPoly(R, rng), y = randomPoly(R, rng), z = randomPoly(R, rng);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x + y, y + x);
    ASSERT_TRUE((x - x).is_zero());
    ASSERT_EQ(x * MultiPoly::constant(R, 1), x);
  }
}

TEST(MultiPoly, GradingAdditiveRandomized) {
  std::mt19937 rng(77);
  const RingPtr R = abg();
  for (int i = 0; i < 100; ++i) {
    const long d1 = 1 + static_cast<long>(rng() % 6), d2 = 1 + static_cast<long>(rng() % 6);
    const MultiPoly x = testsupport::randomHomogeneous(R, rng, d1);
    const MultiPoly y = testsupport::randomHomogeneous(R, rng, d2);
    if (x.is_zero() || y.is_zero()) continue;
    const MultiPoly p = x * y;
    ASSERT_TRUE(p.isHomogeneous());
    ASSERT_EQ(p.degree(), d1 + d2);
  }
}

TEST(MultiPoly, ParseRoundTripRandomized) {
  std::mt19937 rng(5);
  const RingPtr R = abg();
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = randomPoly(R, rng);
    ASSERT_EQ(parsePoly(R, p.to_string()), p);
  }
}

TEST(MultiPoly, SubstituteAndEmbed) {
  const RingPtr R = abg();
  const RingPtr T = makeRing({{"x", 1}, {"y", 1}});
  const MultiPoly x = MultiPoly::variable(T, "x"), y = MultiPoly::variable(T, "y");
  const std::vector<MultiPoly> images{x + y, x * y, x * x * y};
  const MultiPoly p = parsePoly(R, "a^2 + 2*b");
  EXPECT_EQ(substitute(p, T, images), x * x + y * y + x * y * Rational(4));
  const RingPtr wide = makeRing({{"g", 3}, {"b", 2}, {"a", 1}, {"z", 1}});
  EXPECT_EQ(embed(embed(p, wide), R), p);
}

TEST(UniPoly, ExactDivExamples) {
  const UniPoly t6m1 = UniPoly::monomial(1, 6) - UniPoly{1};
  EXPECT_EQ(exactDiv(t6m1, UniPoly{-1, 0, 1}), (UniPoly{1, 0, 1, 0, 1}));
  const UniPoly num = UniPoly::pow(UniPoly{1, 0, 0, 1}, 4) - UniPoly::monomial(1, 4) * UniPoly::pow(UniPoly{1, 1}, 4);
  EXPECT_EQ(exactDiv(num, UniPoly{1, 0, -1} * UniPoly{1, 0, 0, 0, -1}), (UniPoly{1, 0, 1, 4, 1, 0, 1}));
  EXPECT_EQ(exactDiv(UniPoly::monomial(1, 6) - UniPoly::monomial(1, 4), UniPoly{-1, 0, 1}), UniPoly::monomial(1, 4));
}

TEST(UniPoly, Errors) {
  expectError(ErrorKind::NotDivisible, [] { (void)exactDiv(UniPoly{1, 1}, UniPoly{0, 1}); });
  expectError(ErrorKind::DivisionByZero, [] { (void)exactDiv(UniPoly{1}, UniPoly{}); });
  expectError(ErrorKind::NotAUnit, [] { (void)seriesDiv(UniPoly{1}, UniPoly{0, 1}, 3); });
  EXPECT_EQ(UniPoly().degree(), UniPoly::kZeroDegree);
}

TEST(UniPoly, ExactDivRoundTripRandomized) {
  std::mt19937 rng(4242);
  for (int i = 0; i < 300; ++i) {
    const UniPoly a = randomUniPoly(rng), b = randomUniPoly(rng);
    if (b.is_zero()) continue;
    ASSERT_EQ(exactDiv(a * b, b), a);
    const DivMod qr = divmod(a, b);
    ASSERT_EQ(qr.quotient * b + qr.remainder, a);
    ASSERT_LT(qr.remainder.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(Series, Examples) {
  const RingPtr R = makeRing({{"x", 1}, {"t", 0}});
  const MultiPoly x = MultiPoly::variable(R, "x"), t = MultiPoly::variable(R, "t"), one = MultiPoly::constant(R, 1);
  EXPECT_EQ(seriesInverse(TruncatedSeries(one - x, 3)).poly(), parsePoly(R, "1 + x + x^2 + x^3"));
  EXPECT_EQ(seriesSqrt(TruncatedSeries(one + x, 2)).poly(), parsePoly(R, "1 + 1/2*x + -1/8*x^2"));
  EXPECT_EQ(seriesExp(seriesLog(TruncatedSeries(one + x, 4))).poly(), one + x);

  const int g = 2;
  const TruncatedSeries gen = TruncatedSeries(MultiPoly::pow(one + x * t, 2 * g), 3) *
                              seriesInverse(TruncatedSeries((one - x) * (one - x * t * t), 3));
  const RingPtr tr = makeRing({{"x", 1}, {"t", 0}});
  EXPECT_EQ(seriesCoeff(gen, "x", 1).poly(), parsePoly(R, "1 + 4*t + t^2"));
  EXPECT_EQ(seriesCoeff(gen, "x", 0).poly(), one);
  EXPECT_EQ(seriesCoeff(seriesInverse(TruncatedSeries(one - x, 3)), "x", 3).poly(), one);
}

TEST(Series, Errors) {
  const RingPtr R = makeRing({{"x", 1}, {"y", 1}});
  const MultiPoly x = MultiPoly::variable(R, "x"), one = MultiPoly::constant(R, 1);
  expectError(ErrorKind::NotAUnit, [&] { (void)seriesInverse(TruncatedSeries(x, 3)); });
  expectError(ErrorKind::NotAUnit, [&] { (void)seriesLog(TruncatedSeries(one * Rational(2) + x, 3)); });
  expectError(ErrorKind::NotAUnit, [&] { (void)seriesSqrt(TruncatedSeries(x, 3)); });
  expectError(ErrorKind::NonzeroConstant, [&] { (void)seriesExp(TruncatedSeries(one + x, 3)); });
  expectError(ErrorKind::TruncationExceeded, [&] { (void)seriesCoeff(TruncatedSeries(one + x, 2), "x", 3); });
  EXPECT_EQ(TruncatedSeries(one + x, 0).poly(), one);
}

TEST(Series, TruncationIsMinimum) {
  const RingPtr R = makeRing({{"x", 1}});
  const MultiPoly x = MultiPoly::variable(R, "x"), one = MultiPoly::constant(R, 1);
  const TruncatedSeries p(one + x, 5), q(one + x * x, 2);
  EXPECT_EQ((p * q).truncation(), 2);
  EXPECT_EQ((p + q).truncation(), 2);
  EXPECT_EQ((p * q).poly(), parsePoly(R, "1 + x + x^2"));
}

TEST(Series, InverseOpsRandomized) {
  std::mt19937 rng(99);
  const RingPtr R = makeRing({{"x", 1}, {"y", 2}});
  const MultiPoly one = MultiPoly::constant(R, 1);
  for (int i = 0; i < 60; ++i) {
    const long trunc = 1 + static_cast<long>(rng() % 6);
    MultiPoly h = randomPoly(R, rng, 4, 3);
    h -= MultiPoly::constant(R, h.constantTerm());
    const TruncatedSeries f(one + h, trunc), e(h, trunc);
    ASSERT_EQ((f * seriesInverse(f)).poly(), one);
    ASSERT_EQ(seriesExp(seriesLog(f)), f);
    ASSERT_EQ(seriesLog(seriesExp(e)), e);
    const TruncatedSeries r = seriesSqrt(f);
    ASSERT_EQ(r * r, f);
    ASSERT_EQ(seriesPow(f, 3), f * f * f);
    ASSERT_EQ(seriesPow(f, -2) * f * f, TruncatedSeries(one, trunc));
    ASSERT_EQ(seriesPow(f, MultiPoly::constant(R, Rational(1, 2))), r);
  }
}

TEST(Series, Residues) {
  const RingPtr R = makeRing({{"eta", 1}});
  const MultiPoly eta = MultiPoly::variable(R, "eta"), one = MultiPoly::constant(R, 1);
  EXPECT_EQ(residueAtZero(LaurentSeries(TruncatedSeries(one, 3), "eta", -1)), one);
  EXPECT_TRUE(residueAtZero(LaurentSeries(TruncatedSeries(eta * eta, 3), "eta", 0)).is_zero());
  for (int g = 2; g <= 5; ++g)
    for (int n = 0; n <= g + 1; ++n) {
      const LaurentSeries f(TruncatedSeries(MultiPoly::pow(one + eta, g), n + 1), "eta", -(n + 1));
      EXPECT_EQ(residueAtZero(f), MultiPoly::constant(R, binomial(g, n))) << g << " " << n;
    }
}

TEST(SqrtLaurent, PolynomialityAndRoundTrip) {
  const RingPtr S = makeRing({{"a", 1}, {"s", 1}, {"g", 3}});
  const RingPtr R = abg();
  std::mt19937 rng(1234);
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = randomPoly(R, rng);
    const SqrtLaurentElem e = SqrtLaurentElem::fromBeta(p, "b", S, "s");
    ASSERT_TRUE(e.isPolynomialInBeta());
    ASSERT_EQ(e.toBeta(R, "b"), p);
  }
  Monomial m;
  m[1] = -1;
  const SqrtLaurentElem odd(MultiPoly::monomial(S, m), "s");
  EXPECT_FALSE(odd.isPolynomialInBeta());
  EXPECT_EQ(odd.windowFloor(), -1);
  expectError(ErrorKind::InvalidArgument, [&] { (void)odd.toBeta(R, "b"); });
}
