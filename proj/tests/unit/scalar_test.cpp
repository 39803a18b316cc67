#include <gtest/gtest.h>

#include "cotq/error.hpp"
#include "cotq/scalar.hpp"
#include "support/generators.hpp"

using cotq::BigInt;
using cotq::Error;
using cotq::ErrorKind;
using cotq::GaussianRational;
using cotq::Rational;
using cotq::testing::Gen;

namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }
GaussianRational gr(Rational re, Rational im) { return {std::move(re), std::move(im)}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no cotq::Error thrown";
  return ErrorKind::Unclassified;
}

constexpr int kTrials = 200;

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(frac(6, -4).str(), "-3/2");
  EXPECT_EQ(frac(4, 2).str(), "2");
  EXPECT_EQ(frac(4, 2).fraction_str(), "2/1");
  EXPECT_EQ(Rational(0).fraction_str(), "0/1");
  EXPECT_EQ(frac(-3, 9).denominator(), 3);
}

TEST(Rational, ZeroDenominatorIsMalformed) {
  EXPECT_EQ(kind_of([] { frac(1, 0); }), ErrorKind::MalformedRational);
  EXPECT_EQ(kind_of([] { Rational::parse("3/0"); }), ErrorKind::MalformedRational);
}

TEST(Rational, DivisionByZero) {
  EXPECT_EQ(kind_of([] { Rational(1) / Rational(0); }), ErrorKind::DivisionByZero);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-3/6"), frac(-1, 2));
  EXPECT_EQ(Rational::parse("+7/1"), Rational(7));
}

TEST(Rational, PowNegativeExponent) {
  EXPECT_EQ(pow(frac(2, 3), -2), frac(9, 4));
  EXPECT_EQ(pow(frac(-1, 2), 3), frac(-1, 8));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
}

TEST(GaussianRational, Multiply) {
  EXPECT_EQ(GaussianRational(1, 2) * GaussianRational(3, -1), GaussianRational(5, 5));
}

TEST(GaussianRational, Invert) {
  EXPECT_EQ(GaussianRational(1, 1).inverse(), gr(frac(1, 2), frac(-1, 2)));
  EXPECT_EQ(kind_of([] { GaussianRational().inverse(); }), ErrorKind::DivisionByZero);
}

TEST(GaussianRational, Conjugate) {
  EXPECT_EQ(gr(frac(2, 3), Rational(-5)).conj(), gr(frac(2, 3), Rational(5)));
}

TEST(GaussianRational, Pow) {
  EXPECT_EQ(pow(GaussianRational::i(), 4), GaussianRational(1));
  EXPECT_EQ(pow(GaussianRational::i(), 3), GaussianRational(0, -1));
  EXPECT_EQ(pow(GaussianRational(frac(2, 3)), -2), GaussianRational(frac(9, 4)));
  EXPECT_EQ(pow(GaussianRational(3, 7), 0), GaussianRational(1));
  EXPECT_EQ(kind_of([] { pow(GaussianRational(), -1); }), ErrorKind::DivisionByZero);
}

TEST(GaussianRational, ToString) {
  EXPECT_EQ(to_string(GaussianRational(3)), "3");
  EXPECT_EQ(to_string(GaussianRational(frac(-1, 2))), "-1/2");
  EXPECT_EQ(to_string(GaussianRational::i()), "i");
  EXPECT_EQ(to_string(GaussianRational(0, -2)), "-2i");
  EXPECT_EQ(to_string(gr(Rational(0), frac(1, 2))), "1/2i");
  EXPECT_EQ(to_string(gr(frac(1, 2), Rational(3))), "(1/2+3i)");
  EXPECT_EQ(to_string(GaussianRational(3, -1)), "(3-i)");
}

TEST(GaussianRational, ParseLiterals) {
  EXPECT_EQ(cotq::parse_scalar("3"), GaussianRational(3));
  EXPECT_EQ(cotq::parse_scalar("3/2"), GaussianRational(frac(3, 2)));
  EXPECT_EQ(cotq::parse_scalar("2i"), GaussianRational(0, 2));
  EXPECT_EQ(cotq::parse_scalar("-2i"), GaussianRational(0, -2));
  EXPECT_EQ(cotq::parse_scalar("i"), GaussianRational::i());
  EXPECT_EQ(cotq::parse_scalar("(1/2+3i)"), gr(frac(1, 2), Rational(3)));
  EXPECT_EQ(cotq::parse_scalar("(3-i)"), GaussianRational(3, -1));
}

TEST(GaussianRational, ParseRejectsGarbage) {
  for (const char* bad : {"", "3/", "(1+2i", "abc", "1/0", "3 4"}) {
    EXPECT_THROW(cotq::parse_scalar(bad), Error) << bad;
  }
}

TEST(GaussianRationalProperty, FieldAxioms) {
  Gen gen(11);
  for (int t = 0; t < kTrials; ++t) {
    const GaussianRational a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + GaussianRational(), a);
    EXPECT_EQ(a * GaussianRational(1), a);
    EXPECT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), GaussianRational(1));
  }
}

TEST(GaussianRationalProperty, ConjugationIsAnInvolutiveAutomorphism) {
  Gen gen(12);
  for (int t = 0; t < kTrials; ++t) {
    const GaussianRational a = gen.scalar(), b = gen.scalar();
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
  }
}

TEST(GaussianRationalProperty, PowMatchesRepeatedMultiplication) {
  Gen gen(13);
  for (int t = 0; t < kTrials; ++t) {
    const GaussianRational a = gen.nonzero_scalar(5);
    const int e = static_cast<int>(gen.integer(-6, 6));
    GaussianRational expected(1);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) expected = expected * a;
    if (e < 0) expected = GaussianRational(1) / expected;
    EXPECT_EQ(pow(a, e), expected);
  }
}

TEST(GaussianRationalProperty, TextRoundTrip) {
  Gen gen(14);
  for (int t = 0; t < kTrials; ++t) {
    const GaussianRational a = gen.scalar(50);
    EXPECT_EQ(cotq::parse_scalar(to_string(a)), a) << to_string(a);
  }
}
