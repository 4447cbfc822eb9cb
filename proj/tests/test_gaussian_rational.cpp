#include <gtest/gtest.h>

#include <random>

#include "crclass/errors.hpp"
#include "crclass/gaussian_rational.hpp"
#include "support.hpp"

using crclass::GaussianRational;

namespace {

GaussianRational gr(long re_num, long re_den, long im_num = 0, long im_den = 1) {
  return GaussianRational(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

}  // namespace

TEST(GaussianRational, ISquaredIsMinusOne) { EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1)); }

TEST(GaussianRational, OneOverIIsMinusI) { EXPECT_EQ(GaussianRational(1) / GaussianRational::i(), -GaussianRational::i()); }

TEST(GaussianRational, NormProduct) {
  EXPECT_EQ(gr(1, 2, 1) * gr(1, 2, -1), gr(5, 4));
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(GaussianRational(1) / GaussianRational(0), crclass::ArithmeticError);
  EXPECT_THROW(GaussianRational(0).inverse(), crclass::ArithmeticError);
}

TEST(GaussianRational, Conj) {
  EXPECT_EQ(gr(2, 1, 3).conj(), gr(2, 1, -3));
  EXPECT_EQ(GaussianRational(5).conj(), GaussianRational(5));
}

TEST(GaussianRational, LowestTerms) {
  const GaussianRational a = gr(2, 4, -6, 8);
  EXPECT_EQ(a.re(), mpq_class(1, 2));
  EXPECT_EQ(a.im(), mpq_class(-3, 4));
  EXPECT_EQ(a, gr(1, 2, -3, 4));
}

TEST(GaussianRational, Printing) {
  EXPECT_EQ(GaussianRational(0).to_string(), "0");
  EXPECT_EQ(GaussianRational(-7).to_string(), "-7");
  EXPECT_EQ(GaussianRational::i().to_string(), "I");
  EXPECT_EQ((-GaussianRational::i()).to_string(), "-I");
  EXPECT_EQ(gr(0, 1, 2).to_string(), "2*I");
  EXPECT_EQ(gr(0, 1, 1, 2).to_string(), "1/2*I");
  EXPECT_EQ(gr(1, 2, 3, 4).to_string(), "1/2 + 3/4*I");
  EXPECT_EQ(gr(1, 1, -1).to_string(), "1 - I");
}

TEST(GaussianRationalProperty, FieldAxioms) {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 300; ++t) {
    const auto a = crtest::random_gr(rng, 9), b = crtest::random_gr(rng, 9), c = crtest::random_gr(rng, 9);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, GaussianRational(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), GaussianRational(1));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(GaussianRationalProperty, ConjIsAutomorphism) {
  std::mt19937 rng(77);
  for (int t = 0; t < 300; ++t) {
    const auto a = crtest::random_gr(rng, 9), b = crtest::random_gr(rng, 9);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
  }
}

TEST(GaussianRationalProperty, PrintParseRoundTrip) {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto a = crtest::random_gr(rng, 40);
    EXPECT_EQ(crclass::parse_number(a.to_string()), a) << a.to_string();
  }
}
