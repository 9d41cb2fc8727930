#include <gtest/gtest.h>

#include "mfpoly/gaussian.hpp"
#include "test_support.hpp"

namespace mfpoly {
namespace {

TEST(BigRational, TextbookArithmetic) {
  EXPECT_EQ(rat(1, 2) + rat(1, 3), rat(5, 6));
  EXPECT_EQ(rat(-3, 7) / rat(-3, 7), rat(1));
  EXPECT_EQ(rat(1, 2) - rat(1, 2), rat(0));
  EXPECT_EQ(rat(2, 3) * rat(3, 2), rat(1));
}

TEST(BigRational, CanonicalForm) {
  const BigRational half(2, 4);
  EXPECT_EQ(half.numerator(), 1);
  EXPECT_EQ(half.denominator(), 2);

  // sign always lives on the numerator
  const BigRational neg(3, -9);
  EXPECT_EQ(neg.numerator(), -1);
  EXPECT_EQ(neg.denominator(), 3);

  EXPECT_EQ(BigRational(0, 17).str(), "0");
  EXPECT_EQ(BigRational(0, 17).denominator(), 1);
}

TEST(BigRational, ZeroDenominatorRejected) {
  EXPECT_THROW(BigRational(1, 0), DivisionByZero);
  EXPECT_THROW(rat(1) / rat(0), DivisionByZero);
  BigRational x(5, 3);
  EXPECT_THROW(x /= BigRational(0), DivisionByZero);
}

TEST(BigRational, ParseRenderRoundTrip) {
  for (const char* text : {"0", "-3", "5/7", "-5/7", "123456789123456789123456789/2"}) {
    EXPECT_EQ(BigRational::parse(text).str(), text);
  }
  EXPECT_EQ(BigRational::parse("4/6"), rat(2, 3));
  EXPECT_THROW(BigRational::parse(""), ParseError);
  EXPECT_THROW(BigRational::parse("1/0"), ParseError);
  EXPECT_THROW(BigRational::parse("two"), ParseError);
  EXPECT_THROW(BigRational::parse("1/-2"), ParseError);
}

TEST(BigRational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(20210907);
  for (int iter = 0; iter < 500; ++iter) {
    const BigRational x = testing::random_rational(rng);
    const BigRational y = testing::random_rational(rng);
    const BigRational z = testing::random_rational(rng);

    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + (-x), rat(0));
    if (!x.is_zero()) {
      EXPECT_EQ(x / x, rat(1));
      EXPECT_EQ((y / x) * x, y);
    }

    // canonical after arbitrary ops
    const BigRational w = x * y + z;
    EXPECT_GT(w.denominator(), 0);
    EXPECT_EQ(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(w.numerator())),
                                         w.denominator()),
              1);
    EXPECT_EQ(BigRational::parse(w.str()), w);
  }
}

TEST(BigRational, PowAndToDouble) {
  EXPECT_EQ(rat(1, 2).pow(0), rat(1));
  EXPECT_EQ(rat(-2, 3).pow(3), rat(-8, 27));
  EXPECT_DOUBLE_EQ(rat(5, 36).to_double(), 5.0 / 36.0);
}

TEST(GaussianRational, ImaginaryUnit) {
  const GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, GaussianRational(BigRational(-1)));
  EXPECT_EQ((GaussianRational(1) + i) * (GaussianRational(1) - i), GaussianRational(2));
}

TEST(GaussianRational, Projections) {
  const GaussianRational z(rat(3, 2), rat(5, 7));
  EXPECT_EQ(z.re(), rat(3, 2));
  EXPECT_EQ(z.im(), rat(5, 7));
  EXPECT_EQ(z.conj().im(), rat(-5, 7));
}

TEST(GaussianRational, ConjugateNormIsRealNonnegative) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const GaussianRational z = testing::random_gaussian(rng);
    const GaussianRational zz = z.conj() * z;
    EXPECT_TRUE(zz.is_real());
    EXPECT_GE(zz.re(), rat(0));
    EXPECT_EQ(zz.re(), z.norm());
  }
}

TEST(GaussianRational, DivisionExact) {
  std::mt19937_64 rng(6);
  for (int iter = 0; iter < 200; ++iter) {
    const GaussianRational z = testing::random_gaussian(rng);
    const GaussianRational w = testing::random_gaussian(rng);
    if (w.is_zero()) continue;
    EXPECT_EQ((z / w) * w, z);
  }
  EXPECT_THROW(GaussianRational(1) / GaussianRational(), DivisionByZero);
}

TEST(GaussianRational, ParseRenderRoundTrip) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const GaussianRational z = testing::random_gaussian(rng);
    EXPECT_EQ(GaussianRational::parse(z.str()), z);
  }
  EXPECT_EQ(GaussianRational(rat(3, 2), rat(5, 7)).str(), "(3/2)+(5/7)i");
  EXPECT_THROW(GaussianRational::parse("(1)+(2)"), ParseError);
  EXPECT_THROW(GaussianRational::parse("1+2i"), ParseError);
}

}  // namespace
}  // namespace mfpoly
