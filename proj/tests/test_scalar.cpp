#include <gtest/gtest.h>

#include <complex>

#include "gen.hpp"

using namespace translie;

TEST(Scalar, RationalProduct) { EXPECT_EQ(Scalar(1, 2) * Scalar(2, 3), Scalar(1, 3)); }

TEST(Scalar, ImaginaryUnitSquaresToMinusOne) {
  const Scalar i = Scalar::imaginary_unit();
  EXPECT_EQ(i * i, Scalar(-1));
}

TEST(Scalar, AdditiveCancellation) {
  const Scalar i = Scalar::imaginary_unit();
  EXPECT_EQ((Scalar(3, 4) + Scalar(1, 2) * i) + (Scalar(1, 4) - Scalar(1, 2) * i), Scalar(1));
}

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
  EXPECT_EQ(Scalar(3, -6), Scalar(-1, 2));
  EXPECT_EQ(Scalar(3, -6).to_string(), "-1/2");
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(1, 0), DivisionByZero);
  EXPECT_THROW(Scalar(3) / Scalar(), DivisionByZero);
}

TEST(Scalar, ComplexDivision) {
  const Scalar i = Scalar::imaginary_unit();
  const Scalar z = Scalar(1) + i;
  EXPECT_EQ(Scalar(2) / z, Scalar(1) - i);
  EXPECT_EQ(z * z.conj(), Scalar(2));
}

TEST(Scalar, Formatting) {
  const Scalar i = Scalar::imaginary_unit();
  EXPECT_EQ(Scalar(5).to_string(), "5");
  EXPECT_EQ(i.to_string(), "i");
  EXPECT_EQ((-i).to_string(), "-i");
  EXPECT_EQ((Scalar(-2) * i).to_string(), "-2i");
  EXPECT_EQ((Scalar(1, 2) + Scalar(5) * i).to_string(), "1/2+5i");
  EXPECT_EQ((Scalar(1, 2) - Scalar(1, 3) * i).to_string(), "1/2-1/3i");
}

TEST(Scalar, ParseExamples) {
  EXPECT_EQ(Scalar::parse("5"), Scalar(5));
  EXPECT_TRUE(Scalar::parse("5").is_real());
  EXPECT_EQ(Scalar::parse("-3/4"), Scalar(-3, 4));
  EXPECT_EQ(Scalar::parse("1+2i"), Scalar(1) + Scalar(2) * Scalar::imaginary_unit());
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::imaginary_unit());
  EXPECT_THROW(Scalar::parse(""), ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), ParseError);
  EXPECT_THROW(Scalar::parse("abc"), ParseError);
}

TEST(ScalarProperty, ParseInvertsToString) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 2000; ++n) {
    const Scalar s = gen::scalar(rng, 50);
    EXPECT_EQ(Scalar::parse(s.to_string()), s) << s;
  }
}

// Exact field operations agree with floating point up to rounding.
TEST(ScalarProperty, AgreesWithComplexDouble) {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 1000; ++n) {
    const Scalar a = gen::scalar(rng), b = gen::nonzero_scalar(rng);
    const auto da = a.to_complex(), db = b.to_complex();
    EXPECT_LT(std::abs((a + b).to_complex() - (da + db)), 1e-12);
    EXPECT_LT(std::abs((a - b).to_complex() - (da - db)), 1e-12);
    EXPECT_LT(std::abs((a * b).to_complex() - (da * db)), 1e-10);
    EXPECT_LT(std::abs((a / b).to_complex() - (da / db)), 1e-9);
  }
}

TEST(ScalarProperty, FieldAxioms) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 1000; ++n) {
    const Scalar a = gen::scalar(rng), b = gen::scalar(rng), c = gen::scalar(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
  }
}
