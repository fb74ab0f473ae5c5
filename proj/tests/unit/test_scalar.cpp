#include <gtest/gtest.h>

#include <sstream>

#include "pachner/dual.hpp"
#include "pachner/error.hpp"
#include "pachner/scalar.hpp"
#include "support.hpp"

using pachner::DualScalar;
using pachner::Error;
using pachner::ErrorCode;
using pachner::Scalar;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidConfig;
}

}  // namespace

TEST(Scalar, NormalizesOnConstruction) {
  EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
  EXPECT_EQ(Scalar(3, -6).str(), "-1/2");
  EXPECT_EQ(Scalar(5).str(), "5/1");
  EXPECT_EQ(Scalar(0, 7).str(), "0/1");
}

TEST(Scalar, ExactArithmetic) {
  EXPECT_EQ(Scalar(1, 3) + Scalar(1, 6), Scalar(1, 2));
  EXPECT_EQ(Scalar(1, 3) - Scalar(1, 2), Scalar(-1, 6));
  EXPECT_EQ(Scalar(2, 3) * Scalar(9, 4), Scalar(3, 2));
  EXPECT_EQ(Scalar(2, 3) / Scalar(4, 9), Scalar(3, 2));
  EXPECT_EQ(pow(Scalar(-2, 3), 3), Scalar(-8, 27));
  EXPECT_EQ(pow(Scalar(5, 7), 0), Scalar(1));
}

TEST(Scalar, DivisionByZeroIsAnError) {
  EXPECT_EQ(code_of([] { return Scalar(1, 0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { return Scalar(1) / Scalar(0); }), ErrorCode::DivisionByZero);
}

TEST(Scalar, ParseRoundTrip) {
  EXPECT_EQ(Scalar::parse("1/7"), Scalar(1, 7));
  EXPECT_EQ(Scalar::parse("-12"), Scalar(-12));
  EXPECT_EQ(Scalar::parse("-6/4"), Scalar(-3, 2));
  EXPECT_EQ(code_of([] { return Scalar::parse("6/-4"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(Scalar::parse(Scalar(-22, 7).str()), Scalar(-22, 7));
  EXPECT_EQ(code_of([] { return Scalar::parse("1/0"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { return Scalar::parse("x"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { return Scalar::parse(""); }), ErrorCode::InvalidConfig);
}

TEST(Scalar, OrderingAndSign) {
  EXPECT_LT(Scalar(1, 3), Scalar(1, 2));
  EXPECT_EQ(Scalar(-1, 3).sign(), -1);
  EXPECT_TRUE(Scalar(0).is_zero());
  EXPECT_DOUBLE_EQ(Scalar(1, 4).to_double(), 0.25);
}

TEST(ScalarProperty, FieldAxioms) {
  pachner::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = testing_support::random_rational(rng, 50);
    const Scalar b = testing_support::random_rational(rng, 50);
    const Scalar c = testing_support::random_rational(rng, 50);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Scalar(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Dual, ArithmeticRules) {
  const DualScalar x(Scalar(3), Scalar(1));
  const DualScalar c(Scalar(2));
  EXPECT_EQ((x * x).derivative(), Scalar(6));
  EXPECT_EQ((x + c).derivative(), Scalar(1));
  EXPECT_EQ((c - x).derivative(), Scalar(-1));
  EXPECT_EQ((c / x).value(), Scalar(2, 3));
  EXPECT_EQ((c / x).derivative(), Scalar(-2, 9));
  EXPECT_EQ((x / x).derivative(), Scalar(0));
}

TEST(Dual, DivisionByZeroValue) {
  const DualScalar zero(Scalar(0), Scalar(1));
  EXPECT_EQ(code_of([&] { return DualScalar(Scalar(1)) / zero; }), ErrorCode::DivisionByZero);
}

TEST(Dual, Printing) {
  std::ostringstream os;
  os << DualScalar(Scalar(1, 2), Scalar(-3));
  EXPECT_NE(os.str().find("1/2"), std::string::npos);
  EXPECT_NE(os.str().find("-3/1"), std::string::npos);
}

TEST(DualProperty, ProductAndQuotientRules) {
  pachner::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const DualScalar u(testing_support::random_rational(rng), testing_support::random_rational(rng));
    const DualScalar v(testing_support::random_rational(rng), testing_support::random_rational(rng));
    EXPECT_EQ((u * v).derivative(), u.derivative() * v.value() + u.value() * v.derivative());
    if (!v.value().is_zero()) {
      const Scalar expected =
          (u.derivative() * v.value() - u.value() * v.derivative()) / (v.value() * v.value());
      EXPECT_EQ((u / v).derivative(), expected);
    }
  }
}
