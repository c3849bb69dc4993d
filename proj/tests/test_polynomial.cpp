#include <gtest/gtest.h>

#include "clustermirror/polynomial.hpp"

using namespace clustermirror;

namespace {

Polynomial x(std::size_t i) { return Polynomial::variable(2, i); }
Polynomial c(long v) { return Polynomial(2, Rat(v)); }

} // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
    Polynomial p = x(0) * x(0) - c(2) * x(0) * x(1) + c(1);
    EXPECT_EQ(p.to_string({"x1", "x2"}), "x1^2 - 2*x1*x2 + 1");
    EXPECT_EQ((p - p).to_string({"x1", "x2"}), "0");
}

TEST(Polynomial, ExactDivision) {
    Polynomial a = x(0) + x(1);
    Polynomial b = x(0) - x(1);
    EXPECT_EQ((a * b).exact_div(a), b);
    EXPECT_THROW((a * b + c(1)).exact_div(a), InvariantError);
}

TEST(Polynomial, GcdMultivariate) {
    Polynomial g = x(0) * x(1) - c(1);
    Polynomial a = g * (x(0) + c(3));
    Polynomial b = g * (x(1) * x(1) + x(0));
    EXPECT_EQ(gcd(a, b), g.monic());
    EXPECT_EQ(gcd(x(0), x(1)), c(1));
}

TEST(RationalFunction, LowestTerms) {
    RationalFunction r(x(0) * x(0) - x(1) * x(1), x(0) + x(1));
    EXPECT_EQ(r.to_string(), "x1 - x2");
    RationalFunction s(c(2) * x(0), c(4) * x(1));
    EXPECT_EQ(s.to_string(), "1/2*x1/x2");
}

TEST(RationalFunction, FieldOperations) {
    RationalFunction a = RationalFunction::variable(2, 0);
    RationalFunction b = RationalFunction::variable(2, 1);
    RationalFunction one(1);
    RationalFunction q = a / (one - b);
    EXPECT_EQ(q * (one - b), a);
    EXPECT_EQ(q - q, RationalFunction(0));
    EXPECT_THROW(a / RationalFunction(0), ValidationError);
}

TEST(RationalFunction, LaurentMonomial) {
    RationalFunction m = RationalFunction::laurent_monomial(2, {1, -2});
    EXPECT_EQ(m.to_string(), "x1/x2^2");
    EXPECT_EQ(m * RationalFunction::laurent_monomial(2, {-1, 2}), RationalFunction(1));
}
