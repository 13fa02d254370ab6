// Exact q-numbers, Laurent polynomials, rational functions and surds.

#include <gtest/gtest.h>

#include <cmath>

#include "qvbs/qnum.hpp"
#include "qvbs/ratq.hpp"
#include "qvbs/surd.hpp"

using namespace qvbs;

namespace {

// (q^n - q^-n) / (q - q^-1) straight from the definition.
double direct_q_integer(int n, double q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q); }

}  // namespace

TEST(LaurentQ, FrozenValues) {
  EXPECT_EQ(q_integer(3), LaurentQ::from_terms({{-2, 1}, {0, 1}, {2, 1}}));
  EXPECT_EQ(q_factorial(3), LaurentQ::from_terms({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}}));
  EXPECT_EQ(q_binomial(4, 2), LaurentQ::from_terms({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
  EXPECT_EQ(eval_at(q_integer(2), 2.0), 2.5);
  EXPECT_EQ(q_factorial(0), LaurentQ(1));
  EXPECT_EQ(q_integer(1), LaurentQ(1));
}

TEST(LaurentQ, Arithmetic) {
  const LaurentQ q = LaurentQ::q_power(1);
  const LaurentQ qi = LaurentQ::q_power(-1);
  EXPECT_EQ((q + qi) * (q - qi), LaurentQ::q_power(2) - LaurentQ::q_power(-2));
  EXPECT_EQ((q + qi).pow(2), LaurentQ::q_power(2) + LaurentQ(2) + LaurentQ::q_power(-2));
  EXPECT_EQ(q.shifted(3), LaurentQ::q_power(4));
  EXPECT_EQ(q.bar(), qi);
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ(divide_exact(q_factorial(5), q_factorial(3)), q_integer(4) * q_integer(5));
}

TEST(LaurentQ, QIntegerMatchesDefinition) {
  for (double q : {0.3, 0.7, 1.3, 2.0}) {
    for (int n = 0; n <= 12; ++n) EXPECT_NEAR(q_integer_value(n, q), direct_q_integer(n, q), 1e-12 * direct_q_integer(n, q) + 1e-15);
  }
  for (int n = 0; n <= 6; ++n) EXPECT_DOUBLE_EQ(q_integer_value(n, 1.0), n);
}

TEST(LaurentQ, QPascalRecurrences) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      const LaurentQ lhs = q_binomial(n, k);
      EXPECT_EQ(lhs, q_binomial(n - 1, k).shifted(-k) + q_binomial(n - 1, k - 1).shifted(n - k)) << n << " " << k;
      EXPECT_EQ(lhs, q_binomial(n - 1, k).shifted(k) + q_binomial(n - 1, k - 1).shifted(k - n)) << n << " " << k;
    }
  }
}

TEST(LaurentQ, BinomialIsFactorialRatio) {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k), q_factorial(n));
  }
}

TEST(LaurentQ, ExactEvaluation) {
  const mpq_class half(1, 2);
  EXPECT_EQ(q_integer(2).eval(half), mpq_class(5, 2));
  EXPECT_EQ(q_integer(3).eval(mpq_class(2)), mpq_class(21, 4));
}

TEST(RatQ, CanonicalForm) {
  const RatQ a(q_integer(4), q_integer(2));
  EXPECT_TRUE(a.is_laurent());
  EXPECT_EQ(a.as_laurent(), LaurentQ::q_power(2) + LaurentQ::q_power(-2));
  const RatQ b(q_integer(3), q_integer(2));
  EXPECT_FALSE(b.is_laurent());
  EXPECT_EQ(b * RatQ(q_integer(2)), RatQ(q_integer(3)));
  EXPECT_EQ(b + b - b, b);
  EXPECT_EQ(b / b, RatQ(1));
  EXPECT_EQ(b.bar(), b);
}

TEST(Surd, SquareRootsSquareBack) {
  for (int n = 0; n <= 7; ++n) {
    const Surd s = Surd::sqrt_q_factorial(n);
    EXPECT_EQ((s * s).as_ratq(), RatQ(q_factorial(n)));
    for (int k = 0; k <= n; ++k) {
      const Surd b = Surd::sqrt_q_binomial(n, k);
      EXPECT_EQ((b * b).as_ratq(), RatQ(q_binomial(n, k)));
    }
  }
  const Surd h = Surd::q_half_power(3);
  EXPECT_EQ((h * h).as_ratq(), RatQ(LaurentQ::q_power(3)));
  EXPECT_NEAR(h.value(2.0), std::pow(2.0, 1.5), 1e-12);
  EXPECT_NEAR(Surd::sqrt_q_factorial(4).value(0.8), std::sqrt(q_factorial_value(4, 0.8)), 1e-12);
}

TEST(Surd, DifferentRadicandsDoNotAdd) {
  EXPECT_THROW((void)(Surd::q_half_power(1) + Surd(1)), ArithmeticError);
  EXPECT_THROW((void)Surd::q_half_power(1).as_ratq(), ArithmeticError);
}
