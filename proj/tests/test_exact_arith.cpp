#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace germ;
using testing_support::R;

namespace {

RationalFunction rf(Polynomial n, Polynomial d = Polynomial::constant(1)) { return {std::move(n), std::move(d)}; }
const Polynomial one_minus_q{1, -1};

}  // namespace

TEST(RationalTest, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), ratio(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+2/6"), ratio(1, 3));
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("a/2"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(to_string(ratio(-4, 6)), "-2/3");
}

TEST(RationalTest, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(40, 20), Integer("137846528820"));
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(PolynomialTest, ArithmeticAndTrim) {
  const Polynomial a{1, 2, 0, 0}, b{0, -2, 3};
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(a + b, (Polynomial{1, 0, 3}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * b, (Polynomial{0, -2, -1, 6}));
  EXPECT_EQ(Polynomial::one_minus_q_pow(3), (Polynomial{1, 0, 0, -1}));
  EXPECT_EQ(a(R("1/2")), Rational(2));
}

TEST(PolynomialTest, DivmodAndGcd) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing_support::random_polynomial(rng, 8, 5);
    const auto b = testing_support::random_nonzero(rng, 5, 5);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
  }
  const Polynomial g = gcd(Polynomial{-1, 0, 1}, Polynomial{-1, 0, 0, 1});  // q^2-1, q^3-1
  EXPECT_EQ(g, (Polynomial{-1, 1}));
}

TEST(PolynomialTest, FactorAtOne) {
  const Polynomial p = one_minus_q * one_minus_q * Polynomial{2, 1};
  const auto f = factor_at_one(p);
  EXPECT_EQ(f.order, 2);
  EXPECT_EQ(f.value, Rational(3));
  EXPECT_EQ(f.cofactor * one_minus_q * one_minus_q, p);
  EXPECT_THROW(order_at_one(Polynomial{}), PreconditionError);
}

TEST(PolynomialTest, FastOrderSignMatchesBigPath) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::int64_t> c(1 + rng() % 30);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 7) - 3;
    if (rng() % 2) {  // force a high-order zero at 1
      std::vector<std::int64_t> t(c.size() + 1, 0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        t[k] += c[k];
        t[k + 1] -= c[k];
      }
      c = t;
    }
    std::vector<Integer> big(c.begin(), c.end());
    const auto fast = detail::order_sign_at_one(c);
    const auto slow = detail::order_sign_big(big);
    EXPECT_EQ(fast.order, slow.order);
    EXPECT_EQ(fast.sign, slow.sign);
  }
}

TEST(PolynomialTest, ExpandAtOneRecomposes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = testing_support::random_polynomial(rng, 7, 9);
    const auto t = expand_at_one(p);
    // sum b_k (1 - q)^k must reproduce p.
    Polynomial acc, pw = Polynomial::constant(1);
    for (const auto& b : t) {
      acc += b * pw;
      pw = pw * one_minus_q;
    }
    EXPECT_EQ(acc, p);
  }
}

TEST(RationalFunctionTest, ArithExamples) {
  const auto a = rf({1}, one_minus_q), b = rf({0, 1}, one_minus_q);
  EXPECT_EQ(ratfun_arith(a, b, ArithOp::Sub), RationalFunction::constant(1));
  EXPECT_EQ(rf({1}, Polynomial::one_minus_q_pow(2)) * rf({1, 1}), rf({1}, one_minus_q));
  const auto c = rf({1}, Polynomial::one_minus_q_pow(3)) - rf({0, 0, 1}, Polynomial::one_minus_q_pow(3));
  EXPECT_EQ(c, rf({1, 1}, {1, 1, 1}));
  EXPECT_EQ(c.denominator().coefficient(0), 1);
  EXPECT_THROW(a / RationalFunction(), PreconditionError);
  EXPECT_THROW(rf({1}, {}), PreconditionError);
}

TEST(RationalFunctionTest, CanonicalFormIsStructural) {
  const auto f = rf({2, -2}, {4, 0, -4});  // 2(1-q) / 4(1-q^2) = 1/(2(1+q))
  EXPECT_EQ(f, rf({1}, {2, 2}));
  EXPECT_EQ(f.denominator().lowest_nonzero(), 1);
  EXPECT_EQ(f(R("1")), R("1/4"));
}

TEST(RationalFunctionTest, OrderAtOne) {
  EXPECT_EQ(order_at_one(rf({1}, one_minus_q)), -1);
  EXPECT_EQ(order_at_one(rf(one_minus_q * one_minus_q)), 2);
  EXPECT_EQ(order_at_one(rf(Polynomial::one_minus_q_pow(2), Polynomial::one_minus_q_pow(3))), 0);
  EXPECT_THROW(order_at_one(RationalFunction()), PreconditionError);
}

TEST(RationalFunctionTest, LaurentExamples) {
  const auto grandi = laurent_at_one(rf({1}, {1, 1}), 1);
  EXPECT_EQ(grandi.order, 0);
  EXPECT_EQ(grandi.coefficient(0), R("1/2"));
  EXPECT_EQ(grandi.coefficient(1), R("1/4"));

  const auto even = laurent_at_one(rf({1}, Polynomial::one_minus_q_pow(2)), 0);
  EXPECT_EQ(even.order, -1);
  EXPECT_EQ(even.coefficient(-1), R("1/2"));
  EXPECT_EQ(even.coefficient(0), R("1/4"));

  const auto five = laurent_at_one(RationalFunction::constant(5), 2);
  EXPECT_EQ(five.coefficient(0), 5);
  EXPECT_EQ(five.coefficient(1), 0);
  EXPECT_EQ(five.coefficient(2), 0);
  EXPECT_THROW(five.coefficient(3), PreconditionError);
  EXPECT_THROW(laurent_at_one(RationalFunction(), 2), PreconditionError);
  EXPECT_THROW(laurent_at_one(rf({1}, one_minus_q * one_minus_q), -3), PreconditionError);
}

TEST(RationalFunctionTest, SignNearOneExamples) {
  EXPECT_EQ(sign_near_one(rf(Polynomial::monomial(1) - Polynomial::monomial(12))), 1);
  EXPECT_EQ(sign_near_one(RationalFunction()), 0);
  const auto d = Polynomial::one_minus_q_pow(2);
  EXPECT_EQ(sign_near_one(rf({0, 1}, d) - rf({1}, d)), -1);
}

class RandomRationalFunctions : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2024};
  RationalFunction next() {
    return {testing_support::random_nonzero(rng, 5, 4), testing_support::random_nonzero(rng, 5, 4)};
  }
};

TEST_F(RandomRationalFunctions, OrderIsAdditive) {
  for (int i = 0; i < 200; ++i) {
    const auto f = next(), g = next();
    EXPECT_EQ(order_at_one(f * g), order_at_one(f) + order_at_one(g));
  }
}

TEST_F(RandomRationalFunctions, LaurentTruncationLeavesHigherOrder) {
  for (int i = 0; i < 100; ++i) {
    const auto f = next();
    const int k = order_at_one(f) + static_cast<int>(rng() % 4);
    const auto e = laurent_at_one(f, k);
    ASSERT_NE(e.leading(), 0);
    RationalFunction sum;
    for (int n = e.order; n <= k; ++n) {
      Polynomial tn = Polynomial::constant(1);
      for (int j = 0; j < std::abs(n); ++j) tn = tn * one_minus_q;
      sum = sum + (n >= 0 ? rf(e.coefficient(n) * tn) : rf(Polynomial::constant(e.coefficient(n)), tn));
    }
    const auto rest = f - sum;
    if (!rest.is_zero()) {
      EXPECT_GT(order_at_one(rest), k);
    }
  }
}

TEST_F(RandomRationalFunctions, SignRules) {
  for (int i = 0; i < 200; ++i) {
    const auto f = next(), g = next();
    EXPECT_EQ(sign_near_one(-f), -sign_near_one(f));
    EXPECT_EQ(sign_near_one(f * g), sign_near_one(f) * sign_near_one(g));
  }
}

TEST_F(RandomRationalFunctions, SignMatchesEvaluationOracle) {
  for (int i = 0; i < 1000; ++i) {
    const auto f = next();
    const int expected = testing_support::certified_sign_near_one(f.numerator()) *
                         testing_support::certified_sign_near_one(f.denominator());
    EXPECT_EQ(sign_near_one(f), expected) << f;
  }
}
