#include <gtest/gtest.h>

#include <random>

#include "bridge.hpp"
#include "qcongr/rat_func.hpp"
#include "qcongr/serialize.hpp"

using namespace qcongr;
using bridge::to_oracle;

namespace {

RatPoly rp(std::initializer_list<long> c) { return RatPoly(IntPoly(c)); }
RatFunc rf(std::initializer_list<long> num, std::initializer_list<long> den) { return RatFunc(rp(num), rp(den)); }

}  // namespace

TEST(IntPoly, ZeroHasOneEncoding) {
  EXPECT_TRUE(IntPoly().is_zero());
  EXPECT_EQ(IntPoly({0, 0, 0}), IntPoly());
  EXPECT_EQ(IntPoly(std::vector<Integer>{0}), IntPoly());
  EXPECT_FALSE(IntPoly().degree().has_value());
  EXPECT_EQ(IntPoly({5}).degree(), 0u);
  EXPECT_EQ(IntPoly({1, 2, 0}).degree(), 1u);
}

TEST(IntPoly, BasicArithmetic) {
  EXPECT_EQ(IntPoly({1, 1}) * IntPoly({1, -1}), IntPoly({1, 0, -1}));
  EXPECT_EQ(IntPoly({1, 1, 1}) * IntPoly(), IntPoly());
  EXPECT_EQ(IntPoly({1, 1}).pow(2) * IntPoly({1, 1}).pow(3), IntPoly({1, 5, 10, 10, 5, 1}));
  EXPECT_EQ(IntPoly::one_minus_q_power(3), IntPoly({1, 0, 0, -1}));
  EXPECT_EQ(IntPoly({1, 2}).shifted(2), IntPoly({0, 0, 1, 2}));
  EXPECT_EQ(IntPoly({0, 0, 1, 2}).unshifted(2), IntPoly({1, 2}));
  EXPECT_EQ(IntPoly({2, 4, 6}).content(), 2);
  EXPECT_EQ(IntPoly({-2, 4, -6}).primitive_part(), IntPoly({1, -2, 3}));
  EXPECT_EQ(IntPoly({1, 2, 3}).eval(2), 17);
}

TEST(IntPoly, DivideOneMinusQPower) {
  const IntPoly f = IntPoly::one_minus_q_power(6);
  EXPECT_EQ(f.divide_one_minus_q_power(2), IntPoly({1, 0, 1, 0, 1}));
  EXPECT_THROW(IntPoly({1, 1}).divide_one_minus_q_power(1), std::domain_error);
}

TEST(IntPoly, KaratsubaMatchesSchoolbook) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const IntPoly a = bridge::random_int_poly(rng, 300, 1000000);
    const IntPoly b = bridge::random_int_poly(rng, 300, 1000000);
    EXPECT_EQ(multiply_karatsuba(a, b), multiply_schoolbook(a, b));
  }
}

TEST(IntPoly, KaratsubaThresholdIsClamped) {
  const std::size_t old = karatsuba_threshold();
  set_karatsuba_threshold(1);
  EXPECT_GE(karatsuba_threshold(), 4u);
  set_karatsuba_threshold(old);
}

TEST(IntPoly, PseudoDivisionIdentity) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const IntPoly a = bridge::random_int_poly(rng, 25, 1000);
    IntPoly b = bridge::random_int_poly(rng, 10, 1000);
    if (b.is_zero()) continue;
    const PseudoDivision d = pseudo_divrem(a, b);
    EXPECT_EQ(a * d.multiplier, d.quot * b + d.rem);
    if (!d.rem.is_zero()) EXPECT_LT(*d.rem.degree(), *b.degree());
  }
}

TEST(IntPoly, DivideExact) {
  const IntPoly a = IntPoly({1, 1}) * IntPoly({3, -1, 7});
  EXPECT_EQ(divide_exact(a, IntPoly({1, 1})), IntPoly({3, -1, 7}));
  EXPECT_FALSE(divide_exact(a, IntPoly({1, 2})).has_value());
  EXPECT_FALSE(divide_exact(IntPoly({1, 0, 1}), IntPoly({2})).has_value());
}

TEST(RatPoly, Invariants) {
  const RatPoly p(Rational(3, 4), IntPoly({-4, 0, -8}));
  EXPECT_EQ(p.prim(), IntPoly({1, 0, 2}));
  EXPECT_EQ(p.scale(), Rational(-3));
  EXPECT_EQ(p.coeff(2), Rational(-6));
  EXPECT_TRUE(RatPoly(Rational(0), IntPoly({1})).is_zero());
  EXPECT_EQ(RatPoly().scale(), 0);
}

TEST(RatPoly, SpecExamples) {
  EXPECT_EQ(poly_mul(rp({1, 1}), rp({1, -1})), rp({1, 0, -1}));
  EXPECT_TRUE(poly_mul(rp({1, 1, 1}), RatPoly()).is_zero());
  EXPECT_EQ(poly_mul(rp({1, 1}).pow(2), rp({1, 1}).pow(3)), rp({1, 5, 10, 10, 5, 1}));

  auto d1 = poly_divrem(rp({-1, 0, 1}), rp({-1, 1}));
  EXPECT_EQ(d1.quot, rp({1, 1}));
  EXPECT_TRUE(d1.rem.is_zero());
  auto d2 = poly_divrem(rp({1, 0, 1}), rp({1, 1}));
  EXPECT_EQ(d2.quot, rp({-1, 1}));
  EXPECT_EQ(d2.rem, rp({2}));
  auto d3 = poly_divrem(rp({3, 5, 1, -1}), rp({1, 2, 1}));
  EXPECT_EQ(d3.quot, rp({3, -1}));
  EXPECT_TRUE(d3.rem.is_zero());
  EXPECT_THROW(poly_divrem(rp({1}), RatPoly()), std::domain_error);

  EXPECT_EQ(poly_gcd(rp({-1, 0, 1}), rp({1, -2, 1})), rp({-1, 1}));
  EXPECT_EQ(poly_gcd(rp({1, 1}), rp({1, 1, 1})), rp({1}));
  EXPECT_EQ(poly_gcd(rp({2, 4}), RatPoly()), rp({1, 2}) * Rational(1, 2));
  EXPECT_THROW(poly_gcd(RatPoly(), RatPoly()), std::domain_error);

  EXPECT_EQ(poly_eval(rp({1, 1, 1}), 1), 3);
  EXPECT_EQ(poly_eval(rp({1, 1}).pow(4), 1), 16);
  EXPECT_EQ(poly_eval(rp({1, 1, 2, 1, 1}), 1), 6);
  EXPECT_EQ(poly_eval(rp({1, 2}) * Rational(1, 3), Rational(1, 2)), Rational(2, 3));
}

TEST(RatPoly, RingAxiomsAgainstOracle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const RatPoly a = bridge::random_rat_poly(rng, 30, 1000000);
    const RatPoly b = bridge::random_rat_poly(rng, 30, 1000000);
    const RatPoly c = bridge::random_rat_poly(rng, 30, 1000000);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(to_oracle(a * b), oracle::mul(to_oracle(a), to_oracle(b)));
    ASSERT_EQ(to_oracle(a - b), oracle::sub(to_oracle(a), to_oracle(b)));
  }
}

TEST(RatPoly, DivRemReconstructs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const RatPoly a = bridge::random_rat_poly(rng, 30, 1000);
    const RatPoly b = bridge::random_nonzero_rat_poly(rng, 12, 1000);
    const DivRem d = poly_divrem(a, b);
    ASSERT_EQ(d.quot * b + d.rem, a);
    if (!d.rem.is_zero()) ASSERT_LT(*d.rem.degree(), *b.degree());
    const auto [oq, orem] = oracle::divmod(to_oracle(a), to_oracle(b));
    ASSERT_EQ(to_oracle(d.quot), oq);
    ASSERT_EQ(to_oracle(d.rem), orem);
  }
}

TEST(RatPoly, GcdProperties) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const RatPoly a = bridge::random_nonzero_rat_poly(rng, 8, 50);
    const RatPoly b = bridge::random_nonzero_rat_poly(rng, 8, 50);
    const RatPoly g = bridge::random_nonzero_rat_poly(rng, 5, 20);
    const RatPoly ag = a * g, bg = b * g;
    const RatPoly h = poly_gcd(ag, bg);
    ASSERT_TRUE(poly_divrem(ag, h).rem.is_zero());
    ASSERT_TRUE(poly_divrem(bg, h).rem.is_zero());
    ASSERT_EQ(h, (g * poly_gcd(a, b)).monic());
    ASSERT_EQ(to_oracle(h), oracle::gcd(to_oracle(ag), to_oracle(bg)));
  }
}

TEST(RatPoly, HeuristicGcdAgreesWithPrs) {
  std::mt19937_64 rng(5);
  int heuristic_used = 0;
  for (int i = 0; i < 300; ++i) {
    const IntPoly g = bridge::random_int_poly(rng, 6, 30);
    const IntPoly a = bridge::random_int_poly(rng, 10, 30) * g;
    const IntPoly b = bridge::random_int_poly(rng, 10, 30) * g;
    if (a.is_zero() || b.is_zero()) continue;
    const IntPoly prs = primitive_gcd_prs(a, b);
    if (auto h = primitive_gcd_heuristic(a, b)) {
      ++heuristic_used;
      ASSERT_EQ(*h, prs);
    }
    ASSERT_EQ(primitive_gcd(a, b), prs);
  }
  EXPECT_GT(heuristic_used, 100);
}

TEST(RatFunc, SpecExamples) {
  const RatFunc inv1 = rf({1}, {1, -1});
  EXPECT_EQ(ratfunc_arith(inv1, inv1, ArithOp::Add), rf({2}, {1, -1}));
  const RatFunc diff = ratfunc_arith(inv1, rf({1}, {1, 0, -1}), ArithOp::Sub);
  EXPECT_EQ(diff.den(), rp({-1, 0, 1}));
  EXPECT_EQ(diff.num(), rp({0, -1}));
  EXPECT_EQ(rf({-1, 0, 1}, {-1, 1}), RatFunc(rp({1, 1})));
  EXPECT_TRUE(rf({-1, 0, 1}, {-1, 1}).is_polynomial());
  EXPECT_THROW(ratfunc_arith(inv1, RatFunc(), ArithOp::Div), std::domain_error);
  EXPECT_THROW(RatFunc(rp({1}), RatPoly()), std::domain_error);
}

TEST(RatFunc, NegativeQPowers) {
  EXPECT_EQ(RatFunc::q_power(-2) * RatFunc::q_power(3), RatFunc::q_power(1));
  EXPECT_EQ(RatFunc::q_power(-1).den(), rp({0, 1}));
  EXPECT_EQ(RatFunc::q_power(2).pow(-2), RatFunc::q_power(-4));
}

TEST(RatFunc, FieldPropertiesAgainstOracle) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 500; ++i) {
    const RatFunc f(bridge::random_rat_poly(rng, 6, 40), bridge::random_nonzero_rat_poly(rng, 5, 40));
    const RatFunc g(bridge::random_nonzero_rat_poly(rng, 6, 40), bridge::random_nonzero_rat_poly(rng, 5, 40));
    ASSERT_EQ(f.normalized(), f);
    ASSERT_TRUE(f.den().is_zero() == false && f.den().leading() == 1);
    ASSERT_EQ((f + g) - g, f);
    ASSERT_EQ((f * g) / g, f);
    const oracle::Frac expect = oracle::add(to_oracle(f), to_oracle(g));
    const oracle::Frac got = to_oracle(f + g);
    ASSERT_EQ(got.num, expect.num);
    ASSERT_EQ(got.den, expect.den);
    if (!f.is_zero() && !f.den().is_constant()) {
      ASSERT_TRUE(poly_gcd(f.num(), f.den()).is_constant());
    }
  }
}

TEST(Serialize, RoundTrip) {
  EXPECT_EQ(to_coeff_list(IntPoly({1, -1, 1})), "1,-1,1");
  EXPECT_EQ(to_coeff_list(IntPoly()), "0");
  EXPECT_EQ(to_coeff_list(RatPoly(Rational(1, 2), IntPoly({1, 0, 3}))), "1/2,0,3/2");
  EXPECT_EQ(to_coeff_list(rf({1}, {0, 1})), "1 / 0,1");
  EXPECT_EQ(parse_int_poly("1,-1,1"), IntPoly({1, -1, 1}));
  EXPECT_EQ(parse_int_poly("0"), IntPoly());
  EXPECT_THROW(parse_int_poly("1,x"), std::invalid_argument);
  EXPECT_THROW(parse_int_poly("1/2"), std::invalid_argument);
  EXPECT_THROW(parse_int_poly(""), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const RatFunc f(bridge::random_rat_poly(rng, 6, 40), bridge::random_nonzero_rat_poly(rng, 5, 40));
    ASSERT_EQ(parse_rat_func(to_coeff_list(f)), f);
  }
}
