#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "rpoly/laurent.hpp"

namespace rpoly {
namespace {

const LaurentPoly q = LaurentPoly::q();

LaurentPoly random_poly(std::mt19937& gen) {
  std::uniform_int_distribution<int> exp(-4, 4);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> count(0, 5);
  LaurentPoly p;
  for (int k = count(gen); k > 0; --k) p.add_term(coeff(gen), exp(gen));
  return p;
}

TEST(Laurent, Examples) {
  EXPECT_EQ((q - 1) * (q + 1), q * q - 1);
  EXPECT_EQ(pow(q - 1, 0), LaurentPoly(1));
  const LaurentPoly p = q * q - 3 * q + LaurentPoly::monomial(4, -2);
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_EQ(LaurentPoly::q_minus_one_pow(1), q - 1);
  EXPECT_EQ(LaurentPoly::q_minus_one_pow(3),
            LaurentPoly::from_terms({{3, 1}, {2, -3}, {1, 3}, {0, -1}}));
  EXPECT_TRUE(LaurentPoly::monomial(0, 5).is_zero());
  EXPECT_EQ(LaurentPoly::monomial(0, 5), LaurentPoly());
}

TEST(Laurent, CanonicalForm) {
  LaurentPoly p = q + 1;
  p.add_term(-1, 1);
  EXPECT_EQ(p, LaurentPoly(1));
  EXPECT_EQ(p.terms().size(), 1U);
  EXPECT_EQ(LaurentPoly::from_terms({{2, 0}, {1, 4}}), LaurentPoly::monomial(4, 1));
  EXPECT_EQ(p.coeff(7), 0);
  EXPECT_EQ((q * q - 1).degree(), 2);
  EXPECT_EQ((q * q - 1).low_degree(), 0);
  EXPECT_THROW(LaurentPoly().degree(), std::exception);
  EXPECT_EQ(LaurentPoly::monomial(3, 2).shifted(-5), LaurentPoly::monomial(3, -3));
}

TEST(Laurent, Bar) {
  EXPECT_EQ(bar(q), LaurentPoly::monomial(1, -1));
  EXPECT_EQ(bar(q - 1), LaurentPoly::monomial(1, -1) - 1);
  std::mt19937 gen(7);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = random_poly(gen);
    const LaurentPoly b = random_poly(gen);
    EXPECT_EQ(bar(bar(a)), a);
    EXPECT_EQ(bar(a * b), bar(a) * bar(b));
    EXPECT_EQ(bar(a + b), bar(a) + bar(b));
  }
}

TEST(Laurent, RingLaws) {
  std::mt19937 gen(11);
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly a = random_poly(gen);
    const LaurentPoly b = random_poly(gen);
    const LaurentPoly c = random_poly(gen);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - b, a + (-b));
    EXPECT_EQ(a * 1, a);
    EXPECT_TRUE((a * 0).is_zero());
    EXPECT_EQ(pow(a, 3), a * a * a);
  }
}

TEST(Laurent, CoefficientsBeyondMachineWords) {
  const LaurentPoly p = pow(q + 1, 200);
  BigInt binom = 1;
  for (int k = 0; k < 100; ++k) binom = binom * (200 - k) / (k + 1);
  EXPECT_EQ(p.coeff(100), binom);
  EXPECT_GT(p.coeff(100), BigInt(std::numeric_limits<long long>::max()));
  EXPECT_EQ(p.degree(), 200);
  EXPECT_EQ(LaurentPoly::q_minus_one_pow(200).coeff(100), binom);
}

TEST(Laurent, HumanFormat) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(LaurentPoly(-1).to_string(), "-1");
  EXPECT_EQ((-q).to_string(), "-q");
  EXPECT_EQ(bar(q).to_string(), "q^-1");
  const LaurentPoly p = pow(q, 4) - 3 * pow(q, 3) + LaurentPoly::monomial(2, -2) - 5;
  EXPECT_EQ(p.to_string(), "q^4 - 3*q^3 - 5 + 2*q^-2");
  std::ostringstream os;
  os << (q - 1);
  EXPECT_EQ(os.str(), "q - 1");
}

}  // namespace
}  // namespace rpoly
