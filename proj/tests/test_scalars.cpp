#include <yh/cyclotomic.hpp>
#include <yh/laurent.hpp>
#include <yh/poly.hpp>
#include <yh/ratfunc.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace yh;

namespace {

RatFunc U() { return RatFunc::variable(kVarU); }
RatFunc Z() { return RatFunc::variable(kVarZ); }

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4), e(-2, 3), count(1, 4);
  std::vector<Poly::Term> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    m.exp[kVarU] = static_cast<std::int16_t>(e(rng));
    m.exp[kVarZ] = static_cast<std::int16_t>(e(rng));
    terms.emplace_back(m, Cyclotomic(c(rng)));
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace

TEST(Cyclotomic, RootsOfUnitySumToZero) {
  for (int d = 2; d <= 12; ++d) {
    Cyclotomic sum;
    for (int k = 0; k < d; ++k) sum += Cyclotomic::root_of_unity(d, k);
    EXPECT_TRUE(sum.is_zero()) << d;
    EXPECT_TRUE(Cyclotomic::root_of_unity(d, d).is_one());
    EXPECT_EQ(Cyclotomic::root_of_unity(d, -1), Cyclotomic::root_of_unity(d, d - 1));
  }
}

TEST(Cyclotomic, PolynomialDegrees) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(8), 4);
  EXPECT_EQ(euler_phi(12), 4);
  // Phi_6 = x^2 - x + 1
  const auto& p = cyclotomic_polynomial(6);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[1], -1);
  EXPECT_EQ(p[2], 1);
}

TEST(Cyclotomic, InverseAndDivision) {
  const Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
  const Cyclotomic a = z + Cyclotomic(2) - z * z * Cyclotomic(Rational(1, 3));
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(a / a, Cyclotomic(1));
  EXPECT_THROW(Cyclotomic(0).inverse(), std::domain_error);
}

TEST(Cyclotomic, Embedding) {
  // zeta_2 = -1, zeta_4^2 = zeta_2, zeta_3 = zeta_6^2
  EXPECT_EQ(Cyclotomic::root_of_unity(2, 1), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 2), Cyclotomic::root_of_unity(2, 1));
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  EXPECT_EQ(z3.embed(6), Cyclotomic::root_of_unity(6, 2));
  EXPECT_EQ(z3 + Cyclotomic::root_of_unity(6, 1), Cyclotomic::root_of_unity(6, 2) + Cyclotomic::root_of_unity(6, 1));
  EXPECT_THROW(z3 + Cyclotomic::root_of_unity(4, 1), std::invalid_argument);
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ(Cyclotomic(Rational(3, 2)).to_string(), "3/2");
  EXPECT_NE(Cyclotomic::root_of_unity(3, 1).to_string().find("E(3)"), std::string::npos);
}

TEST(Poly, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      const auto q = (a * b).divide_exact(b);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, a);
    }
  }
}

TEST(Poly, SubstituteConstant) {
  const Poly p = Poly::variable(kVarU, 2) + Poly::variable(kVarZ) * Poly(3);
  EXPECT_EQ(p.substitute_constant(kVarU, Cyclotomic(2)), Poly(4) + Poly::variable(kVarZ) * Poly(3));
}

TEST(Laurent, MatchesPolyArithmetic) {
  const Laurent a = Laurent::u(-1) + Laurent(2), b = Laurent::u(2) - Laurent(Rational(1, 3));
  EXPECT_EQ((a * b).to_poly(), a.to_poly() * b.to_poly());
  EXPECT_EQ((a + b).to_poly(), a.to_poly() + b.to_poly());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.coeff(-1), 1);
  EXPECT_EQ(a.coeff(5), 0);
}

TEST(RatFunc, EqualityByCrossMultiplication) {
  const RatFunc a = (U() * U() - RatFunc(1)) / (U() - RatFunc(1));
  EXPECT_EQ(a, U() + RatFunc(1));
  const RatFunc b = (U() * Z() + Z()) / (Z() * (U() + RatFunc(1)));
  EXPECT_EQ(b, RatFunc(1));
  EXPECT_NE(a, b);
}

TEST(RatFunc, FieldOperations) {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    if (q.is_zero() || r.is_zero()) continue;
    const RatFunc f(p, q), g(r, q + Poly(1));
    EXPECT_EQ((f + g) - g, f);
    if (!g.is_zero()) EXPECT_EQ((f * g) / g, f);
  }
}

TEST(RatFunc, ParseRoundTrip) {
  const RatFunc f = (U() * U() - RatFunc(3) * Z()) / (U() + RatFunc(Rational(1, 2)));
  EXPECT_EQ(RatFunc::parse(f.to_string()), f);
  EXPECT_THROW(RatFunc::parse("u + "), ParseError);
}

TEST(RatFunc, Substitute) {
  const RatFunc f = (Z() + U()) / Z();
  const RatFunc g = substitute(f, kVarZ, RatFunc(-1) / (U() + RatFunc(1)));
  // (-1/(u+1) + u) / (-1/(u+1)) = 1 - u(u+1)
  EXPECT_EQ(g, RatFunc(1) - U() * (U() + RatFunc(1)));
  EXPECT_THROW(substitute(RatFunc(1) / Z(), kVarZ, RatFunc(0)), std::domain_error);
}

TEST(RatFunc, LambdaSpecializesToU) {
  for (int s = 1; s <= 8; ++s) {
    const RatFunc z = RatFunc(-1) / ((U() + RatFunc(1)) * RatFunc(s));
    EXPECT_EQ(substitute(lambda_d(s), kVarZ, z), U()) << s;
  }
}

TEST(HalfPowerValue, FoldsIntegerPowers) {
  const HalfPowerValue::Context ctx{1, 1, false};
  const HalfPowerValue a(RatFunc(1), 2, ctx);
  EXPECT_EQ(a.half_flag(), 0);
  EXPECT_EQ(a.rational(), lambda_d(1));
  const HalfPowerValue b(RatFunc(1), -3, ctx);
  EXPECT_EQ(b.half_flag(), 1);
  EXPECT_EQ(b.rational(), lambda_d(1).pow(-2));
  EXPECT_EQ(b * b, HalfPowerValue(RatFunc(1), -6, ctx));
  EXPECT_NE(b.to_string().find("sqrt(lambda_D)"), std::string::npos);
  EXPECT_THROW(a + b, std::invalid_argument);
}
