#include <yh/algebra.hpp>

#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace yh;

namespace {

Laurent k_coeff(int d) { return (Laurent::u() - Laurent(1)).scaled(Rational(1, d)); }

}  // namespace

TEST(Permutation, ReducedWordsRebuildThePermutation) {
  std::mt19937 rng(5);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 40; ++i) {
      Perm w = identity_perm();
      std::shuffle(w.begin(), w.begin() + n, rng);
      const auto word = reduced_word(w, n);
      EXPECT_EQ(static_cast<int>(word.size()), perm_length(w, n));
      EXPECT_EQ(perm_from_word(word), w);
      EXPECT_EQ(perm_compose(w, perm_inverse(w, n), n), identity_perm());
    }
  }
  EXPECT_EQ(perm_to_string(perm_from_word({1}), 3), "[2,1,3]");
}

TEST(Algebra, QuadraticAtDOne) {
  // g^2 = u + (u - 1) g when there is no framing.
  const AlgebraElement g = gen_g(1, 2, 1);
  const AlgebraElement expected = unit(1, 2).scaled(Laurent::u()) + g.scaled(Laurent::u() - Laurent(1));
  EXPECT_EQ(g * g, expected);
}

TEST(Algebra, QuadraticWithFraming) {
  for (int d = 1; d <= 4; ++d) {
    const AlgebraElement g = gen_g(d, 3, 2), e = idempotent_e(d, 3, 2);
    const AlgebraElement rhs =
        unit(d, 3) + e.scaled(Laurent::u() - Laurent(1)) + (e * g).scaled(Laurent::u() - Laurent(1));
    EXPECT_EQ(g * g, rhs) << d;
  }
}

TEST(Algebra, InverseHasFourWordsAtDTwo) {
  const AlgebraElement inv = inverse_g(2, 2, 1);
  EXPECT_EQ(inv.size(), 4u);
  EXPECT_EQ(inv * gen_g(2, 2, 1), unit(2, 2));
  EXPECT_EQ(gen_g(2, 2, 1) * inv, unit(2, 2));
}

TEST(Algebra, IdempotentForm) {
  const AlgebraElement e = idempotent_e(2, 2, 1);
  EXPECT_EQ(e.to_string(), "1/2 + (1/2)*t1*t2");
  EXPECT_EQ(e * e, e);
}

TEST(Algebra, FramingGeneratorsHaveOrderD) {
  for (int d = 1; d <= 5; ++d) {
    AlgebraElement p = unit(d, 2);
    for (int k = 0; k < d; ++k) p = p * gen_t(d, 2, 2);
    EXPECT_EQ(p, unit(d, 2));
    EXPECT_EQ(gen_t(d, 2, 1, -1) * gen_t(d, 2, 1), unit(d, 2));
  }
}

TEST(Algebra, FramingCommutesThroughBraiding) {
  // g_1 t_1 = t_2 g_1
  const AlgebraElement lhs = gen_g(3, 2, 1) * gen_t(3, 2, 1);
  const AlgebraElement rhs = gen_t(3, 2, 2) * gen_g(3, 2, 1);
  EXPECT_EQ(lhs, rhs);
}

TEST(Algebra, DescentRuleCoefficients) {
  // g_1^2 at d = 2: 1 + (u-1)/2 (1 + t1 t2) (1 + g_1)
  const AlgebraElement g = gen_g(2, 2, 1);
  const AlgebraElement sq = g * g;
  BasisWord id, tt, gw, ttg;
  tt.a[0] = tt.a[1] = 1;
  gw.w = perm_from_word({1});
  ttg = gw;
  ttg.a[0] = ttg.a[1] = 1;
  EXPECT_EQ(sq.coefficient(id), Laurent(1) + k_coeff(2));
  EXPECT_EQ(sq.coefficient(tt), k_coeff(2));
  EXPECT_EQ(sq.coefficient(gw), k_coeff(2));
  EXPECT_EQ(sq.coefficient(ttg), k_coeff(2));
}

TEST(Algebra, AssociativityOnRandomTriples) {
  std::mt19937 rng(17);
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 4; ++n) {
      for (int i = 0; i < 8; ++i) {
        const auto a = yh_test::random_element(rng, d, n), b = yh_test::random_element(rng, d, n),
                   c = yh_test::random_element(rng, d, n);
        EXPECT_EQ((a * b) * c, a * (b * c)) << d << " " << n;
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(Algebra, RightMultiplicationMatchesProduct) {
  std::mt19937 rng(23);
  for (int d = 1; d <= 3; ++d) {
    const auto a = yh_test::random_element(rng, d, 3, 4);
    EXPECT_EQ(right_mul_g(a, 2), a * gen_g(d, 3, 2));
    EXPECT_EQ(right_mul_g_inv(a, 1), a * inverse_g(d, 3, 1));
    EXPECT_EQ(right_mul_t(a, 3, 2), a * gen_t(d, 3, 3, 2));
    EXPECT_EQ(right_mul_p(a, 1), a * singular_p(d, 3, 1));
  }
}

TEST(Algebra, EmbedIsMultiplicative) {
  std::mt19937 rng(29);
  for (int d = 1; d <= 3; ++d) {
    const auto a = yh_test::random_element(rng, d, 2), b = yh_test::random_element(rng, d, 2);
    EXPECT_EQ(embed(a * b, 4), embed(a, 4) * embed(b, 4));
  }
  EXPECT_THROW(embed(unit(1, 3), 2), AlgebraError);
}

TEST(Algebra, MapToAlgebra) {
  EXPECT_EQ(map_to_algebra(parse_braid("s1 -s1"), 3), unit(3, 2));
  EXPECT_EQ(map_to_algebra(parse_braid("t1^4 t1^-1"), 3), unit(3, 1));
  EXPECT_EQ(map_to_algebra(parse_braid("x1"), 2), singular_p(2, 2, 1));
  EXPECT_EQ(map_to_algebra(parse_braid("s1 s2 s1"), 2), map_to_algebra(parse_braid("s2 s1 s2"), 2));
}

TEST(Algebra, MixedOperandsThrow) {
  EXPECT_THROW(unit(2, 2) + unit(3, 2), AlgebraError);
  EXPECT_THROW(unit(2, 2) * unit(2, 3), AlgebraError);
  EXPECT_THROW(gen_g(2, 2, 2), AlgebraError);
}

TEST(Algebra, ToString) {
  EXPECT_EQ(unit(1, 1).to_string(), "1");
  EXPECT_EQ(AlgebraElement(1, 2).to_string(), "0");
  EXPECT_EQ(gen_g(1, 3, 1).to_string(), "g[2,1,3]");
}

TEST(Relations, AllNamedRelationsHold) {
  for (const auto& name : relation_names()) {
    for (int d = 1; d <= 3; ++d) {
      for (int n = 2; n <= 4; ++n) EXPECT_TRUE(verify_relation(name, d, n)) << name << " d=" << d << " n=" << n;
    }
  }
  EXPECT_THROW(verify_relation("nope", 2, 3), AlgebraError);
}

TEST(Quotient, GeneratorShapes) {
  EXPECT_EQ(quotient_generator(QuotientKind::ytl, 1, 3, 1).size(), 6u);
  EXPECT_THROW(quotient_generator(QuotientKind::ytl, 1, 2, 1), AlgebraError);
  EXPECT_EQ(parse_quotient_kind("ctl"), QuotientKind::ctl);
  EXPECT_EQ(to_string(QuotientKind::ftl), "ftl");
}
