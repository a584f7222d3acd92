#include <yh/invariants.hpp>

#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace yh;

namespace {

RatFunc U() { return RatFunc::variable(kVarU); }

// Delta at d = 1 rebuilt from the oracle trace.
HalfPowerValue oracle_delta(const std::string& word, int n, long eps) {
  const Poly t = yh_test::to_poly(oracle::trace(oracle::from_word(word, n), n));
  const RatFunc r = RatFunc(t) / RatFunc(Poly::variable(kVarZ, n - 1));
  return HalfPowerValue(r, static_cast<int>(eps - n + 1), {1, 1, false});
}

const std::vector<BraidKind> kFamilies{BraidKind::framed, BraidKind::classical, BraidKind::singular};

}  // namespace

TEST(Invariants, UnknotIsOne) {
  for (int d = 1; d <= 3; ++d) {
    const auto v = invariant(parse_braid(""), BraidKind::classical, d, {0});
    EXPECT_EQ(v.value.rational(), RatFunc(1));
    EXPECT_EQ(v.value.half_flag(), 0);
    // One positive stabilization of the unknot.
    EXPECT_TRUE(same_invariant(v, invariant(parse_braid("s1"), BraidKind::classical, d, {0})));
  }
}

TEST(Invariants, MatchOracleAtDOne) {
  for (const char* w : {"s1 s1 s1", "s1 -s2 s1 -s2", "s1 s1", "-s1 -s1 -s1 s2", "s1 s2 s1 s2 -s3 s2"}) {
    const BraidWord b = parse_braid(w);
    const auto v = invariant(b, BraidKind::classical, 1, {0});
    EXPECT_EQ(v.value, oracle_delta(w, b.strands(), epsilon(b))) << w;
  }
}

TEST(Invariants, TrefoilJones) {
  const auto v = jones(parse_braid("s1 s1 s1"));
  EXPECT_EQ(v.value.rational(), -U().pow(4) + U().pow(3) + U());
  EXPECT_EQ(v.value.half_flag(), 0);
  EXPECT_EQ(jones(parse_braid("")).to_string(), "1");
}

TEST(Invariants, FigureEightJones) {
  const auto v = jones(parse_braid("s1 -s2 s1 -s2"));
  EXPECT_EQ(v.value.rational(), U().pow(2) - U() + RatFunc(1) - U().pow(-1) + U().pow(-2));
}

TEST(Invariants, HomflyptEqualsDeltaAtDOne) {
  std::mt19937 rng(61);
  for (int i = 0; i < 10; ++i) {
    const BraidWord b = yh_test::random_braid(rng, BraidKind::classical, 2 + i % 3, 1 + i % 6);
    const auto h = homflypt(b);
    const auto delta = invariant(b, BraidKind::classical, 1, {0});
    EXPECT_EQ(h.value, delta.value) << b.to_string();
  }
}

TEST(Invariants, MarkovMoves) {
  std::mt19937 rng(67);
  for (auto family : kFamilies) {
    for (int d = 1; d <= 3; ++d) {
      const auto sols = enumerate_solutions(d);
      const auto& D = sols[rng() % sols.size()].D;
      const BraidWord b = yh_test::random_braid(rng, family, 3, 5, d);
      const auto base = invariant(b, family, d, D);
      for (const MarkovMove& m : std::vector<MarkovMove>{StabilizePos{}, StabilizeNeg{},
                                                        Conjugate{parse_braid("s2")}, Conjugate{parse_braid("-s1")}}) {
        EXPECT_TRUE(same_invariant(base, invariant(apply_move(b, m), family, d, D)))
            << to_string(family) << " d=" << d << " " << b.to_string();
      }
      if (family == BraidKind::framed) {
        EXPECT_TRUE(same_invariant(base, invariant(apply_move(b, Conjugate{parse_braid("t2^2")}), family, d, D)));
        EXPECT_TRUE(same_invariant(base, invariant(apply_move(b, FramingShift{1, 2, d}), family, d, D)));
      }
    }
  }
}

TEST(Invariants, MetadataGuards) {
  const auto a = invariant(parse_braid("s1"), BraidKind::classical, 2, {0});
  const auto b = invariant(parse_braid("s1"), BraidKind::classical, 2, {1});
  EXPECT_THROW(same_invariant(a, b), InvariantError);
  EXPECT_THROW(invariant(parse_braid("t1"), BraidKind::classical, 2, {0}), InvariantError);
  EXPECT_THROW(homflypt(parse_braid("x1")), InvariantError);
  EXPECT_THROW(lambda_d(2, 3), InvariantError);
  EXPECT_THROW(specialize_z(a, RatFunc(1)), InvariantError);
}

TEST(Invariants, FramedJonesAtDOneIsJones) {
  for (const char* w : {"s1 s1 s1", "s1 -s2 s1 -s2", "s1 s2 -s1 s2"}) {
    EXPECT_EQ(framed_jones(parse_braid(w), 1, {0}).value, jones(parse_braid(w)).value) << w;
  }
}

TEST(Invariants, SpecializationSendsLambdaToU) {
  const auto v = framed_jones(parse_braid("s1 s1"), 3, {0, 1});
  EXPECT_EQ(v.value.lambda(), U());
  EXPECT_EQ(v.meta.family, "framed-jones");
  EXPECT_NE(v.to_string().find("sqrt(u)"), std::string::npos);
}

TEST(Invariants, SkeinRelations) {
  std::mt19937 rng(71);
  for (int d = 1; d <= 3; ++d) {
    for (const auto& sol : enumerate_solutions(d)) {
      const BraidWord c = yh_test::random_braid(rng, BraidKind::classical, 3, 3);
      EXPECT_TRUE(verify_skein(SkeinKind::cubic, c, 1 + rng() % 2, d, sol.D));
      const BraidWord f = yh_test::random_braid(rng, BraidKind::framed, 3, 3, d);
      EXPECT_TRUE(verify_skein(SkeinKind::framed, f, 1 + rng() % 2, d, sol.D));
      const BraidWord s = yh_test::random_braid(rng, BraidKind::singular, 3, 3);
      EXPECT_TRUE(verify_skein(SkeinKind::singular, s, 1 + rng() % 2, d, sol.D));
    }
  }
  EXPECT_THROW(verify_skein(SkeinKind::cubic, parse_braid("s1"), 2, 1, {0}), InvariantError);
  EXPECT_EQ(parse_skein_kind("singular"), SkeinKind::singular);
}

TEST(Invariants, DistinguishesSmallKnots) {
  const auto unknot = invariant(parse_braid(""), BraidKind::classical, 1, {0});
  const auto trefoil = invariant(parse_braid("s1 s1 s1"), BraidKind::classical, 1, {0});
  const auto eight = invariant(parse_braid("s1 -s2 s1 -s2"), BraidKind::classical, 1, {0});
  EXPECT_FALSE(same_invariant(unknot, trefoil));
  EXPECT_FALSE(same_invariant(unknot, eight));
  EXPECT_FALSE(same_invariant(trefoil, eight));
  EXPECT_TRUE(compare_links(parse_braid("s1 s2"), parse_braid(""), BraidKind::classical, 2, {1}));
}
