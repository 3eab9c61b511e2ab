#include <gtest/gtest.h>

#include <random>

#include "schurwin/verify.hpp"

using namespace schurwin;

namespace {

Rational q(long p, long d = 1) {
    Rational x(p, d);
    x.canonicalize();
    return x;
}

}  // namespace

TEST(Localization, ProjectiveLineByHand) {
    // 0 -> l^v2 (x) wedge^2 V -> l^v (x) V -> O -> 0 restricted to the fixed point I = {1}
    for (const auto& [t1, t2] : {std::pair{q(2), q(3)}, std::pair{q(5, 7), q(1, 9)}, std::pair{q(11), q(13, 4)}}) {
        const Rational x = 1 / t1;
        const Rational lhs = x * (t1 + t2) - x * x * (t1 * t2);
        EXPECT_EQ(lhs, 1);
    }
    const VerificationReport rep = verifyLocalization(Context(2, 1), Partition{}, 3, 1);
    EXPECT_TRUE(rep.pass);
    EXPECT_NE(rep.note.find("necessary condition verified"), std::string::npos);
}

TEST(Localization, FourTwoThirdSequence) {
    EXPECT_EQ(detail::fixedPoints(4, 2).size(), 6u);
    EXPECT_TRUE(verifyLocalization(Context(4, 2), Partition{2}, 3, 42).pass);
}

TEST(Localization, SwappedExponentFailsWithWitness) {
    StaircaseData data = staircaseDiagrams(Context(4, 2), Partition{2});
    std::swap(data.steps[0].s, data.steps[1].s);
    const VerificationReport rep = checkLocalization(data, 3, 1);
    EXPECT_FALSE(rep.pass);
    ASSERT_FALSE(rep.counterexample.is_null());
    EXPECT_TRUE(rep.counterexample.contains("fixedPoint"));
    EXPECT_TRUE(rep.counterexample.contains("t"));
}

TEST(Localization, TorusParametersAreDistinctPositiveAndSeeded) {
    std::mt19937_64 a(9), b(9);
    const auto t = detail::sampleTorusParameters(8, a);
    EXPECT_EQ(t, detail::sampleTorusParameters(8, b));
    std::set<Rational> seen(t.begin(), t.end());
    EXPECT_EQ(seen.size(), t.size());
    for (const auto& v : t) {
        EXPECT_GT(v, 0);
        EXPECT_LE(v.get_num(), 100);
        EXPECT_LE(v.get_den(), 100);
    }
    EXPECT_THROW(verifyLocalization(Context(3, 1), Partition{}, 0, 1), shape_error);
}

TEST(Euler, Examples) {
    EXPECT_TRUE(verifyEuler(Context(2, 1), Partition{}).pass);
    for (const Partition& base : {Partition{}, Partition{1}, Partition{2}}) EXPECT_TRUE(verifyEuler(Context(4, 2), base).pass);
    StaircaseData data = staircaseDiagrams(Context(4, 2), Partition{1});
    data.steps[2].delta = Partition{3, 3};
    const VerificationReport rep = checkEuler(data);
    EXPECT_FALSE(rep.pass);
    EXPECT_TRUE(rep.counterexample.contains("difference"));
}

TEST(Verify, SweepAndMutationsUpToFive) {
    std::mt19937_64 rng(123);
    for (Int d = 1; d <= 5; ++d)
        for (Int r = 1; r <= std::min<Int>(3, d); ++r) {
            const Context ctx(d, r);
            const auto bases = staircaseBases(ctx);
            for (const Partition& delta : bases) {
                EXPECT_TRUE(verifyLocalization(ctx, delta, 3, 7).pass) << "d=" << d << " r=" << r << " " << delta;
                EXPECT_TRUE(verifyEuler(ctx, delta).pass) << "d=" << d << " r=" << r << " " << delta;
            }
            std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
            for (int m = 0; m < 20; ++m) {
                const StaircaseData data = staircaseDiagrams(ctx, bases[pick(rng)]);
                const StaircaseData bad = mutateStaircase(data, rng);
                ASSERT_FALSE(bad == data);
                EXPECT_FALSE(checkLocalization(bad, 3, 7).pass) << "d=" << d << " r=" << r;
            }
        }
}

TEST(Tilting, Examples) {
    const VerificationReport rep = verifyTilting(Context(4, 2));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.parameters["pairs"], 36);
    EXPECT_TRUE(verifyTilting(Context(2, 1)).pass);
    // outside the box higher cohomology can appear: O(-3) on P^1 viewed as Hom(S^v(3), O)
    EXPECT_FALSE(homBundleCohomology(Context(2, 1), Partition{3}, Partition{}).vanishesInPositiveDegrees());
}

TEST(Relations, SmallContexts) {
    const VerificationReport rep = verifyRelations(Context(4, 2), -2, 2);
    EXPECT_TRUE(rep.pass) << rep.counterexample.dump();
    EXPECT_EQ(rep.parameters["cotwistShift"], 3);
    EXPECT_TRUE(verifyRelations(Context(3, 1), 0, 0).pass);
    EXPECT_THROW(verifyRelations(Context(3, 1), 1, 0), shape_error);
}

TEST(Regression, ReferenceTables) {
    EXPECT_TRUE(regressionAppendix(Context(4, 2)).pass);
    EXPECT_TRUE(regressionAppendix(Context(7, 3)).pass);
    for (Int d = 1; d <= 8; ++d) EXPECT_TRUE(regressionAppendix(Context(d, 1)).pass) << d;
    EXPECT_THROW(regressionAppendix(Context(5, 2)), shape_error);
}

TEST(Mutation, AlwaysChangesTheData) {
    std::mt19937_64 rng(1);
    const StaircaseData data = staircaseDiagrams(Context(1, 1), Partition{});
    for (int i = 0; i < 50; ++i) EXPECT_FALSE(mutateStaircase(data, rng) == data);
}
