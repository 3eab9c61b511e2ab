#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schurwin/bott.hpp"
#include "schurwin/windows.hpp"

using namespace schurwin;

namespace {

CohomologyTable lineBundle(Int a, Int b = 0) {
    const Context p1(2, 1);
    return bwb(p1, HomogeneousWeight{Weight{a}, Weight{b}});
}

Weight randomWeight(std::mt19937_64& rng, Int n, Int lo, Int hi) {
    std::uniform_int_distribution<Int> entry(lo, hi);
    std::vector<Int> e(static_cast<std::size_t>(n));
    for (auto& x : e) x = entry(rng);
    std::sort(e.rbegin(), e.rend());
    return Weight(e);
}

}  // namespace

TEST(Bwb, ProjectiveLinePins) {
    const CohomologyTable trivial = lineBundle(0);
    ASSERT_EQ(trivial.groups().size(), 1u);
    EXPECT_EQ(trivial.groups().at(0), SchurExpansion::single(Weight{0, 0}, 2));

    EXPECT_TRUE(lineBundle(-1).isZero());

    const CohomologyTable minusTwo = lineBundle(-2);
    ASSERT_EQ(minusTwo.groups().size(), 1u);
    EXPECT_EQ(minusTwo.groups().at(1), SchurExpansion::single(Weight{-1, -1}, 2));
}

TEST(Bwb, ProjectiveLineMatchesLineBundleOracle) {
    // S^vee = O(1) and Q^vee = O(-1) on P^1
    for (Int a = -8; a <= 8; ++a)
        for (Int b = -3; b <= 3; ++b) {
            const auto [h0, h1] = oracle::lineBundleP1(a - b);
            const CohomologyTable t = lineBundle(a, b);
            EXPECT_EQ(t.dimension(0), h0) << a << "," << b;
            EXPECT_EQ(t.dimension(1), h1) << a << "," << b;
        }
}

TEST(Bwb, AtMostOneNonzeroGroup) {
    std::mt19937_64 rng(3);
    for (Int d = 2; d <= 6; ++d)
        for (Int r = 1; r < d; ++r) {
            const Context ctx(d, r);
            for (int trial = 0; trial < 40; ++trial) {
                const CohomologyTable t =
                    bwb(ctx, {randomWeight(rng, r, -5, 5), randomWeight(rng, d - r, -5, 5)});
                if (t.isZero()) continue;
                ASSERT_EQ(t.groups().size(), 1u);
                const SchurExpansion& rep = t.groups().begin()->second;
                ASSERT_EQ(rep.size(), 1u);
                EXPECT_EQ(rep.terms().begin()->second, 1);
                EXPECT_GE(t.groups().begin()->first, 0);
                EXPECT_LE(t.groups().begin()->first, r * (d - r));
            }
        }
}

TEST(Bwb, SerreDualityDimensions) {
    std::mt19937_64 rng(17);
    for (Int d = 2; d <= 5; ++d)
        for (Int r = 1; r <= std::min<Int>(2, d - 1); ++r) {
            const Context ctx(d, r);
            const Int top = r * (d - r);
            for (int trial = 0; trial < 60; ++trial) {
                const Weight a = randomWeight(rng, r, -6, 6), b = randomWeight(rng, d - r, -6, 6);
                // E^vee (x) omega, with omega = det(S)^{d-r} (x) det(Q^vee)^r
                const HomogeneousWeight dual{a.dual().shifted(-(d - r)), b.dual().shifted(r)};
                const CohomologyTable lhs = bwb(ctx, {a, b}), rhs = bwb(ctx, dual);
                for (Int i = 0; i <= top; ++i) EXPECT_EQ(lhs.dimension(i), rhs.dimension(top - i)) << a << " " << b;
            }
        }
}

TEST(Bwb, GlobalSectionsOfWindowGenerators) {
    for (Int d = 1; d <= 5; ++d)
        for (Int r = 0; r <= d; ++r) {
            const Context ctx(d, r);
            for (const Partition& delta : partitionsInBox(r, d - r)) {
                const CohomologyTable t = bwb(ctx, HomogeneousWeight::onS(ctx, Weight::fromPartition(delta, r)));
                ASSERT_EQ(t.groups().size(), 1u);
                EXPECT_EQ(t.groups().at(0), SchurExpansion::single(Weight::fromPartition(delta, d), d));
                EXPECT_EQ(t.dimension(0), oracle::skewTableauxCount(delta, Partition{}, d));
            }
        }
}

TEST(Bwb, RejectsWrongShape) {
    const Context ctx(4, 2);
    EXPECT_THROW(bwb(ctx, {Weight{1}, Weight{0, 0}}), shape_error);
    EXPECT_THROW(bwb(ctx, {Weight{1, 0}, Weight{0}}), shape_error);
}

TEST(HomBundle, Examples) {
    const Context ctx(4, 2);
    const CohomologyTable end = homBundleCohomology(ctx, Partition{1}, Partition{1});
    ASSERT_EQ(end.groups().size(), 1u);
    EXPECT_EQ(end.groups().at(0), SchurExpansion::unit(4));

    const CohomologyTable sections = homBundleCohomology(ctx, Partition{}, Partition{1});
    ASSERT_EQ(sections.groups().size(), 1u);
    EXPECT_EQ(sections.groups().at(0), SchurExpansion::single(Weight{1, 0, 0, 0}, 4));

    EXPECT_TRUE(homBundleCohomology(ctx, Partition{1}, Partition{}).isZero());
    EXPECT_THROW(homBundleCohomology(ctx, Partition{1, 1, 1}, Partition{}), shape_error);
}

TEST(HomBundle, WindowIsStronglyExceptional) {
    for (Int d = 2; d <= 6; ++d)
        for (Int r = 1; r <= std::min<Int>(3, d - 1); ++r) {
            const Context ctx(d, r);
            const auto box = partitionsInBox(r, d - r);
            for (const Partition& gamma : box)
                for (const Partition& delta : box) {
                    const CohomologyTable t = homBundleCohomology(ctx, gamma, delta);
                    EXPECT_TRUE(t.vanishesInPositiveDegrees()) << gamma << " " << delta;
                    EXPECT_EQ(t.dimension(0), oracle::skewTableauxCount(delta, gamma, d))
                        << "d=" << d << " r=" << r << " " << gamma << " " << delta;
                    if (gamma == delta) EXPECT_EQ(t.groups().at(0), SchurExpansion::unit(d));
                }
        }
}

TEST(EulerCharacter, SignedSum) {
    const SchurExpansion chi = eulerCharacter(lineBundle(-3));
    EXPECT_EQ(dimension(chi), -2);
    EXPECT_EQ(chi, SchurExpansion::single(Weight{-1, -2}, 2).scaled(-1));
    EXPECT_EQ(dimension(eulerCharacter(lineBundle(2))), 3);
    EXPECT_TRUE(eulerCharacter(lineBundle(-1)).isZero());
}

TEST(EulerCharacter, DimensionMatchesOracleOnP1) {
    const Context p1(2, 1);
    for (Int a = -6; a <= 6; ++a) {
        const auto [h0, h1] = oracle::lineBundleP1(a);
        EXPECT_EQ(dimension(eulerCharacter(p1, HomogeneousWeight::onS(p1, Weight{a}))), h0 - h1);
    }
}
