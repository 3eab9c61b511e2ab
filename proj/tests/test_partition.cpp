#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schurwin/partition.hpp"
#include "schurwin/windows.hpp"

using namespace schurwin;

TEST(Partition, NormalizesTrailingZeros) {
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition({0, 0}), Partition{});
    EXPECT_EQ(Partition({2, 2, 0}).length(), 2);
}

TEST(Partition, RejectsIncreasingOrNegativeParts) {
    EXPECT_THROW(Partition({1, 3}), shape_error);
    EXPECT_THROW(Partition({2, -1}), shape_error);
    EXPECT_THROW(Weight({0, 1}), shape_error);
    EXPECT_NO_THROW(Weight({1, -1}));
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
}

TEST(Partition, ColumnLengths) {
    const Partition p{3, 1};
    EXPECT_EQ(colLength(p, 1), 2);
    EXPECT_EQ(colLength(p, 2), 1);
    EXPECT_EQ(colLength(p, 3), 1);
    EXPECT_EQ(colLength(p, 4), 0);
    for (Int k = 1; k <= 6; ++k) EXPECT_EQ(colLength(Partition{k}, 1), 1);
    EXPECT_THROW(colLength(p, 0), shape_error);
}

TEST(Partition, ConjugateIsInvolutionUpTo12Boxes) {
    for (const Partition& p : oracle::partitionsUpTo(12)) {
        EXPECT_EQ(conjugate(conjugate(p)), p);
        const Partition c = conjugate(p);
        for (Int i = 1; i <= 13; ++i) EXPECT_EQ(colLength(p, i), rowLength(c, i));
    }
}

TEST(Partition, Canonicalize) {
    const Context ctx(4, 2);
    GeneratorLabel a = canonicalize(Weight{3, 1}, 0, ctx);
    EXPECT_EQ(a.delta(), Partition{2});
    EXPECT_EQ(a.detPower(), 1);

    GeneratorLabel b = canonicalize(Weight{1, 1}, 0, ctx);
    EXPECT_EQ(b.delta(), Partition{});
    EXPECT_EQ(b.detPower(), 1);

    GeneratorLabel c = canonicalize(Weight{2, 0}, -1, ctx);
    EXPECT_EQ(c.delta(), Partition{2});
    EXPECT_EQ(c.detPower(), -1);

    EXPECT_THROW(canonicalize(Weight{1, 0, 0}, 0, ctx), shape_error);
}

TEST(Partition, CanonicalizeRankZero) {
    const Context ctx(3, 0);
    const GeneratorLabel g = canonicalize(Weight{}, 5, ctx);
    EXPECT_TRUE(g.delta().empty());
    EXPECT_EQ(g.detPower(), 5);
}

TEST(Partition, CanonicalizeIsIdempotentAndGaugeInvariant) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> entry(-6, 6), shift(-10, 10);
    for (Int r = 1; r <= 4; ++r) {
        const Context ctx(r + 3, r);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Int> e(static_cast<std::size_t>(r));
            for (auto& x : e) x = entry(rng);
            std::sort(e.rbegin(), e.rend());
            const Weight w(e);
            const Int m = shift(rng), c = shift(rng);
            const GeneratorLabel g = canonicalize(w, m, ctx);
            EXPECT_EQ(canonicalize(g.fullWeight(), 0, ctx), g);
            EXPECT_EQ(canonicalize(Weight::fromPartition(g.delta(), r), g.detPower(), ctx), g);
            EXPECT_EQ(canonicalize(w.shifted(c), m - c, ctx), g);
        }
    }
}

TEST(Partition, FitsBox) {
    EXPECT_TRUE(fitsBox(Partition{2, 2}, 2, 2));
    EXPECT_FALSE(fitsBox(Partition{3, 1}, 2, 2));
    EXPECT_FALSE(fitsBox(Partition{1, 1, 1}, 2, 2));
    EXPECT_TRUE(fitsBox(Partition{}, 0, 0));
    EXPECT_TRUE(fitsBox(Partition{}, 5, 3));
}

TEST(Partition, FitsBoxMatchesWindowZero) {
    for (Int d = 1; d <= 6; ++d) {
        for (Int r = 1; r <= d; ++r) {
            const Context ctx(d, r);
            for (const Partition& p : oracle::partitionsUpTo(8)) {
                if (p.length() > r) continue;
                const GeneratorLabel g = canonicalize(Weight::fromPartition(p, r), 0, ctx);
                EXPECT_EQ(fitsBox(p, r, d - r), inWindow(g, 0, ctx)) << p << " d=" << d << " r=" << r;
            }
        }
    }
}

TEST(Partition, ParsesTextForms) {
    EXPECT_EQ(parsePartition("3,1"), (Partition{3, 1}));
    EXPECT_EQ(parsePartition(""), Partition{});
    EXPECT_EQ(parsePartition("0"), Partition{});
    EXPECT_EQ(parsePartition("0,0,0"), Partition{});
    EXPECT_EQ(parseWeight("1,-1"), (Weight{1, -1}));
    EXPECT_EQ(parseWeight("(2, 0)"), (Weight{2, 0}));
    EXPECT_THROW(parsePartition("3,,1"), shape_error);
    EXPECT_THROW(parsePartition("a"), shape_error);
    EXPECT_THROW(parsePartition("1,2"), shape_error);
}

TEST(Partition, ContextInvariants) {
    const Context ctx(7, 3);
    EXPECT_EQ(ctx.boxRows(), 3);
    EXPECT_EQ(ctx.boxCols(), 4);
    EXPECT_EQ(ctx.K(), 5);
    EXPECT_THROW(Context(0, 0), shape_error);
    EXPECT_THROW(Context(3, 4), shape_error);
    EXPECT_THROW(Context(3, -1), shape_error);
}

TEST(Checked, OverflowIsReportedNotWrapped) {
    EXPECT_THROW(checked::add(std::numeric_limits<Int>::max(), 1), overflow_error);
    EXPECT_THROW(checked::mul(std::numeric_limits<Int>::max() / 2 + 1, 2), overflow_error);
    EXPECT_THROW(Weight({std::numeric_limits<Int>::max()}).shifted(1), overflow_error);
    EXPECT_EQ(binomial(7, 3), 35);
    EXPECT_EQ(binomial(4, 5), 0);
}
