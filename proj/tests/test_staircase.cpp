#include <gtest/gtest.h>

#include "schurwin/staircase.hpp"
#include "schurwin/windows.hpp"

using namespace schurwin;

namespace {

std::vector<StaircaseStep> steps(std::initializer_list<std::pair<Partition, Int>> xs) {
    std::vector<StaircaseStep> out;
    for (const auto& [p, s] : xs) out.push_back({p, s});
    return out;
}

GeneratorLabel label(const Context& ctx, const Partition& p) {
    return canonicalize(Weight::fromPartition(p, ctx.r()), 0, ctx);
}

}  // namespace

TEST(Staircase, SevenThreeDiagrams) {
    const StaircaseData data = staircaseDiagrams(Context(7, 3), Partition{3, 1});
    EXPECT_EQ(data.steps, steps({{Partition{3, 1, 1}, 1},
                                 {Partition{3, 2, 2}, 3},
                                 {Partition{3, 3, 2}, 4},
                                 {Partition{4, 4, 2}, 6},
                                 {Partition{5, 4, 2}, 7}}));
}

TEST(Staircase, ProjectiveSpace) {
    for (Int d = 1; d <= 9; ++d) {
        const StaircaseData data = staircaseDiagrams(Context(d, 1), Partition{});
        ASSERT_EQ(static_cast<Int>(data.steps.size()), d);
        for (Int k = 1; k <= d; ++k) {
            EXPECT_EQ(data.steps[static_cast<std::size_t>(k - 1)].delta, Partition{k});
            EXPECT_EQ(data.steps[static_cast<std::size_t>(k - 1)].s, k);
        }
    }
}

TEST(Staircase, FourTwoMiddleSequence) {
    EXPECT_EQ(staircaseDiagrams(Context(4, 2), Partition{1}).steps,
              steps({{Partition{1, 1}, 1}, {Partition{2, 2}, 3}, {Partition{3, 2}, 4}}));
}

TEST(Staircase, Sequences) {
    const Context ctx(4, 2);
    EXPECT_EQ(resolutionSequence(ctx, Partition{}),
              (std::vector<SequenceTerm>{{Partition{3, 1}, 4, 1}, {Partition{2, 1}, 3, 4}, {Partition{1, 1}, 2, 6}, {Partition{}, 0, 1}}));
    EXPECT_EQ(resolutionSequence(ctx, Partition{2}),
              (std::vector<SequenceTerm>{{Partition{3, 3}, 4, 1}, {Partition{2, 2}, 2, 6}, {Partition{2, 1}, 1, 4}, {Partition{2}, 0, 1}}));
    EXPECT_EQ(resolutionSequence(Context(2, 1), Partition{}),
              (std::vector<SequenceTerm>{{Partition{2}, 2, 1}, {Partition{1}, 1, 2}, {Partition{}, 0, 1}}));
}

TEST(Staircase, RejectsInadmissibleBases) {
    const Context ctx(4, 2);
    EXPECT_THROW(staircaseDiagrams(ctx, Partition{1, 1}), shape_error);
    EXPECT_THROW(staircaseDiagrams(ctx, Partition{4}), shape_error);
    EXPECT_THROW(staircaseDiagrams(Context(3, 0), Partition{}), shape_error);
    try {
        staircaseDiagrams(ctx, Partition{4});
        FAIL();
    } catch (const shape_error& e) {
        EXPECT_NE(std::string(e.what()).find("row"), std::string::npos);
    }
    EXPECT_NO_THROW(staircaseDiagrams(ctx, Partition{3}));
}

TEST(BaseFromTop, Examples) {
    const Context ctx(4, 2);
    EXPECT_EQ(baseFromTop(ctx, Partition{3, 3}), Partition{2});
    EXPECT_EQ(baseFromTop(ctx, Partition{3, 1}), Partition{});
    EXPECT_EQ(baseFromTop(Context(7, 3), Partition{5, 4, 2}), (Partition{3, 1}));
}

TEST(BaseFromTop, Errors) {
    const Context ctx(4, 2);
    EXPECT_THROW(baseFromTop(ctx, Partition{2, 1}), shape_error);
    EXPECT_THROW(baseFromTop(ctx, Partition{3}), shape_error);
    EXPECT_THROW(baseFromTop(ctx, Partition{3, 3, 1}), shape_error);
    EXPECT_THROW(baseFromTop(Context(4, 0), Partition{}), shape_error);
}

TEST(Staircase, StructuralInvariants) {
    for (Int d = 1; d <= 7; ++d)
        for (Int r = 1; r <= std::min<Int>(3, d); ++r) {
            const Context ctx(d, r);
            for (const Partition& delta : staircaseBases(ctx)) {
                const StaircaseData data = staircaseDiagrams(ctx, delta);
                ASSERT_EQ(static_cast<Int>(data.steps.size()), ctx.K());
                EXPECT_GE(data.steps.front().s, 1);
                EXPECT_EQ(data.steps.back().s, d - colLength(delta, ctx.K()));
                EXPECT_EQ(data.steps.back().delta.row(1), ctx.K());
                Int prevSize = delta.size(), prevS = 0;
                for (const StaircaseStep& step : data.steps) {
                    EXPECT_LE(step.delta.length(), r);
                    EXPECT_GT(step.s, prevS);
                    EXPECT_EQ(step.delta.size() - prevSize, step.s - prevS) << "d=" << d << " r=" << r << " " << delta;
                    prevSize = step.delta.size();
                    prevS = step.s;
                }
                // a full first row keeps col_K(delta) > 0, and such bases are not tops' preimages
                if (delta.row(1) < ctx.K()) {
                    EXPECT_EQ(data.steps.back().s, d);
                    EXPECT_EQ(baseFromTop(ctx, data.steps.back().delta), delta);
                }
            }
        }
}

TEST(Staircase, SequenceSitsInTwoConsecutiveWindows) {
    for (Int d = 1; d <= 7; ++d)
        for (Int r = 1; r <= std::min<Int>(3, d); ++r) {
            const Context ctx(d, r);
            for (const Partition& delta : staircaseBases(ctx)) {
                const StaircaseData data = staircaseDiagrams(ctx, delta);
                for (const StaircaseStep& step : data.steps) EXPECT_TRUE(inWindow(label(ctx, step.delta), 1, ctx));
                if (!fitsBox(delta, r, d - r)) continue;
                EXPECT_TRUE(inWindow(label(ctx, delta), 0, ctx));
                for (std::size_t k = 0; k + 1 < data.steps.size(); ++k)
                    EXPECT_TRUE(inWindow(label(ctx, data.steps[k].delta), 0, ctx));
                EXPECT_FALSE(inWindow(label(ctx, data.steps.back().delta), 0, ctx));
            }
        }
}

TEST(Staircase, BasesAreTheAdmissibleShapes) {
    const Context ctx(5, 3);
    const auto bases = staircaseBases(ctx);
    EXPECT_EQ(bases.size(), 10u);  // partitions in a 2 x 3 box
    for (const Partition& p : bases) EXPECT_TRUE(isStaircaseBase(ctx, p));
    EXPECT_FALSE(isStaircaseBase(ctx, Partition{1, 1, 1}));
    EXPECT_FALSE(isStaircaseBase(ctx, Partition{4}));
}
