#pragma once

// Staircase (twisted Lascoux) complexes on Gr(V, r).
//
// For a base diagram delta with at most r - 1 rows and first row at most
// d - r + 1 there is an exact sequence
//
//   0 -> S^v(delta_K) (x) wedge^{s_K} V -> ... -> S^v(delta_1) (x) wedge^{s_1} V -> S^v(delta) -> 0
//
// with K = d - r + 1. Each delta_k keeps the first col_k(delta) rows of delta,
// puts a row of length k underneath, and pushes every later row down by one
// while adding a box to it.

#include <string>
#include <vector>

#include "partition.hpp"

namespace schurwin {

struct StaircaseStep {
    Partition delta;
    Int s = 0;

    friend bool operator==(const StaircaseStep&, const StaircaseStep&) = default;
};

struct StaircaseData {
    Context ctx;
    Partition base;
    /// steps[k-1] holds (delta_k, s_k) for k = 1..K.
    std::vector<StaircaseStep> steps;

    friend bool operator==(const StaircaseData&, const StaircaseData&) = default;
};

/// One term of the exact sequence: S^v(delta) (x) wedge^s V, with dim wedge^s V.
struct SequenceTerm {
    Partition delta;
    Int s = 0;
    Int extDim = 1;

    friend bool operator==(const SequenceTerm&, const SequenceTerm&) = default;
};

/// Throws shape_error naming the violated bound if delta cannot be a staircase base.
inline void requireStaircaseBase(const Context& ctx, const Partition& delta) {
    if (ctx.r() == 0) throw shape_error("staircase complexes need r >= 1");
    if (delta.length() >= ctx.r())
        throw shape_error("base " + delta.str() + " violates col(delta) < r: it has " +
                          std::to_string(delta.length()) + " rows, r=" + std::to_string(ctx.r()));
    if (delta.row(1) > ctx.K())
        throw shape_error("base " + delta.str() + " violates row(delta) <= d-r+1 = " + std::to_string(ctx.K()));
}

inline bool isStaircaseBase(const Context& ctx, const Partition& delta) {
    return ctx.r() >= 1 && delta.length() < ctx.r() && delta.row(1) <= ctx.K();
}

/// Every admissible base for the context, in graded lexicographic order.
inline std::vector<Partition> staircaseBases(const Context& ctx) {
    if (ctx.r() == 0) return {};
    return partitionsInBox(ctx.r() - 1, ctx.K());
}

inline StaircaseData staircaseDiagrams(const Context& ctx, const Partition& delta) {
    requireStaircaseBase(ctx, delta);
    const Int r = ctx.r();
    StaircaseData out{ctx, delta, {}};
    out.steps.reserve(static_cast<std::size_t>(ctx.K()));
    for (Int k = 1; k <= ctx.K(); ++k) {
        const Int c = colLength(delta, k);
        std::vector<Int> rows(static_cast<std::size_t>(r));
        for (Int i = 1; i <= r; ++i) {
            Int value;
            if (i <= c)
                value = delta.row(i);
            else if (i == c + 1)
                value = k;
            else
                value = delta.row(i - 1) + 1;
            rows[static_cast<std::size_t>(i - 1)] = value;
        }
        out.steps.push_back({Partition(std::move(rows)), r + k - (c + 1)});
    }
    return out;
}

/// Terms of the exact sequence from the wedge^{s_K} end down to S^v(delta).
inline std::vector<SequenceTerm> resolutionSequence(const StaircaseData& data) {
    std::vector<SequenceTerm> out;
    out.reserve(data.steps.size() + 1);
    for (auto it = data.steps.rbegin(); it != data.steps.rend(); ++it)
        out.push_back({it->delta, it->s, binomial(data.ctx.d(), it->s)});
    out.push_back({data.base, 0, 1});
    return out;
}

inline std::vector<SequenceTerm> resolutionSequence(const Context& ctx, const Partition& delta) {
    return resolutionSequence(staircaseDiagrams(ctx, delta));
}

/// Recovers the base from the last diagram delta_K, which always has first row
/// d - r + 1 and rows 2..r equal to the base rows plus one.
inline Partition baseFromTop(const Context& ctx, const Partition& top) {
    if (ctx.r() == 0) throw shape_error("staircase complexes need r >= 1");
    if (top.length() > ctx.r())
        throw shape_error("top diagram " + top.str() + " has more than r rows");
    if (top.row(1) != ctx.K())
        throw shape_error("top diagram " + top.str() + " is not an out-of-window top: first row must be d-r+1 = " +
                          std::to_string(ctx.K()));
    std::vector<Int> base;
    for (Int i = 2; i <= ctx.r(); ++i) {
        const Int v = top.row(i) - 1;
        if (v < 0) throw shape_error("top diagram " + top.str() + " has no staircase preimage (row " + std::to_string(i) + " is empty)");
        base.push_back(v);
    }
    Partition beta(std::move(base));
    requireStaircaseBase(ctx, beta);
    return beta;
}

}  // namespace schurwin
