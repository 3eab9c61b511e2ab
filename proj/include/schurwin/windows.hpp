#pragma once

// Window generator sets W_k = { S^v(delta) (x) det(S^v)^k : delta in the r x (d-r) box }.

#include <optional>
#include <vector>

#include "partition.hpp"

namespace schurwin {

/// Generators of W_k in canonical form, ordered graded-lexicographically on
/// their full weights. Since every weight in W_k is delta + k, the order is
/// the same for every k and W_{k+m} is W_k relabelled position by position.
inline std::vector<GeneratorLabel> enumerateWindow(const Context& ctx, Int k) {
    std::vector<GeneratorLabel> out;
    for (const Partition& delta : partitionsInBox(ctx.boxRows(), ctx.boxCols()))
        out.push_back(canonicalize(Weight::fromPartition(delta, ctx.r()), k, ctx));
    return out;
}

inline bool inWindow(const GeneratorLabel& label, Int k, const Context& ctx) {
    if (label.rank() != ctx.r()) throw shape_error("generator label rank does not match r");
    // rank 0: the only generator of W_k is (empty, k)
    if (ctx.r() == 0) return label.detPower() == k;
    const Weight w = label.fullWeight().shifted(checked::neg(k));
    return w.isPartition() && fitsBox(w.toPartition(), ctx.boxRows(), ctx.boxCols());
}

/// Position of a generator in enumerateWindow(ctx, k), if it belongs there.
inline std::optional<std::size_t> windowIndex(const Context& ctx, Int k, const GeneratorLabel& label) {
    if (!inWindow(label, k, ctx)) return std::nullopt;
    const auto window = enumerateWindow(ctx, k);
    for (std::size_t i = 0; i < window.size(); ++i)
        if (window[i] == label) return i;
    return std::nullopt;
}

}  // namespace schurwin
