#pragma once

// Window shifts omega_{k,l} acting on generators.
//
// A generator of W_{+1} outside W_0 is the top term S^v(delta_K) (x) det V of a
// staircase sequence whose other terms all lie in W_0, so it is quasi-isomorphic
// to the truncated sequence. Reading the same sequence from the other end
// rewrites a W_0 generator outside W_{+1} in terms of W_{+1}. Every other unit
// step is a det(S^v)-twist of these two; longer shifts compose unit steps.
//
// Only the graded terms and K-classes are computed, never differentials.

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

#include "partition.hpp"
#include "staircase.hpp"
#include "windows.hpp"

namespace schurwin {

/// One term  copies * label (x) wedge^extPower V  placed in homological degree `degree`.
struct Term {
    Int degree = 0;
    GeneratorLabel label;
    Int extPower = 0;
    Int copies = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Differential-free skeleton of a complex of window generators.
///
/// `honest` is set when the terms are known to carry an actual complex
/// (identity or a single unit step); multi-step results are skeletons whose
/// K-class is the only meaningful invariant.
struct TermComplex {
    std::vector<Term> terms;
    bool honest = true;

    friend bool operator==(const TermComplex&, const TermComplex&) = default;
};

/// Alternating class sum (-1)^deg * copies * C(d, extPower) [label].
inline std::map<GeneratorLabel, Int> kClass(const Context& ctx, const TermComplex& complex) {
    std::map<GeneratorLabel, Int> out;
    for (const Term& t : complex.terms) {
        Int weight = checked::mul(t.copies, binomial(ctx.d(), t.extPower));
        if (t.degree % 2 != 0) weight = checked::neg(weight);
        auto [it, inserted] = out.try_emplace(t.label, 0);
        it->second = checked::add(it->second, weight);
        if (it->second == 0) out.erase(it);
    }
    return out;
}

namespace detail {

inline TermComplex identityComplex(const GeneratorLabel& g) { return {{Term{0, g, 0, 1}}, true}; }

inline Int displayedExtPower(const Context& ctx, Int s, bool keepDet) {
    // det V = wedge^d V is trivialized unless the caller asks to keep it
    return (s == ctx.d() && !keepDet) ? 0 : s;
}

inline GeneratorLabel labelOf(const Context& ctx, const Partition& delta, Int detPower = 0) {
    return canonicalize(Weight::fromPartition(delta, ctx.r()), detPower, ctx);
}

}  // namespace detail

/// omega_{0,+1} on a generator of W_{+1}: its expression in W_0 generators.
/// The left-most term sits in degree 0 and degrees increase to the right.
inline TermComplex shiftDownGenerator(const Context& ctx, const GeneratorLabel& g, bool keepDet = false) {
    if (!inWindow(g, 1, ctx)) throw shape_error("generator " + g.fullWeight().str() + " is not in W_{+1}");
    if (ctx.r() == 0) return detail::identityComplex(g.twisted(-1));
    if (inWindow(g, 0, ctx)) return detail::identityComplex(g);

    const Partition beta = baseFromTop(ctx, g.fullWeight().toPartition());
    const StaircaseData data = staircaseDiagrams(ctx, beta);
    TermComplex out;
    Int degree = 0;
    for (Int k = ctx.K() - 1; k >= 1; --k, ++degree) {
        const StaircaseStep& step = data.steps[static_cast<std::size_t>(k - 1)];
        out.terms.push_back({degree, detail::labelOf(ctx, step.delta), detail::displayedExtPower(ctx, step.s, keepDet), 1});
    }
    out.terms.push_back({degree, detail::labelOf(ctx, beta), 0, 1});
    return out;
}

/// The twist T_{F(r)} on W_{+1} generators is exactly omega_{0,+1}.
inline TermComplex twistGenerator(const Context& ctx, const GeneratorLabel& g, bool keepDet = false) {
    return shiftDownGenerator(ctx, g, keepDet);
}

/// omega_{+1,0} on a generator of W_0: its expression in W_{+1} generators.
/// The right-most term sits in degree 0 and degrees decrease to the left.
inline TermComplex shiftUpGenerator(const Context& ctx, const GeneratorLabel& g, bool keepDet = false) {
    if (!inWindow(g, 0, ctx)) throw shape_error("generator " + g.fullWeight().str() + " is not in W_0");
    if (ctx.r() == 0) return detail::identityComplex(g.twisted(1));
    if (inWindow(g, 1, ctx)) return detail::identityComplex(g);

    const Partition beta = g.fullWeight().toPartition();
    const StaircaseData data = staircaseDiagrams(ctx, beta);
    TermComplex out;
    for (Int k = ctx.K(); k >= 1; --k) {
        const StaircaseStep& step = data.steps[static_cast<std::size_t>(k - 1)];
        out.terms.push_back({-(k - 1), detail::labelOf(ctx, step.delta), detail::displayedExtPower(ctx, step.s, keepDet), 1});
    }
    return out;
}

/// A single unit step W_from -> W_to with |from - to| = 1, obtained by
/// conjugating shiftDown / shiftUp with a power of det(S^v).
inline TermComplex unitShift(const Context& ctx, Int fromK, Int toK, const GeneratorLabel& g, bool keepDet = false) {
    TermComplex base;
    Int twist;
    if (fromK == toK + 1) {
        twist = toK;
        base = shiftDownGenerator(ctx, g.twisted(checked::neg(twist)), keepDet);
    } else if (toK == fromK + 1) {
        twist = fromK;
        base = shiftUpGenerator(ctx, g.twisted(checked::neg(twist)), keepDet);
    } else {
        throw shape_error("unitShift needs adjacent windows");
    }
    for (Term& t : base.terms) t.label = t.label.twisted(twist);
    return base;
}

/// omega_{toK, fromK} applied to a generator of W_fromK by termwise substitution
/// through unit steps. Like terms are not collapsed. For multi-step shifts the
/// outer wedge^s V factors are folded into `copies`.
inline TermComplex generalShift(const Context& ctx, Int fromK, Int toK, const GeneratorLabel& g, bool keepDet = false) {
    if (!inWindow(g, fromK, ctx))
        throw shape_error("generator " + g.fullWeight().str() + " is not in W_" + std::to_string(fromK));
    TermComplex current = detail::identityComplex(g);
    const Int step = toK > fromK ? 1 : -1;
    for (Int k = fromK; k != toK; k += step) {
        TermComplex next;
        for (const Term& outer : current.terms) {
            for (const Term& inner : unitShift(ctx, k, k + step, outer.label, keepDet).terms) {
                Term t{checked::add(outer.degree, inner.degree), inner.label, inner.extPower,
                       checked::mul(outer.copies, inner.copies)};
                if (inner.extPower == 0)
                    t.extPower = outer.extPower;
                else if (outer.extPower != 0)
                    t.copies = checked::mul(t.copies, binomial(ctx.d(), outer.extPower));
                next.terms.push_back(t);
            }
        }
        current = std::move(next);
    }
    std::stable_sort(current.terms.begin(), current.terms.end(),
                     [](const Term& a, const Term& b) { return a.degree < b.degree; });
    current.honest = std::abs(toK - fromK) <= 1;
    return current;
}

/// Square integer matrix; row i is the class of generator i of W_fromK in the W_toK basis.
struct KMatrix {
    Int fromK = 0;
    Int toK = 0;
    std::vector<std::vector<Int>> entries;

    std::size_t size() const { return entries.size(); }

    static KMatrix identity(std::size_t n, Int k) {
        KMatrix m{k, k, std::vector<std::vector<Int>>(n, std::vector<Int>(n, 0))};
        for (std::size_t i = 0; i < n; ++i) m.entries[i][i] = 1;
        return m;
    }

    /// Row-vector composition: (W_a -> W_b) * (W_b -> W_c) = (W_a -> W_c).
    friend KMatrix operator*(const KMatrix& a, const KMatrix& b) {
        if (a.size() != b.size()) throw shape_error("matrix size mismatch");
        const std::size_t n = a.size();
        KMatrix out{a.fromK, b.toK, std::vector<std::vector<Int>>(n, std::vector<Int>(n, 0))};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p) {
                if (a.entries[i][p] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    out.entries[i][j] = checked::add(out.entries[i][j], checked::mul(a.entries[i][p], b.entries[p][j]));
            }
        return out;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    mpz_class determinant() const {
        const std::size_t n = size();
        if (n == 0) return 1;
        std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(entries[i][j]);
        mpz_class prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a[k][k] == 0) {
                std::size_t swapRow = k + 1;
                while (swapRow < n && a[swapRow][k] == 0) ++swapRow;
                if (swapRow == n) return 0;
                std::swap(a[k], a[swapRow]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
        return sign * a[n - 1][n - 1];
    }

    bool sameEntries(const KMatrix& other) const { return entries == other.entries; }

    friend bool operator==(const KMatrix&, const KMatrix&) = default;
};

namespace detail {

inline KMatrix unitKMatrix(const Context& ctx, Int fromK, Int toK) {
    const auto source = enumerateWindow(ctx, fromK);
    const auto target = enumerateWindow(ctx, toK);
    std::map<GeneratorLabel, std::size_t> column;
    for (std::size_t j = 0; j < target.size(); ++j) column.emplace(target[j], j);
    KMatrix m{fromK, toK, std::vector<std::vector<Int>>(source.size(), std::vector<Int>(target.size(), 0))};
    for (std::size_t i = 0; i < source.size(); ++i) {
        for (const auto& [label, coeff] : kClass(ctx, unitShift(ctx, fromK, toK, source[i]))) {
            auto it = column.find(label);
            if (it == column.end())
                throw std::logic_error("unit shift produced a term outside the target window");
            m.entries[i][it->second] = coeff;
        }
    }
    return m;
}

}  // namespace detail

/// K-theoretic change of basis from W_fromK to W_toK.
inline KMatrix kMatrix(const Context& ctx, Int fromK, Int toK) {
    const std::size_t n = static_cast<std::size_t>(binomial(ctx.d(), ctx.r()));
    KMatrix out = KMatrix::identity(n, fromK);
    const Int step = toK > fromK ? 1 : -1;
    for (Int k = fromK; k != toK; k += step) out = out * detail::unitKMatrix(ctx, k, k + step);
    out.toK = toK;
    return out;
}

/// Relabelling W_k -> W_{k+m} by tensoring with det(S^v)^m, as a 0/1 matrix.
inline KMatrix detTwistMatrix(const Context& ctx, Int k, Int m) {
    const auto source = enumerateWindow(ctx, k);
    const auto target = enumerateWindow(ctx, checked::add(k, m));
    KMatrix p{k, k + m, std::vector<std::vector<Int>>(source.size(), std::vector<Int>(target.size(), 0))};
    for (std::size_t i = 0; i < source.size(); ++i)
        for (std::size_t j = 0; j < target.size(); ++j)
            if (source[i].twisted(m) == target[j]) p.entries[i][j] = 1;
    return p;
}

/// Homological shift in omega_{0,-1} = C_{F(r+1)}[2(d-r)-1].
inline Int cotwistShiftAmount(const Context& ctx) { return 2 * (ctx.d() - ctx.r()) - 1; }

}  // namespace schurwin
