#pragma once

// Schur-basis arithmetic: Littlewood-Richardson products, GL(r) tensor
// decompositions, exact evaluation and the Weyl dimension formula.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "checked.hpp"
#include "partition.hpp"

namespace schurwin {

/// Rank value meaning "no bound on the number of variables".
inline constexpr Int kUnbounded = -1;

using Rational = mpq_class;

/// Integer combination of Schur functions s_w.
///
/// With a finite rank r every key is a length-r weight (negative entries
/// allowed). With an unbounded rank keys are partitions stored without
/// trailing zeros. Zero coefficients are never stored.
class SchurExpansion {
public:
    explicit SchurExpansion(Int rank = kUnbounded) : rank_(rank) {
        if (rank < kUnbounded) throw shape_error("invalid rank");
    }

    static SchurExpansion single(const Weight& key, Int rank, Int coeff = 1) {
        SchurExpansion e(rank);
        e.add(key, coeff);
        return e;
    }

    static SchurExpansion unit(Int rank) { return single(Weight(std::vector<Int>(rank == kUnbounded ? 0 : rank, 0)), rank); }

    Int rank() const { return rank_; }
    const std::map<Weight, Int>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coeff(const Weight& key) const {
        auto normalized = normalize(key);
        if (!normalized) return 0;
        auto it = terms_.find(*normalized);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Adds coeff * s_key. Keys with more than `rank` nonzero rows vanish.
    void add(const Weight& key, Int coeff) {
        if (coeff == 0) return;
        auto normalized = normalize(key);
        if (!normalized) return;
        auto [it, inserted] = terms_.try_emplace(std::move(*normalized), 0);
        it->second = checked::add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }

    SchurExpansion& operator+=(const SchurExpansion& other) {
        requireSameRank(other);
        for (const auto& [w, c] : other.terms_) add(w, c);
        return *this;
    }

    SchurExpansion& operator-=(const SchurExpansion& other) {
        requireSameRank(other);
        for (const auto& [w, c] : other.terms_) add(w, checked::neg(c));
        return *this;
    }

    SchurExpansion scaled(Int factor) const {
        SchurExpansion out(rank_);
        for (const auto& [w, c] : terms_) out.add(w, checked::mul(c, factor));
        return out;
    }

    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    std::optional<Weight> normalize(const Weight& key) const {
        std::vector<Int> e = key.entries();
        if (rank_ == kUnbounded) {
            if (!key.isPartition()) throw shape_error("unbounded-rank expansions take partition keys");
            while (!e.empty() && e.back() == 0) e.pop_back();
            return Weight(std::move(e));
        }
        const auto r = static_cast<std::size_t>(rank_);
        if (e.size() < r) {
            if (!key.isPartition()) throw shape_error("weight " + key.str() + " is shorter than the rank");
            e.resize(r, 0);
        } else if (e.size() > r) {
            const bool tailZero = std::all_of(e.begin() + static_cast<std::ptrdiff_t>(r), e.end(),
                                              [](Int x) { return x == 0; });
            if (!key.isPartition()) throw shape_error("weight " + key.str() + " is longer than the rank");
            if (!tailZero) return std::nullopt;
            e.resize(r);
        }
        return Weight(std::move(e));
    }

    void requireSameRank(const SchurExpansion& other) const {
        if (other.rank_ != rank_) throw shape_error("Schur expansions of different rank");
    }

    Int rank_;
    std::map<Weight, Int> terms_;
};

namespace detail {

/// Enumerates Littlewood-Richardson tableaux of shape nu/outer with the given content,
/// adding one label at a time as a horizontal strip and enforcing the lattice
/// condition on the right-to-left, top-to-bottom reading word.
class LrEnumerator {
public:
    LrEnumerator(const Partition& outer, const Partition& content, Int maxRows)
        : content_(content.parts()) {
        const auto rows = static_cast<std::size_t>(maxRows);
        shape_ = outer.padded(maxRows);
        counts_.assign(content_.size(), std::vector<Int>(rows, 0));
    }

    std::map<std::vector<Int>, Int> run() {
        placeLabel(0);
        return results_;
    }

private:
    void placeLabel(std::size_t label) {
        if (label == content_.size()) {
            ++results_[shape_];
            return;
        }
        const std::vector<Int> before = shape_;
        distribute(label, 0, content_[label], before, 0, 0);
    }

    // prefixAbove: count of (label - 1) in rows strictly above `row`.
    void distribute(std::size_t label, std::size_t row, Int remaining, const std::vector<Int>& before,
                    Int placedSoFar, Int prefixAbove) {
        if (remaining == 0) {
            placeLabel(label + 1);
            return;
        }
        if (row == shape_.size()) return;
        Int cap = remaining;
        if (row > 0) cap = std::min(cap, before[row - 1] - before[row]);
        if (label > 0) cap = std::min(cap, prefixAbove - placedSoFar);
        const Int nextPrefix = label > 0 ? prefixAbove + counts_[label - 1][row] : 0;
        for (Int a = cap; a >= 0; --a) {
            shape_[row] += a;
            counts_[label][row] = a;
            distribute(label, row + 1, remaining - a, before, placedSoFar + a, nextPrefix);
            shape_[row] -= a;
            counts_[label][row] = 0;
        }
    }

    std::vector<Int> content_;
    std::vector<Int> shape_;
    std::vector<std::vector<Int>> counts_;
    std::map<std::vector<Int>, Int> results_;
};

}  // namespace detail

/// s_a * s_b in the Schur basis, dropping shapes with more than `rank` rows.
inline SchurExpansion lrMultiply(const Partition& a, const Partition& b, Int rank = kUnbounded) {
    SchurExpansion out(rank);
    // the coefficient is symmetric in (a, b); enumerate with the smaller content
    const bool swap = b.size() > a.size();
    const Partition& outer = swap ? b : a;
    const Partition& content = swap ? a : b;
    Int maxRows = outer.length() + content.length();
    if (rank != kUnbounded) {
        if (outer.length() > rank || content.length() > rank) return out;
        maxRows = std::min(maxRows, rank);
    }
    for (auto& [shape, count] : detail::LrEnumerator(outer, content, maxRows).run())
        out.add(Weight(shape), count);
    return out;
}

/// Decomposes V(u) (x) V(v) for GL(r), shifting both weights by `shift`
/// to make them partitions. Throws if the shift is too small.
inline SchurExpansion tensorGLWithShift(Int r, const Weight& u, const Weight& v, Int shift) {
    if (u.length() != r || v.length() != r)
        throw shape_error("tensorGL expects two weights of length " + std::to_string(r));
    SchurExpansion out(r);
    if (r == 0) {
        out.add(Weight{}, 1);
        return out;
    }
    const Weight us = u.shifted(shift), vs = v.shifted(shift);
    if (!us.isPartition() || !vs.isPartition()) throw shape_error("shift too small for tensorGL");
    const Int back = checked::mul(-2, shift);
    const SchurExpansion product = lrMultiply(us.toPartition(), vs.toPartition(), r);
    for (const auto& [w, c] : product.terms()) out.add(w.shifted(back), c);
    return out;
}

/// Tensor product decomposition of two irreducible GL(r) representations.
inline SchurExpansion tensorGL(Int r, const Weight& u, const Weight& v) {
    const Int shift = std::max<Int>({0, checked::neg(u.last()), checked::neg(v.last())});
    return tensorGLWithShift(r, u, v, shift);
}

/// Bilinear extension of tensorGL / lrMultiply to expansions of equal rank.
inline SchurExpansion multiply(const SchurExpansion& a, const SchurExpansion& b) {
    if (a.rank() != b.rank()) throw shape_error("Schur expansions of different rank");
    SchurExpansion out(a.rank());
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            const SchurExpansion piece = a.rank() == kUnbounded
                                             ? lrMultiply(u.toPartition(), v.toPartition())
                                             : tensorGL(a.rank(), u, v);
            out += piece.scaled(checked::mul(cu, cv));
        }
    }
    return out;
}

/// Schur polynomial s_lambda(x) for a partition, via the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}); valid at points with repeated coordinates.
inline Rational schurPolynomial(const Partition& lambda, std::span<const Rational> x) {
    const Int n = static_cast<Int>(x.size());
    const Int len = lambda.length();
    if (len == 0) return Rational(1);
    if (len > n) return Rational(0);
    const Int maxDegree = lambda.row(1) + len - 1;
    // h[k] = h_k(x_1..x_n), built one variable at a time
    std::vector<Rational> h(static_cast<std::size_t>(maxDegree + 1), Rational(0));
    h[0] = 1;
    for (const Rational& xi : x)
        for (std::size_t k = 1; k < h.size(); ++k) h[k] += xi * h[k - 1];
    const auto m = static_cast<std::size_t>(len);
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Int idx = lambda.row(static_cast<Int>(i) + 1) - static_cast<Int>(i) + static_cast<Int>(j);
            a[i][j] = idx < 0 ? Rational(0) : h[static_cast<std::size_t>(idx)];
        }
    }
    Rational det(1);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < m; ++row) {
            if (a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < m; ++k) a[row][k] -= factor * a[col][k];
        }
    }
    return det;
}

/// Exact value of sum coeff * s_key(point).
inline Rational evaluate(const SchurExpansion& e, std::span<const Rational> point) {
    if (e.rank() == kUnbounded) throw shape_error("cannot evaluate an unbounded-rank expansion");
    if (static_cast<Int>(point.size()) != e.rank())
        throw shape_error("evaluation point must have " + std::to_string(e.rank()) + " coordinates");
    Rational total(0);
    Rational product(1);
    for (const Rational& x : point) product *= x;
    for (const auto& [w, c] : e.terms()) {
        const Int low = w.last();
        Rational value = schurPolynomial(w.shifted(checked::neg(low)).toPartition(), point);
        if (low != 0) {
            if (product == 0 && low < 0) throw shape_error("negative weight evaluated at a point with a zero coordinate");
            Rational factor(1);
            const Rational base = low > 0 ? product : Rational(1 / product);
            for (Int i = 0; i < (low > 0 ? low : -low); ++i) factor *= base;
            value *= factor;
        }
        total += Rational(mpz_class(static_cast<long>(c))) * value;
    }
    return total;
}

/// Weyl dimension formula for the GL(n) irreducible of highest weight w.
inline Int dimensionGL(const Weight& w, Int n) {
    if (w.length() != n) throw shape_error("dimensionGL expects a weight of length " + std::to_string(n));
    mpz_class num(1), den(1);
    for (Int i = 0; i < n; ++i) {
        for (Int j = i + 1; j < n; ++j) {
            num *= mpz_class(static_cast<long>(w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + j - i));
            den *= mpz_class(static_cast<long>(j - i));
        }
    }
    const mpz_class dim = num / den;
    if (!dim.fits_slong_p()) throw overflow_error("dimension exceeds 64 bits");
    return dim.get_si();
}

/// Dimension of a virtual representation sum c_w V(w).
inline Int dimension(const SchurExpansion& e) {
    if (e.rank() == kUnbounded) throw shape_error("dimension needs a finite rank");
    Int total = 0;
    for (const auto& [w, c] : e.terms()) total = checked::add(total, checked::mul(c, dimensionGL(w, e.rank())));
    return total;
}

/// The exterior power wedge^s as the single-column Schur function (1^s); zero when s > rank.
inline SchurExpansion elementaryAsSchur(Int s, Int rank) {
    if (s < 0) throw shape_error("exterior power must be non-negative");
    SchurExpansion out(rank);
    if (rank != kUnbounded && s > rank) return out;
    out.add(Weight(std::vector<Int>(static_cast<std::size_t>(s), 1)), 1);
    return out;
}

}  // namespace schurwin
