#pragma once

// Young diagrams, GL(r) weights and the canonical (det-normalized) names
// of window generators.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <charconv>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"

namespace schurwin {

/// The parameter pair (d, r): dim V and the rank of the tautological bundle S.
class Context {
public:
    Context(Int d, Int r) : d_(d), r_(r) {
        if (d < 1) throw shape_error("d must be positive, got " + std::to_string(d));
        if (r < 0 || r > d)
            throw shape_error("r must satisfy 0 <= r <= d, got r=" + std::to_string(r) +
                              " d=" + std::to_string(d));
    }

    Int d() const { return d_; }
    Int r() const { return r_; }
    Int boxRows() const { return r_; }
    Int boxCols() const { return d_ - r_; }
    /// Length of the staircase resolution, d - r + 1.
    Int K() const { return d_ - r_ + 1; }

    friend bool operator==(const Context&, const Context&) = default;

private:
    Int d_;
    Int r_;
};

/// A weakly decreasing sequence of non-negative integers; trailing zeros are dropped.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw shape_error("partition parts must be non-negative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw shape_error("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    const std::vector<Int>& parts() const { return parts_; }
    /// Number of nonzero rows.
    Int length() const { return static_cast<Int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Number of boxes.
    Int size() const {
        Int total = 0;
        for (Int p : parts_) total = checked::add(total, p);
        return total;
    }

    /// 1-based row length; zero past the last row.
    Int row(Int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// The parts padded with zeros to exactly n entries.
    std::vector<Int> padded(Int n) const {
        if (length() > n)
            throw shape_error("partition " + str() + " has more than " + std::to_string(n) + " rows");
        std::vector<Int> out(parts_);
        out.resize(static_cast<std::size_t>(n), 0);
        return out;
    }

    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Int> parts_;
};

/// A non-increasing integer sequence of fixed length (a dominant GL(n) weight).
class Weight {
public:
    Weight() = default;

    explicit Weight(std::vector<Int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i] > entries_[i - 1]) throw shape_error("weight entries must be non-increasing");
    }

    Weight(std::initializer_list<Int> entries) : Weight(std::vector<Int>(entries)) {}

    static Weight fromPartition(const Partition& p, Int n) { return Weight(p.padded(n)); }

    const std::vector<Int>& entries() const { return entries_; }
    Int length() const { return static_cast<Int>(entries_.size()); }
    Int operator[](std::size_t i) const { return entries_[i]; }
    Int last() const { return entries_.empty() ? 0 : entries_.back(); }

    Int size() const {
        Int total = 0;
        for (Int e : entries_) total = checked::add(total, e);
        return total;
    }

    /// Adds c to every entry.
    Weight shifted(Int c) const {
        std::vector<Int> out(entries_);
        for (Int& e : out) e = checked::add(e, c);
        return Weight(std::move(out));
    }

    bool isPartition() const { return entries_.empty() || entries_.back() >= 0; }
    Partition toPartition() const { return Partition(entries_); }

    /// The dual weight (-w_n, ..., -w_1).
    Weight dual() const {
        std::vector<Int> out(entries_.rbegin(), entries_.rend());
        for (Int& e : out) e = checked::neg(e);
        return Weight(std::move(out));
    }

    std::string str() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

private:
    std::vector<Int> entries_;
};

/// Canonical name of the bundle S^vee(delta) (x) det(S^vee)^detPower.
///
/// delta has at most r - 1 nonzero rows, so the r-th entry of the full weight
/// is carried entirely by detPower and every bundle has exactly one label.
class GeneratorLabel {
public:
    GeneratorLabel() = default;

    GeneratorLabel(Partition delta, Int detPower, Int rank)
        : delta_(std::move(delta)), detPower_(detPower), rank_(rank) {
        if (rank < 0) throw shape_error("negative rank");
        if (rank == 0 ? !delta_.empty() : delta_.length() >= rank)
            throw shape_error("generator label " + delta_.str() + " is not canonical for r=" +
                              std::to_string(rank));
    }

    const Partition& delta() const { return delta_; }
    Int detPower() const { return detPower_; }
    Int rank() const { return rank_; }

    /// delta + detPower * (1, ..., 1), length r.
    Weight fullWeight() const {
        std::vector<Int> w = delta_.padded(rank_);
        for (Int& e : w) e = checked::add(e, detPower_);
        return Weight(std::move(w));
    }

    /// Tensoring with det(S^vee)^m.
    GeneratorLabel twisted(Int m) const {
        return GeneratorLabel(delta_, checked::add(detPower_, m), rank_);
    }

    friend auto operator<=>(const GeneratorLabel&, const GeneratorLabel&) = default;
    friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;

private:
    Partition delta_;
    Int detPower_ = 0;
    Int rank_ = 0;
};

namespace detail {

inline std::string joinInts(const std::vector<Int>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + ")";
}

}  // namespace detail

inline std::string Partition::str() const { return detail::joinInts(parts_); }
inline std::string Weight::str() const { return detail::joinInts(entries_); }

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }
inline std::ostream& operator<<(std::ostream& os, const GeneratorLabel& g) {
    return os << g.delta().str() << "+det^" << g.detPower();
}

/// Length of the i-th row (1-based).
inline Int rowLength(const Partition& p, Int i) { return p.row(i); }

/// Number of parts of p that are >= i, i.e. the length of the i-th column.
inline Int colLength(const Partition& p, Int i) {
    if (i < 1) throw shape_error("column index must be positive");
    Int count = 0;
    for (Int part : p.parts()) {
        if (part < i) break;
        ++count;
    }
    return count;
}

/// Transposed diagram.
inline Partition conjugate(const Partition& p) {
    std::vector<Int> cols;
    const Int width = p.row(1);
    cols.reserve(static_cast<std::size_t>(width));
    for (Int i = 1; i <= width; ++i) cols.push_back(colLength(p, i));
    return Partition(std::move(cols));
}

/// True iff p has at most `rows` parts and every part is at most `cols`.
inline bool fitsBox(const Partition& p, Int rows, Int cols) {
    if (rows < 0 || cols < 0) throw shape_error("box dimensions must be non-negative");
    return p.length() <= rows && p.row(1) <= cols;
}

/// Moves the last entry of w into the det exponent: S^vee(w) (x) det^m = S^vee(w - w_r) (x) det^(m + w_r).
inline GeneratorLabel canonicalize(const Weight& w, Int m, const Context& ctx) {
    if (w.length() != ctx.r())
        throw shape_error("weight " + w.str() + " must have exactly r=" + std::to_string(ctx.r()) +
                          " entries");
    if (ctx.r() == 0) return GeneratorLabel(Partition{}, m, 0);
    const Int last = w.last();
    return GeneratorLabel(w.shifted(checked::neg(last)).toPartition(), checked::add(m, last), ctx.r());
}

/// All partitions fitting in a rows x cols box, in graded lexicographic order
/// (by size, then lexicographically ascending on the padded parts).
inline std::vector<Partition> partitionsInBox(Int rows, Int cols) {
    if (rows < 0 || cols < 0) throw shape_error("box dimensions must be non-negative");
    std::vector<std::vector<Int>> found;
    std::vector<Int> current(static_cast<std::size_t>(rows), 0);
    auto recurse = [&](auto&& self, std::size_t pos, Int bound) -> void {
        if (pos == current.size()) {
            found.push_back(current);
            return;
        }
        for (Int v = 0; v <= bound; ++v) {
            current[pos] = v;
            self(self, pos + 1, v);
        }
        current[pos] = 0;
    };
    recurse(recurse, 0, cols);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        const Int sa = std::accumulate(a.begin(), a.end(), Int{0});
        const Int sb = std::accumulate(b.begin(), b.end(), Int{0});
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<Partition> out;
    out.reserve(found.size());
    for (auto& parts : found) out.emplace_back(std::move(parts));
    return out;
}

/// Parses a comma-separated integer list such as "3,1" or "-1,-2". Empty string gives {}.
inline std::vector<Int> parseIntList(std::string_view text) {
    std::vector<Int> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    if (trim(text).empty()) return out;
    while (true) {
        const auto comma = text.find(',');
        std::string_view token = trim(text.substr(0, comma));
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        Int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw shape_error("cannot parse integer '" + std::string(token) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

inline Partition parsePartition(std::string_view text) { return Partition(parseIntList(text)); }

inline Weight parseWeight(std::string_view text) { return Weight(parseIntList(text)); }

}  // namespace schurwin
