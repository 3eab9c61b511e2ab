#pragma once

// Borel-Weil-Bott on Grassmannians.
//
// Conventions: a homogeneous bundle is given by a weight on S^vee (length r)
// and a weight on Q^vee (length d - r). The concatenation lambda is shifted by
// rho = (d-1, ..., 1, 0); cohomology is reported as GL(d) weights on V^vee.
// With these conventions S^vee(delta) for delta in the r x (d-r) box has
// H^0 = V^vee(delta) and nothing else.

#include <algorithm>
#include <map>
#include <set>

#include "partition.hpp"
#include "symfunc.hpp"

namespace schurwin {

struct HomogeneousWeight {
    Weight sPart;
    Weight qPart;

    /// S^vee(w) alone, trivial on the Q side.
    static HomogeneousWeight onS(const Context& ctx, Weight w) {
        return {std::move(w), Weight(std::vector<Int>(static_cast<std::size_t>(ctx.boxCols()), 0))};
    }
};

/// The S^vee-weight of the Schur power S^gamma: (-gamma_r, ..., -gamma_1).
inline Weight weightOfSchurPowerOfS(const Partition& gamma, Int r) {
    return Weight::fromPartition(gamma, r).dual();
}

/// Cohomology groups H^i as GL(d) representations with multiplicity.
class CohomologyTable {
public:
    explicit CohomologyTable(Int d) : d_(d) {}

    Int d() const { return d_; }
    const std::map<Int, SchurExpansion>& groups() const { return groups_; }

    void add(Int degree, const Weight& w, Int mult) {
        if (mult <= 0) throw shape_error("cohomology multiplicities must be positive");
        groups_.try_emplace(degree, d_).first->second.add(w, mult);
    }

    CohomologyTable& operator+=(const CohomologyTable& other) {
        if (other.d_ != d_) throw shape_error("cohomology tables over different GL(d)");
        for (const auto& [deg, rep] : other.groups_)
            for (const auto& [w, m] : rep.terms()) add(deg, w, m);
        return *this;
    }

    bool isZero() const { return groups_.empty(); }

    Int dimension(Int degree) const {
        auto it = groups_.find(degree);
        return it == groups_.end() ? 0 : schurwin::dimension(it->second);
    }

    bool vanishesInPositiveDegrees() const {
        return std::all_of(groups_.begin(), groups_.end(), [](const auto& kv) { return kv.first <= 0; });
    }

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

private:
    Int d_;
    std::map<Int, SchurExpansion> groups_;
};

/// Cohomology of the irreducible homogeneous bundle with weight w.
inline CohomologyTable bwb(const Context& ctx, const HomogeneousWeight& w) {
    if (w.sPart.length() != ctx.r() || w.qPart.length() != ctx.boxCols())
        throw shape_error("homogeneous weight must have shape (r, d-r) = (" + std::to_string(ctx.r()) + ", " +
                          std::to_string(ctx.boxCols()) + ")");
    const Int d = ctx.d();
    std::vector<Int> shifted;
    shifted.reserve(static_cast<std::size_t>(d));
    for (Int e : w.sPart.entries()) shifted.push_back(e);
    for (Int e : w.qPart.entries()) shifted.push_back(e);
    for (Int i = 0; i < d; ++i) shifted[static_cast<std::size_t>(i)] = checked::add(shifted[static_cast<std::size_t>(i)], d - 1 - i);

    CohomologyTable table(d);
    if (std::set<Int>(shifted.begin(), shifted.end()).size() != shifted.size()) return table;

    Int inversions = 0;
    for (std::size_t i = 0; i < shifted.size(); ++i)
        for (std::size_t j = i + 1; j < shifted.size(); ++j)
            if (shifted[i] < shifted[j]) ++inversions;

    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    for (Int i = 0; i < d; ++i) shifted[static_cast<std::size_t>(i)] -= d - 1 - i;
    table.add(inversions, Weight(std::move(shifted)), 1);
    return table;
}

/// sum_i (-1)^i H^i as a virtual GL(d) character.
inline SchurExpansion eulerCharacter(const CohomologyTable& table) {
    SchurExpansion chi(table.d());
    for (const auto& [deg, rep] : table.groups()) chi += (deg % 2 == 0) ? rep : rep.scaled(-1);
    return chi;
}

inline SchurExpansion eulerCharacter(const Context& ctx, const HomogeneousWeight& w) {
    return eulerCharacter(bwb(ctx, w));
}

/// Cohomology of S^gamma (x) S^vee(delta) = Hom(S^vee(gamma), S^vee(delta)).
inline CohomologyTable homBundleCohomology(const Context& ctx, const Partition& gamma, const Partition& delta) {
    const Int r = ctx.r();
    if (gamma.length() > r || delta.length() > r)
        throw shape_error("gamma and delta must have at most r rows");
    CohomologyTable total(ctx.d());
    const SchurExpansion pieces = tensorGL(r, weightOfSchurPowerOfS(gamma, r), Weight::fromPartition(delta, r));
    for (const auto& [mu, mult] : pieces.terms()) {
        const CohomologyTable part = bwb(ctx, HomogeneousWeight::onS(ctx, mu));
        for (const auto& [deg, rep] : part.groups())
            for (const auto& [w, m] : rep.terms()) total.add(deg, w, checked::mul(m, mult));
    }
    return total;
}

}  // namespace schurwin
