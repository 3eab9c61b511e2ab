#pragma once

// Independent checks of the staircase and window-shift machinery:
// torus fixed-point localization, Euler characteristics through
// Borel-Weil-Bott, Ext-vanishing for the window bundles, the composition
// and det-conjugation laws for window shifts, and the golden tables.

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "bott.hpp"
#include "format.hpp"
#include "golden.hpp"
#include "shifts.hpp"
#include "staircase.hpp"
#include "symfunc.hpp"
#include "windows.hpp"

namespace schurwin {

struct VerificationReport {
    std::string checkName;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    bool pass = true;
    /// Present whenever pass is false.
    nlohmann::ordered_json counterexample;
    std::string note;
    double seconds = 0.0;
};

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline nlohmann::ordered_json intsJson(const std::vector<Int>& xs) { return nlohmann::ordered_json(xs); }

inline nlohmann::ordered_json stepsJson(const StaircaseData& data) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& step : data.steps) out.push_back({{"delta", intsJson(step.delta.parts())}, {"s", step.s}});
    return out;
}

/// e_s(t_1, ..., t_n); zero for s < 0 or s > n.
inline Rational elementary(Int s, std::span<const Rational> t) {
    if (s < 0 || s > static_cast<Int>(t.size())) return Rational(0);
    std::vector<Rational> e(static_cast<std::size_t>(s + 1), Rational(0));
    e[0] = 1;
    for (const Rational& ti : t)
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += ti * e[j - 1];
    return e[static_cast<std::size_t>(s)];
}

/// All r-subsets of {0, ..., d-1}, lexicographically.
inline std::vector<std::vector<std::size_t>> fixedPoints(Int d, Int r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        if (static_cast<Int>(current.size()) == r) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = next; i < static_cast<std::size_t>(d); ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

/// Distinct positive rationals p/q with 1 <= p, q <= 100; repeats are redrawn.
inline std::vector<Rational> sampleTorusParameters(Int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 100);
    std::vector<Rational> t;
    std::set<Rational> seen;
    while (static_cast<Int>(t.size()) < d) {
        Rational value(dist(rng), dist(rng));
        value.canonicalize();
        if (value == 0 || !seen.insert(value).second) continue;
        t.push_back(value);
    }
    return t;
}

/// sum_w c_w S^vee(w): a Schur function on S^vee is its own weight, padded to r.
inline SchurExpansion bundleEuler(const Context& ctx, const Partition& delta) {
    if (delta.length() > ctx.r()) return SchurExpansion(ctx.d());  // S^vee(delta) = 0 in rank r
    return eulerCharacter(ctx, HomogeneousWeight::onS(ctx, Weight::fromPartition(delta, ctx.r())));
}

/// Character of wedge^s V as a weight on V^vee: (0^{d-s}, (-1)^s).
inline SchurExpansion wedgeOfV(const Context& ctx, Int s) {
    SchurExpansion out(ctx.d());
    if (s < 0 || s > ctx.d()) return out;
    std::vector<Int> w(static_cast<std::size_t>(ctx.d()), 0);
    for (Int i = ctx.d() - s; i < ctx.d(); ++i) w[static_cast<std::size_t>(i)] = -1;
    out.add(Weight(std::move(w)), 1);
    return out;
}

inline nlohmann::ordered_json expansionJson(const SchurExpansion& e) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [w, c] : e.terms()) out.push_back({{"weight", intsJson(w.entries())}, {"coeff", c}});
    return out;
}

}  // namespace detail

/// Checks, at every torus fixed point and for `samples` random parameter vectors,
///   sum_k (-1)^(k+1) s_{delta_k}(t_I^-1) e_{s_k}(t) = s_delta(t_I^-1).
/// This is a consequence of exactness, not a proof of it.
inline VerificationReport checkLocalization(const StaircaseData& data, Int samples, std::uint64_t seed) {
    detail::Stopwatch clock;
    const Context& ctx = data.ctx;
    VerificationReport report{"exactness", {}, true, nullptr, "necessary condition verified (localization at torus fixed points)", 0.0};
    report.parameters = {{"d", ctx.d()}, {"r", ctx.r()}, {"delta", detail::intsJson(data.base.parts())},
                         {"samples", samples}, {"seed", seed}};
    if (samples < 1) throw shape_error("samples must be at least 1");
    std::mt19937_64 rng(seed);
    const auto points = detail::fixedPoints(ctx.d(), ctx.r());
    for (Int sample = 0; sample < samples && report.pass; ++sample) {
        const std::vector<Rational> t = detail::sampleTorusParameters(ctx.d(), rng);
        std::vector<Rational> e(static_cast<std::size_t>(ctx.d() + 1));
        for (Int s = 0; s <= ctx.d(); ++s) e[static_cast<std::size_t>(s)] = detail::elementary(s, t);
        auto ext = [&](Int s) { return (s < 0 || s > ctx.d()) ? Rational(0) : e[static_cast<std::size_t>(s)]; };
        for (const auto& subset : points) {
            std::vector<Rational> x;
            for (std::size_t i : subset) x.push_back(Rational(1) / t[i]);
            Rational lhs(0);
            for (std::size_t k = 0; k < data.steps.size(); ++k) {
                const Rational piece = schurPolynomial(data.steps[k].delta, x) * ext(data.steps[k].s);
                if (k % 2 == 0) lhs += piece; else lhs -= piece;
            }
            const Rational rhs = schurPolynomial(data.base, x);
            if (lhs != rhs) {
                nlohmann::ordered_json tj = nlohmann::ordered_json::array();
                for (const auto& v : t) tj.push_back(v.get_str());
                report.pass = false;
                report.counterexample = {{"sample", sample}, {"t", tj},
                                         {"fixedPoint", nlohmann::ordered_json(subset)},
                                         {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()},
                                         {"steps", detail::stepsJson(data)}};
                report.note = "exactness consequence violated";
                break;
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

inline VerificationReport verifyLocalization(const Context& ctx, const Partition& delta, Int samples, std::uint64_t seed) {
    return checkLocalization(staircaseDiagrams(ctx, delta), samples, seed);
}

/// Checks sum_k (-1)^(k+1) chi(S^vee delta_k) ch(wedge^{s_k} V) = chi(S^vee delta)
/// as virtual GL(d) characters, compared in the Schur basis.
inline VerificationReport checkEuler(const StaircaseData& data) {
    detail::Stopwatch clock;
    const Context& ctx = data.ctx;
    VerificationReport report{"euler", {}, true, nullptr, "necessary condition verified (Euler characteristics via Borel-Weil-Bott)", 0.0};
    report.parameters = {{"d", ctx.d()}, {"r", ctx.r()}, {"delta", detail::intsJson(data.base.parts())}};
    SchurExpansion lhs(ctx.d());
    for (std::size_t k = 0; k < data.steps.size(); ++k) {
        const SchurExpansion piece = multiply(detail::bundleEuler(ctx, data.steps[k].delta), detail::wedgeOfV(ctx, data.steps[k].s));
        if (k % 2 == 0) lhs += piece; else lhs -= piece;
    }
    const SchurExpansion rhs = detail::bundleEuler(ctx, data.base);
    if (lhs != rhs) {
        report.pass = false;
        report.counterexample = {{"difference", detail::expansionJson(lhs - rhs)}, {"steps", detail::stepsJson(data)}};
        report.note = "alternating Euler characteristic does not balance";
    }
    report.seconds = clock.seconds();
    return report;
}

inline VerificationReport verifyEuler(const Context& ctx, const Partition& delta) {
    return checkEuler(staircaseDiagrams(ctx, delta));
}

/// Ext-vanishing H^{>0}(S^gamma (x) S^vee delta) = 0 for all gamma, delta in the r x (d-r) box.
inline VerificationReport verifyTilting(const Context& ctx) {
    detail::Stopwatch clock;
    VerificationReport report{"tilting", {}, true, nullptr, "", 0.0};
    const auto box = partitionsInBox(ctx.boxRows(), ctx.boxCols());
    Int pairs = 0;
    for (const Partition& gamma : box) {
        for (const Partition& delta : box) {
            ++pairs;
            const CohomologyTable table = homBundleCohomology(ctx, gamma, delta);
            if (!table.vanishesInPositiveDegrees() && report.pass) {
                report.pass = false;
                nlohmann::ordered_json degrees = nlohmann::ordered_json::object();
                for (const auto& [deg, rep] : table.groups()) degrees[std::to_string(deg)] = detail::expansionJson(rep);
                report.counterexample = {{"gamma", detail::intsJson(gamma.parts())},
                                         {"delta", detail::intsJson(delta.parts())}, {"cohomology", degrees}};
            }
        }
    }
    report.parameters = {{"d", ctx.d()}, {"r", ctx.r()}, {"pairs", pairs}};
    report.note = report.pass ? "no higher cohomology between window bundles" : "higher cohomology found";
    report.seconds = clock.seconds();
    return report;
}

/// Matrix-level composition and det-conjugation laws over kMin..kMax.
inline VerificationReport verifyRelations(const Context& ctx, Int kMin, Int kMax) {
    detail::Stopwatch clock;
    if (kMin > kMax) throw shape_error("empty window range");
    VerificationReport report{"relations", {}, true, nullptr, "", 0.0};
    report.parameters = {{"d", ctx.d()}, {"r", ctx.r()}, {"kMin", kMin}, {"kMax", kMax},
                         {"cotwistShift", cotwistShiftAmount(ctx)}};
    std::map<std::pair<Int, Int>, KMatrix> cache;
    auto matrix = [&](Int a, Int b) -> const KMatrix& {
        auto it = cache.find({a, b});
        if (it == cache.end()) it = cache.emplace(std::pair{a, b}, kMatrix(ctx, a, b)).first;
        return it->second;
    };
    auto fail = [&](std::string law, nlohmann::ordered_json where) {
        if (!report.pass) return;
        report.pass = false;
        where["law"] = std::move(law);
        report.counterexample = std::move(where);
    };
    const std::size_t n = static_cast<std::size_t>(binomial(ctx.d(), ctx.r()));
    Int checks = 0;
    for (Int k = kMin; k <= kMax; ++k) {
        for (Int l = kMin; l <= kMax; ++l) {
            const KMatrix& mkl = matrix(k, l);
            const mpz_class det = mkl.determinant();
            ++checks;
            if (det != 1 && det != -1) fail("unimodular", {{"from", k}, {"to", l}, {"det", det.get_str()}});
            ++checks;
            if (!(mkl * matrix(l, k)).sameEntries(KMatrix::identity(n, k)))
                fail("round trip", {{"from", k}, {"to", l}});
            for (Int m = kMin; m <= kMax; ++m) {
                ++checks;
                if (!(mkl * matrix(l, m)).sameEntries(matrix(k, m)))
                    fail("composition", {{"k", k}, {"l", l}, {"m", m}});
            }
            for (Int shift = kMin - std::min(k, l); shift <= kMax - std::max(k, l); ++shift) {
                ++checks;
                const KMatrix conjugated = detTwistMatrix(ctx, k + shift, -shift) * mkl * detTwistMatrix(ctx, l, shift);
                if (!conjugated.sameEntries(matrix(k + shift, l + shift)))
                    fail("det conjugation", {{"from", k}, {"to", l}, {"m", shift}});
            }
        }
    }
    report.parameters["checks"] = checks;
    report.note = report.pass ? "all relations hold as integer matrix identities" : "relation violated";
    report.seconds = clock.seconds();
    return report;
}

namespace detail {

inline std::vector<golden::Entry> emittedTables(const Context& ctx, bool& any) {
    std::vector<golden::Entry> out;
    any = false;
    if (ctx.r() == 1 || (ctx.d() == 4 && ctx.r() == 2)) {
        any = true;
        std::string shifts, sequences, w0, w1;
        for (const auto& g : enumerateWindow(ctx, 1)) shifts += format::shiftLine(1, 0, g, shiftDownGenerator(ctx, g)) + "\n";
        for (const auto& g : enumerateWindow(ctx, 0)) w0 += g.fullWeight().str() + "\n";
        for (const auto& g : enumerateWindow(ctx, 1)) w1 += g.fullWeight().str() + "\n";
        if (ctx.r() == 1) {
            sequences = format::sequence(resolutionSequence(ctx, Partition{}), 1) + "\n";
        } else {
            for (const Partition& base : {Partition{0, 0}, Partition{1, 0}, Partition{2, 0}})
                sequences += format::sequence(resolutionSequence(ctx, base), 2) + "\n";
        }
        out.push_back({"window shift table", shifts});
        out.push_back({"exact sequences", sequences});
        out.push_back({"window W_0", w0});
        out.push_back({"window W_+1", w1});
    }
    if (ctx.d() == 7 && ctx.r() == 3) {
        any = true;
        out.push_back({"staircase d=7 r=3", format::staircase(staircaseDiagrams(ctx, Partition{3, 1}))});
    }
    return out;
}

inline std::vector<golden::Entry> expectedTables(const Context& ctx) {
    std::vector<golden::Entry> out;
    if (ctx.d() == 4 && ctx.r() == 2) {
        out = {{"window shift table", golden::kShiftD4R2},
               {"exact sequences", golden::kSequencesD4R2},
               {"window W_0", golden::kWindow0D4R2},
               {"window W_+1", golden::kWindow1D4R2}};
    } else if (ctx.r() == 1) {
        out = {{"window shift table", ctx.d() == 4 ? std::string(golden::kShiftR1D4) : golden::shiftR1(ctx.d())},
               {"exact sequences", golden::sequenceR1(ctx.d())},
               {"window W_0", golden::windowR1(ctx.d(), 0)},
               {"window W_+1", golden::windowR1(ctx.d(), 1)}};
    }
    if (ctx.d() == 7 && ctx.r() == 3) out.push_back({"staircase d=7 r=3", golden::kStaircaseD7R3});
    return out;
}

}  // namespace detail

/// Byte-exact comparison of emitted tables against the embedded reference tables.
/// Throws shape_error for contexts without reference data.
inline VerificationReport regressionAppendix(const Context& ctx) {
    detail::Stopwatch clock;
    bool any = false;
    const auto emitted = detail::emittedTables(ctx, any);
    if (!any)
        throw shape_error("no reference tables for d=" + std::to_string(ctx.d()) + " r=" + std::to_string(ctx.r()) +
                          " (available: r=1, d=4 r=2, d=7 r=3)");
    const auto expected = detail::expectedTables(ctx);
    VerificationReport report{"regression", {}, true, nullptr, "", 0.0};
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < expected.size(); ++i) {
        names.push_back(expected[i].name);
        if (emitted[i].text != expected[i].text && report.pass) {
            report.pass = false;
            report.counterexample = {{"table", expected[i].name}, {"expected", expected[i].text}, {"actual", emitted[i].text}};
        }
    }
    report.parameters = {{"d", ctx.d()}, {"r", ctx.r()}, {"tables", names}};
    report.note = report.pass ? "all reference tables reproduced byte for byte" : "reference table mismatch";
    report.seconds = clock.seconds();
    return report;
}

/// A random single-term corruption of a staircase: perturb one s_k, add or
/// remove a box of one delta_k, or swap two distinct s values. The result
/// always differs from the input.
inline StaircaseData mutateStaircase(const StaircaseData& data, std::mt19937_64& rng) {
    const Int d = data.ctx.d();
    const Int r = data.ctx.r();
    const std::size_t steps = data.steps.size();
    std::uniform_int_distribution<std::size_t> pickStep(0, steps - 1);
    std::uniform_int_distribution<int> pickKind(0, 3);
    while (true) {
        StaircaseData out = data;
        const std::size_t k = pickStep(rng);
        StaircaseStep& step = out.steps[k];
        switch (pickKind(rng)) {
            case 0: {
                std::uniform_int_distribution<Int> pickS(0, d);
                step.s = pickS(rng);
                break;
            }
            case 1: {
                std::vector<Int> rows = step.delta.padded(r);
                std::vector<std::size_t> addable;
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (i == 0 || rows[i] < rows[i - 1]) addable.push_back(i);
                std::uniform_int_distribution<std::size_t> pick(0, addable.size() - 1);
                ++rows[addable[pick(rng)]];
                step.delta = Partition(rows);
                break;
            }
            case 2: {
                std::vector<Int> rows = step.delta.parts();
                std::vector<std::size_t> removable;
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (i + 1 == rows.size() || rows[i] > rows[i + 1]) removable.push_back(i);
                if (removable.empty()) continue;
                std::uniform_int_distribution<std::size_t> pick(0, removable.size() - 1);
                --rows[removable[pick(rng)]];
                step.delta = Partition(rows);
                break;
            }
            default: {
                if (steps < 2) continue;
                const std::size_t j = pickStep(rng);
                std::swap(out.steps[k].s, out.steps[j].s);
                break;
            }
        }
        if (!(out == data)) return out;
    }
}

}  // namespace schurwin
