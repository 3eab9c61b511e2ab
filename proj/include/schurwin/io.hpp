#pragma once

// JSON documents for every CLI output. Field order is fixed (ordered_json) so
// emit -> parse -> emit reproduces the same bytes.

#include <string>
#include <vector>

#include "json.hpp"

#include "bott.hpp"
#include "shifts.hpp"
#include "staircase.hpp"
#include "symfunc.hpp"
#include "verify.hpp"
#include "windows.hpp"

namespace schurwin::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<Int> ints(const Json& j) {
    if (!j.is_array()) throw shape_error("expected an array of integers");
    std::vector<Int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw shape_error("expected an integer, got " + v.dump());
        out.push_back(v.get<Int>());
    }
    return out;
}

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw shape_error(std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace detail

inline Json toJson(const Partition& p) { return Json(p.parts()); }
inline Json toJson(const Weight& w) { return Json(w.entries()); }

// --- SchurExpansion: [{weight, coeff}] ---

inline Json toJson(const SchurExpansion& e) {
    Json out = Json::array();
    for (const auto& [w, c] : e.terms()) out.push_back({{"weight", toJson(w)}, {"coeff", c}});
    return out;
}

inline SchurExpansion expansionFromJson(const Json& j, Int rank) {
    if (!j.is_array()) throw shape_error("Schur expansion must be an array");
    SchurExpansion out(rank);
    for (const auto& term : j) out.add(Weight(detail::ints(detail::field(term, "weight"))), detail::field(term, "coeff").get<Int>());
    return out;
}

// --- CohomologyTable: {degree: [{weight, mult}]} ---

inline Json toJson(const CohomologyTable& table) {
    Json out = Json::object();
    for (const auto& [deg, rep] : table.groups()) {
        Json list = Json::array();
        for (const auto& [w, m] : rep.terms()) list.push_back({{"weight", toJson(w)}, {"mult", m}});
        out[std::to_string(deg)] = std::move(list);
    }
    return out;
}

inline CohomologyTable cohomologyFromJson(const Json& j, Int d) {
    if (!j.is_object()) throw shape_error("cohomology table must be an object");
    CohomologyTable out(d);
    for (const auto& [key, list] : j.items()) {
        const Int deg = std::stoll(key);
        for (const auto& entry : list)
            out.add(deg, Weight(detail::ints(detail::field(entry, "weight"))), detail::field(entry, "mult").get<Int>());
    }
    return out;
}

// --- Staircase: {d, r, base, steps: [{delta, s, extDim}]} ---

inline Json toJson(const StaircaseData& data) {
    Json steps = Json::array();
    for (const auto& step : data.steps)
        steps.push_back({{"delta", toJson(step.delta)}, {"s", step.s}, {"extDim", binomial(data.ctx.d(), step.s)}});
    return {{"d", data.ctx.d()}, {"r", data.ctx.r()}, {"base", toJson(data.base)}, {"steps", steps}};
}

inline StaircaseData staircaseFromJson(const Json& j) {
    StaircaseData out{Context(detail::field(j, "d").get<Int>(), detail::field(j, "r").get<Int>()),
                      Partition(detail::ints(detail::field(j, "base"))), {}};
    for (const auto& step : detail::field(j, "steps"))
        out.steps.push_back({Partition(detail::ints(detail::field(step, "delta"))), detail::field(step, "s").get<Int>()});
    return out;
}

// --- Generators and windows ---

inline Json toJson(const GeneratorLabel& g) {
    return {{"weight", toJson(g.fullWeight())}, {"delta", toJson(g.delta())}, {"detPower", g.detPower()}};
}

inline Json windowJson(const Context& ctx, Int k, const std::vector<GeneratorLabel>& gens) {
    Json list = Json::array();
    for (const auto& g : gens) list.push_back(toJson(g));
    return {{"d", ctx.d()}, {"r", ctx.r()}, {"k", k}, {"size", gens.size()}, {"generators", list}};
}

// --- TermComplex: {honest, terms: [{deg, weight, detPower, extPower, copies}]} ---
// `weight` is the canonical delta padded to r (last entry 0).

inline Json toJson(const TermComplex& c) {
    Json terms = Json::array();
    for (const Term& t : c.terms)
        terms.push_back({{"deg", t.degree},
                         {"weight", Json(t.label.delta().padded(t.label.rank()))},
                         {"detPower", t.label.detPower()},
                         {"extPower", t.extPower},
                         {"copies", t.copies}});
    return {{"honest", c.honest}, {"terms", terms}};
}

inline TermComplex termComplexFromJson(const Json& j, const Context& ctx) {
    TermComplex out;
    out.honest = detail::field(j, "honest").get<bool>();
    for (const auto& t : detail::field(j, "terms")) {
        const Weight w(detail::ints(detail::field(t, "weight")));
        const GeneratorLabel label = canonicalize(w, detail::field(t, "detPower").get<Int>(), ctx);
        const Int ext = detail::field(t, "extPower").get<Int>();
        if (ext < 0 || ext > ctx.d()) throw shape_error("extPower out of range");
        out.terms.push_back({detail::field(t, "deg").get<Int>(), label, ext, detail::field(t, "copies").get<Int>()});
    }
    return out;
}

// --- KMatrix: {d, r, from, to, rows, cols, entries, det} ---

inline Json toJson(const Context& ctx, const KMatrix& m) {
    Json rows = Json::array(), cols = Json::array();
    for (const auto& g : enumerateWindow(ctx, m.fromK)) rows.push_back(toJson(g.fullWeight()));
    for (const auto& g : enumerateWindow(ctx, m.toK)) cols.push_back(toJson(g.fullWeight()));
    return {{"d", ctx.d()}, {"r", ctx.r()}, {"from", m.fromK}, {"to", m.toK}, {"rows", rows},
            {"cols", cols}, {"entries", Json(m.entries)}, {"det", m.determinant().get_str()}};
}

inline KMatrix kMatrixFromJson(const Json& j) {
    KMatrix m{detail::field(j, "from").get<Int>(), detail::field(j, "to").get<Int>(), {}};
    for (const auto& row : detail::field(j, "entries")) m.entries.push_back(detail::ints(row));
    return m;
}

// --- VerificationReport ---

inline Json toJson(const VerificationReport& report, bool withTiming = false) {
    Json out = {{"check", report.checkName}, {"parameters", report.parameters}, {"pass", report.pass},
                {"counterexample", report.counterexample}, {"note", report.note}};
    if (withTiming) out["seconds"] = report.seconds;
    return out;
}

inline VerificationReport reportFromJson(const Json& j) {
    VerificationReport out;
    out.checkName = detail::field(j, "check").get<std::string>();
    out.parameters = detail::field(j, "parameters");
    out.pass = detail::field(j, "pass").get<bool>();
    out.counterexample = detail::field(j, "counterexample");
    out.note = detail::field(j, "note").get<std::string>();
    if (j.contains("seconds")) out.seconds = j.at("seconds").get<double>();
    return out;
}

}  // namespace schurwin::io
