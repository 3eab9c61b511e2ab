#pragma once

// Plain-text and LaTeX renderings of generators, sequences and shift complexes.
// The text forms are also the layout of the embedded golden tables.

#include <sstream>
#include <string>
#include <vector>

#include "shifts.hpp"
#include "staircase.hpp"
#include "windows.hpp"

namespace schurwin::format {

/// "S^∨(2,1)" with the full weight padded to r.
inline std::string generator(const GeneratorLabel& g) { return "S^∨" + g.fullWeight().str(); }

inline std::string schurOfDiagram(const Partition& delta, Int r) {
    return "S^∨" + Weight::fromPartition(delta, r).str();
}

inline std::string wedge(Int s) {
    if (s == 0) return "";
    if (s == 1) return " ⊗ V";
    return " ⊗ ∧^" + std::to_string(s) + " V";
}

inline std::string term(const Term& t) {
    std::string out = t.copies == 1 ? "" : std::to_string(t.copies) + "·";
    return out + generator(t.label) + wedge(t.extPower);
}

/// "{ A → B → C }  [deg 0..2]"; a single term is printed without braces.
inline std::string complex(const TermComplex& c) {
    std::string body;
    Int lo = 0, hi = 0;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        if (i) body += " → ";
        body += term(c.terms[i]);
        lo = i ? std::min(lo, c.terms[i].degree) : c.terms[i].degree;
        hi = i ? std::max(hi, c.terms[i].degree) : c.terms[i].degree;
    }
    if (c.terms.size() > 1) body = "{ " + body + " }";
    if (!c.honest) body = "skeleton " + body;
    return body + "  [deg " + std::to_string(lo) + ".." + std::to_string(hi) + "]";
}

/// "ω_{to,from}(S^∨(w)) = ..." using signed window indices such as +1.
inline std::string windowIndex(Int k) { return k > 0 ? "+" + std::to_string(k) : std::to_string(k); }

inline std::string shiftLine(Int fromK, Int toK, const GeneratorLabel& g, const TermComplex& c) {
    return "ω_{" + windowIndex(toK) + "," + windowIndex(fromK) + "}(" + generator(g) + ") = " + complex(c);
}

inline std::string sequence(const std::vector<SequenceTerm>& terms, Int r) {
    std::string out = "0";
    for (const SequenceTerm& t : terms) out += " → " + schurOfDiagram(t.delta, r) + wedge(t.s);
    return out + " → 0";
}

/// Header line followed by one "delta_k=(..) s_k=.." line per step.
inline std::string staircase(const StaircaseData& data) {
    std::ostringstream os;
    os << "staircase d=" << data.ctx.d() << " r=" << data.ctx.r() << " delta=" << data.base.str()
       << " K=" << data.ctx.K() << "\n";
    for (std::size_t k = 0; k < data.steps.size(); ++k)
        os << "delta_" << k + 1 << "=" << data.steps[k].delta.str() << " s_" << k + 1 << "=" << data.steps[k].s << "\n";
    return os.str();
}

inline std::string window(const Context& ctx, Int k, const std::vector<GeneratorLabel>& gens) {
    std::ostringstream os;
    os << "W_" << windowIndex(k) << " d=" << ctx.d() << " r=" << ctx.r() << " (" << gens.size() << " generators)\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
        os << i << "  " << generator(gens[i]) << "  delta=" << gens[i].delta().str() << " det^" << gens[i].detPower()
           << "\n";
    return os.str();
}

inline std::string matrix(const Context& ctx, const KMatrix& m) {
    std::ostringstream os;
    const auto rows = enumerateWindow(ctx, m.fromK);
    const auto cols = enumerateWindow(ctx, m.toK);
    os << "K-matrix W_" << windowIndex(m.fromK) << " -> W_" << windowIndex(m.toK) << " d=" << ctx.d()
       << " r=" << ctx.r() << " det=" << m.determinant().get_str() << "\n";
    os << "rows:";
    for (const auto& g : rows) os << " " << generator(g);
    os << "\ncols:";
    for (const auto& g : cols) os << " " << generator(g);
    os << "\n";
    for (const auto& row : m.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    return os.str();
}

inline std::string matrixCsv(const Context& ctx, const KMatrix& m) {
    std::ostringstream os;
    const auto rows = enumerateWindow(ctx, m.fromK);
    const auto cols = enumerateWindow(ctx, m.toK);
    os << "\"\"";
    for (const auto& g : cols) os << ",\"" << g.fullWeight().str() << "\"";
    os << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << "\"" << rows[i].fullWeight().str() << "\"";
        for (Int v : m.entries[i]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

namespace latex {

inline std::string weight(const Weight& w) { return w.str(); }

inline std::string schur(const Weight& w) { return "S^{\\vee " + weight(w) + "}"; }

inline std::string wedge(Int s) {
    if (s == 0) return "";
    if (s == 1) return " \\otimes V";
    return " \\otimes \\wedge^{" + std::to_string(s) + "} V";
}

inline std::string term(const Term& t) {
    std::string out = t.copies == 1 ? "" : std::to_string(t.copies) + " \\cdot ";
    return out + schur(t.label.fullWeight()) + wedge(t.extPower);
}

inline std::string sequence(const std::vector<SequenceTerm>& terms, Int r) {
    std::string out = "\\begin{tikzcd}[column sep=14pt] 0 \\rar";
    for (const SequenceTerm& t : terms)
        out += " & " + schur(Weight::fromPartition(t.delta, r)) + wedge(t.s) + " \\rar";
    return out + " & 0 \\end{tikzcd}";
}

inline std::string complex(const TermComplex& c) {
    std::string body;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        if (i) body += " \\rar & ";
        body += term(c.terms[i]);
    }
    if (c.terms.size() == 1) return body;
    return "\\{ \\begin{tikzcd}[column sep=14pt] " + body + " \\end{tikzcd} \\}";
}

}  // namespace latex

}  // namespace schurwin::format
