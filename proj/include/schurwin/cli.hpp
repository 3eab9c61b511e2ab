#pragma once

// Command-line front-end. run() never exits the process: it returns
// 0 on success (or a passing verification), 1 on a failed verification and
// 2 on invalid input, writing the document to `out` and diagnostics to `err`.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bott.hpp"
#include "format.hpp"
#include "io.hpp"
#include "shifts.hpp"
#include "staircase.hpp"
#include "verify.hpp"
#include "windows.hpp"

namespace schurwin::cli {

inline constexpr const char* kVersion = "schurwin 1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 1;

struct CliConfig {
    Int d = 0;
    Int r = 0;
    std::string subcommand;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    bool keepDet = false;

    // subcommand parameters
    Int k = 0;
    Int fromK = 1;
    Int toK = 0;
    std::string delta;
    /// verify only: absent means sweep every admissible base
    std::optional<std::string> verifyDelta;
    std::string gen;
    std::string sPart;
    std::string qPart;
    std::string check;
    Int samples = 3;
    Int kMin = -2;
    Int kMax = 2;
    bool timing = false;
};

namespace detail {

inline std::uint64_t resolveSeed(const CliConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv("SCHURWIN_SEED")) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size()) return value;
        } catch (const std::exception&) {
        }
        throw shape_error(std::string("SCHURWIN_SEED is not a non-negative integer: '") + env + "'");
    }
    return kDefaultSeed;
}

inline void requireFormat(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw shape_error("format '" + cfg.format + "' is not available for " + cfg.subcommand);
}

inline void emitJson(std::ostream& out, const io::Json& j) { out << j.dump(2) << "\n"; }

inline std::string reportLine(const VerificationReport& report) {
    std::string params;
    for (const auto& [key, value] : report.parameters.items()) {
        if (!params.empty()) params += ' ';
        params += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    std::string line = std::string(report.pass ? "PASS " : "FAIL ") + report.checkName + " " + params + ": " + report.note;
    if (!report.pass) line += "\n  witness: " + report.counterexample.dump();
    return line;
}

inline int emitReports(std::ostream& out, const CliConfig& cfg, const std::vector<VerificationReport>& reports) {
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& rep) { return rep.pass; });
    if (cfg.format == "json") {
        io::Json list = io::Json::array();
        for (const auto& rep : reports) list.push_back(io::toJson(rep, cfg.timing));
        emitJson(out, {{"check", cfg.check}, {"pass", pass}, {"reports", list}});
    } else {
        for (const auto& rep : reports) {
            out << reportLine(rep);
            if (cfg.timing) out << " (" << rep.seconds << " s)";
            out << "\n";
        }
        out << (pass ? "OK" : "FAILED") << " " << cfg.check << ": " << reports.size() << " report(s)\n";
    }
    return pass ? 0 : 1;
}

inline int runWindows(const CliConfig& cfg, std::ostream& out) {
    requireFormat(cfg, {"text", "json"});
    const Context ctx(cfg.d, cfg.r);
    const auto gens = enumerateWindow(ctx, cfg.k);
    if (cfg.format == "json")
        emitJson(out, io::windowJson(ctx, cfg.k, gens));
    else
        out << format::window(ctx, cfg.k, gens);
    return 0;
}

inline int runStaircase(const CliConfig& cfg, std::ostream& out) {
    requireFormat(cfg, {"text", "json", "latex"});
    const Context ctx(cfg.d, cfg.r);
    const StaircaseData data = staircaseDiagrams(ctx, parsePartition(cfg.delta));
    const auto seq = resolutionSequence(data);
    if (cfg.format == "json") {
        emitJson(out, io::toJson(data));
    } else if (cfg.format == "latex") {
        out << format::latex::sequence(seq, ctx.r()) << "\n";
    } else {
        out << format::staircase(data) << "sequence: " << format::sequence(seq, ctx.r()) << "\n";
    }
    return 0;
}

inline int runShift(const CliConfig& cfg, std::ostream& out) {
    requireFormat(cfg, {"text", "json", "latex"});
    const Context ctx(cfg.d, cfg.r);
    const Weight w = parseWeight(cfg.gen);
    const GeneratorLabel g = canonicalize(w, 0, ctx);
    const TermComplex c = generalShift(ctx, cfg.fromK, cfg.toK, g, cfg.keepDet);
    if (cfg.format == "json")
        emitJson(out, io::toJson(c));
    else if (cfg.format == "latex")
        out << format::latex::complex(c) << "\n";
    else
        out << format::shiftLine(cfg.fromK, cfg.toK, g, c) << "\n";
    return 0;
}

inline int runMatrix(const CliConfig& cfg, std::ostream& out) {
    requireFormat(cfg, {"text", "json", "csv"});
    const Context ctx(cfg.d, cfg.r);
    const KMatrix m = kMatrix(ctx, cfg.fromK, cfg.toK);
    if (cfg.format == "json")
        emitJson(out, io::toJson(ctx, m));
    else if (cfg.format == "csv")
        out << format::matrixCsv(ctx, m);
    else
        out << format::matrix(ctx, m);
    return 0;
}

inline int runCotwist(const CliConfig& cfg, std::ostream& out) {
    requireFormat(cfg, {"text", "json"});
    const Context ctx(cfg.d, cfg.r);
    const Int shift = cotwistShiftAmount(ctx);
    if (cfg.format == "json")
        emitJson(out, {{"d", ctx.d()}, {"r", ctx.r()}, {"cotwistShift", shift}});
    else
        out << "omega_{0,-1} = C_{F(r+1)}[" << shift << "]  (2(d-r)-1 with d=" << ctx.d() << " r=" << ctx.r() << ")\n";
    return 0;
}

inline int runBwb(const CliConfig& cfg, std::ostream& out) {
    requireFormat(cfg, {"text", "json"});
    const Context ctx(cfg.d, cfg.r);
    const Weight s = parseWeight(cfg.sPart);
    const Weight q = cfg.qPart.empty() ? Weight(std::vector<Int>(static_cast<std::size_t>(ctx.boxCols()), 0))
                                       : parseWeight(cfg.qPart);
    const CohomologyTable table = bwb(ctx, {s, q});
    if (cfg.format == "json") {
        emitJson(out, io::toJson(table));
    } else {
        if (table.isZero()) out << "all cohomology vanishes\n";
        for (const auto& [deg, rep] : table.groups())
            for (const auto& [w, m] : rep.terms())
                out << "H^" << deg << " = " << (m == 1 ? "" : std::to_string(m) + "·") << "V^∨" << w.str()
                    << "  dim " << table.dimension(deg) << "\n";
    }
    return 0;
}

inline int runVerify(const CliConfig& cfg, std::ostream& out) {
    requireFormat(cfg, {"text", "json"});
    const Context ctx(cfg.d, cfg.r);
    std::vector<VerificationReport> reports;
    const std::string& check = cfg.check;
    if (check == "exactness" || check == "euler") {
        std::vector<Partition> bases;
        if (!cfg.verifyDelta) {
            bases = staircaseBases(ctx);
            if (bases.empty()) throw shape_error("no admissible staircase bases for r=" + std::to_string(ctx.r()));
        } else {
            bases.push_back(parsePartition(*cfg.verifyDelta));
        }
        const std::uint64_t seed = resolveSeed(cfg);
        for (const Partition& base : bases) {
            if (check == "exactness")
                reports.push_back(verifyLocalization(ctx, base, cfg.samples, seed));
            else
                reports.push_back(verifyEuler(ctx, base));
        }
    } else if (check == "tilting") {
        reports.push_back(verifyTilting(ctx));
    } else if (check == "relations") {
        reports.push_back(verifyRelations(ctx, cfg.kMin, cfg.kMax));
    } else if (check == "regression") {
        reports.push_back(regressionAppendix(ctx));
    } else {
        throw shape_error("unknown check '" + check + "'");
    }
    return emitReports(out, cfg, reports);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CliConfig cfg;
    CLI::App app{"Staircase complexes, grade-restriction windows and window shifts on Grassmannians", "schurwin"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub, std::initializer_list<std::string> formats) {
        sub->add_option("--d", cfg.d, "dimension of V")->required();
        sub->add_option("--r", cfg.r, "rank of S")->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::vector<std::string>(formats)));
    };

    auto* windows = app.add_subcommand("windows", "list the generators of the window W_k");
    common(windows, {"text", "json"});
    windows->add_option("--k", cfg.k, "window index")->required();

    auto* staircase = app.add_subcommand("staircase", "staircase diagrams delta_k, s_k and the exact sequence");
    common(staircase, {"text", "json", "latex"});
    staircase->add_option("--delta", cfg.delta, "base diagram, e.g. 3,1")->required();

    auto* shift = app.add_subcommand("shift", "apply the window shift W_from -> W_to to a generator");
    common(shift, {"text", "json", "latex"});
    shift->add_option("--from", cfg.fromK, "source window")->required();
    shift->add_option("--to", cfg.toK, "target window")->required();
    shift->add_option("--gen", cfg.gen, "full weight of the generator, e.g. 3,2")->required();
    shift->add_flag("--keep-det", cfg.keepDet, "keep wedge^d V factors instead of trivializing det V");

    auto* twist = app.add_subcommand("twist", "the twist T_F(r) on a W_{+1} generator (same as shift --from 1 --to 0)");
    common(twist, {"text", "json", "latex"});
    twist->add_option("--gen", cfg.gen, "full weight of the generator")->required();
    twist->add_flag("--keep-det", cfg.keepDet, "keep wedge^d V factors");

    auto* matrix = app.add_subcommand("matrix", "K-theoretic change of basis between windows");
    common(matrix, {"text", "json", "csv"});
    matrix->add_option("--from", cfg.fromK, "source window")->required();
    matrix->add_option("--to", cfg.toK, "target window")->required();

    auto* cotwist = app.add_subcommand("cotwist", "homological shift relating omega_{0,-1} and the cotwist");
    common(cotwist, {"text", "json"});

    auto* bwbCmd = app.add_subcommand("bwb", "Borel-Weil-Bott cohomology of a homogeneous bundle");
    common(bwbCmd, {"text", "json"});
    bwbCmd->add_option("--s", cfg.sPart, "weight on S^vee (length r)")->required();
    bwbCmd->add_option("--q", cfg.qPart, "weight on Q^vee (length d-r); default zero");

    auto* verify = app.add_subcommand("verify", "run a verification check");
    common(verify, {"text", "json"});
    verify->add_option("check", cfg.check, "exactness|euler|tilting|relations|regression")
        ->required()
        ->check(CLI::IsMember({"exactness", "euler", "tilting", "relations", "regression"}));
    verify->add_option("--delta", cfg.verifyDelta, "staircase base; default sweeps every admissible base");
    verify->add_option("--seed", cfg.seed, "seed for sampled torus parameters (fallback: SCHURWIN_SEED)");
    verify->add_option("--samples", cfg.samples, "number of sampled torus parameter vectors")->check(CLI::PositiveNumber);
    verify->add_option("--kmin", cfg.kMin, "lowest window index for relations");
    verify->add_option("--kmax", cfg.kMax, "highest window index for relations");
    verify->add_flag("--timing", cfg.timing, "include wall-clock timings (output is then not reproducible)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        for (auto* sub : app.get_subcommands()) {
            cfg.subcommand = sub->get_name();
            if (cfg.subcommand == "windows") return detail::runWindows(cfg, out);
            if (cfg.subcommand == "staircase") return detail::runStaircase(cfg, out);
            if (cfg.subcommand == "shift") return detail::runShift(cfg, out);
            if (cfg.subcommand == "twist") {
                cfg.fromK = 1;
                cfg.toK = 0;
                return detail::runShift(cfg, out);
            }
            if (cfg.subcommand == "matrix") return detail::runMatrix(cfg, out);
            if (cfg.subcommand == "cotwist") return detail::runCotwist(cfg, out);
            if (cfg.subcommand == "bwb") return detail::runBwb(cfg, out);
            if (cfg.subcommand == "verify") return detail::runVerify(cfg, out);
        }
    } catch (const shape_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace schurwin::cli
