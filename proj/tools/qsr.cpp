// qsr command line: analyze calculi against the relation-algebra axioms,
// enforce algebraic closure on constraint networks, compute composition
// information-content metrics, and validate calculi against finite models.
//
// Exit codes: 0 success / everything holds, 1 violation or inconsistency
// found, 2 usage or parse error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsr/qsr.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A calculus reference is a file path or a builtin name.
qsr::CalculusSpec resolve_calculus(const std::string& ref) {
    if (std::filesystem::exists(ref)) return qsr::parse_calculus(read_file(ref), ref);
    return *qsr::builtin(ref).calc;
}

// A model reference is "builtin" (the calculus's bundled model), a bundled
// model alias such as "pc-0-3", or a file path.
qsr::FiniteModel resolve_model(const std::string& ref, const std::string& calculus_ref,
                               const qsr::CalculusSpec& calc) {
    if (ref == "builtin") {
        const auto entry = qsr::builtin(calculus_ref);
        if (!entry.model)
            throw std::runtime_error("no bundled model for calculus '" + calculus_ref + "'");
        return *entry.model;
    }
    if (!std::filesystem::exists(ref)) {
        if (const qsr::FiniteModel* m = qsr::builtin_model(ref)) return *m;
        throw std::runtime_error("model '" + ref + "' is neither a file nor a bundled model");
    }
    return qsr::parse_model(read_file(ref), calc, ref);
}

// printf pads by bytes; the check marks and inclusion signs are multi-byte.
std::string pad_left(const std::string& s, std::size_t width) {
    std::size_t glyphs = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++glyphs;
    return (glyphs < width ? std::string(width - glyphs, ' ') : std::string()) + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    std::size_t glyphs = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++glyphs;
    return s + (glyphs < width ? std::string(width - glyphs, ' ') : std::string());
}

std::string check_mark(const qsr::AxiomResult& r) {
    switch (r.status) {
        case qsr::AxiomStatus::Holds: return "✓";
        case qsr::AxiomStatus::Inapplicable: return "n/a";
        case qsr::AxiomStatus::Violated: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", r.percent());
            return buf;
        }
    }
    return "?";
}

int run_analyze(const std::string& calculus_ref, bool json, const std::vector<std::string>& axioms,
                bool ra10_full, std::uint64_t seed) {
    const qsr::CalculusSpec calc = resolve_calculus(calculus_ref);
    qsr::AnalyzeOptions opts;
    opts.ra10_full = ra10_full;
    opts.seed = seed;

    if (!axioms.empty()) {
        // Restricted run: evaluate just the requested axioms.
        bool violated = false;
        qsr::Json out = qsr::Json::array();
        for (const auto& token : axioms) {
            const auto id = qsr::axiom_from_string(token);
            if (!id) {
                std::cerr << "unknown axiom '" << token << "'\n";
                return kExitUsage;
            }
            const qsr::AxiomResult r = qsr::check_axiom(calc, *id, opts);
            violated = violated || r.status == qsr::AxiomStatus::Violated;
            if (json) {
                qsr::Json entry;
                entry["id"] = qsr::axiom_name(r.axiom);
                entry["status"] = qsr::status_name(r.status);
                entry["violations"] = r.violations;
                entry["tested"] = r.tested;
                entry["percent"] = r.percent_rounded();
                out.push_back(entry);
            } else {
                std::printf("%-8s %-12s %llu/%llu (%.1f%%)\n", qsr::axiom_name(r.axiom),
                            qsr::status_name(r.status),
                            static_cast<unsigned long long>(r.violations),
                            static_cast<unsigned long long>(r.tested), r.percent());
            }
        }
        if (json) std::cout << out.dump(2) << "\n";
        return violated ? kExitViolation : kExitOk;
    }

    const qsr::AxiomReport report = qsr::analyze(calc, opts);
    if (json) {
        std::cout << qsr::emit_report_json(report, calc);
    } else {
        std::printf("calculus: %s (%zu base relations)\n\n", calc.name().c_str(), calc.size());
        const qsr::AxiomId headline[] = {
            qsr::AxiomId::RA4, qsr::AxiomId::SA, qsr::AxiomId::WA,
            qsr::AxiomId::RA6, qsr::AxiomId::RA6l, qsr::AxiomId::RA7,
            qsr::AxiomId::RA9, qsr::AxiomId::PL, qsr::AxiomId::RA10};
        for (auto id : headline) std::printf("%s", pad_left(qsr::axiom_name(id), 6).c_str());
        std::printf("\n");
        for (auto id : headline) std::printf("%s", pad_left(check_mark(report[id]), 6).c_str());
        std::printf("\n\naxiom    status        violated/tested  percent\n");
        for (auto id : qsr::all_axioms) {
            const auto& r = report[id];
            std::printf("%s %-13s %8llu/%-8llu %6.1f\n",
                        pad_right(qsr::axiom_name(id), 8).c_str(), qsr::status_name(r.status),
                        static_cast<unsigned long long>(r.violations),
                        static_cast<unsigned long long>(r.tested), r.percent());
        }
        std::printf("\nclassification:");
        for (const auto& c : report.classes) std::printf(" %s", c.c_str());
        std::printf("\n");
    }
    return report.any_full_violation() ? kExitViolation : kExitOk;
}

int run_solve(const std::string& calculus_ref, const std::string& network_path, bool json,
              int assume_ra7, int assume_ra9, long long max_passes, bool queue,
              std::uint64_t /*seed*/) {
    const qsr::CalculusSpec calc = resolve_calculus(calculus_ref);
    const qsr::ConstraintNetwork net =
        qsr::parse_network(read_file(network_path), calc, network_path);

    qsr::ClosureOptions opts = qsr::ClosureOptions::detect(calc);
    if (assume_ra7 >= 0) opts.ra7_holds = assume_ra7 != 0;
    if (assume_ra9 >= 0) opts.ra9_holds = assume_ra9 != 0;
    if (max_passes >= 0) opts.max_passes = static_cast<std::uint64_t>(max_passes);
    if (queue) opts.strategy = qsr::ClosureStrategy::Queue;

    const qsr::ClosureResult result = qsr::a_closure(calc, net, opts);
    if (json) {
        std::cout << qsr::emit_report_json(result, calc);
    } else {
        std::printf("status: %s%s\n",
                    result.status == qsr::ClosureStatus::Closed ? "closed" : "inconsistent",
                    result.fixpoint ? "" : " (not a fixpoint)");
        std::printf("passes: %llu\n", static_cast<unsigned long long>(result.iterations));
        for (const auto& w : result.warnings) std::printf("warning: %s\n", w.c_str());
        if (result.witness)
            std::printf("emptied: C[%zu][%zu]\n", result.witness->first, result.witness->second);
        for (std::size_t i = 0; i < result.network.var_count; ++i) {
            std::printf("x%zu:", i);
            for (std::size_t j = 0; j < result.network.var_count; ++j)
                std::printf(" %s", calc.tokens(result.network.at(i, j)).c_str());
            std::printf("\n");
        }
    }
    return result.status == qsr::ClosureStatus::Inconsistent ? kExitViolation : kExitOk;
}

int run_metrics(const std::string& calculus_ref, bool json, long long max_k, double stop_below) {
    const qsr::CalculusSpec calc = resolve_calculus(calculus_ref);
    qsr::MetricsOptions opts;
    if (max_k >= 0) opts.max_k = static_cast<std::size_t>(max_k);
    if (stop_below >= 0) opts.stop_below = stop_below;

    const qsr::MetricsSeries series = qsr::metrics_series(calc, opts);
    if (json) {
        std::cout << qsr::emit_report_json(series);
    } else {
        std::printf("k,I_percent,O_percent\n");
        for (std::size_t k = 0; k < series.information.size(); ++k)
            std::printf("%zu,%.4f,%.4f\n", k, 100.0 * series.information[k],
                        100.0 * series.overlap[k]);
        std::printf("# stop: %s\n", qsr::stop_reason_name(series.stop_reason));
    }
    return series.stop_reason == qsr::StopReason::Capacity ? kExitViolation : kExitOk;
}

int run_validate(const std::string& calculus_ref, const std::string& model_ref, bool json,
                 bool derive, std::uint64_t seed) {
    const qsr::CalculusSpec calc = resolve_calculus(calculus_ref);
    const qsr::FiniteModel model = resolve_model(model_ref, calculus_ref, calc);
    if (model.base_count() != calc.size())
        throw std::runtime_error("model does not match calculus arity");

    const qsr::SchemeVerdict scheme = qsr::check_scheme(model);
    const bool injective = qsr::check_phi_injective(model);

    bool conforming = scheme.abstract_partition_scheme();
    qsr::StrengthVerdict strength;
    qsr::ExtensionCheck extension;
    bool involution_ok = true;
    if (conforming) {
        strength = qsr::classify_strength(calc, model);
        extension = qsr::check_general_extension(calc, model, 10000, seed);
        involution_ok = qsr::check_involution_equivalence(calc, model);
        conforming = strength.converse != qsr::Strength::None &&
                     strength.composition != qsr::Strength::None;
    }

    if (json) {
        qsr::Json out;
        out["calculus"] = calc.name();
        out["model"] = model.name;
        out["universe"] = model.universe_size();
        out["scheme"] = qsr::to_json(scheme);
        out["phiInjective"] = injective;
        if (scheme.abstract_partition_scheme()) {
            out["strength"] = qsr::to_json(strength);
            out["generalExtension"] = extension.ok;
            out["involutionEquivalence"] = involution_ok;
        }
        if (derive && scheme.abstract_partition_scheme()) {
            std::vector<std::string> names;
            for (const auto& b : calc.base()) names.push_back(b.name);
            out["derived"] = qsr::serialize_calculus(
                qsr::derive_tables(model, calc.name() + "-derived", names));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("calculus: %s, model: %s (universe %zu)\n", calc.name().c_str(),
                    model.name.c_str(), model.universe_size());
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::printf("jepd: %s\n", yn(scheme.jepd));
        std::printf("non-empty bases: %s\n", yn(scheme.non_empty_bases));
        std::printf("identity present: %s\n", yn(scheme.has_identity));
        std::printf("converse closed: %s\n", yn(scheme.converse_closed));
        std::printf("serial: %s\n", yn(scheme.serial));
        std::printf("abstract partition scheme: %s\n", yn(scheme.abstract_partition_scheme()));
        std::printf("partition scheme: %s\n", yn(scheme.partition_scheme()));
        std::printf("phi injective: %s\n", yn(injective));
        if (scheme.abstract_partition_scheme()) {
            std::printf("converse: %s%s\n", qsr::strength_name(strength.converse),
                        strength.converse == qsr::Strength::Weak ? " (not strong)" : "");
            std::printf("composition: %s%s\n", qsr::strength_name(strength.composition),
                        strength.composition == qsr::Strength::Weak ? " (not strong)" : "");
            std::printf("general-relation extension: %s\n", extension.ok ? "ok" : "FAILED");
            if (!extension.ok) std::printf("  witness: %s\n", extension.witness.c_str());
            std::printf("strong converse <=> involution: %s\n",
                        involution_ok ? "consistent" : "INCONSISTENT");
        } else {
            std::printf("strength: not classified (model is not an abstract partition scheme)\n");
        }
        if (derive && scheme.abstract_partition_scheme()) {
            std::vector<std::string> names;
            for (const auto& b : calc.base()) names.push_back(b.name);
            std::printf("\n# weak tables derived from the model\n%s",
                        qsr::serialize_calculus(
                            qsr::derive_tables(model, calc.name() + "-derived", names))
                            .c_str());
        }
    }
    return conforming ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis toolkit for binary qualitative spatio-temporal calculi"};
    app.require_subcommand(1);

    std::string calculus_ref, network_path, model_ref;
    std::vector<std::string> axioms;
    bool json = false, ra10_full = false, derive = false, queue = false;
    std::uint64_t seed = qsr::kDefaultSeed;
    int assume_ra7 = -1, assume_ra9 = -1;
    long long max_passes = -1, max_k = -1;
    double stop_below = -1.0;

    auto* analyze = app.add_subcommand("analyze", "check the relation-algebra axioms");
    analyze->add_option("calculus", calculus_ref, "builtin name or .qcalc file")->required();
    analyze->add_flag("--json", json, "emit a JSON report");
    analyze->add_option("--axioms", axioms, "restrict to these axioms")->delimiter(',');
    analyze->add_flag("--ra10-full", ra10_full, "also sample RA10 over general relations");
    analyze->add_option("--seed", seed, "seed for sampled checks (default 42)");

    auto* solve = app.add_subcommand("solve", "enforce algebraic closure on a network");
    solve->add_option("calculus", calculus_ref, "builtin name or .qcalc file")->required();
    solve->add_option("network", network_path, ".qcsp network file")->required();
    solve->add_flag("--json", json, "emit a JSON report");
    solve->add_option("--assume-ra7", assume_ra7, "override RA7 auto-detection (0 or 1)");
    solve->add_option("--assume-ra9", assume_ra9, "override RA9 auto-detection (0 or 1)");
    solve->add_option("--max-passes", max_passes, "cap on revision passes");
    solve->add_flag("--queue", queue, "use the queue-based control structure");
    solve->add_option("--seed", seed, "seed (reserved for randomized schedules)");

    auto* metrics = app.add_subcommand("metrics", "information content of composition chains");
    metrics->add_option("calculus", calculus_ref, "builtin name or .qcalc file")->required();
    metrics->add_flag("--json", json, "emit a JSON report");
    metrics->add_option("--max-k", max_k, "maximum composition count (default 14)");
    metrics->add_option("--stop-below", stop_below,
                        "stop after I drops below this fraction (default 0.005)");

    auto* validate = app.add_subcommand("validate", "check a calculus against a finite model");
    validate->add_option("calculus", calculus_ref, "builtin name or .qcalc file")->required();
    validate->add_option("--model", model_ref, "model file, bundled alias, or 'builtin'")
        ->required();
    validate->add_flag("--json", json, "emit a JSON report");
    validate->add_flag("--derive", derive, "emit the weak tables derived from the model");
    validate->add_option("--seed", seed, "seed for sampled checks (default 42)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(calculus_ref, json, axioms, ra10_full, seed);
        if (solve->parsed())
            return run_solve(calculus_ref, network_path, json, assume_ra7, assume_ra9,
                             max_passes, queue, seed);
        if (metrics->parsed()) return run_metrics(calculus_ref, json, max_k, stop_below);
        if (validate->parsed()) return run_validate(calculus_ref, model_ref, json, derive, seed);
    } catch (const qsr::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
