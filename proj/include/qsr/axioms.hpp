#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsr/calculus.hpp"
#include "qsr/parallel.hpp"

namespace qsr {

// Every checkable axiom, including the one-sided weakenings. The one-sided
// forms keep the left/right-hand sides of the written axiom: e.g. RA7sub is
// r~~ <= r, RA7sup is r~~ >= r. For RA10 the one-sided forms compare
// r~ <> comp(r <> s) against comp(s) directly; the full axiom is the union-
// absorbed equation, which is equivalent to the <= inclusion.
enum class AxiomId : std::uint8_t {
    RA1, RA2, RA3,
    RA4, RA4sub, RA4sup,
    RA5, RA5l,
    RA6, RA6sub, RA6sup,
    RA6l, RA6lsub, RA6lsup,
    RA7, RA7sub, RA7sup,
    RA8,
    RA9, RA9sub, RA9sup,
    RA10, RA10sub, RA10sup,
    SA, SAsub, SAsup,
    WA, WAsub, WAsup,
    PL, PLright, PLleft,
};

inline constexpr std::size_t kAxiomCount = 33;

inline constexpr std::array<AxiomId, kAxiomCount> all_axioms = {
    AxiomId::RA1, AxiomId::RA2, AxiomId::RA3,
    AxiomId::RA4, AxiomId::RA4sub, AxiomId::RA4sup,
    AxiomId::RA5, AxiomId::RA5l,
    AxiomId::RA6, AxiomId::RA6sub, AxiomId::RA6sup,
    AxiomId::RA6l, AxiomId::RA6lsub, AxiomId::RA6lsup,
    AxiomId::RA7, AxiomId::RA7sub, AxiomId::RA7sup,
    AxiomId::RA8,
    AxiomId::RA9, AxiomId::RA9sub, AxiomId::RA9sup,
    AxiomId::RA10, AxiomId::RA10sub, AxiomId::RA10sup,
    AxiomId::SA, AxiomId::SAsub, AxiomId::SAsup,
    AxiomId::WA, AxiomId::WAsub, AxiomId::WAsup,
    AxiomId::PL, AxiomId::PLright, AxiomId::PLleft,
};

inline const char* axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::RA1: return "RA1";
        case AxiomId::RA2: return "RA2";
        case AxiomId::RA3: return "RA3";
        case AxiomId::RA4: return "RA4";
        case AxiomId::RA4sub: return "RA4⊆";
        case AxiomId::RA4sup: return "RA4⊇";
        case AxiomId::RA5: return "RA5";
        case AxiomId::RA5l: return "RA5l";
        case AxiomId::RA6: return "RA6";
        case AxiomId::RA6sub: return "RA6⊆";
        case AxiomId::RA6sup: return "RA6⊇";
        case AxiomId::RA6l: return "RA6l";
        case AxiomId::RA6lsub: return "RA6l⊆";
        case AxiomId::RA6lsup: return "RA6l⊇";
        case AxiomId::RA7: return "RA7";
        case AxiomId::RA7sub: return "RA7⊆";
        case AxiomId::RA7sup: return "RA7⊇";
        case AxiomId::RA8: return "RA8";
        case AxiomId::RA9: return "RA9";
        case AxiomId::RA9sub: return "RA9⊆";
        case AxiomId::RA9sup: return "RA9⊇";
        case AxiomId::RA10: return "RA10";
        case AxiomId::RA10sub: return "RA10⊆";
        case AxiomId::RA10sup: return "RA10⊇";
        case AxiomId::SA: return "SA";
        case AxiomId::SAsub: return "SA⊆";
        case AxiomId::SAsup: return "SA⊇";
        case AxiomId::WA: return "WA";
        case AxiomId::WAsub: return "WA⊆";
        case AxiomId::WAsup: return "WA⊇";
        case AxiomId::PL: return "PL";
        case AxiomId::PLright: return "PLright";
        case AxiomId::PLleft: return "PLleft";
    }
    return "?";
}

// Accepts the canonical name, the ASCII aliases "...sub"/"...sup" and
// "...<="/"...>=".
inline std::optional<AxiomId> axiom_from_string(const std::string& token) {
    for (AxiomId id : all_axioms) {
        std::string canonical = axiom_name(id);
        if (token == canonical) return id;
        std::string ascii_sub = canonical, ascii_cmp = canonical;
        auto replace = [](std::string& s, const std::string& from, const std::string& to) {
            const auto pos = s.find(from);
            if (pos != std::string::npos) s.replace(pos, from.size(), to);
        };
        replace(ascii_sub, "⊆", "sub");
        replace(ascii_sub, "⊇", "sup");
        replace(ascii_cmp, "⊆", "<=");
        replace(ascii_cmp, "⊇", ">=");
        if (token == ascii_sub || token == ascii_cmp) return id;
    }
    return std::nullopt;
}

enum class AxiomStatus { Holds, Violated, Inapplicable };

inline const char* status_name(AxiomStatus s) {
    switch (s) {
        case AxiomStatus::Holds: return "holds";
        case AxiomStatus::Violated: return "violated";
        case AxiomStatus::Inapplicable: return "inapplicable";
    }
    return "?";
}

// A concrete instantiation violating an axiom, in axiom-variable order.
// For base-relation checks the arguments are singleton relations.
struct Witness {
    std::vector<Relation> args;

    bool operator==(const Witness& o) const { return args == o.args; }
};

struct AxiomResult {
    AxiomId axiom = AxiomId::RA1;
    AxiomStatus status = AxiomStatus::Holds;
    std::uint64_t tested = 0;
    std::uint64_t violations = 0;
    std::vector<Witness> samples;

    bool holds() const { return status == AxiomStatus::Holds; }

    double percent() const {
        return tested == 0 ? 0.0 : 100.0 * static_cast<double>(violations) /
                                       static_cast<double>(tested);
    }

    // Report convention: one decimal.
    double percent_rounded() const { return std::round(percent() * 10.0) / 10.0; }
};

struct AnalyzeOptions {
    std::size_t sample_cap = 10;
    bool ra10_full = false;          // additionally sample general relation pairs for RA10
    std::size_t ra10_samples = 10000;
    std::uint64_t seed = kDefaultSeed;
};

struct AxiomReport {
    std::string calculus;
    std::size_t arity = 0;
    std::vector<AxiomResult> axioms;  // in all_axioms order
    std::vector<std::string> classes;

    const AxiomResult& operator[](AxiomId id) const {
        return axioms.at(static_cast<std::size_t>(id));
    }

    bool any_violation() const {
        for (const auto& r : axioms)
            if (r.status == AxiomStatus::Violated) return true;
        return false;
    }

    // Violation among the full (two-sided) axioms only. The degenerate
    // one-sided RA10 superset inclusion fails even for genuine relation
    // algebras, so success is judged the way the results table reads: by the
    // full axiom forms.
    bool any_full_violation() const;
};

namespace detail {

enum class Family { RA1, RA2, RA3, RA4, RA5, RA5l, RA6, RA6l, RA7, RA8, RA9, RA10, SA, WA, PL };
enum class Side { Full, Sub, Sup };

struct AxiomMeta {
    Family family;
    Side side;
    int arity;
    bool needs_identity;
};

inline AxiomMeta axiom_meta(AxiomId id) {
    switch (id) {
        case AxiomId::RA1: return {Family::RA1, Side::Full, 2, false};
        case AxiomId::RA2: return {Family::RA2, Side::Full, 3, false};
        case AxiomId::RA3: return {Family::RA3, Side::Full, 2, false};
        case AxiomId::RA4: return {Family::RA4, Side::Full, 3, false};
        case AxiomId::RA4sub: return {Family::RA4, Side::Sub, 3, false};
        case AxiomId::RA4sup: return {Family::RA4, Side::Sup, 3, false};
        case AxiomId::RA5: return {Family::RA5, Side::Full, 3, false};
        case AxiomId::RA5l: return {Family::RA5l, Side::Full, 3, false};
        case AxiomId::RA6: return {Family::RA6, Side::Full, 1, true};
        case AxiomId::RA6sub: return {Family::RA6, Side::Sub, 1, true};
        case AxiomId::RA6sup: return {Family::RA6, Side::Sup, 1, true};
        case AxiomId::RA6l: return {Family::RA6l, Side::Full, 1, true};
        case AxiomId::RA6lsub: return {Family::RA6l, Side::Sub, 1, true};
        case AxiomId::RA6lsup: return {Family::RA6l, Side::Sup, 1, true};
        case AxiomId::RA7: return {Family::RA7, Side::Full, 1, false};
        case AxiomId::RA7sub: return {Family::RA7, Side::Sub, 1, false};
        case AxiomId::RA7sup: return {Family::RA7, Side::Sup, 1, false};
        case AxiomId::RA8: return {Family::RA8, Side::Full, 2, false};
        case AxiomId::RA9: return {Family::RA9, Side::Full, 2, false};
        case AxiomId::RA9sub: return {Family::RA9, Side::Sub, 2, false};
        case AxiomId::RA9sup: return {Family::RA9, Side::Sup, 2, false};
        case AxiomId::RA10: return {Family::RA10, Side::Full, 2, false};
        case AxiomId::RA10sub: return {Family::RA10, Side::Sub, 2, false};
        case AxiomId::RA10sup: return {Family::RA10, Side::Sup, 2, false};
        case AxiomId::SA: return {Family::SA, Side::Full, 1, false};
        case AxiomId::SAsub: return {Family::SA, Side::Sub, 1, false};
        case AxiomId::SAsup: return {Family::SA, Side::Sup, 1, false};
        case AxiomId::WA: return {Family::WA, Side::Full, 1, true};
        case AxiomId::WAsub: return {Family::WA, Side::Sub, 1, true};
        case AxiomId::WAsup: return {Family::WA, Side::Sup, 1, true};
        case AxiomId::PL: return {Family::PL, Side::Full, 3, false};
        case AxiomId::PLright: return {Family::PL, Side::Sub, 3, false};
        case AxiomId::PLleft: return {Family::PL, Side::Sup, 3, false};
    }
    return {Family::RA1, Side::Full, 1, false};
}

// Per-tuple outcome: does the <= inclusion hold, does the >= inclusion hold.
// For PL the pair means (right implication, left implication).
struct SideOk {
    bool sub;
    bool sup;
};

// Evaluates one family instance on base relations i, j, k.
inline SideOk eval_family(const CalculusSpec& calc, Family fam,
                          std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = calc.size();
    auto sing = [&](std::size_t x) { return Relation::singleton(n, x); };
    auto both = [](const Relation& l, const Relation& r) {
        return SideOk{l.subset_of(r), r.subset_of(l)};
    };

    switch (fam) {
        case Family::RA1:
            return both(sing(i) | sing(j), sing(j) | sing(i));
        case Family::RA2:
            return both(sing(i) | (sing(j) | sing(k)), (sing(i) | sing(j)) | sing(k));
        case Family::RA3: {
            const Relation r = sing(i), s = sing(j);
            return both((~(~r | ~s)) | (~(~r | s)), r);
        }
        case Family::RA4:
            return both(calc.compose(sing(i), calc.cell(j, k)),
                        calc.compose(calc.cell(i, j), sing(k)));
        case Family::RA5:
            return both(calc.compose(sing(i) | sing(j), sing(k)),
                        calc.cell(i, k) | calc.cell(j, k));
        case Family::RA5l:
            return both(calc.compose(sing(i), sing(j) | sing(k)),
                        calc.cell(i, j) | calc.cell(i, k));
        case Family::RA6:
            return both(calc.compose(sing(i), *calc.identity()), sing(i));
        case Family::RA6l:
            return both(calc.compose(*calc.identity(), sing(i)), sing(i));
        case Family::RA7:
            return both(calc.converse(calc.base_converse(i)), sing(i));
        case Family::RA8:
            return both(calc.converse(sing(i) | sing(j)),
                        calc.base_converse(i) | calc.base_converse(j));
        case Family::RA9:
            return both(calc.converse(calc.cell(i, j)),
                        calc.compose(calc.base_converse(j), calc.base_converse(i)));
        case Family::RA10:
            return both(calc.compose(calc.base_converse(i), ~calc.cell(i, j)), ~sing(j));
        case Family::SA: {
            const Relation one = calc.universal();
            const Relation r1 = calc.compose(sing(i), one);
            return both(calc.compose(r1, one), r1);
        }
        case Family::WA: {
            const Relation one = calc.universal();
            const Relation w = calc.compose(sing(i) & *calc.identity(), one);
            return both(calc.compose(w, one), w);
        }
        case Family::PL: {
            const bool a = !(calc.cell(i, j) & calc.base_converse(k)).any();
            const bool b = !(calc.cell(j, k) & calc.base_converse(i)).any();
            return SideOk{!a || b, !b || a};
        }
    }
    return SideOk{true, true};
}

struct SideTally {
    std::uint64_t violations = 0;
    std::vector<Witness> samples;
};

struct FamilyOutcome {
    std::uint64_t tested = 0;
    SideTally full, sub, sup;
};

// Evaluates a family over all base tuples, parallelized over the first
// argument. Chunks are merged in index order, so violation counts and the
// recorded witnesses are independent of scheduling.
inline FamilyOutcome run_family(const CalculusSpec& calc, Family fam, int arity,
                                const AnalyzeOptions& opts) {
    const std::size_t n = calc.size();
    std::uint64_t tuples = 1;
    for (int a = 0; a < arity; ++a) tuples *= n;

    struct Chunk {
        SideTally full, sub, sup;
    };
    std::vector<Chunk> chunks;
    const std::size_t want = arity >= 2 ? worker_count() : 1;
    const std::size_t chunk_count = std::min<std::size_t>(want == 0 ? 1 : want, n);
    chunks.resize(std::max<std::size_t>(chunk_count, 1));

    const bool full_is_sub_only = fam == Family::RA10;

    parallel_chunks(n, chunk_count, [&](std::size_t begin, std::size_t end, std::size_t ci) {
        Chunk& c = chunks[ci];
        auto record = [&](SideTally& t, std::size_t i, std::size_t j, std::size_t k) {
            ++t.violations;
            if (t.samples.size() < opts.sample_cap) {
                Witness w;
                w.args.push_back(Relation::singleton(n, i));
                if (arity >= 2) w.args.push_back(Relation::singleton(n, j));
                if (arity >= 3) w.args.push_back(Relation::singleton(n, k));
                t.samples.push_back(std::move(w));
            }
        };
        auto visit = [&](std::size_t i, std::size_t j, std::size_t k) {
            const SideOk ok = eval_family(calc, fam, i, j, k);
            const bool full_ok = full_is_sub_only ? ok.sub : (ok.sub && ok.sup);
            if (!full_ok) record(c.full, i, j, k);
            if (!ok.sub) record(c.sub, i, j, k);
            if (!ok.sup) record(c.sup, i, j, k);
        };
        for (std::size_t i = begin; i < end; ++i) {
            if (arity == 1) {
                visit(i, 0, 0);
            } else if (arity == 2) {
                for (std::size_t j = 0; j < n; ++j) visit(i, j, 0);
            } else {
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) visit(i, j, k);
            }
        }
    });

    FamilyOutcome out;
    out.tested = tuples;
    auto merge = [&](SideTally FamilyOutcome::* dst, SideTally Chunk::* src) {
        for (auto& c : chunks) {
            (out.*dst).violations += (c.*src).violations;
            for (auto& w : (c.*src).samples)
                if ((out.*dst).samples.size() < opts.sample_cap)
                    (out.*dst).samples.push_back(std::move(w));
        }
    };
    merge(&FamilyOutcome::full, &Chunk::full);
    merge(&FamilyOutcome::sub, &Chunk::sub);
    merge(&FamilyOutcome::sup, &Chunk::sup);

    // Optional sampled check of RA10 over general relations; base pairs above
    // are always included.
    if (fam == Family::RA10 && opts.ra10_full) {
        SplitMix64 rng(opts.seed);
        auto random_relation = [&] {
            Relation r(n);
            for (std::size_t b = 0; b < n; ++b)
                if (rng.next() & 1u) r.set(b);
            return r;
        };
        for (std::size_t s = 0; s < opts.ra10_samples; ++s) {
            const Relation r = random_relation(), q = random_relation();
            const Relation lhs = calc.compose(calc.converse(r), ~calc.compose(r, q));
            const Relation rhs = ~q;
            const bool sub_ok = lhs.subset_of(rhs);
            const bool sup_ok = rhs.subset_of(lhs);
            ++out.tested;
            auto record = [&](SideTally& t) {
                ++t.violations;
                if (t.samples.size() < opts.sample_cap) t.samples.push_back(Witness{{r, q}});
            };
            if (!sub_ok) record(out.full);
            if (!sub_ok) record(out.sub);
            if (!sup_ok) record(out.sup);
        }
    }
    return out;
}

inline AxiomResult make_result(AxiomId id, AxiomStatus status, std::uint64_t tested,
                               SideTally tally) {
    AxiomResult r;
    r.axiom = id;
    r.status = status == AxiomStatus::Inapplicable
                   ? AxiomStatus::Inapplicable
                   : (tally.violations == 0 ? AxiomStatus::Holds : AxiomStatus::Violated);
    if (status == AxiomStatus::Inapplicable) {
        r.tested = 0;
        return r;
    }
    r.tested = tested;
    r.violations = tally.violations;
    r.samples = std::move(tally.samples);
    return r;
}

inline std::vector<std::string> classify(const std::vector<AxiomResult>& results) {
    auto holds = [&](AxiomId id) {
        return results[static_cast<std::size_t>(id)].status == AxiomStatus::Holds;
    };
    const bool ba_dist = holds(AxiomId::RA1) && holds(AxiomId::RA2) && holds(AxiomId::RA3) &&
                         holds(AxiomId::RA5) && holds(AxiomId::RA8);
    const bool na = ba_dist && holds(AxiomId::RA6) && holds(AxiomId::RA7) &&
                    holds(AxiomId::RA9) && holds(AxiomId::RA10);
    const bool ra = na && holds(AxiomId::RA4);
    const bool sa_algebra = na && holds(AxiomId::SA);
    const bool wa_algebra = na && holds(AxiomId::WA);
    const bool assoc_ba = ba_dist && holds(AxiomId::RA4);
    const bool semi_assoc_conv = ba_dist && holds(AxiomId::SA) && holds(AxiomId::RA7);
    const bool weak_assoc_ba = ba_dist && holds(AxiomId::WA);

    std::vector<std::string> classes;
    if (ra) classes.push_back("RA");
    if (wa_algebra) classes.push_back("WA-algebra");
    if (sa_algebra) classes.push_back("SA-algebra");
    if (na) classes.push_back("NA");
    if (assoc_ba) classes.push_back("assoc-BA");
    if (semi_assoc_conv) classes.push_back("semi-assoc-BA-with-converse-involution");
    if (weak_assoc_ba) classes.push_back("weak-assoc-BA");
    if (ba_dist) classes.push_back("BA-with-distributivity");
    return classes;
}

} // namespace detail

inline bool AxiomReport::any_full_violation() const {
    for (const auto& r : axioms)
        if (r.status == AxiomStatus::Violated &&
            detail::axiom_meta(r.axiom).side == detail::Side::Full)
            return true;
    return false;
}

// Evaluates a single axiom over all base tuples. Axioms mentioning id are
// inapplicable when the calculus declares no identity.
inline AxiomResult check_axiom(const CalculusSpec& calc, AxiomId id,
                               const AnalyzeOptions& opts = {}) {
    const detail::AxiomMeta meta = detail::axiom_meta(id);
    if (meta.needs_identity && !calc.identity())
        return detail::make_result(id, AxiomStatus::Inapplicable, 0, {});
    detail::FamilyOutcome out = detail::run_family(calc, meta.family, meta.arity, opts);
    detail::SideTally tally = meta.side == detail::Side::Full
                                  ? std::move(out.full)
                                  : (meta.side == detail::Side::Sub ? std::move(out.sub)
                                                                    : std::move(out.sup));
    return detail::make_result(id, AxiomStatus::Holds, out.tested, std::move(tally));
}

// Evaluates every axiom and derives the algebra classification.
inline AxiomReport analyze(const CalculusSpec& calc, const AnalyzeOptions& opts = {}) {
    AxiomReport report;
    report.calculus = calc.name();
    report.arity = calc.size();
    report.axioms.resize(kAxiomCount);

    // One pass per family; the three sides share the tuple enumeration.
    const detail::Family families[] = {
        detail::Family::RA1, detail::Family::RA2, detail::Family::RA3, detail::Family::RA4,
        detail::Family::RA5, detail::Family::RA5l, detail::Family::RA6, detail::Family::RA6l,
        detail::Family::RA7, detail::Family::RA8, detail::Family::RA9, detail::Family::RA10,
        detail::Family::SA, detail::Family::WA, detail::Family::PL};

    for (detail::Family fam : families) {
        // Representative id for the family metadata.
        AxiomId rep = AxiomId::RA1;
        for (AxiomId id : all_axioms)
            if (detail::axiom_meta(id).family == fam && detail::axiom_meta(id).side == detail::Side::Full)
                rep = id;
        const detail::AxiomMeta meta = detail::axiom_meta(rep);

        detail::FamilyOutcome out;
        const bool inapplicable = meta.needs_identity && !calc.identity();
        if (!inapplicable) out = detail::run_family(calc, fam, meta.arity, opts);

        for (AxiomId id : all_axioms) {
            const detail::AxiomMeta m = detail::axiom_meta(id);
            if (m.family != fam) continue;
            if (inapplicable) {
                report.axioms[static_cast<std::size_t>(id)] =
                    detail::make_result(id, AxiomStatus::Inapplicable, 0, {});
                continue;
            }
            detail::SideTally tally = m.side == detail::Side::Full
                                          ? out.full
                                          : (m.side == detail::Side::Sub ? out.sub : out.sup);
            report.axioms[static_cast<std::size_t>(id)] =
                detail::make_result(id, AxiomStatus::Holds, out.tested, std::move(tally));
        }
    }

    report.classes = detail::classify(report.axioms);
    return report;
}

// RA10 and PL are equivalent in the presence of RA1-RA3, RA5, RA7-RA9. When
// those premises hold the two verdicts are cross-checked; otherwise both are
// reported independently and consistent stays true vacuously.
struct PlRa10Equivalence {
    bool premises_hold = false;
    AxiomStatus pl = AxiomStatus::Holds;
    AxiomStatus ra10 = AxiomStatus::Holds;
    bool consistent = true;
};

inline PlRa10Equivalence check_pl_ra10_equivalence(const CalculusSpec& calc,
                                                   const AnalyzeOptions& opts = {}) {
    PlRa10Equivalence out;
    auto status = [&](AxiomId id) { return check_axiom(calc, id, opts).status; };
    out.premises_hold = status(AxiomId::RA1) == AxiomStatus::Holds &&
                        status(AxiomId::RA2) == AxiomStatus::Holds &&
                        status(AxiomId::RA3) == AxiomStatus::Holds &&
                        status(AxiomId::RA5) == AxiomStatus::Holds &&
                        status(AxiomId::RA7) == AxiomStatus::Holds &&
                        status(AxiomId::RA8) == AxiomStatus::Holds &&
                        status(AxiomId::RA9) == AxiomStatus::Holds;
    out.pl = status(AxiomId::PL);
    out.ra10 = status(AxiomId::RA10);
    out.consistent = !out.premises_hold || out.pl == out.ra10;
    return out;
}

// Repairs associativity by enlarging composition cells until RA4 holds.
// When a triple violates RA4, the deficient side's constituent cells are
// enriched with the missing base relations; if that side's inner cell is
// empty there is nothing to distribute over, so the inner cell itself is
// grown and the sweep continues. Cells only ever grow, so the procedure
// terminates (worst case: every cell reaches the universal relation) and is
// idempotent and monotone by construction. The converse table, identity and
// base relations are untouched.
inline CalculusSpec coarsen_to_associativity(const CalculusSpec& calc) {
    const std::size_t n = calc.size();
    std::vector<Relation> comp;
    comp.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) comp.push_back(calc.cell(i, j));

    auto cell = [&](std::size_t i, std::size_t j) -> Relation& { return comp[i * n + j]; };
    auto compose_rel_base = [&](const Relation& r, std::size_t t) {
        Relation out(n);
        r.for_each([&](std::size_t u) { out |= cell(u, t); });
        return out;
    };
    auto compose_base_rel = [&](std::size_t r, const Relation& s) {
        Relation out(n);
        s.for_each([&](std::size_t v) { out |= cell(r, v); });
        return out;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t s = 0; s < n; ++s) {
                for (std::size_t t = 0; t < n; ++t) {
                    const Relation left = compose_base_rel(r, cell(s, t));   // r <> (s <> t)
                    const Relation right = compose_rel_base(cell(r, s), t);  // (r <> s) <> t
                    if (left == right) continue;
                    changed = true;
                    const Relation missing_left = right - left;
                    if (missing_left.any()) {
                        if (cell(s, t).any()) {
                            cell(s, t).for_each(
                                [&](std::size_t u) { cell(r, u) |= missing_left; });
                        } else {
                            cell(s, t) |= missing_left;
                        }
                    }
                    const Relation missing_right = left - right;
                    if (missing_right.any()) {
                        if (cell(r, s).any()) {
                            cell(r, s).for_each(
                                [&](std::size_t u) { cell(u, t) |= missing_right; });
                        } else {
                            cell(r, s) |= missing_right;
                        }
                    }
                }
            }
        }
    }

    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& b : calc.base()) names.push_back(b.name);
    std::vector<Relation> conv;
    conv.reserve(n);
    for (std::size_t i = 0; i < n; ++i) conv.push_back(calc.base_converse(i));
    return CalculusSpec(calc.name(), std::move(names), calc.identity(), std::move(conv),
                        std::move(comp));
}

} // namespace qsr
