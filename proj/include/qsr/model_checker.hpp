#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsr/calculus.hpp"
#include "qsr/model.hpp"
#include "qsr/parallel.hpp"

namespace qsr {

// Verdicts about a finite interpretation on its own, independent of any
// converse/composition tables.
struct SchemeVerdict {
    bool jepd = false;             // pairwise disjoint and covering
    bool non_empty_bases = false;
    bool has_identity = false;     // some base is interpreted exactly as {(u,u)}
    bool converse_closed = false;  // each phi(r)~ equals some phi(s)
    bool serial = false;           // every base relation is serial

    bool abstract_partition_scheme() const { return jepd && non_empty_bases; }
    bool partition_scheme() const {
        return jepd && non_empty_bases && has_identity && converse_closed;
    }
};

enum class Strength { None, Abstract, Weak, Strong };

inline const char* strength_name(Strength s) {
    switch (s) {
        case Strength::None: return "none";
        case Strength::Abstract: return "abstract";
        case Strength::Weak: return "weak";
        case Strength::Strong: return "strong";
    }
    return "?";
}

// How faithfully the tables track the model: table entries are supersets of
// the true operation (abstract), the minimal covering relations (weak), or
// exact under phi (strong). Levels are verified independently and the
// implication chain strong => weak => abstract is checked, not assumed.
struct StrengthVerdict {
    Strength converse = Strength::None;
    Strength composition = Strength::None;
};

inline SchemeVerdict check_scheme(const FiniteModel& model) {
    SchemeVerdict v;
    const std::size_t n = model.base_count();
    const std::size_t u = model.universe_size();

    v.non_empty_bases = true;
    for (const auto& p : model.phi)
        if (p.none()) v.non_empty_bases = false;

    bool disjoint = true;
    PairSet covered(u);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (model.phi[i].intersects(model.phi[j])) disjoint = false;
        covered |= model.phi[i];
    }
    v.jepd = disjoint && covered == PairSet::full(u);

    const PairSet id = PairSet::identity(u);
    for (const auto& p : model.phi)
        if (p == id) v.has_identity = true;

    v.converse_closed = true;
    for (const auto& p : model.phi) {
        const PairSet conv = p.converse();
        bool found = false;
        for (const auto& q : model.phi)
            if (q == conv) found = true;
        if (!found) v.converse_closed = false;
    }

    v.serial = true;
    for (const auto& p : model.phi)
        if (!p.serial()) v.serial = false;

    return v;
}

namespace detail {

// The minimal relation whose interpretation covers a pair set; well defined
// exactly when the base interpretations are JEPD.
inline Relation minimal_cover(const FiniteModel& model, const PairSet& target) {
    Relation out(model.base_count());
    for (std::size_t i = 0; i < model.base_count(); ++i)
        if (model.phi[i].intersects(target)) out.set(i);
    return out;
}

inline void require_jepd(const FiniteModel& model, const char* who) {
    const SchemeVerdict v = check_scheme(model);
    if (!v.jepd || !v.non_empty_bases)
        throw std::invalid_argument(std::string(who) +
                                    " requires a JEPD model with non-empty base relations");
}

} // namespace detail

// Classifies converse/composition strength of a calculus's tables against a
// finite model. Precondition: the model is an abstract partition scheme for
// the calculus's base relations.
inline StrengthVerdict classify_strength(const CalculusSpec& calc, const FiniteModel& model) {
    if (calc.size() != model.base_count())
        throw std::invalid_argument("model does not match calculus arity");
    detail::require_jepd(model, "classify_strength");

    bool conv_abs = true, conv_weak = true, conv_strong = true;
    for (std::size_t r = 0; r < calc.size(); ++r) {
        const PairSet truth = model.phi[r].converse();
        const PairSet imaged = model.interpret(calc.base_converse(r));
        if (!truth.subset_of(imaged)) conv_abs = false;
        if (calc.base_converse(r) != detail::minimal_cover(model, truth)) conv_weak = false;
        if (imaged != truth) conv_strong = false;
    }

    bool comp_abs = true, comp_weak = true, comp_strong = true;
    for (std::size_t r = 0; r < calc.size(); ++r) {
        for (std::size_t s = 0; s < calc.size(); ++s) {
            const PairSet truth = model.phi[r].compose(model.phi[s]);
            const PairSet imaged = model.interpret(calc.cell(r, s));
            if (!truth.subset_of(imaged)) comp_abs = false;
            if (calc.cell(r, s) != detail::minimal_cover(model, truth)) comp_weak = false;
            if (imaged != truth) comp_strong = false;
        }
    }

    auto level = [](bool abs, bool weak, bool strong, const char* what) {
        // strong => weak => abstract must come out of the evaluation itself.
        if ((strong && !weak) || (weak && !abs))
            throw std::logic_error(std::string("strength level monotonicity broken for ") + what);
        if (strong) return Strength::Strong;
        if (weak) return Strength::Weak;
        if (abs) return Strength::Abstract;
        return Strength::None;
    };

    StrengthVerdict v;
    v.converse = level(conv_abs, conv_weak, conv_strong, "converse");
    v.composition = level(comp_abs, comp_weak, comp_strong, "composition");
    return v;
}

// Builds the weak converse/composition tables determined by a JEPD model:
// r~ is the minimal cover of phi(r)~, r <> s the minimal cover of
// phi(r) o phi(s). The identity is declared iff some base is exactly id.
// This is the brute-force oracle the bundled tables are tested against.
inline CalculusSpec derive_tables(const FiniteModel& model, const std::string& name = "",
                                  std::vector<std::string> base_names = {}) {
    detail::require_jepd(model, "derive_tables");
    const std::size_t n = model.base_count();

    std::vector<Relation> conv;
    conv.reserve(n);
    for (std::size_t r = 0; r < n; ++r)
        conv.push_back(detail::minimal_cover(model, model.phi[r].converse()));

    std::vector<Relation> comp;
    comp.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            comp.push_back(detail::minimal_cover(model, model.phi[r].compose(model.phi[s])));

    std::optional<Relation> identity;
    const PairSet id = PairSet::identity(model.universe_size());
    for (std::size_t r = 0; r < n; ++r)
        if (model.phi[r] == id) identity = Relation::singleton(n, r);

    if (base_names.empty())
        for (std::size_t r = 0; r < n; ++r) base_names.push_back("r" + std::to_string(r));
    if (base_names.size() != n)
        throw std::invalid_argument("base name count does not match model");
    return CalculusSpec(name.empty() ? model.name + "-derived" : name, std::move(base_names),
                        std::move(identity), std::move(conv), std::move(comp));
}

// phi extended to all subsets is injective iff all base images are non-empty
// (and they are pairwise disjoint, which JEPD gives).
inline bool check_phi_injective(const FiniteModel& model) {
    for (const auto& p : model.phi)
        if (p.none()) return false;
    for (std::size_t i = 0; i < model.base_count(); ++i)
        for (std::size_t j = i + 1; j < model.base_count(); ++j)
            if (model.phi[i].intersects(model.phi[j])) return false;
    return true;
}

struct ExtensionCheck {
    bool ok = true;
    std::string witness;  // description of the first failing relation (pair)

    explicit operator bool() const { return ok; }
};

// Verifies that the strength level established for base relations carries
// over to general relations (sampled uniformly when exhaustive enumeration
// is too large; exhaustive when 2^|Rel| <= 256).
inline ExtensionCheck check_general_extension(const CalculusSpec& calc, const FiniteModel& model,
                                              std::size_t sample_count = 10000,
                                              std::uint64_t seed = kDefaultSeed) {
    const StrengthVerdict strength = classify_strength(calc, model);
    const std::size_t n = calc.size();
    const bool exhaustive = n <= 8;

    auto relation_at = [&](std::uint64_t bits) {
        Relation r(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((bits >> i) & 1u) r.set(i);
        return r;
    };

    ExtensionCheck result;

    auto check_converse = [&](const Relation& r) {
        const PairSet truth = model.interpret(r).converse();
        const PairSet imaged = model.interpret(calc.converse(r));
        bool ok = true;
        switch (strength.converse) {
            case Strength::None: break;
            case Strength::Abstract: ok = truth.subset_of(imaged); break;
            case Strength::Weak: ok = calc.converse(r) == detail::minimal_cover(model, truth); break;
            case Strength::Strong: ok = imaged == truth; break;
        }
        if (!ok && result.ok) {
            result.ok = false;
            result.witness = "converse of " + calc.tokens(r);
        }
    };

    auto check_composition = [&](const Relation& r, const Relation& s) {
        const PairSet truth = model.interpret(r).compose(model.interpret(s));
        const PairSet imaged = model.interpret(calc.compose(r, s));
        bool ok = true;
        switch (strength.composition) {
            case Strength::None: break;
            case Strength::Abstract: ok = truth.subset_of(imaged); break;
            case Strength::Weak:
                ok = calc.compose(r, s) == detail::minimal_cover(model, truth);
                break;
            case Strength::Strong: ok = imaged == truth; break;
        }
        if (!ok && result.ok) {
            result.ok = false;
            result.witness = "composition of " + calc.tokens(r) + " and " + calc.tokens(s);
        }
    };

    if (exhaustive) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < limit; ++a) check_converse(relation_at(a));
        for (std::uint64_t a = 0; a < limit; ++a)
            for (std::uint64_t b = 0; b < limit; ++b)
                check_composition(relation_at(a), relation_at(b));
    } else {
        SplitMix64 rng(seed);
        auto random_relation = [&] {
            Relation r(n);
            for (std::size_t i = 0; i < n; ++i)
                if (rng.next() & 1u) r.set(i);
            return r;
        };
        for (std::size_t k = 0; k < sample_count; ++k) check_converse(random_relation());
        for (std::size_t k = 0; k < sample_count; ++k)
            check_composition(random_relation(), random_relation());
    }
    return result;
}

// Cross-checks the equivalence: strong converse <=> involution (r~~ = r) on
// base relations <=> involution on all relations. Returns true when the
// three evaluations agree; false indicates an implementation bug.
inline bool check_involution_equivalence(const CalculusSpec& calc, const FiniteModel& model) {
    if (calc.size() != model.base_count())
        throw std::invalid_argument("model does not match calculus arity");

    bool strong = true;
    for (std::size_t r = 0; r < calc.size(); ++r)
        if (model.interpret(calc.base_converse(r)) != model.phi[r].converse()) strong = false;

    bool ra7_base = true;
    for (std::size_t r = 0; r < calc.size(); ++r)
        if (calc.converse(calc.base_converse(r)) != Relation::singleton(calc.size(), r))
            ra7_base = false;

    bool ra7_general = true;
    const std::size_t n = calc.size();
    if (n <= 8) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Relation rel(n);
            for (std::size_t i = 0; i < n; ++i)
                if ((bits >> i) & 1u) rel.set(i);
            if (calc.converse(calc.converse(rel)) != rel) ra7_general = false;
        }
    } else {
        SplitMix64 rng(kDefaultSeed);
        for (std::size_t k = 0; k < 10000; ++k) {
            Relation rel(n);
            for (std::size_t i = 0; i < n; ++i)
                if (rng.next() & 1u) rel.set(i);
            if (calc.converse(calc.converse(rel)) != rel) ra7_general = false;
        }
    }

    return strong == ra7_base && ra7_base == ra7_general;
}

} // namespace qsr
