#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsr/axioms.hpp"
#include "qsr/calculus.hpp"
#include "qsr/errors.hpp"
#include "qsr/model.hpp"
#include "qsr/network.hpp"
#include "qsr/parallel.hpp"

namespace qsr {

enum class ClosureStatus { Closed, Inconsistent };
enum class ClosureStrategy { Pc1, Queue };

struct ClosureOptions {
    bool ra7_holds = true;  // triangular storage discipline allowed
    bool ra9_holds = true;  // single refinement computation per triple suffices
    std::optional<std::uint64_t> max_passes;
    ClosureStrategy strategy = ClosureStrategy::Pc1;
    // When set, each PC-1 pass visits the (i,j,k) triples in a seeded shuffled
    // order. The closure fixpoint must not depend on it.
    std::optional<std::uint64_t> schedule_seed;

    // Defaults taken from the analyzer's verdicts for the calculus.
    static ClosureOptions detect(const CalculusSpec& calc) {
        ClosureOptions opts;
        opts.ra7_holds = check_axiom(calc, AxiomId::RA7).holds();
        opts.ra9_holds = check_axiom(calc, AxiomId::RA9).holds();
        return opts;
    }
};

// A Closed verdict means the refinement operator reached a fixpoint, not
// that the network is consistent; algebraic closure is sound but generally
// incomplete for consistency.
struct ClosureResult {
    ClosureStatus status = ClosureStatus::Closed;
    ConstraintNetwork network;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // first emptied cell
    std::uint64_t iterations = 0;                                // revision passes run
    bool fixpoint = false;
    std::vector<std::string> warnings;
};

// LOOKUP of the universal closure algorithm: the stored cell when s (full
// storage) or i < j; otherwise the converse of the mirror cell.
inline Relation closure_lookup(const CalculusSpec& calc, const ConstraintNetwork& net,
                               std::size_t i, std::size_t j, bool s) {
    if (s || i < j) return net.at(i, j);
    return calc.converse(net.at(j, i));
}

struct ReviseResult {
    bool updated = false;
    std::optional<std::pair<std::size_t, std::size_t>> emptied;
};

namespace detail {

// Writes a cell honoring the storage discipline: with triangular storage the
// upper cell is canonical and the mirror is kept at its converse, so the
// returned matrix is always fully populated and lookup-consistent.
inline void closure_write(const CalculusSpec& calc, ConstraintNetwork& net,
                          std::size_t i, std::size_t j, const Relation& value, bool s) {
    if (s || i == j) {
        net.at(i, j) = value;
        return;
    }
    if (i < j) {
        net.at(i, j) = value;
        net.at(j, i) = calc.converse(value);
    } else {
        net.at(j, i) = calc.converse(value);
        net.at(i, j) = calc.converse(net.at(j, i));
    }
}

} // namespace detail

// REVISE of the universal closure algorithm. Refines C[i][j] through k; when
// s is set or RA9 fails, the mirror constraint is refined with a second
// composition and the two results are intersected with each other's
// converses. An emptied cell is reported, with the matrix left as of the
// detection point.
inline ReviseResult closure_revise(const CalculusSpec& calc, ConstraintNetwork& net,
                                   std::size_t i, std::size_t j, std::size_t k,
                                   bool s, bool ra9_holds) {
    ReviseResult out;
    Relation r = closure_lookup(calc, net, i, j, s) &
                 calc.compose(closure_lookup(calc, net, i, k, s),
                              closure_lookup(calc, net, k, j, s));
    if (s || !ra9_holds) {
        Relation r_mirror = closure_lookup(calc, net, j, i, s) &
                            calc.compose(closure_lookup(calc, net, j, k, s),
                                         closure_lookup(calc, net, k, i, s));
        r &= calc.converse(r_mirror);
        r_mirror &= calc.converse(r);
        if (r_mirror != closure_lookup(calc, net, j, i, s)) {
            if (r_mirror.none()) {
                out.emptied = {j, i};
                return out;
            }
            out.updated = true;
            detail::closure_write(calc, net, j, i, r_mirror, s);
        }
    }
    if (r != closure_lookup(calc, net, i, j, s)) {
        if (r.none()) {
            out.emptied = {i, j};
            return out;
        }
        out.updated = true;
        detail::closure_write(calc, net, i, j, r, s);
    }
    return out;
}

// A-CLOSURE: enforces algebraic closure with the PC-1 control structure (or
// a queue-based variant with the same fixpoint). The input matrix is read as
// the conjunction of its cells; with triangular storage, mirror cells are
// folded together via converse up front.
inline ClosureResult a_closure(const CalculusSpec& calc, const ConstraintNetwork& input,
                               const ClosureOptions& opts) {
    if (input.arity != calc.size())
        throw std::invalid_argument("network arity does not match calculus");

    ClosureResult result;
    result.network = input;
    ConstraintNetwork& net = result.network;
    const std::size_t n = net.var_count;
    const bool s = !opts.ra7_holds;

    auto inconsistent_at = [&](std::size_t i, std::size_t j) {
        result.status = ClosureStatus::Inconsistent;
        result.witness = {i, j};
        result.fixpoint = false;
        return result;
    };

    // Diagonal: assert id membership when an identity is declared.
    if (calc.identity()) {
        for (std::size_t i = 0; i < n; ++i) {
            net.at(i, i) &= *calc.identity();
            if (net.at(i, i).none()) return inconsistent_at(i, i);
        }
    } else {
        result.warnings.push_back(
            "calculus declares no identity: diagonal left unrestricted, id assertion skipped");
        for (std::size_t i = 0; i < n; ++i)
            if (net.at(i, i).none()) return inconsistent_at(i, i);
    }

    // Off-diagonal: fold mirror cells together under triangular storage and
    // surface constraints that are already empty.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!s) {
                const Relation folded = net.at(i, j) & calc.converse(net.at(j, i));
                detail::closure_write(calc, net, i, j, folded, s);
            }
            if (net.at(i, j).none()) return inconsistent_at(i, j);
            if (net.at(j, i).none()) return inconsistent_at(j, i);
        }
    }

    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) triples.push_back({i, j, k});

    if (opts.strategy == ClosureStrategy::Pc1) {
        bool update = true;
        while (update) {
            if (opts.max_passes && result.iterations >= *opts.max_passes) {
                result.status = ClosureStatus::Closed;
                result.fixpoint = false;
                return result;
            }
            if (opts.schedule_seed) {
                SplitMix64 rng(*opts.schedule_seed + result.iterations);
                for (std::size_t a = triples.size(); a > 1; --a)
                    std::swap(triples[a - 1], triples[rng.below(a)]);
            }
            update = false;
            ++result.iterations;
            for (const auto& t : triples) {
                const ReviseResult rr = closure_revise(calc, net, t[0], t[1], t[2], s, opts.ra9_holds);
                if (rr.emptied) return inconsistent_at(rr.emptied->first, rr.emptied->second);
                update = update || rr.updated;
            }
        }
    } else {
        std::deque<std::pair<std::size_t, std::size_t>> queue;
        std::vector<bool> queued(n * n, false);
        auto push = [&](std::size_t i, std::size_t j) {
            if (i > j) std::swap(i, j);
            if (i == j || queued[i * n + j]) return;
            queued[i * n + j] = true;
            queue.emplace_back(i, j);
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) push(i, j);
        while (!queue.empty()) {
            if (opts.max_passes && result.iterations >= *opts.max_passes) {
                result.status = ClosureStatus::Closed;
                result.fixpoint = false;
                return result;
            }
            ++result.iterations;
            const auto [i, j] = queue.front();
            queue.pop_front();
            queued[i * n + j] = false;
            bool touched = false;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const ReviseResult rr = closure_revise(calc, net, i, j, k, s, opts.ra9_holds);
                if (rr.emptied) return inconsistent_at(rr.emptied->first, rr.emptied->second);
                touched = touched || rr.updated;
            }
            if (touched) {
                for (std::size_t x = 0; x < n; ++x) {
                    if (x != i) push(i, x);
                    if (x != j) push(j, x);
                }
            }
        }
    }

    result.status = ClosureStatus::Closed;
    result.fixpoint = true;
    return result;
}

// Convenience overload: RA7/RA9 flags auto-detected via the analyzer.
inline ClosureResult a_closure(const CalculusSpec& calc, const ConstraintNetwork& input) {
    return a_closure(calc, input, ClosureOptions::detect(calc));
}

// Exhaustive consistency oracle over an explicit finite model: true iff some
// valuation of the variables into the model's universe satisfies every
// constraint under phi. Guarded against |Univ|^n blowup.
inline bool brute_force_consistency(const FiniteModel& model, const ConstraintNetwork& net,
                                    std::uint64_t guard = 10'000'000) {
    if (net.arity != model.base_count())
        throw std::invalid_argument("network arity does not match model");
    const std::size_t u = model.universe_size();
    const std::size_t n = net.var_count;

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > guard / u + 1) throw CapacityError("valuation space exceeds guard");
        total *= u;
    }
    if (total > guard) throw CapacityError("valuation space exceeds guard");

    std::vector<PairSet> interp(n * n, PairSet(u));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) interp[i * n + j] = model.interpret(net.at(i, j));

    std::vector<std::size_t> val(n, 0);
    for (std::uint64_t iter = 0; iter < total; ++iter) {
        std::uint64_t v = iter;
        for (std::size_t i = 0; i < n; ++i) {
            val[i] = static_cast<std::size_t>(v % u);
            v /= u;
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (!interp[i * n + j].test(val[i], val[j])) ok = false;
        if (ok) return true;
    }
    return false;
}

} // namespace qsr
