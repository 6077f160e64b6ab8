#pragma once

// Shared test fixtures: an interval interpretation of Allen's relations over
// a finite linear order (enough points make derive_tables reproduce the
// standard table exactly), and a seeded random network generator.

#include <cstdint>
#include <string>
#include <vector>

#include "qsr/model.hpp"
#include "qsr/network.hpp"
#include "qsr/parallel.hpp"
#include "qsr/relation.hpp"

namespace qsr_test {

// Token order must match the bundled allen calculus.
inline const std::vector<std::string>& allen_tokens() {
    static const std::vector<std::string> toks = {"b",  "bi", "d", "di", "o",  "oi", "m",
                                                  "mi", "s",  "si", "f", "fi", "eq"};
    return toks;
}

// All intervals [a,b), a < b, over points 0..points-1, interpreted by the 13
// Allen relations. Any configuration of three intervals uses at most six
// distinct endpoints, so points >= 6 reproduces the exact weak composition
// table; we use 8 for margin.
inline qsr::FiniteModel allen_interval_model(int points = 8) {
    struct Interval {
        int lo, hi;
    };
    std::vector<Interval> intervals;
    for (int a = 0; a < points; ++a)
        for (int b = a + 1; b < points; ++b) intervals.push_back({a, b});

    auto relation_index = [](const Interval& x, const Interval& y) -> int {
        if (x.lo == y.lo && x.hi == y.hi) return 12;             // eq
        if (x.hi < y.lo) return 0;                               // b
        if (x.lo > y.hi) return 1;                               // bi
        if (x.hi == y.lo) return 6;                              // m
        if (x.lo == y.hi) return 7;                              // mi
        if (x.lo == y.lo) return x.hi < y.hi ? 8 : 9;            // s / si
        if (x.hi == y.hi) return x.lo > y.lo ? 10 : 11;          // f / fi
        if (x.lo > y.lo && x.hi < y.hi) return 2;                // d
        if (x.lo < y.lo && x.hi > y.hi) return 3;                // di
        if (x.lo < y.lo && x.hi < y.hi) return 4;                // o
        return 5;                                                // oi
    };

    qsr::FiniteModel model;
    model.name = "allen-intervals-" + std::to_string(points);
    for (const auto& iv : intervals)
        model.universe.push_back(std::to_string(iv.lo) + "_" + std::to_string(iv.hi));
    model.phi.assign(13, qsr::PairSet(intervals.size()));
    for (std::size_t i = 0; i < intervals.size(); ++i)
        for (std::size_t j = 0; j < intervals.size(); ++j)
            model.phi[static_cast<std::size_t>(relation_index(intervals[i], intervals[j]))]
                .set(i, j);
    return model;
}

// Random network over n variables: every unordered pair gets a uniformly
// random non-empty-biased subset as its (i<j) constraint; the mirror cell is
// left universal. Empty constraints occur naturally and are allowed.
inline qsr::ConstraintNetwork random_network(std::size_t n, std::size_t arity,
                                             qsr::SplitMix64& rng) {
    qsr::ConstraintNetwork net(n, arity);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            qsr::Relation r(arity);
            for (std::size_t b = 0; b < arity; ++b)
                if (rng.next() % 4 != 0) r.set(b);  // dense-ish cells
            net.constrain(i, j, r);
        }
    }
    return net;
}

} // namespace qsr_test
