#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsr/calculus.hpp"
#include "qsr/errors.hpp"

namespace qsr {

// I(R) = 1 - |R|/|Rel|: 0 for the universal relation, 1 for the empty one.
inline double information_content(const Relation& r, const CalculusSpec& calc) {
    if (r.arity() != calc.size()) throw std::invalid_argument("relation arity mismatch");
    return 1.0 - static_cast<double>(r.count()) / static_cast<double>(calc.size());
}

// O(R_i, R_j) = |R_i n R_j| / |Rel|.
inline double overlap(const Relation& a, const Relation& b, const CalculusSpec& calc) {
    if (a.arity() != calc.size() || b.arity() != calc.size())
        throw std::invalid_argument("relation arity mismatch");
    return static_cast<double>((a & b).count()) / static_cast<double>(calc.size());
}

// The weighted multiset of left-fold composition chain results: bucket
// weights are the fractions of the |Rel|^(k+1) base-relation chains whose
// composition equals the bucketed relation. Built iteratively, composing the
// previous distribution with every base relation instead of looping over all
// chains.
struct ChainDistribution {
    std::size_t k = 0;
    std::map<Relation, double> buckets;

    double total_weight() const {
        double w = 0.0;
        for (const auto& [rel, weight] : buckets) w += weight;
        return w;
    }
};

struct ChainOptions {
    std::size_t bucket_cap = std::size_t{1} << 20;
};

inline ChainDistribution chain_distribution(const CalculusSpec& calc, std::size_t k,
                                            const ChainOptions& opts = {}) {
    const std::size_t n = calc.size();
    ChainDistribution dist;
    dist.k = 0;
    const double base_weight = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        dist.buckets.emplace(Relation::singleton(n, i), base_weight);

    for (std::size_t step = 0; step < k; ++step) {
        std::map<Relation, double> next;
        for (const auto& [rel, weight] : dist.buckets) {
            for (std::size_t b = 0; b < n; ++b) {
                Relation composed = calc.compose(rel, Relation::singleton(n, b));
                next[std::move(composed)] += weight * base_weight;
            }
            if (next.size() > opts.bucket_cap)
                throw CapacityError("chain distribution bucket cap exceeded");
        }
        dist.buckets = std::move(next);
        dist.k = step + 1;
    }
    return dist;
}

// I_C^k: the average information content over all k-fold composition chains.
inline double avg_information(const ChainDistribution& dist, const CalculusSpec& calc) {
    double sum = 0.0;
    for (const auto& [rel, weight] : dist.buckets)
        sum += weight * information_content(rel, calc);
    return sum;
}

inline double avg_information(const CalculusSpec& calc, std::size_t k,
                              const ChainOptions& opts = {}) {
    return avg_information(chain_distribution(calc, k, opts), calc);
}

// O_C^k: the weight-weighted mean overlap over ordered pairs of chain
// results. The self-pair contributes |R|/|Rel|.
inline double avg_overlap(const ChainDistribution& dist, const CalculusSpec& calc) {
    double sum = 0.0;
    for (const auto& [a, wa] : dist.buckets)
        for (const auto& [b, wb] : dist.buckets)
            sum += wa * wb * overlap(a, b, calc);
    return sum;
}

inline double avg_overlap(const CalculusSpec& calc, std::size_t k,
                          const ChainOptions& opts = {}) {
    return avg_overlap(chain_distribution(calc, k, opts), calc);
}

enum class StopReason { MaxK, Threshold, Capacity };

inline const char* stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::MaxK: return "max-k";
        case StopReason::Threshold: return "threshold";
        case StopReason::Capacity: return "capacity";
    }
    return "?";
}

struct MetricsOptions {
    std::size_t max_k = 14;
    double stop_below = 0.005;  // fraction, i.e. 0.5 in percent
    ChainOptions chain;
};

// I and O values for k = 0.., stopping after the first value below the
// threshold (which is still included), after max_k, or when the bucket cap
// is hit (partial series).
struct MetricsSeries {
    std::string calculus;
    std::vector<double> information;  // fractions in [0,1]
    std::vector<double> overlap;
    StopReason stop_reason = StopReason::MaxK;
};

inline MetricsSeries metrics_series(const CalculusSpec& calc, const MetricsOptions& opts = {}) {
    MetricsSeries series;
    series.calculus = calc.name();

    ChainDistribution dist;
    const std::size_t n = calc.size();
    const double base_weight = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        dist.buckets.emplace(Relation::singleton(n, i), base_weight);

    for (std::size_t k = 0;; ++k) {
        series.information.push_back(avg_information(dist, calc));
        series.overlap.push_back(avg_overlap(dist, calc));
        if (series.information.back() < opts.stop_below) {
            series.stop_reason = StopReason::Threshold;
            return series;
        }
        if (k == opts.max_k) {
            series.stop_reason = StopReason::MaxK;
            return series;
        }
        try {
            std::map<Relation, double> next;
            for (const auto& [rel, weight] : dist.buckets) {
                for (std::size_t b = 0; b < n; ++b) {
                    Relation composed = calc.compose(rel, Relation::singleton(n, b));
                    next[std::move(composed)] += weight * base_weight;
                }
                if (next.size() > opts.chain.bucket_cap)
                    throw CapacityError("chain distribution bucket cap exceeded");
            }
            dist.buckets = std::move(next);
            dist.k = k + 1;
        } catch (const CapacityError&) {
            series.stop_reason = StopReason::Capacity;
            return series;
        }
    }
}

} // namespace qsr
