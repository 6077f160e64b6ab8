#pragma once

#include <cstddef>
#include <vector>

#include "qsr/calculus.hpp"
#include "qsr/relation.hpp"

namespace qsr {

// A qualitative constraint network: n variables and an n x n matrix of
// constraint relations. Unconstrained pairs (including the diagonal) hold
// the universal relation; C[i][j] constrains the ordered pair (x_i, x_j).
struct ConstraintNetwork {
    std::size_t var_count = 0;
    std::size_t arity = 0;
    std::vector<Relation> cells;

    ConstraintNetwork() = default;

    ConstraintNetwork(std::size_t n, std::size_t calculus_arity)
        : var_count(n), arity(calculus_arity),
          cells(n * n, Relation::full(calculus_arity)) {}

    static ConstraintNetwork universal(const CalculusSpec& calc, std::size_t n) {
        return ConstraintNetwork(n, calc.size());
    }

    Relation& at(std::size_t i, std::size_t j) { return cells[i * var_count + j]; }
    const Relation& at(std::size_t i, std::size_t j) const { return cells[i * var_count + j]; }

    // Conjunction semantics: repeated constraints on one ordered pair intersect.
    void constrain(std::size_t i, std::size_t j, const Relation& r) {
        if (i >= var_count || j >= var_count)
            throw std::invalid_argument("variable index out of range");
        at(i, j) &= r;
    }

    bool operator==(const ConstraintNetwork& o) const {
        return var_count == o.var_count && arity == o.arity && cells == o.cells;
    }
    bool operator!=(const ConstraintNetwork& o) const { return !(*this == o); }
};

} // namespace qsr
