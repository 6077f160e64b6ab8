#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsr/relation.hpp"

namespace qsr {

struct BaseRelation {
    std::size_t index;
    std::string name;
};

enum class FoldOrder { Left, Right };

// A binary qualitative calculus: named base relations, an optional identity
// relation, and total converse/composition tables over base relations.
// Immutable after construction; safe to share across threads.
class CalculusSpec {
public:
    CalculusSpec(std::string name,
                 std::vector<std::string> base_names,
                 std::optional<Relation> identity,
                 std::vector<Relation> converse_table,
                 std::vector<Relation> composition_table)
        : name_(std::move(name)),
          identity_(std::move(identity)),
          converse_(std::move(converse_table)),
          composition_(std::move(composition_table)) {
        base_.reserve(base_names.size());
        for (std::size_t i = 0; i < base_names.size(); ++i)
            base_.push_back(BaseRelation{i, std::move(base_names[i])});
        validate();
    }

    const std::string& name() const { return name_; }
    std::size_t size() const { return base_.size(); }
    const std::vector<BaseRelation>& base() const { return base_; }
    const std::string& base_name(std::size_t i) const { return base_.at(i).name; }

    const std::optional<Relation>& identity() const { return identity_; }

    Relation universal() const { return Relation::full(size()); }
    Relation empty_relation() const { return Relation::empty(size()); }

    // Table entry r~ for a base relation.
    const Relation& base_converse(std::size_t i) const { return converse_.at(i); }

    // Table entry r <> s for a pair of base relations.
    const Relation& cell(std::size_t i, std::size_t j) const {
        return composition_.at(i * size() + j);
    }

    // Union-extended converse: R~ = union of r~ over r in R.
    Relation converse(const Relation& r) const {
        check(r);
        Relation out(size());
        r.for_each([&](std::size_t i) { out |= converse_[i]; });
        return out;
    }

    // Union-extended composition: R <> S over the Cartesian product of members.
    Relation compose(const Relation& r, const Relation& s) const {
        check(r);
        check(s);
        Relation out(size());
        r.for_each([&](std::size_t i) {
            s.for_each([&](std::size_t j) { out |= composition_[i * size() + j]; });
        });
        return out;
    }

    // Folds a chain of compositions; chains are not associative in general,
    // so the order matters and must be chosen by the caller.
    Relation compose_chain(std::span<const Relation> chain, FoldOrder order) const {
        if (chain.empty()) throw std::invalid_argument("empty composition chain");
        if (order == FoldOrder::Left) {
            Relation acc = chain.front();
            for (std::size_t i = 1; i < chain.size(); ++i) acc = compose(acc, chain[i]);
            return acc;
        }
        Relation acc = chain.back();
        for (std::size_t i = chain.size() - 1; i-- > 0;) acc = compose(chain[i], acc);
        return acc;
    }

    std::optional<std::size_t> index_of(const std::string& token) const {
        for (const auto& b : base_)
            if (b.name == token) return b.index;
        return std::nullopt;
    }

    // Renders a relation as a parenthesized token set, e.g. "(< =)".
    std::string tokens(const Relation& r) const {
        check(r);
        std::string out = "(";
        bool first = true;
        r.for_each([&](std::size_t i) {
            if (!first) out += ' ';
            out += base_[i].name;
            first = false;
        });
        out += ')';
        return out;
    }

    bool operator==(const CalculusSpec& o) const {
        if (name_ != o.name_ || base_.size() != o.base_.size()) return false;
        for (std::size_t i = 0; i < base_.size(); ++i)
            if (base_[i].name != o.base_[i].name) return false;
        return identity_ == o.identity_ && converse_ == o.converse_ &&
               composition_ == o.composition_;
    }
    bool operator!=(const CalculusSpec& o) const { return !(*this == o); }

private:
    void check(const Relation& r) const {
        if (r.arity() != size()) throw std::invalid_argument("relation arity mismatch");
    }

    void validate() const {
        const std::size_t n = base_.size();
        if (n == 0) throw std::invalid_argument("calculus has no base relations");
        for (const auto& b : base_) {
            if (b.name.empty()) throw std::invalid_argument("empty base relation name");
            for (char c : b.name) {
                if (c == '(' || c == ')' || c == '#' || c == '"' ||
                    c == ' ' || c == '\t' || c == '\r' || c == '\n')
                    throw std::invalid_argument("base relation name contains whitespace or parentheses: " + b.name);
            }
            for (const auto& other : base_) {
                if (other.index != b.index && other.name == b.name)
                    throw std::invalid_argument("duplicate base relation name: " + b.name);
            }
        }
        if (converse_.size() != n)
            throw std::invalid_argument("converse table is not total");
        if (composition_.size() != n * n)
            throw std::invalid_argument("composition table is not total");
        for (const auto& r : converse_)
            if (r.arity() != n) throw std::invalid_argument("converse entry arity mismatch");
        for (const auto& r : composition_)
            if (r.arity() != n) throw std::invalid_argument("composition entry arity mismatch");
        if (identity_) {
            if (identity_->arity() != n)
                throw std::invalid_argument("identity arity mismatch");
            if (identity_->none())
                throw std::invalid_argument("declared identity is empty");
        }
    }

    std::string name_;
    std::vector<BaseRelation> base_;
    std::optional<Relation> identity_;
    std::vector<Relation> converse_;
    std::vector<Relation> composition_;
};

} // namespace qsr
