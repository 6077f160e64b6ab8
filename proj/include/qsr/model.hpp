#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsr/relation.hpp"

namespace qsr {

// A set of ordered pairs over a finite universe {0..n-1}, stored as a bit
// matrix with word-aligned rows. This is the value interpreted models work
// with: converse is transposition, composition is boolean matrix product.
class PairSet {
public:
    PairSet() : n_(0), row_words_(0) {}

    explicit PairSet(std::size_t n)
        : n_(n), row_words_((n + 63) / 64), words_(n * ((n + 63) / 64), 0) {}

    static PairSet identity(std::size_t n) {
        PairSet p(n);
        for (std::size_t i = 0; i < n; ++i) p.set(i, i);
        return p;
    }

    static PairSet full(std::size_t n) {
        PairSet p(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) p.set(a, b);
        return p;
    }

    std::size_t universe_size() const { return n_; }

    bool test(std::size_t a, std::size_t b) const {
        return (words_[a * row_words_ + (b >> 6)] >> (b & 63)) & 1u;
    }

    void set(std::size_t a, std::size_t b) {
        words_[a * row_words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    PairSet converse() const {
        PairSet out(n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (test(a, b)) out.set(b, a);
        return out;
    }

    // True set-theoretic composition: (a,c) iff (a,b) here and (b,c) in o.
    PairSet compose(const PairSet& o) const {
        check(o);
        PairSet out(n_);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) {
                if (!test(a, b)) continue;
                std::uint64_t* dst = &out.words_[a * row_words_];
                const std::uint64_t* src = &o.words_[b * row_words_];
                for (std::size_t w = 0; w < row_words_; ++w) dst[w] |= src[w];
            }
        }
        return out;
    }

    PairSet& operator|=(const PairSet& o) {
        check(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    PairSet& operator&=(const PairSet& o) {
        check(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    PairSet operator|(const PairSet& o) const { PairSet p(*this); p |= o; return p; }
    PairSet operator&(const PairSet& o) const { PairSet p(*this); p &= o; return p; }

    bool operator==(const PairSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const PairSet& o) const { return !(*this == o); }

    bool subset_of(const PairSet& o) const {
        check(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const PairSet& o) const {
        check(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Serial: every element has at least one outgoing pair.
    bool serial() const {
        for (std::size_t a = 0; a < n_; ++a) {
            bool found = false;
            for (std::size_t w = 0; w < row_words_; ++w)
                if (words_[a * row_words_ + w]) { found = true; break; }
            if (!found) return false;
        }
        return true;
    }

private:
    void check(const PairSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("pair set universe mismatch");
    }

    std::size_t n_;
    std::size_t row_words_;
    std::vector<std::uint64_t> words_;
};

// An explicit interpretation of a calculus's base relations over a small
// finite universe: element names plus one pair set per base relation, in
// base declaration order.
struct FiniteModel {
    std::string name;
    std::vector<std::string> universe;
    std::vector<PairSet> phi;

    std::size_t universe_size() const { return universe.size(); }
    std::size_t base_count() const { return phi.size(); }

    // phi extended to arbitrary relations: union of base interpretations.
    PairSet interpret(const Relation& r) const {
        if (r.arity() != phi.size())
            throw std::invalid_argument("relation arity does not match model");
        PairSet out(universe.size());
        r.for_each([&](std::size_t i) { out |= phi[i]; });
        return out;
    }
};

} // namespace qsr
