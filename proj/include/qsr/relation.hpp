#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qsr {

// A relation of a qualitative calculus: a set of base-relation indices,
// stored as a dense bit vector. The arity (number of base relations of the
// owning calculus) is fixed at construction; all binary operations require
// matching arities.
class Relation {
public:
    Relation() : arity_(0) {}

    explicit Relation(std::size_t arity)
        : arity_(arity), words_((arity + 63) / 64, 0) {}

    static Relation empty(std::size_t arity) { return Relation(arity); }

    static Relation full(std::size_t arity) {
        Relation r(arity);
        for (auto& w : r.words_) w = ~std::uint64_t{0};
        r.mask_padding();
        return r;
    }

    static Relation singleton(std::size_t arity, std::size_t index) {
        Relation r(arity);
        r.set(index);
        return r;
    }

    std::size_t arity() const { return arity_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
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

    bool is_full() const { return count() == arity_; }

    Relation& operator|=(const Relation& o) {
        check_arity(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Relation& operator&=(const Relation& o) {
        check_arity(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Relation operator|(const Relation& o) const { Relation r(*this); r |= o; return r; }
    Relation operator&(const Relation& o) const { Relation r(*this); r &= o; return r; }

    // Complement relative to the full base-relation set.
    Relation operator~() const {
        Relation r(*this);
        for (auto& w : r.words_) w = ~w;
        r.mask_padding();
        return r;
    }

    // Set difference.
    Relation operator-(const Relation& o) const {
        check_arity(o);
        Relation r(*this);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool operator==(const Relation& o) const {
        return arity_ == o.arity_ && words_ == o.words_;
    }
    bool operator!=(const Relation& o) const { return !(*this == o); }

    // Any total order; used for deterministic bucket maps and report output.
    bool operator<(const Relation& o) const {
        if (arity_ != o.arity_) return arity_ < o.arity_;
        for (std::size_t i = words_.size(); i-- > 0;) {
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        }
        return false;
    }

    bool subset_of(const Relation& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

    bool intersects(const Relation& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    // Invokes fn(index) for every member, in increasing index order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = __builtin_ctzll(w);
                fn(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = arity_;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(w);
        return h;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= arity_) throw std::invalid_argument("base relation index out of range");
    }

    void check_arity(const Relation& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("relation arity mismatch");
    }

    void mask_padding() {
        if (arity_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (~std::uint64_t{0}) >> (64 - arity_ % 64);
        }
    }

    std::size_t arity_;
    std::vector<std::uint64_t> words_;
};

} // namespace qsr

template <>
struct std::hash<qsr::Relation> {
    std::size_t operator()(const qsr::Relation& r) const { return r.hash(); }
};
