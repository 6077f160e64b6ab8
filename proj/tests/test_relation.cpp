#include <doctest.h>

#include <vector>

#include "qsr/builtins.hpp"
#include "qsr/calculus.hpp"
#include "qsr/parallel.hpp"
#include "qsr/relation.hpp"

using namespace qsr;

namespace {

Relation rel(const CalculusSpec& calc, std::initializer_list<const char*> toks) {
    Relation r(calc.size());
    for (const char* t : toks) r.set(*calc.index_of(t));
    return r;
}

Relation random_relation(SplitMix64& rng, std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next() & 1u) r.set(i);
    return r;
}

} // namespace

TEST_CASE("set operations") {
    const CalculusSpec& pc = *builtin("point-calculus").calc;
    CHECK((rel(pc, {"<"}) | rel(pc, {"="})) == rel(pc, {"<", "="}));
    CHECK((~pc.universal()).none());
    CHECK((rel(pc, {"<", "="}) & rel(pc, {"=", ">"})) == rel(pc, {"="}));
    CHECK(rel(pc, {"<"}).subset_of(rel(pc, {"<", ">"})));
    CHECK_FALSE(rel(pc, {"<", "="}).subset_of(rel(pc, {"<"})));
    CHECK(Relation::full(3).count() == 3);
    CHECK(Relation::empty(3).none());

    // mismatched arities are a usage error
    CHECK_THROWS_AS((void)(Relation(3) | Relation(4)), std::invalid_argument);
    CHECK_THROWS_AS(pc.compose(Relation(4), Relation(3)), std::invalid_argument);
}

TEST_CASE("converse of general relations") {
    const CalculusSpec& pc = *builtin("point-calculus").calc;
    CHECK(pc.converse(rel(pc, {"<"})) == rel(pc, {">"}));
    CHECK(pc.converse(pc.empty_relation()).none());
    CHECK(pc.converse(rel(pc, {"<", "="})) == rel(pc, {">", "="}));

    const CalculusSpec& t1 = *builtin("toy-t1").calc;
    CHECK(t1.converse(rel(t1, {"r1"})) == rel(t1, {"r1", "r2"}));
}

TEST_CASE("composition of general relations") {
    const CalculusSpec& pc = *builtin("point-calculus").calc;
    CHECK(pc.compose(rel(pc, {"<"}), rel(pc, {"<"})) == rel(pc, {"<"}));
    CHECK(pc.compose(rel(pc, {"<"}), pc.empty_relation()).none());
    CHECK(pc.compose(rel(pc, {"<"}), rel(pc, {">"})) == pc.universal());

    const CalculusSpec& t2 = *builtin("toy-t2").calc;
    CHECK(t2.compose(rel(t2, {"r3"}), rel(t2, {"r4"})) == rel(t2, {"r1", "r4"}));
}

TEST_CASE("composition chains fold in the requested order") {
    const CalculusSpec& t2 = *builtin("toy-t2").calc;
    const std::vector<Relation> chain = {rel(t2, {"r1"}), rel(t2, {"r3"}), rel(t2, {"r4"})};
    CHECK(t2.compose_chain(chain, FoldOrder::Left) == rel(t2, {"r1", "r4"}));
    CHECK(t2.compose_chain(chain, FoldOrder::Right) == rel(t2, {"r1"}));

    const std::vector<Relation> single = {rel(t2, {"r2", "r3"})};
    CHECK(t2.compose_chain(single, FoldOrder::Left) == single[0]);
    CHECK(t2.compose_chain(single, FoldOrder::Right) == single[0]);

    CHECK_THROWS_AS(t2.compose_chain({}, FoldOrder::Left), std::invalid_argument);
}

TEST_CASE("converse and composition distribute over union by construction") {
    // Exhaustive on the two-element toys, randomized on allen.
    for (const char* name : {"toy-t1", "toy-t2", "toy-remark"}) {
        const CalculusSpec& calc = *builtin(name).calc;
        const std::size_t n = calc.size();
        for (std::uint64_t a = 0; a < (1u << n); ++a) {
            Relation ra(n), rb(n);
            for (std::size_t i = 0; i < n; ++i)
                if ((a >> i) & 1u) ra.set(i);
            for (std::uint64_t b = 0; b < (1u << n); ++b) {
                for (std::size_t i = 0; i < n; ++i)
                    if ((b >> i) & 1u) rb.set(i); else rb.reset(i);
                CHECK(calc.converse(ra | rb) == (calc.converse(ra) | calc.converse(rb)));
                for (std::uint64_t c = 0; c < (1u << n); ++c) {
                    Relation rc(n);
                    for (std::size_t i = 0; i < n; ++i)
                        if ((c >> i) & 1u) rc.set(i);
                    CHECK(calc.compose(ra | rb, rc) ==
                          (calc.compose(ra, rc) | calc.compose(rb, rc)));
                    CHECK(calc.compose(rc, ra | rb) ==
                          (calc.compose(rc, ra) | calc.compose(rc, rb)));
                }
            }
        }
    }

    const CalculusSpec& allen = *builtin("allen").calc;
    SplitMix64 rng(kDefaultSeed);
    for (int round = 0; round < 200; ++round) {
        const Relation a = random_relation(rng, allen.size());
        const Relation b = random_relation(rng, allen.size());
        const Relation c = random_relation(rng, allen.size());
        CHECK(allen.converse(a | b) == (allen.converse(a) | allen.converse(b)));
        CHECK(allen.compose(a | b, c) == (allen.compose(a, c) | allen.compose(b, c)));
        CHECK(allen.compose(c, a | b) == (allen.compose(c, a) | allen.compose(c, b)));
    }
}

TEST_CASE("monotonicity of converse and composition") {
    const CalculusSpec& allen = *builtin("allen").calc;
    SplitMix64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const Relation r = random_relation(rng, allen.size());
        const Relation s = random_relation(rng, allen.size());
        const Relation r2 = r | random_relation(rng, allen.size());
        const Relation s2 = s | random_relation(rng, allen.size());
        CHECK(allen.converse(r).subset_of(allen.converse(r2)));
        CHECK(allen.compose(r, s).subset_of(allen.compose(r2, s2)));
    }
}

TEST_CASE("calculus validation rejects malformed specs") {
    const std::size_t n = 2;
    std::vector<Relation> conv(n, Relation::full(n));
    std::vector<Relation> comp(n * n, Relation::full(n));
    CHECK_THROWS_AS(CalculusSpec("x", {"a", "a"}, std::nullopt, conv, comp),
                    std::invalid_argument);
    CHECK_THROWS_AS(CalculusSpec("x", {"a", "b c"}, std::nullopt, conv, comp),
                    std::invalid_argument);
    CHECK_THROWS_AS(CalculusSpec("x", {}, std::nullopt, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(CalculusSpec("x", {"a", "b"}, Relation(n), conv, comp),   // empty identity
                    std::invalid_argument);
    CHECK_THROWS_AS(CalculusSpec("x", {"a", "b"}, std::nullopt,
                                 std::vector<Relation>(1, Relation::full(n)), comp),
                    std::invalid_argument);
}
