#include <doctest.h>

#include "qsr/axioms.hpp"
#include "qsr/builtins.hpp"
#include "qsr/model_checker.hpp"
#include "support.hpp"

using namespace qsr;

namespace {

FiniteModel pc_model_over(int points) {
    FiniteModel m;
    m.name = "pc-0-" + std::to_string(points - 1);
    for (int i = 0; i < points; ++i) m.universe.push_back(std::to_string(i));
    m.phi.assign(3, PairSet(points));
    for (int a = 0; a < points; ++a) {
        for (int b = 0; b < points; ++b) {
            if (a < b) m.phi[0].set(a, b);
            if (a == b) m.phi[1].set(a, b);
            if (a > b) m.phi[2].set(a, b);
        }
    }
    return m;
}

} // namespace

TEST_CASE("scheme verdicts for the bundled models") {
    const SchemeVerdict pc = check_scheme(*builtin("point-calculus").model);
    CHECK(pc.jepd);
    CHECK(pc.non_empty_bases);
    CHECK(pc.has_identity);
    CHECK(pc.converse_closed);
    CHECK(pc.partition_scheme());
    // '<' has no successor for the largest point, so the finite fragment is
    // not serial even though the intended infinite domain is.
    CHECK_FALSE(pc.serial);

    const SchemeVerdict t1 = check_scheme(*builtin("toy-t1").model);
    CHECK(t1.jepd);
    CHECK_FALSE(t1.has_identity);  // phi(r1) = {(0,0),(0,1)} is not id
    CHECK_FALSE(t1.converse_closed);
    CHECK_FALSE(t1.partition_scheme());

    const SchemeVerdict remark = check_scheme(*builtin("toy-remark").model);
    CHECK(remark.partition_scheme());
    CHECK(remark.serial);
}

TEST_CASE("overlapping interpretations are not jepd") {
    FiniteModel m;
    m.universe = {"0", "1"};
    m.phi.assign(2, PairSet(2));
    m.phi[0].set(0, 0);
    m.phi[0].set(0, 1);
    m.phi[1] = PairSet::full(2);  // overlaps phi[0]
    CHECK_FALSE(check_scheme(m).jepd);
    CHECK_THROWS_AS(classify_strength(*builtin("toy-t1").calc, m), std::invalid_argument);
}

TEST_CASE("every bundled model passes the abstract converse/composition checks") {
    for (const auto& name : builtin_names()) {
        const auto entry = builtin(name);
        if (!entry.model) continue;
        const StrengthVerdict v = classify_strength(*entry.calc, *entry.model);
        INFO(name);
        CHECK(v.converse >= Strength::Abstract);
        CHECK(v.composition >= Strength::Abstract);
    }
}

TEST_CASE("strength classification") {
    const StrengthVerdict t1 = classify_strength(*builtin("toy-t1").calc, *builtin("toy-t1").model);
    CHECK(t1.converse == Strength::Weak);  // phi(1) strictly covers phi(r1)~
    CHECK(t1.composition == Strength::Abstract);

    const StrengthVerdict t2 = classify_strength(*builtin("toy-t2").calc, *builtin("toy-t2").model);
    CHECK(t2.converse == Strength::Strong);  // phi(r3)~ = {(1,0)} = phi(r4)
    CHECK(t2.composition == Strength::Abstract);

    const StrengthVerdict pc =
        classify_strength(*builtin("point-calculus").calc, *builtin("point-calculus").model);
    CHECK(pc.converse == Strength::Strong);
    CHECK(pc.composition == Strength::Weak);

    // A converse table missing a required base relation is not even abstract.
    const CalculusSpec& good = *builtin("point-calculus").calc;
    std::vector<std::string> names = {"<", "=", ">"};
    std::vector<Relation> conv = {Relation::singleton(3, 0),  // wrong: <~ should be >
                                  Relation::singleton(3, 1), Relation::singleton(3, 2)};
    std::vector<Relation> comp;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) comp.push_back(good.cell(i, j));
    const CalculusSpec broken("broken-pc", names, good.identity(), conv, comp);
    CHECK(classify_strength(broken, *builtin("point-calculus").model).converse == Strength::None);
}

TEST_CASE("derive_tables is the weak-table oracle") {
    // Point calculus over {0,1,2}: composition of < and > covers everything.
    const FiniteModel m3 = pc_model_over(3);
    const CalculusSpec derived = derive_tables(m3, "pc3", {"<", "=", ">"});
    CHECK(derived.cell(0, 2) == Relation::full(3));   // < <> >
    CHECK(derived.cell(0, 0) == Relation::singleton(3, 0));
    CHECK(derived.identity().has_value());
    CHECK(*derived.identity() == Relation::singleton(3, 1));

    // Over {0..3} the derived tables reproduce the bundled point calculus.
    const CalculusSpec& pc = *builtin("point-calculus").calc;
    const CalculusSpec derived4 =
        derive_tables(*builtin("point-calculus").model, "point-calculus", {"<", "=", ">"});
    CHECK(derived4 == pc);

    // toy-t2's model: the derived table is the minimal one, which is strictly
    // finer than the bundled abstract table on the coarse cells.
    const CalculusSpec t2d = derive_tables(*builtin("toy-t2").model);
    CHECK(t2d.cell(3, 0) == Relation::singleton(4, 3));          // r4 <> r1 = (r4)
    CHECK(t2d.cell(2, 3) == Relation::singleton(4, 0));          // r3 <> r4 = (r1)
    CHECK(builtin("toy-t2").calc->cell(3, 0).count() == 2);      // bundled cell is coarser

    // Identity-only model.
    FiniteModel single;
    single.universe = {"0"};
    single.phi.assign(1, PairSet::identity(1));
    const CalculusSpec sd = derive_tables(single, "single");
    CHECK(sd.cell(0, 0) == Relation::singleton(1, 0));
    CHECK(sd.base_converse(0) == Relation::singleton(1, 0));
    CHECK(sd.identity().has_value());

    // Derived tables are minimal, so the weak predicate holds against their
    // model; the verdict reports strong where the tables happen to be exact.
    for (const char* name : {"point-calculus", "toy-t1", "toy-t2", "toy-remark"}) {
        const FiniteModel& model = *builtin(name).model;
        const StrengthVerdict v = classify_strength(derive_tables(model), model);
        CHECK(v.converse >= Strength::Weak);
        CHECK(v.composition >= Strength::Weak);
    }
    CHECK(classify_strength(derive_tables(*builtin("point-calculus").model),
                            *builtin("point-calculus").model)
              .composition == Strength::Weak);
    CHECK(classify_strength(derive_tables(*builtin("toy-t1").model), *builtin("toy-t1").model)
              .converse == Strength::Weak);
}

TEST_CASE("bundled allen table equals the table derived from intervals") {
    const FiniteModel intervals = qsr_test::allen_interval_model(8);
    const CalculusSpec derived = derive_tables(intervals, "allen", qsr_test::allen_tokens());
    CHECK(derived == *builtin("allen").calc);
}

TEST_CASE("general-relation extension of the verified strength level") {
    // Exhaustive for every two-element/four-element toy, sampled elsewhere.
    for (const char* name : {"toy-t1", "toy-t2", "toy-remark", "point-calculus"}) {
        const auto entry = builtin(name);
        CHECK(check_general_extension(*entry.calc, *entry.model).ok);
    }

    // Weak level spot check: (< u =)~ is the minimal cover of phi(< u =)~.
    const auto pc = builtin("point-calculus");
    Relation le(3);
    le.set(*pc.calc->index_of("<"));
    le.set(*pc.calc->index_of("="));
    Relation ge(3);
    ge.set(*pc.calc->index_of(">"));
    ge.set(*pc.calc->index_of("="));
    CHECK(pc.calc->converse(le) == ge);
    const PairSet truth = pc.model->interpret(le).converse();
    Relation cover(3);
    for (std::size_t r = 0; r < 3; ++r)
        if (pc.model->phi[r].intersects(truth)) cover.set(r);
    CHECK(cover == ge);
}

TEST_CASE("phi injectivity") {
    CHECK(check_phi_injective(*builtin("toy-t1").model));
    CHECK(check_phi_injective(*builtin("point-calculus").model));

    // The flag really does mean injectivity of phi over all subsets.
    for (const char* name : {"toy-t1", "toy-t2", "toy-remark"}) {
        const FiniteModel& model = *builtin(name).model;
        const std::size_t n = model.base_count();
        bool injective = true;
        for (std::uint64_t a = 0; a < (1u << n) && injective; ++a) {
            for (std::uint64_t b = a + 1; b < (1u << n) && injective; ++b) {
                Relation ra(n), rb(n);
                for (std::size_t i = 0; i < n; ++i) {
                    if ((a >> i) & 1u) ra.set(i);
                    if ((b >> i) & 1u) rb.set(i);
                }
                if (model.interpret(ra) == model.interpret(rb)) injective = false;
            }
        }
        INFO(name);
        CHECK(injective == check_phi_injective(model));
    }

    FiniteModel empty_base;
    empty_base.universe = {"0"};
    empty_base.phi.assign(2, PairSet(1));
    empty_base.phi[0].set(0, 0);
    CHECK_FALSE(check_phi_injective(empty_base));  // {r} and the empty set collide

    FiniteModel covering;
    covering.universe = {"0", "1"};
    covering.phi.assign(1, PairSet::full(2));
    CHECK(check_phi_injective(covering));
}

TEST_CASE("strong converse coincides with involution") {
    for (const char* name : {"point-calculus", "toy-t1", "toy-t2", "toy-remark"}) {
        const auto entry = builtin(name);
        CHECK(check_involution_equivalence(*entry.calc, *entry.model));
    }
}

TEST_CASE("partition schemes yield NAs; serial ones yield SAs") {
    // Prop-1-style property over every model at hand, including intervals.
    std::vector<std::pair<FiniteModel, std::string>> models;
    for (const char* name : {"point-calculus", "toy-t1", "toy-t2", "toy-remark"})
        models.push_back({*builtin(name).model, name});
    models.push_back({qsr_test::allen_interval_model(6), "intervals"});

    for (const auto& [model, name] : models) {
        const SchemeVerdict scheme = check_scheme(model);
        if (!scheme.partition_scheme()) continue;
        const AxiomReport report = analyze(derive_tables(model));
        for (AxiomId id : {AxiomId::RA1, AxiomId::RA2, AxiomId::RA3, AxiomId::RA5,
                           AxiomId::RA6, AxiomId::RA7, AxiomId::RA8, AxiomId::RA9,
                           AxiomId::RA10}) {
            INFO(name, " ", axiom_name(id));
            CHECK(report[id].holds());
        }
        if (scheme.serial) CHECK(report[AxiomId::SA].holds());
    }
}

TEST_CASE("derived tables always satisfy the involution superset inclusion") {
    for (const char* name : {"point-calculus", "toy-t1", "toy-t2", "toy-remark"}) {
        const AxiomReport report = analyze(derive_tables(*builtin(name).model));
        CHECK(report[AxiomId::RA7sup].holds());
    }
}

TEST_CASE("strong composition implies associativity") {
    // Composition of actual binary relations is associative, so any table
    // that is exact under phi must satisfy RA4.
    bool found_strong = false;
    for (const char* name : {"point-calculus", "toy-t1", "toy-t2", "toy-remark"}) {
        const FiniteModel& model = *builtin(name).model;
        for (const CalculusSpec& calc :
             {*builtin(name).calc, derive_tables(model)}) {
            if (classify_strength(calc, model).composition != Strength::Strong) continue;
            found_strong = true;
            INFO(calc.name());
            CHECK(analyze(calc)[AxiomId::RA4].holds());
        }
    }
    CHECK(found_strong);  // the derived toy tables are exact, so this is not vacuous
}
