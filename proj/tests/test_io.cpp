#include <doctest.h>

#include <string>

#include "qsr/builtins.hpp"
#include "qsr/io.hpp"
#include "qsr/report_json.hpp"

using namespace qsr;

namespace {

const char* kMinimalPc = R"(
calculus "point-calculus"
relations < = >
identity =
converse
< (>)
= (=)
> (<)
composition
< < (<)
< = (<)
< > (< = >)
= < (<)
= = (=)
= > (>)
> < (< = >)
> = (>)
> > (>)
)";

} // namespace

TEST_CASE("parse round-trips every bundled calculus") {
    for (const auto& name : builtin_names()) {
        const CalculusSpec& calc = *builtin(name).calc;
        CHECK(parse_calculus(serialize_calculus(calc), name) == calc);
    }
}

TEST_CASE("minimal point calculus text equals the bundled definition") {
    CHECK(parse_calculus(kMinimalPc) == *builtin("point-calculus").calc);
}

TEST_CASE("calculus parse diagnostics carry line and column") {
    // missing composition cell
    std::string text = kMinimalPc;
    text.erase(text.find("> > (>)"), 8);
    try {
        parse_calculus(text, "broken.qcalc");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.message().find("missing composition entry") != std::string::npos);
        CHECK(e.origin() == "broken.qcalc");
        CHECK(e.line() > 1);
    }

    // identity over an undeclared token
    CHECK_THROWS_WITH_AS(parse_calculus("calculus \"x\"\nrelations a\nidentity q\n"
                                        "converse\na (a)\ncomposition\na a (a)\n"),
                         doctest::Contains("unknown relation"), ParseError);
    // duplicate relation name
    CHECK_THROWS_WITH_AS(parse_calculus("calculus \"x\"\nrelations a a\n"),
                         doctest::Contains("duplicate relation name"), ParseError);
    // empty base list
    CHECK_THROWS_WITH_AS(parse_calculus("calculus \"x\"\nrelations\n"),
                         doctest::Contains("empty base-relation list"), ParseError);
    // duplicate table cell
    CHECK_THROWS_WITH_AS(
        parse_calculus("calculus \"x\"\nrelations a b\nconverse\na (a)\nb (b)\n"
                       "composition\na a (a)\na a (a)\na b (b)\nb a (b)\nb b (b)\n"),
        doctest::Contains("duplicate composition entry"), ParseError);
    // unknown token inside a cell
    CHECK_THROWS_WITH_AS(parse_calculus("calculus \"x\"\nrelations a\nconverse\na (b)\n"),
                         doctest::Contains("unknown relation"), ParseError);
}

TEST_CASE("identity variants: none, bare token, token set") {
    const char* base = "calculus \"x\"\nrelations a b\n%s"
                       "converse\na (a)\nb (b)\n"
                       "composition\na a (a)\na b (b)\nb a (b)\nb b (a b)\n";
    char text[512];

    std::snprintf(text, sizeof text, base, "identity none\n");
    const CalculusSpec none = parse_calculus(text);
    CHECK_FALSE(none.identity().has_value());
    CHECK(parse_calculus(serialize_calculus(none)) == none);

    std::snprintf(text, sizeof text, base, "identity a\n");
    const CalculusSpec bare = parse_calculus(text);
    REQUIRE(bare.identity().has_value());
    CHECK(*bare.identity() == Relation::singleton(2, 0));

    std::snprintf(text, sizeof text, base, "identity (a b)\n");
    const CalculusSpec multi = parse_calculus(text);
    REQUIRE(multi.identity().has_value());
    CHECK(multi.identity()->count() == 2);
    CHECK(parse_calculus(serialize_calculus(multi)) == multi);

    // the identity line may be omitted entirely
    std::snprintf(text, sizeof text, base, "");
    CHECK_FALSE(parse_calculus(text).identity().has_value());

    std::snprintf(text, sizeof text, base, "identity ()\n");
    CHECK_THROWS_WITH_AS(parse_calculus(text), doctest::Contains("identity is empty"),
                         ParseError);
}

TEST_CASE("model parsing") {
    const CalculusSpec& t1 = *builtin("toy-t1").calc;
    const FiniteModel m = parse_model("universe 0 1\nr1 (0 0) (0 1)\nr2 (1 0) (1 1)\n", t1);
    CHECK(m.universe_size() == 2);
    CHECK(m.phi[1].test(1, 0));
    CHECK(m.phi[1].test(1, 1));
    CHECK_FALSE(m.phi[1].test(0, 1));

    CHECK_THROWS_WITH_AS(parse_model("universe\nr1\nr2\n", t1),
                         doctest::Contains("empty universe"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model("universe 0 1\nr1 (0 2)\nr2 (1 1)\n", t1),
                         doctest::Contains("unknown universe element"), ParseError);
    CHECK_THROWS_WITH_AS(parse_model("universe 0 1\nr1 (0 0)\n", t1),
                         doctest::Contains("no pair set given"), ParseError);

    // round-trip through the serializer
    const FiniteModel& bundled = *builtin("toy-t2").model;
    const CalculusSpec& t2 = *builtin("toy-t2").calc;
    FiniteModel again = parse_model(serialize_model(bundled, t2), t2);
    CHECK(again.universe == bundled.universe);
    CHECK(again.phi == bundled.phi);
}

TEST_CASE("network parsing") {
    const CalculusSpec& pc = *builtin("point-calculus").calc;
    const ConstraintNetwork net = parse_network("network 3\n0 (<) 1\n1 (<) 2\n", pc);
    CHECK(net.var_count == 3);
    CHECK(net.at(0, 1) == Relation::singleton(3, *pc.index_of("<")));
    CHECK(net.at(0, 2).is_full());
    CHECK(net.at(1, 0).is_full());

    // duplicate constraints on one ordered pair intersect
    const ConstraintNetwork dup = parse_network("network 2\n0 (< =) 1\n0 (= >) 1\n", pc);
    CHECK(dup.at(0, 1) == Relation::singleton(3, *pc.index_of("=")));

    // an empty constraint parses; the reasoner reports the inconsistency
    const ConstraintNetwork empty = parse_network("network 2\n0 () 1\n", pc);
    CHECK(empty.at(0, 1).none());

    CHECK_THROWS_WITH_AS(parse_network("network 2\n0 (<) 5\n", pc),
                         doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_network("network 2\n0 (<<>>) 1\n", pc),
                         doctest::Contains("unknown relation"), ParseError);
}

TEST_CASE("builtin catalog") {
    CHECK(builtin("allen").calc->size() == 13);
    CHECK(builtin("rcc8").calc->size() == 8);
    CHECK(builtin("rcc5").calc->size() == 5);
    CHECK(builtin("point-calculus").calc->size() == 3);
    CHECK(builtin("toy-t2").calc->size() == 4);

    // toy-t2 model pins phi(r1) = {(0,0)}
    const FiniteModel& t2m = *builtin("toy-t2").model;
    CHECK(t2m.phi[0].count() == 1);
    CHECK(t2m.phi[0].test(0, 0));

    // repaired rcc8 table: NTPPi <> NTPP does not contain EC
    const CalculusSpec& rcc8 = *builtin("rcc8").calc;
    const Relation cell = rcc8.cell(*rcc8.index_of("NTPPi"), *rcc8.index_of("NTPP"));
    CHECK_FALSE(cell.test(*rcc8.index_of("EC")));
    CHECK(cell.count() == 6);

    CHECK_THROWS_WITH_AS(builtin("no-such-calculus"), doctest::Contains("available:"),
                         std::invalid_argument);

    std::string owner;
    CHECK(builtin_model("pc-0-3", &owner) != nullptr);
    CHECK(owner == "point-calculus");
    CHECK(builtin_model("nope") == nullptr);
}

TEST_CASE("json reports are byte deterministic") {
    const CalculusSpec& t2 = *builtin("toy-t2").calc;
    const AxiomReport report = analyze(t2);
    const std::string a = emit_report_json(report, t2);
    const std::string b = emit_report_json(analyze(t2), t2);
    CHECK(a == b);

    // axioms without violations serialize an empty samples array
    CHECK(a.find("\"samples\": []") != std::string::npos);
    CHECK(a.find("\"calculus\": \"toy-t2\"") != std::string::npos);
}
