#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsr/calculus.hpp"
#include "qsr/io.hpp"
#include "qsr/model.hpp"

namespace qsr {

// Bundled reference calculi and fixtures. Definitions are stored as .qcalc /
// .qmodel text and run through the regular parser, so the catalog and the
// file formats can never drift apart.
namespace builtin_data {

inline constexpr const char* point_calculus = R"qcalc(
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
)qcalc";

// Integer points 0..3 with the natural order.
inline constexpr const char* point_calculus_model = R"qmodel(
universe 0 1 2 3
< (0 1) (0 2) (0 3) (1 2) (1 3) (2 3)
= (0 0) (1 1) (2 2) (3 3)
> (1 0) (2 0) (3 0) (2 1) (3 1) (3 2)
)qmodel";

inline constexpr const char* allen = R"qcalc(
calculus "allen"
relations b bi d di o oi m mi s si f fi eq
identity eq
converse
b (bi)
bi (b)
d (di)
di (d)
o (oi)
oi (o)
m (mi)
mi (m)
s (si)
si (s)
f (fi)
fi (f)
eq (eq)
composition
b b (b)
b bi (b bi d di o oi m mi s si f fi eq)
b d (b d o m s)
b di (b)
b o (b)
b oi (b d o m s)
b m (b)
b mi (b d o m s)
b s (b)
b si (b)
b f (b d o m s)
b fi (b)
b eq (b)
bi b (b bi d di o oi m mi s si f fi eq)
bi bi (bi)
bi d (bi d oi mi f)
bi di (bi)
bi o (bi d oi mi f)
bi oi (bi)
bi m (bi d oi mi f)
bi mi (bi)
bi s (bi d oi mi f)
bi si (bi)
bi f (bi)
bi fi (bi)
bi eq (bi)
d b (b)
d bi (bi)
d d (d)
d di (b bi d di o oi m mi s si f fi eq)
d o (b d o m s)
d oi (bi d oi mi f)
d m (b)
d mi (bi)
d s (d)
d si (bi d oi mi f)
d f (d)
d fi (b d o m s)
d eq (d)
di b (b di o m fi)
di bi (bi di oi mi si)
di d (d di o oi s si f fi eq)
di di (di)
di o (di o fi)
di oi (di oi si)
di m (di o fi)
di mi (di oi si)
di s (di o fi)
di si (di)
di f (di oi si)
di fi (di)
di eq (di)
o b (b)
o bi (bi di oi mi si)
o d (d o s)
o di (b di o m fi)
o o (b o m)
o oi (d di o oi s si f fi eq)
o m (b)
o mi (di oi si)
o s (o)
o si (di o fi)
o f (d o s)
o fi (b o m)
o eq (o)
oi b (b di o m fi)
oi bi (bi)
oi d (d oi f)
oi di (bi di oi mi si)
oi o (d di o oi s si f fi eq)
oi oi (bi oi mi)
oi m (di o fi)
oi mi (bi)
oi s (d oi f)
oi si (bi oi mi)
oi f (oi)
oi fi (di oi si)
oi eq (oi)
m b (b)
m bi (bi di oi mi si)
m d (d o s)
m di (b)
m o (b)
m oi (d o s)
m m (b)
m mi (f fi eq)
m s (m)
m si (m)
m f (d o s)
m fi (b)
m eq (m)
mi b (b di o m fi)
mi bi (bi)
mi d (d oi f)
mi di (bi)
mi o (d oi f)
mi oi (bi)
mi m (s si eq)
mi mi (bi)
mi s (d oi f)
mi si (bi)
mi f (mi)
mi fi (mi)
mi eq (mi)
s b (b)
s bi (bi)
s d (d)
s di (b di o m fi)
s o (b o m)
s oi (d oi f)
s m (b)
s mi (mi)
s s (s)
s si (s si eq)
s f (d)
s fi (b o m)
s eq (s)
si b (b di o m fi)
si bi (bi)
si d (d oi f)
si di (di)
si o (di o fi)
si oi (oi)
si m (di o fi)
si mi (mi)
si s (s si eq)
si si (si)
si f (oi)
si fi (di)
si eq (si)
f b (b)
f bi (bi)
f d (d)
f di (bi di oi mi si)
f o (d o s)
f oi (bi oi mi)
f m (m)
f mi (bi)
f s (d)
f si (bi oi mi)
f f (f)
f fi (f fi eq)
f eq (f)
fi b (b)
fi bi (bi di oi mi si)
fi d (d o s)
fi di (di)
fi o (o)
fi oi (di oi si)
fi m (m)
fi mi (di oi si)
fi s (o)
fi si (di)
fi f (f fi eq)
fi fi (fi)
fi eq (fi)
eq b (b)
eq bi (bi)
eq d (d)
eq di (di)
eq o (o)
eq oi (oi)
eq m (m)
eq mi (mi)
eq s (s)
eq si (si)
eq f (f)
eq fi (fi)
eq eq (eq)
)qcalc";

inline constexpr const char* rcc5 = R"qcalc(
calculus "rcc5"
relations DR PO PP PPi EQ
identity EQ
converse
DR (DR)
PO (PO)
PP (PPi)
PPi (PP)
EQ (EQ)
composition
DR DR (DR PO PP PPi EQ)
DR PO (DR PO PP)
DR PP (DR PO PP)
DR PPi (DR)
DR EQ (DR)
PO DR (DR PO PPi)
PO PO (DR PO PP PPi EQ)
PO PP (PO PP)
PO PPi (DR PO PPi)
PO EQ (PO)
PP DR (DR)
PP PO (DR PO PP)
PP PP (PP)
PP PPi (DR PO PP PPi EQ)
PP EQ (PP)
PPi DR (DR PO PPi)
PPi PO (PO PPi)
PPi PP (PO PP PPi EQ)
PPi PPi (PPi)
PPi EQ (PPi)
EQ DR (DR)
EQ PO (PO)
EQ PP (PP)
EQ PPi (PPi)
EQ EQ (EQ)
)qcalc";

// The NTPPi NTPP cell carries the repaired entry (no EC).
inline constexpr const char* rcc8 = R"qcalc(
calculus "rcc8"
relations DC EC PO TPP NTPP TPPi NTPPi EQ
identity EQ
converse
DC (DC)
EC (EC)
PO (PO)
TPP (TPPi)
NTPP (NTPPi)
TPPi (TPP)
NTPPi (NTPP)
EQ (EQ)
composition
DC DC (DC EC PO TPP NTPP TPPi NTPPi EQ)
DC EC (DC EC PO TPP NTPP)
DC PO (DC EC PO TPP NTPP)
DC TPP (DC EC PO TPP NTPP)
DC NTPP (DC EC PO TPP NTPP)
DC TPPi (DC)
DC NTPPi (DC)
DC EQ (DC)
EC DC (DC EC PO TPPi NTPPi)
EC EC (DC EC PO TPP TPPi EQ)
EC PO (DC EC PO TPP NTPP)
EC TPP (EC PO TPP NTPP)
EC NTPP (PO TPP NTPP)
EC TPPi (DC EC)
EC NTPPi (DC)
EC EQ (EC)
PO DC (DC EC PO TPPi NTPPi)
PO EC (DC EC PO TPPi NTPPi)
PO PO (DC EC PO TPP NTPP TPPi NTPPi EQ)
PO TPP (PO TPP NTPP)
PO NTPP (PO TPP NTPP)
PO TPPi (DC EC PO TPPi NTPPi)
PO NTPPi (DC EC PO TPPi NTPPi)
PO EQ (PO)
TPP DC (DC)
TPP EC (DC EC)
TPP PO (DC EC PO TPP NTPP)
TPP TPP (TPP NTPP)
TPP NTPP (NTPP)
TPP TPPi (DC EC PO TPP TPPi EQ)
TPP NTPPi (DC EC PO TPPi NTPPi)
TPP EQ (TPP)
NTPP DC (DC)
NTPP EC (DC)
NTPP PO (DC EC PO TPP NTPP)
NTPP TPP (NTPP)
NTPP NTPP (NTPP)
NTPP TPPi (DC EC PO TPP NTPP)
NTPP NTPPi (DC EC PO TPP NTPP TPPi NTPPi EQ)
NTPP EQ (NTPP)
TPPi DC (DC EC PO TPPi NTPPi)
TPPi EC (EC PO TPPi NTPPi)
TPPi PO (PO TPPi NTPPi)
TPPi TPP (PO TPP TPPi EQ)
TPPi NTPP (PO TPP NTPP)
TPPi TPPi (TPPi NTPPi)
TPPi NTPPi (NTPPi)
TPPi EQ (TPPi)
NTPPi DC (DC EC PO TPPi NTPPi)
NTPPi EC (PO TPPi NTPPi)
NTPPi PO (PO TPPi NTPPi)
NTPPi TPP (PO TPPi NTPPi)
NTPPi NTPP (PO TPP NTPP TPPi NTPPi EQ)
NTPPi TPPi (NTPPi)
NTPPi NTPPi (NTPPi)
NTPPi EQ (NTPPi)
EQ DC (DC)
EQ EC (EC)
EQ PO (PO)
EQ TPP (TPP)
EQ NTPP (NTPP)
EQ TPPi (TPPi)
EQ NTPPi (NTPPi)
EQ EQ (EQ)
)qcalc";

// Two-relation fixture with abstract (not weak) converse whose tables break
// the one-sided identity and involution inclusions.
inline constexpr const char* toy_t1 = R"qcalc(
calculus "toy-t1"
relations r1 r2
identity r1
converse
r1 (r1 r2)
r2 (r1 r2)
composition
r1 r1 (r1 r2)
r1 r2 (r1)
r2 r1 (r1 r2)
r2 r2 (r2)
)qcalc";

inline constexpr const char* toy_t1_model = R"qmodel(
universe 0 1
r1 (0 0) (0 1)
r2 (1 0) (1 1)
)qmodel";

// Four-relation fixture over two elements; composition is deliberately
// coarse on two cells, breaking associativity, RA9/RA10 and the Peircean
// law in both directions.
inline constexpr const char* toy_t2 = R"qcalc(
calculus "toy-t2"
relations r1 r2 r3 r4
identity r1
converse
r1 (r1)
r2 (r2)
r3 (r4)
r4 (r3)
composition
r1 r1 (r1)
r1 r2 ()
r1 r3 (r3)
r1 r4 ()
r2 r1 ()
r2 r2 (r2)
r2 r3 ()
r2 r4 (r4)
r3 r1 ()
r3 r2 (r3)
r3 r3 ()
r3 r4 (r1 r4)
r4 r1 (r1 r4)
r4 r2 ()
r4 r3 (r2)
r4 r4 ()
)qcalc";

inline constexpr const char* toy_t2_model = R"qmodel(
universe 0 1
r1 (0 0)
r2 (1 1)
r3 (0 1)
r4 (1 0)
)qmodel";

// A calculus whose composition is only abstract (the r2 r2 cell covers the
// minimal answer strictly) yet which satisfies every relation algebra axiom.
inline constexpr const char* toy_remark = R"qcalc(
calculus "toy-remark"
relations r1 r2
identity r1
converse
r1 (r1)
r2 (r2)
composition
r1 r1 (r1)
r1 r2 (r2)
r2 r1 (r2)
r2 r2 (r1 r2)
)qcalc";

inline constexpr const char* toy_remark_model = R"qmodel(
universe 0 1
r1 (0 0) (1 1)
r2 (0 1) (1 0)
)qmodel";

} // namespace builtin_data

struct BuiltinEntry {
    const CalculusSpec* calc = nullptr;
    const FiniteModel* model = nullptr;  // null when no finite model is bundled
};

namespace detail {

struct Catalog {
    std::vector<std::string> names;
    std::map<std::string, CalculusSpec> calculi;
    std::map<std::string, FiniteModel> models;        // keyed by calculus name
    std::map<std::string, std::string> model_names;   // model alias -> calculus name

    Catalog() {
        auto add = [&](const char* qcalc, const char* qmodel, const std::string& model_alias) {
            CalculusSpec calc = parse_calculus(qcalc, "<builtin>");
            const std::string name = calc.name();
            names.push_back(name);
            if (qmodel) {
                FiniteModel model = parse_model(qmodel, calc, "<builtin>");
                model.name = model_alias;
                models.emplace(name, std::move(model));
                model_names.emplace(model_alias, name);
            }
            calculi.emplace(name, std::move(calc));
        };
        add(builtin_data::point_calculus, builtin_data::point_calculus_model, "pc-0-3");
        add(builtin_data::allen, nullptr, "");
        add(builtin_data::rcc5, nullptr, "");
        add(builtin_data::rcc8, nullptr, "");
        add(builtin_data::toy_t1, builtin_data::toy_t1_model, "toy-t1");
        add(builtin_data::toy_t2, builtin_data::toy_t2_model, "toy-t2");
        add(builtin_data::toy_remark, builtin_data::toy_remark_model, "toy-remark");
    }
};

inline const Catalog& catalog() {
    static const Catalog instance;
    return instance;
}

} // namespace detail

inline const std::vector<std::string>& builtin_names() { return detail::catalog().names; }

// Catalog lookup; unknown names raise an error listing what is available.
inline BuiltinEntry builtin(const std::string& name) {
    const auto& cat = detail::catalog();
    const auto it = cat.calculi.find(name);
    if (it == cat.calculi.end()) {
        std::string msg = "unknown builtin calculus '" + name + "'; available:";
        for (const auto& n : cat.names) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    BuiltinEntry entry;
    entry.calc = &it->second;
    const auto mit = cat.models.find(name);
    if (mit != cat.models.end()) entry.model = &mit->second;
    return entry;
}

// Resolves a bundled model by its alias ("pc-0-3", "toy-t1", ...). Returns
// the owning calculus name through the out parameter.
inline const FiniteModel* builtin_model(const std::string& alias, std::string* calculus_name = nullptr) {
    const auto& cat = detail::catalog();
    const auto it = cat.model_names.find(alias);
    if (it == cat.model_names.end()) return nullptr;
    if (calculus_name) *calculus_name = it->second;
    return &cat.models.at(it->second);
}

} // namespace qsr
