#pragma once

#include <string>

#include <json.hpp>

#include "qsr/aclosure.hpp"
#include "qsr/axioms.hpp"
#include "qsr/calculus.hpp"
#include "qsr/metrics.hpp"
#include "qsr/model_checker.hpp"

namespace qsr {

// All report serialization uses ordered_json: insertion order is preserved,
// so output is byte-deterministic for identical inputs.
using Json = nlohmann::ordered_json;

inline Json witness_json(const Witness& w, const CalculusSpec& calc) {
    Json args = Json::array();
    for (const auto& rel : w.args) {
        if (rel.count() == 1)
            args.push_back(calc.base_name(rel.members().front()));
        else
            args.push_back(calc.tokens(rel));
    }
    return Json{{"args", args}};
}

inline Json to_json(const AxiomReport& report, const CalculusSpec& calc) {
    Json axioms = Json::array();
    for (const auto& r : report.axioms) {
        Json entry;
        entry["id"] = axiom_name(r.axiom);
        entry["status"] = status_name(r.status);
        if (r.status == AxiomStatus::Inapplicable)
            entry["holds"] = nullptr;
        else
            entry["holds"] = r.status == AxiomStatus::Holds;
        entry["violations"] = r.violations;
        entry["tested"] = r.tested;
        entry["percent"] = r.percent_rounded();
        Json samples = Json::array();
        for (const auto& w : r.samples) samples.push_back(witness_json(w, calc));
        entry["samples"] = samples;
        axioms.push_back(std::move(entry));
    }
    return Json{{"calculus", report.calculus},
                {"axioms", axioms},
                {"classification", report.classes}};
}

inline Json to_json(const MetricsSeries& series) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < series.information.size(); ++k) {
        rows.push_back(Json{{"k", k},
                            {"I_percent", 100.0 * series.information[k]},
                            {"O_percent", 100.0 * series.overlap[k]}});
    }
    return Json{{"calculus", series.calculus},
                {"series", rows},
                {"stop_reason", stop_reason_name(series.stop_reason)}};
}

inline Json to_json(const ClosureResult& result, const CalculusSpec& calc) {
    Json matrix = Json::array();
    for (std::size_t i = 0; i < result.network.var_count; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < result.network.var_count; ++j) {
            Json cell = Json::array();
            result.network.at(i, j).for_each(
                [&](std::size_t b) { cell.push_back(calc.base_name(b)); });
            row.push_back(std::move(cell));
        }
        matrix.push_back(std::move(row));
    }
    Json out;
    out["calculus"] = calc.name();
    out["status"] = result.status == ClosureStatus::Closed ? "closed" : "inconsistent";
    out["fixpoint"] = result.fixpoint;
    out["iterations"] = result.iterations;
    if (result.witness)
        out["witness"] = Json::array({result.witness->first, result.witness->second});
    else
        out["witness"] = nullptr;
    out["warnings"] = result.warnings;
    out["matrix"] = matrix;
    return out;
}

inline Json to_json(const SchemeVerdict& v) {
    return Json{{"jepd", v.jepd},
                {"nonEmptyBases", v.non_empty_bases},
                {"hasIdentity", v.has_identity},
                {"converseClosed", v.converse_closed},
                {"serial", v.serial},
                {"abstractPartitionScheme", v.abstract_partition_scheme()},
                {"partitionScheme", v.partition_scheme()}};
}

inline Json to_json(const StrengthVerdict& v) {
    return Json{{"converse", strength_name(v.converse)},
                {"composition", strength_name(v.composition)}};
}

template <typename T, typename... Extra>
std::string emit_report_json(const T& value, const Extra&... extra) {
    return to_json(value, extra...).dump(2) + "\n";
}

} // namespace qsr
