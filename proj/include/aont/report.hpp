#pragma once

#include <string>

#include "json.hpp"

#include "aont/array.hpp"
#include "aont/bounds.hpp"
#include "aont/linear.hpp"
#include "aont/search.hpp"

namespace aont {

// Stable JSON shapes for the CLI and the Python bindings.

inline nlohmann::json to_json(const AontParams& p) {
    return {{"ti", p.ti}, {"to", p.to}, {"s", p.s}, {"q", p.q}};
}

inline nlohmann::json to_json(const VerificationReport& r, const AontParams& p) {
    nlohmann::json j;
    j["params"] = to_json(p);
    j["verdict"] = r.pass ? "pass" : "fail";
    j["invertible"] = r.invertible;
    if (r.witness)
        j["witness"] = {{"rows", r.witness->rows}, {"cols", r.witness->cols}, {"rank", r.witness->rank}};
    else
        j["witness"] = nullptr;
    j["checked"] = r.submatrices_checked;
    return j;
}

inline nlohmann::json to_json(const ColumnSet& d) {
    return {{"input_cols", d.input_cols}, {"output_cols", d.output_cols}};
}

inline nlohmann::json to_json(const ArrayVerdict& v) {
    nlohmann::json j;
    j["verdict"] = v.pass ? "pass" : "fail";
    j["witness"] = v.witness ? to_json(*v.witness) : nlohmann::json(nullptr);
    j["checked"] = v.checked;
    return j;
}

inline const char* bias_verdict_name(BiasVerdict v) {
    switch (v) {
    case BiasVerdict::unbiased: return "unbiased";
    case BiasVerdict::covering: return "covering";
    default: return "neither";
    }
}

inline nlohmann::json to_json(const BiasReport& r) {
    nlohmann::json j;
    j["verdict"] = bias_verdict_name(r.verdict);
    j["column_set"] = to_json(r.column_set);
    j["expected"] = r.expected;
    j["histogram"] = r.histogram.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.histogram);
    return j;
}

inline nlohmann::json to_json(const BoundResult& b) {
    nlohmann::json j;
    j["ti"] = b.ti;
    j["to"] = b.to;
    j["q"] = b.q;
    j["finite"] = b.finite;
    if (b.finite) j["value"] = b.value;
    j["source"] = b.source;
    return j;
}

inline nlohmann::json to_json(const KnownRange& r) {
    return {{"to", r.to},       {"q", r.q},
            {"lower", r.lower}, {"lower_source", r.lower_source},
            {"upper", r.upper}, {"upper_source", r.upper_source},
            {"exact", r.exact}};
}

inline const char* status_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    default: return "budget_exceeded";
    }
}

inline nlohmann::json to_json(const SearchOutcome& o, const AontParams& p) {
    nlohmann::json j;
    j["params"] = to_json(p);
    j["status"] = status_name(o.status);
    j["nodes_explored"] = o.nodes_explored;
    j["elapsed_seconds"] = o.elapsed_seconds;
    if (!o.note.empty()) j["note"] = o.note;
    if (o.frontier)
        j["frontier"] = {{"largest_found", o.frontier->largest_found},
                         {"smallest_impossible", o.frontier->smallest_impossible},
                         {"exact", o.frontier->exact}};
    j["matrix"] = o.matrix ? nlohmann::json(matrix_to_string(*o.matrix)) : nlohmann::json(nullptr);
    return j;
}

} // namespace aont
