// Command-line front end: verify, transform, invert, construct, bounds,
// search, catalog, array-check.
//
// Exit codes: 0 affirmative verdict / success, 1 negative verdict (failed
// verification, nothing found, no such entry), 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aont/array.hpp"
#include "aont/bounds.hpp"
#include "aont/error.hpp"
#include "aont/linear.hpp"
#include "aont/parallel.hpp"
#include "aont/report.hpp"
#include "aont/search.hpp"

namespace {

using aont::Errc;
using Json = nlohmann::json;

std::vector<aont::Fe> parse_vector(const std::string& csv) {
    std::vector<aont::Fe> out;
    std::string tok;
    std::istringstream is(csv);
    while (std::getline(is, tok, ',')) {
        try {
            out.push_back(static_cast<aont::Fe>(std::stoul(tok)));
        } catch (const std::exception&) {
            aont::raise(Errc::bad_format, "bad vector element '" + tok + "'");
        }
    }
    if (out.empty()) aont::raise(Errc::bad_format, "empty vector");
    return out;
}

std::vector<std::uint32_t> parse_u32_list(const std::string& csv) {
    std::vector<std::uint32_t> out;
    for (auto v : parse_vector(csv)) out.push_back(v);
    return out;
}

std::string join(const std::vector<aont::Fe>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

struct VerifyArgs {
    std::string matrix_path;
    std::uint32_t ti = 0, to = 0;
    unsigned workers = aont::default_workers();
    bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
    aont::MatrixGF m = aont::load_matrix(a.matrix_path);
    auto rep = aont::verify_linear_aont(m, a.ti, a.to, a.workers);
    const aont::AontParams p{a.ti, a.to, m.n_rows, m.field->q};
    if (a.json) {
        std::cout << aont::to_json(rep, p).dump(2) << "\n";
    } else if (rep.pass) {
        std::cout << "pass: every " << a.to << "x" << a.ti << " submatrix has rank " << a.ti << " ("
                  << rep.submatrices_checked << " submatrices)\n";
    } else if (!rep.invertible) {
        std::cout << "fail: matrix is singular\n";
    } else {
        const auto& w = *rep.witness;
        std::cout << "fail: rows {";
        for (std::size_t i = 0; i < w.rows.size(); ++i) std::cout << (i ? "," : "") << w.rows[i];
        std::cout << "} cols {";
        for (std::size_t i = 0; i < w.cols.size(); ++i) std::cout << (i ? "," : "") << w.cols[i];
        std::cout << "} has rank " << w.rank << " < " << a.ti << "\n";
    }
    return rep.pass ? 0 : 1;
}

struct VecArgs {
    std::string matrix_path;
    std::string input;
    bool json = false;
};

int cmd_transform(const VecArgs& a, bool forward) {
    aont::MatrixGF m = aont::load_matrix(a.matrix_path);
    if (!m.square()) aont::raise(Errc::not_square, "matrix must be square");
    auto x = parse_vector(a.input);
    for (auto v : x)
        if (v >= m.field->q) aont::raise(Errc::bad_format, "vector element out of field range");
    std::vector<aont::Fe> y;
    if (forward) {
        auto inv = aont::invert(m);
        if (!inv) aont::raise(Errc::bad_params, "matrix is singular; transform undefined");
        y = aont::row_vec_mul(x, *inv);
    } else {
        y = aont::row_vec_mul(x, m);
    }
    if (a.json)
        std::cout << Json{{"input", x}, {"output", y}}.dump(2) << "\n";
    else
        std::cout << join(y) << "\n";
    return 0;
}

struct ConstructArgs {
    std::string kind;
    std::uint32_t s = 0, t = 1, q = 0;
    std::string out_path;
    bool json = false;
};

int cmd_construct(const ConstructArgs& a) {
    std::optional<aont::LinearAont> built;
    if (a.kind == "even-bastion")
        built = aont::construct_even_bastion(a.s);
    else if (a.kind == "odd-bastion")
        built = aont::construct_odd_bastion(a.s);
    else if (a.kind == "bs")
        built = aont::construct_bs(a.s);
    else if (a.kind == "even-2s1")
        built = aont::construct_even_2s1(a.s);
    else if (a.kind == "cauchy")
        built = aont::construct_cauchy(a.t, a.s, aont::build_field_q(a.q));
    else
        aont::raise(Errc::bad_params, "unknown construction kind '" + a.kind + "'");

    if (!a.out_path.empty()) aont::save_matrix(built->m, a.out_path);
    if (a.json) {
        Json j;
        j["params"] = aont::to_json(built->params);
        j["matrix"] = aont::matrix_to_string(built->m);
        if (!a.out_path.empty()) j["written_to"] = a.out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "(" << built->params.ti << "," << built->params.to << "," << built->params.s
                  << "," << built->params.q << ") certified\n"
                  << aont::matrix_to_string(built->m);
    }
    return 0;
}

struct BoundsArgs {
    std::uint32_t ti = 0, to = 0, q = 0;
    bool table1 = false, table2 = false;
    bool json = false;
};

int cmd_bounds(const BoundsArgs& a) {
    if (a.table1) {
        const auto rows = aont::bound_table_rows();
        if (a.json) {
            Json out = Json::array();
            for (const auto& r : rows) {
                std::string range = r.to_max == 0 ? ">= " + std::to_string(r.to_min)
                                    : r.to_min == r.to_max
                                        ? std::to_string(r.to_min)
                                        : std::to_string(r.to_min) + ".." + std::to_string(r.to_max);
                Json vals = Json::array();
                const std::uint32_t hi = r.to_max ? r.to_max : r.to_min + 5;
                for (std::uint32_t to = r.to_min; to <= hi; ++to)
                    vals.push_back({{"to", to},
                                    {"published", aont::published_bound_value(r, to)},
                                    {"theorem", aont::theorem_bound_value(r, to)}});
                out.push_back({{"ti", r.ti},
                               {"q", r.q},
                               {"to_range", range},
                               {"justification", r.justification},
                               {"consistent", r.consistent},
                               {"values", vals}});
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "| ti | q | to | published bound | source |\n|---|---|---|---|---|\n";
            for (const auto& r : rows) {
                std::string range = r.to_max == 0 ? ">= " + std::to_string(r.to_min)
                                    : r.to_min == r.to_max
                                        ? std::to_string(r.to_min)
                                        : std::to_string(r.to_min) + ".." + std::to_string(r.to_max);
                std::string form;
                if (r.den == 1)
                    form = std::to_string(r.a) + "*to" + (r.b ? (r.b > 0 ? "+" : "") + std::to_string(r.b) : "");
                else
                    form = "(" + std::to_string(r.a) + "*to" + (r.b > 0 ? "+" : "") + std::to_string(r.b) +
                           ")/" + std::to_string(r.den);
                std::cout << "| " << r.ti << " | " << r.q << " | " << range << " | " << form << " | "
                          << r.justification << (r.consistent ? "" : " (published value; theorem is tighter)")
                          << " |\n";
            }
        }
        return 0;
    }
    if (a.table2) {
        const auto rows = aont::known_range_table();
        if (a.json) {
            Json out = Json::array();
            for (const auto& r : rows) out.push_back(aont::to_json(r));
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "| to | q | lower | lower source | upper | upper source |\n"
                      << "|---|---|---|---|---|---|\n";
            for (const auto& r : rows)
                std::cout << "| " << r.to << " | " << r.q << " | " << r.lower << " | " << r.lower_source
                          << " | " << r.upper << " | " << r.upper_source << " |\n";
        }
        return 0;
    }

    Json j;
    std::vector<aont::BoundResult> bounds;
    if (a.ti >= 2) bounds.push_back(aont::bound_general(a.ti, a.to, a.q));
    if (a.ti == 2) bounds.push_back(aont::bound_ti2(a.to, a.q));
    const aont::BoundResult best = aont::best_upper_bound(a.ti, a.to, a.q);
    if (a.json) {
        j["bounds"] = Json::array();
        for (const auto& b : bounds) j["bounds"].push_back(aont::to_json(b));
        j["best"] = aont::to_json(best);
        try {
            if (a.ti == 2) j["known_range"] = aont::to_json(aont::known_range(a.to, a.q));
        } catch (const aont::Error&) {
            j["known_range"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& b : bounds)
            std::cout << "upper bound " << b.value << "  [" << b.source << "]\n";
        if (best.finite)
            std::cout << "best known upper bound " << best.value << "  [" << best.source << "]\n";
        else
            std::cout << best.source << "\n";
        if (a.ti == 2) {
            try {
                const auto r = aont::known_range(a.to, a.q);
                std::cout << "known range: " << r.lower << " <= max s <= " << r.upper
                          << (r.exact ? " (exact)" : "") << "  [" << r.lower_source << "; "
                          << r.upper_source << "]\n";
            } catch (const aont::Error&) {
            }
        }
    }
    return 0;
}

struct SearchArgs {
    std::uint32_t ti = 0, to = 0, s = 0, q = 0;
    std::string strategy = "exhaustive";
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0.0;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    std::string checkpoint, out_path;
    bool no_bound_prune = false;
    std::uint32_t compute_s_cap = 0;
    bool json = false;
};

int cmd_search(const SearchArgs& a) {
    if (!a.compute_s_cap && a.s == 0)
        aont::raise(Errc::bad_params, "--s is required unless --compute-s is given");
    aont::SearchConfig cfg;
    cfg.params = aont::make_params(a.ti, a.to, a.compute_s_cap ? a.to : a.s, a.q);
    if (a.strategy == "exhaustive")
        cfg.strategy = aont::SearchStrategy::exhaustive;
    else if (a.strategy == "randomized")
        cfg.strategy = aont::SearchStrategy::randomized;
    else if (a.strategy == "hybrid")
        cfg.strategy = aont::SearchStrategy::hybrid;
    else
        aont::raise(Errc::bad_params, "unknown strategy '" + a.strategy + "'");
    cfg.budget.max_nodes = a.budget_nodes;
    cfg.budget.max_seconds = a.budget_secs;
    cfg.workers = a.workers;
    cfg.seed = a.seed;
    cfg.checkpoint_path = a.checkpoint;
    cfg.use_bound_pruning = !a.no_bound_prune;

    aont::SearchOutcome outcome = a.compute_s_cap
                                      ? aont::compute_S(a.ti, a.to, a.q, a.compute_s_cap, cfg)
                                      : aont::search_linear_aont(cfg);
    if (outcome.matrix && !a.out_path.empty()) aont::save_matrix(*outcome.matrix, a.out_path);
    if (a.json) {
        Json j = aont::to_json(outcome, cfg.params);
        if (outcome.matrix && !a.out_path.empty()) j["written_to"] = a.out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status: " << aont::status_name(outcome.status) << "  nodes: " << outcome.nodes_explored
                  << "  elapsed: " << outcome.elapsed_seconds << "s\n";
        if (!outcome.note.empty()) std::cout << "note: " << outcome.note << "\n";
        if (outcome.frontier)
            std::cout << "frontier: largest found " << outcome.frontier->largest_found
                      << ", smallest impossible " << outcome.frontier->smallest_impossible
                      << (outcome.frontier->exact ? " (exact)" : "") << "\n";
        if (outcome.matrix) std::cout << aont::matrix_to_string(*outcome.matrix);
    }
    return outcome.status == aont::SearchStatus::found ||
                   (outcome.frontier && outcome.frontier->largest_found > 0)
               ? 0
               : 1;
}

struct CatalogArgs {
    std::string params;
    std::string out_path;
    bool json = false;
};

int cmd_catalog(const CatalogArgs& a) {
    const auto& entries = aont::catalog(); // re-verifies on first use
    if (!a.params.empty()) {
        const auto p = parse_u32_list(a.params);
        if (p.size() != 4) aont::raise(Errc::bad_params, "--params expects ti,to,s,q");
        auto hit = aont::catalog_lookup(p[0], p[1], p[2], p[3]);
        if (!hit) {
            std::cerr << "no catalog entry for (" << a.params << ")\n";
            return 1;
        }
        if (!a.out_path.empty()) aont::save_matrix(hit->m, a.out_path);
        if (a.json) {
            Json j;
            j["params"] = aont::to_json(hit->params);
            j["matrix"] = aont::matrix_to_string(hit->m);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << aont::matrix_to_string(hit->m);
        }
        return 0;
    }
    if (a.json) {
        Json j = Json::array();
        for (const auto& e : entries) {
            j.push_back({{"params", aont::to_json(e.params)}, {"verified", true}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << entries.size() << " catalog matrices, all certified:\n";
        for (const auto& e : entries)
            std::cout << "  (" << e.params.ti << "," << e.params.to << "," << e.params.s << ","
                      << e.params.q << ")  " << e.params.s << "x" << e.params.s << " over GF("
                      << e.params.q << ")\n";
    }
    return 0;
}

struct ArrayCheckArgs {
    std::string array_path, matrix_path;
    std::string check = "aont";
    std::uint32_t ti = 0, to = 0, t = 0, t1 = 0, t2 = 0;
    bool swap_io = false;
    std::string hist_cols;
    std::uint64_t row_cap = aont::kDefaultRowCap;
    unsigned workers = aont::default_workers();
    bool json = false;
};

int cmd_array_check(const ArrayCheckArgs& a) {
    if (a.array_path.empty() == a.matrix_path.empty())
        aont::raise(Errc::bad_params, "give exactly one of --array or --matrix");
    aont::ArrayRep arr = [&] {
        if (!a.array_path.empty()) return aont::load_array(a.array_path, a.row_cap);
        // The matrix only needs to be invertible here; the array checks are
        // the judgement, not a precondition.
        const aont::MatrixGF m = aont::load_matrix(a.matrix_path);
        const auto minv = aont::invert(m);
        if (!minv) aont::raise(Errc::bad_params, "matrix is singular; it defines no mapping");
        return aont::build_array(m.field->q, m.n_rows,
                                 [&](std::span<const aont::Fe> x, std::span<aont::Fe> y) {
                                     auto r = aont::row_vec_mul(x, *minv);
                                     std::copy(r.begin(), r.end(), y.begin());
                                 },
                                 a.row_cap);
    }();
    if (a.swap_io) arr = aont::swap_io(arr);

    Json j;
    j["v"] = arr.v;
    j["s"] = arr.s;
    int code = 0;

    if (!a.hist_cols.empty()) {
        aont::ColumnSet d;
        for (auto c : parse_u32_list(a.hist_cols))
            (c < arr.s ? d.input_cols : d.output_cols).push_back(c);
        const auto rep = aont::classify_columns(arr, d, /*want_histogram=*/true);
        if (a.json) {
            j["bias"] = aont::to_json(rep);
        } else {
            std::cout << "columns {" << a.hist_cols << "}: " << aont::bias_verdict_name(rep.verdict)
                      << ", expected " << rep.expected << "\n";
            for (std::size_t i = 0; i < rep.histogram.size(); ++i)
                std::cout << "  tuple " << i << ": " << rep.histogram[i] << "\n";
        }
        code = rep.verdict == aont::BiasVerdict::unbiased ? 0 : 1;
    }

    aont::ArrayVerdict verdict;
    std::string what;
    if (a.check == "aont") {
        verdict = aont::verify_aont_array(arr, a.ti, a.to, a.workers);
        what = "aont(" + std::to_string(a.ti) + "," + std::to_string(a.to) + ")";
    } else if (a.check == "weak") {
        verdict = aont::verify_weak_aont_array(arr, a.ti, a.to, a.workers);
        what = "weak-aont(" + std::to_string(a.ti) + "," + std::to_string(a.to) + ")";
    } else if (a.check == "oa") {
        verdict = aont::is_orthogonal_array(arr, a.t, a.workers);
        what = "oa(" + std::to_string(a.t) + ")";
    } else if (a.check == "soa") {
        verdict = aont::is_split_orthogonal_array(arr, a.t1, a.t2, arr.s, arr.s, a.workers);
        what = "soa(" + std::to_string(a.t1) + "," + std::to_string(a.t2) + ")";
    } else if (a.check == "none") {
        if (a.json) std::cout << j.dump(2) << "\n";
        return code;
    } else {
        aont::raise(Errc::bad_params, "unknown check '" + a.check + "'");
    }

    if (a.json) {
        j["check"] = what;
        j["result"] = aont::to_json(verdict);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << what << ": " << (verdict.pass ? "pass" : "fail") << " (" << verdict.checked
                  << " column sets)\n";
        if (verdict.witness) {
            std::cout << "  witness columns:";
            for (auto c : verdict.witness->input_cols) std::cout << " x" << c;
            for (auto c : verdict.witness->output_cols) std::cout << " y" << (c - arr.s);
            std::cout << "\n";
        }
    }
    return verdict.pass ? code : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear all-or-nothing transform toolkit"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the rank criterion for a matrix file");
    verify->add_option("--matrix", va.matrix_path, "matrix file")->required();
    verify->add_option("--ti", va.ti, "inputs that must stay hidden")->required();
    verify->add_option("--to", va.to, "missing outputs")->required();
    verify->add_option("--workers", va.workers, "worker threads");
    verify->add_flag("--json", va.json, "JSON report");

    VecArgs ta, ia;
    auto* tr = app.add_subcommand("transform", "apply y = x * M^-1");
    tr->add_option("--matrix", ta.matrix_path)->required();
    tr->add_option("--input", ta.input, "comma-separated codes")->required();
    tr->add_flag("--json", ta.json);
    auto* inv = app.add_subcommand("invert", "apply x = y * M");
    inv->add_option("--matrix", ia.matrix_path)->required();
    inv->add_option("--input", ia.input, "comma-separated codes")->required();
    inv->add_flag("--json", ia.json);

    ConstructArgs ca;
    auto* cons = app.add_subcommand("construct", "build a reference construction");
    cons->add_option("--kind", ca.kind, "even-bastion | odd-bastion | bs | even-2s1 | cauchy")
        ->required();
    cons->add_option("--s", ca.s, "size")->required();
    cons->add_option("--t", ca.t, "strength (cauchy)");
    cons->add_option("--q", ca.q, "field order (cauchy)");
    cons->add_option("--out", ca.out_path, "write matrix file");
    cons->add_flag("--json", ca.json);

    BoundsArgs ba;
    auto* bo = app.add_subcommand("bounds", "closed-form and recorded bounds on the maximal size");
    bo->add_option("--ti", ba.ti);
    bo->add_option("--to", ba.to);
    bo->add_option("--q", ba.q);
    bo->add_flag("--table1", ba.table1, "print the evaluated-bounds grid");
    bo->add_flag("--table2", ba.table2, "print the ti=2 known-range table");
    bo->add_flag("--json", ba.json);

    SearchArgs sa;
    auto* se = app.add_subcommand("search", "backtracking search for a certified matrix");
    se->add_option("--ti", sa.ti)->required();
    se->add_option("--to", sa.to)->required();
    se->add_option("--s", sa.s);
    se->add_option("--q", sa.q)->required();
    se->add_option("--strategy", sa.strategy, "exhaustive | randomized | hybrid");
    se->add_option("--budget-nodes", sa.budget_nodes);
    se->add_option("--budget-secs", sa.budget_secs);
    se->add_option("--workers", sa.workers);
    se->add_option("--seed", sa.seed);
    se->add_option("--checkpoint", sa.checkpoint, "checkpoint file (exhaustive, 1 worker)");
    se->add_option("--out", sa.out_path, "write found matrix here");
    se->add_option("--compute-s", sa.compute_s_cap, "scan sizes up to this cap");
    se->add_flag("--no-bound-prune", sa.no_bound_prune, "traverse even above the closed-form bound");
    se->add_flag("--json", sa.json);

    CatalogArgs cat;
    auto* cl = app.add_subcommand("catalog", "list or extract the embedded reference matrices");
    cl->add_option("--params", cat.params, "ti,to,s,q of one entry");
    cl->add_option("--out", cat.out_path, "write the entry to a matrix file");
    cl->add_flag("--json", cat.json);

    ArrayCheckArgs aa;
    auto* ac = app.add_subcommand("array-check", "brute-force checks on an array representation");
    ac->add_option("--array", aa.array_path, "array file");
    ac->add_option("--matrix", aa.matrix_path, "matrix file (array built from it)");
    ac->add_option("--check", aa.check, "aont | weak | oa | soa | none");
    ac->add_option("--ti", aa.ti);
    ac->add_option("--to", aa.to);
    ac->add_option("--t", aa.t, "strength for oa");
    ac->add_option("--t1", aa.t1, "input strength for soa");
    ac->add_option("--t2", aa.t2, "output strength for soa");
    ac->add_flag("--swap-io", aa.swap_io, "check the inverse mapping's array");
    ac->add_option("--hist", aa.hist_cols, "columns (0..2s-1) to print a histogram for");
    ac->add_option("--row-cap", aa.row_cap, "max rows to enumerate");
    ac->add_option("--workers", aa.workers);
    ac->add_flag("--json", aa.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return cmd_verify(va);
        if (*tr) return cmd_transform(ta, /*forward=*/true);
        if (*inv) return cmd_transform(ia, /*forward=*/false);
        if (*cons) return cmd_construct(ca);
        if (*bo) return cmd_bounds(ba);
        if (*se) return cmd_search(sa);
        if (*cl) return cmd_catalog(cat);
        if (*ac) return cmd_array_check(aa);
    } catch (const aont::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
