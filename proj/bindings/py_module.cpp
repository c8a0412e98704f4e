#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aont/array.hpp"
#include "aont/bounds.hpp"
#include "aont/error.hpp"
#include "aont/linear.hpp"
#include "aont/parallel.hpp"
#include "aont/report.hpp"
#include "aont/search.hpp"

namespace py = pybind11;
using namespace aont;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& v : j) out.append(json_to_py(v));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

MatrixGF matrix_from_rows(std::uint32_t q, const std::vector<std::vector<Fe>>& rows) {
    if (rows.empty()) raise(Errc::bad_params, "empty matrix");
    const auto nr = static_cast<std::uint32_t>(rows.size());
    const auto nc = static_cast<std::uint32_t>(rows[0].size());
    std::vector<Fe> entries;
    entries.reserve(static_cast<std::size_t>(nr) * nc);
    for (const auto& r : rows) {
        if (r.size() != nc) raise(Errc::dimension_mismatch, "ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return make_matrix(build_field_q(q), nr, nc, std::move(entries));
}

std::vector<std::vector<Fe>> matrix_rows(const MatrixGF& m) {
    std::vector<std::vector<Fe>> rows(m.n_rows, std::vector<Fe>(m.n_cols));
    for (std::uint32_t i = 0; i < m.n_rows; ++i)
        for (std::uint32_t j = 0; j < m.n_cols; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

ColumnSet column_set_from(const std::vector<std::uint32_t>& cols, std::uint32_t s) {
    ColumnSet d;
    for (auto c : cols) (c < s ? d.input_cols : d.output_cols).push_back(c);
    return d;
}

SearchConfig config_from_kwargs(std::uint32_t ti, std::uint32_t to, std::uint32_t s, std::uint32_t q,
                                const std::string& strategy, std::uint64_t budget_nodes,
                                double budget_secs, unsigned workers, std::uint64_t seed,
                                const std::string& checkpoint, bool bound_prune) {
    SearchConfig cfg;
    cfg.params = make_params(ti, to, s, q);
    if (strategy == "exhaustive")
        cfg.strategy = SearchStrategy::exhaustive;
    else if (strategy == "randomized")
        cfg.strategy = SearchStrategy::randomized;
    else if (strategy == "hybrid")
        cfg.strategy = SearchStrategy::hybrid;
    else
        raise(Errc::bad_params, "unknown strategy '" + strategy + "'");
    cfg.budget.max_nodes = budget_nodes;
    cfg.budget.max_seconds = budget_secs;
    cfg.workers = workers;
    cfg.seed = seed;
    cfg.checkpoint_path = checkpoint;
    cfg.use_bound_pruning = bound_prune;
    return cfg;
}

} // namespace

PYBIND11_MODULE(aont, m) {
    m.doc() = "linear all-or-nothing transform toolkit";

    py::register_exception<Error>(m, "AontError", PyExc_ValueError);

    py::class_<MatrixGF>(m, "Matrix")
        .def(py::init(&matrix_from_rows), py::arg("q"), py::arg("rows"))
        .def_property_readonly("q", [](const MatrixGF& m_) { return m_.field->q; })
        .def_property_readonly("n_rows", [](const MatrixGF& m_) { return m_.n_rows; })
        .def_property_readonly("n_cols", [](const MatrixGF& m_) { return m_.n_cols; })
        .def("rows", &matrix_rows)
        .def("rank", [](const MatrixGF& m_) { return rank(m_); })
        .def("inverse",
             [](const MatrixGF& m_) -> py::object {
                 auto inv = invert(m_);
                 return inv ? py::cast(*inv) : py::none();
             })
        .def("__str__", [](const MatrixGF& m_) { return matrix_to_string(m_); })
        .def("__eq__", [](const MatrixGF& a, const MatrixGF& b) { return equal(a, b); });

    m.def("parse_matrix", &matrix_from_string, py::arg("text"));
    m.def("load_matrix", &load_matrix, py::arg("path"));
    m.def("save_matrix", &save_matrix, py::arg("matrix"), py::arg("path"));
    m.def(
        "mat_mul", [](const MatrixGF& a, const MatrixGF& b) { return mat_mul(a, b); }, py::arg("a"),
        py::arg("b"));

    m.def(
        "verify",
        [](const MatrixGF& mtx, std::uint32_t ti, std::uint32_t to, unsigned workers) {
            const auto rep = verify_linear_aont(mtx, ti, to, workers);
            return json_to_py(to_json(rep, AontParams{ti, to, mtx.n_rows, mtx.field->q}));
        },
        py::arg("matrix"), py::arg("ti"), py::arg("to"), py::arg("workers") = 1);

    py::class_<LinearAont>(m, "Transform")
        .def_property_readonly("params",
                               [](const LinearAont& a) { return json_to_py(to_json(a.params)); })
        .def_property_readonly("matrix", [](const LinearAont& a) { return a.m; })
        .def_property_readonly("matrix_inv", [](const LinearAont& a) { return a.m_inv; })
        .def("transform",
             [](const LinearAont& a, const std::vector<Fe>& x) { return transform(a, x); })
        .def("inverse_transform",
             [](const LinearAont& a, const std::vector<Fe>& y) { return inverse_transform(a, y); });

    m.def(
        "make_transform",
        [](const MatrixGF& mtx, std::uint32_t ti, std::uint32_t to) {
            return make_linear_aont(ti, to, mtx);
        },
        py::arg("matrix"), py::arg("ti"), py::arg("to"));
    m.def("construct_even_bastion", &construct_even_bastion, py::arg("s"));
    m.def("construct_odd_bastion", &construct_odd_bastion, py::arg("s"));
    m.def("construct_bs", &construct_bs, py::arg("s"));
    m.def("construct_even_2s1", &construct_even_2s1, py::arg("s"));
    m.def(
        "construct_cauchy",
        [](std::uint32_t t, std::uint32_t s, std::uint32_t q) {
            return construct_cauchy(t, s, build_field_q(q));
        },
        py::arg("t"), py::arg("s"), py::arg("q"));
    m.def("shrink_by_cofactor", &shrink_by_cofactor, py::arg("transform"));

    m.def(
        "fast_bastion_transform",
        [](std::uint32_t s, const std::vector<Fe>& x) {
            std::uint64_t xors = 0;
            auto y = fast_bastion_transform(s, x, &xors);
            return py::make_tuple(y, xors);
        },
        py::arg("s"), py::arg("x"), "returns (y, xor_count)");
    m.def(
        "fast_bastion_inverse",
        [](std::uint32_t s, const std::vector<Fe>& y) {
            std::uint64_t xors = 0;
            auto x = fast_bastion_inverse(s, y, &xors);
            return py::make_tuple(x, xors);
        },
        py::arg("s"), py::arg("y"), "returns (x, xor_count)");

    m.def("catalog", [] {
        py::list out;
        for (const auto& e : catalog()) out.append(e);
        return out;
    });
    m.def(
        "catalog_lookup",
        [](std::uint32_t ti, std::uint32_t to, std::uint32_t s, std::uint32_t q) -> py::object {
            auto hit = catalog_lookup(ti, to, s, q);
            return hit ? py::cast(*hit) : py::none();
        },
        py::arg("ti"), py::arg("to"), py::arg("s"), py::arg("q"));

    py::class_<ArrayRep>(m, "Array")
        .def_property_readonly("v", [](const ArrayRep& a) { return a.v; })
        .def_property_readonly("s", [](const ArrayRep& a) { return a.s; })
        .def_property_readonly("n_rows", [](const ArrayRep& a) { return a.n_rows; })
        .def("row",
             [](const ArrayRep& a, std::uint64_t r) {
                 std::vector<int> row(2 * a.s);
                 for (std::uint32_t c = 0; c < 2 * a.s; ++c) row[c] = a.at(r, c);
                 return row;
             })
        .def("__str__", [](const ArrayRep& a) { return array_to_string(a); });

    m.def(
        "build_array",
        [](const LinearAont& a, std::uint64_t row_cap) { return build_array(a, row_cap); },
        py::arg("transform"), py::arg("row_cap") = kDefaultRowCap);
    m.def(
        "array_from_table",
        [](std::uint32_t v, std::uint32_t s, const std::vector<std::uint16_t>& cells,
           std::uint64_t row_cap) { return array_from_table(v, s, cells, row_cap); },
        py::arg("v"), py::arg("s"), py::arg("cells"), py::arg("row_cap") = kDefaultRowCap);
    m.def("parse_array", &array_from_string, py::arg("text"), py::arg("row_cap") = kDefaultRowCap);
    m.def("swap_io", &swap_io, py::arg("array"));

    m.def(
        "classify_columns",
        [](const ArrayRep& a, const std::vector<std::uint32_t>& cols, bool histogram) {
            return json_to_py(to_json(classify_columns(a, column_set_from(cols, a.s), histogram)));
        },
        py::arg("array"), py::arg("cols"), py::arg("histogram") = true);
    m.def(
        "verify_aont_array",
        [](const ArrayRep& a, std::uint32_t ti, std::uint32_t to, unsigned workers) {
            return json_to_py(to_json(verify_aont_array(a, ti, to, workers)));
        },
        py::arg("array"), py::arg("ti"), py::arg("to"), py::arg("workers") = 1);
    m.def(
        "verify_weak_aont_array",
        [](const ArrayRep& a, std::uint32_t ti, std::uint32_t to, unsigned workers) {
            return json_to_py(to_json(verify_weak_aont_array(a, ti, to, workers)));
        },
        py::arg("array"), py::arg("ti"), py::arg("to"), py::arg("workers") = 1);
    m.def(
        "is_orthogonal_array",
        [](const ArrayRep& a, std::uint32_t t, unsigned workers) {
            return json_to_py(to_json(is_orthogonal_array(a, t, workers)));
        },
        py::arg("array"), py::arg("t"), py::arg("workers") = 1);
    m.def(
        "is_split_orthogonal_array",
        [](const ArrayRep& a, std::uint32_t t1, std::uint32_t t2, std::uint32_t n1, std::uint32_t n2,
           unsigned workers) {
            return json_to_py(to_json(is_split_orthogonal_array(a, t1, t2, n1, n2, workers)));
        },
        py::arg("array"), py::arg("t1"), py::arg("t2"), py::arg("n1"), py::arg("n2"),
        py::arg("workers") = 1);

    m.def(
        "bound_general",
        [](std::uint32_t ti, std::uint32_t to, std::uint32_t q) {
            return json_to_py(to_json(bound_general(ti, to, q)));
        },
        py::arg("ti"), py::arg("to"), py::arg("q"));
    m.def(
        "bound_ti2",
        [](std::uint32_t to, std::uint32_t q) { return json_to_py(to_json(bound_ti2(to, q))); },
        py::arg("to"), py::arg("q"));
    m.def(
        "best_upper_bound",
        [](std::uint32_t ti, std::uint32_t to, std::uint32_t q) {
            return json_to_py(to_json(best_upper_bound(ti, to, q)));
        },
        py::arg("ti"), py::arg("to"), py::arg("q"));
    m.def(
        "known_range",
        [](std::uint32_t to, std::uint32_t q) { return json_to_py(to_json(known_range(to, q))); },
        py::arg("to"), py::arg("q"));
    m.def("known_range_table", [] {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : known_range_table()) out.push_back(to_json(r));
        return json_to_py(out);
    });

    m.def(
        "search",
        [](std::uint32_t ti, std::uint32_t to, std::uint32_t s, std::uint32_t q,
           const std::string& strategy, std::uint64_t budget_nodes, double budget_secs,
           unsigned workers, std::uint64_t seed, const std::string& checkpoint, bool bound_prune) {
            const auto cfg = config_from_kwargs(ti, to, s, q, strategy, budget_nodes, budget_secs,
                                                workers, seed, checkpoint, bound_prune);
            py::gil_scoped_release release;
            const auto outcome = search_linear_aont(cfg);
            py::gil_scoped_acquire acquire;
            return json_to_py(to_json(outcome, cfg.params));
        },
        py::arg("ti"), py::arg("to"), py::arg("s"), py::arg("q"),
        py::arg("strategy") = "exhaustive", py::arg("budget_nodes") = 0,
        py::arg("budget_secs") = 0.0, py::arg("workers") = 1, py::arg("seed") = 0,
        py::arg("checkpoint") = "", py::arg("bound_prune") = true);
    m.def(
        "compute_S",
        [](std::uint32_t ti, std::uint32_t to, std::uint32_t q, std::uint32_t s_cap,
           std::uint64_t budget_nodes, double budget_secs, unsigned workers, bool bound_prune) {
            const auto cfg = config_from_kwargs(ti, to, to, q, "exhaustive", budget_nodes,
                                                budget_secs, workers, 0, "", bound_prune);
            py::gil_scoped_release release;
            const auto outcome = compute_S(ti, to, q, s_cap, cfg);
            py::gil_scoped_acquire acquire;
            return json_to_py(to_json(outcome, AontParams{ti, to, s_cap, q}));
        },
        py::arg("ti"), py::arg("to"), py::arg("q"), py::arg("s_cap"), py::arg("budget_nodes") = 0,
        py::arg("budget_secs") = 0.0, py::arg("workers") = 1, py::arg("bound_prune") = true);
}
