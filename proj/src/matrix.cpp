#include "aont/matrix.hpp"

#include <fstream>
#include <sstream>

#include "aont/error.hpp"

namespace aont {

namespace {

void check_selector(const std::vector<std::uint32_t>& idx, std::uint32_t limit, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= limit)
            raise(Errc::index_out_of_range, std::string(what) + " index " + std::to_string(idx[i]) + " out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            raise(Errc::index_out_of_range, std::string(what) + " indices must be strictly increasing");
    }
}

// Generic elimination over a scratch copy; stops once `want` pivots are found
// (want == min(nr, nc) computes the full rank).
std::uint32_t rank_generic(std::vector<Fe>& scratch, std::uint32_t nr, std::uint32_t nc,
                           std::uint32_t want, const FieldSpec& f) {
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < nc && r < nr; ++c) {
        std::uint32_t pivot = r;
        while (pivot < nr && scratch[pivot * nc + c] == 0) ++pivot;
        if (pivot == nr) continue;
        if (pivot != r)
            for (std::uint32_t j = c; j < nc; ++j) std::swap(scratch[pivot * nc + j], scratch[r * nc + j]);
        const Fe inv = fe_inv(scratch[r * nc + c], f);
        for (std::uint32_t i = r + 1; i < nr; ++i) {
            const Fe v = scratch[i * nc + c];
            if (v == 0) continue;
            const Fe factor = fe_mul(v, inv, f);
            scratch[i * nc + c] = 0;
            for (std::uint32_t j = c + 1; j < nc; ++j)
                scratch[i * nc + j] = fe_sub(scratch[i * nc + j], fe_mul(factor, scratch[r * nc + j], f), f);
        }
        if (++r >= want) return r;
    }
    return r;
}

} // namespace

MatrixGF make_matrix(Field field, std::uint32_t n_rows, std::uint32_t n_cols, std::vector<Fe> entries) {
    if (!field) raise(Errc::bad_params, "null field");
    if (entries.size() != static_cast<std::size_t>(n_rows) * n_cols)
        raise(Errc::dimension_mismatch, "entry count does not match dimensions");
    for (Fe e : entries)
        if (e >= field->q) raise(Errc::bad_params, "entry code " + std::to_string(e) + " >= q");
    return MatrixGF{std::move(field), n_rows, n_cols, std::move(entries)};
}

MatrixGF identity_matrix(Field field, std::uint32_t n) {
    std::vector<Fe> e(static_cast<std::size_t>(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
    return MatrixGF{std::move(field), n, n, std::move(e)};
}

std::uint32_t rank_gf2_packed(std::span<std::uint64_t> rows) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t row = rows[i];
        for (std::size_t j = 0; j < r; ++j)
            if (row & (rows[j] & -rows[j])) row ^= rows[j];
        if (row) {
            rows[i] = rows[r];
            rows[r] = row;
            ++r;
        }
    }
    return r;
}

std::uint32_t rank(const MatrixGF& m) {
    if (m.field->q == 2 && m.n_cols <= 64) {
        std::vector<std::uint64_t> packed(m.n_rows, 0);
        for (std::uint32_t i = 0; i < m.n_rows; ++i)
            for (std::uint32_t j = 0; j < m.n_cols; ++j)
                packed[i] |= static_cast<std::uint64_t>(m.at(i, j)) << j;
        return rank_gf2_packed(packed);
    }
    std::vector<Fe> scratch = m.entries;
    return rank_generic(scratch, m.n_rows, m.n_cols, std::min(m.n_rows, m.n_cols), *m.field);
}

bool submatrix_rank_at_least(const MatrixGF& m, std::span<const std::uint32_t> rows,
                             std::span<const std::uint32_t> cols, std::uint32_t t) {
    const std::uint32_t nr = static_cast<std::uint32_t>(rows.size());
    const std::uint32_t nc = static_cast<std::uint32_t>(cols.size());
    if (t == 0) return true;
    if (t > nr || t > nc) return false;
    if (m.field->q == 2 && nr <= 64 && nc <= 64) {
        std::uint64_t packed[64];
        for (std::uint32_t i = 0; i < nr; ++i) {
            std::uint64_t w = 0;
            for (std::uint32_t j = 0; j < nc; ++j)
                w |= static_cast<std::uint64_t>(m.at(rows[i], cols[j])) << j;
            packed[i] = w;
        }
        return rank_gf2_packed(std::span<std::uint64_t>(packed, nr)) >= t;
    }
    thread_local std::vector<Fe> scratch;
    scratch.resize(static_cast<std::size_t>(nr) * nc);
    for (std::uint32_t i = 0; i < nr; ++i)
        for (std::uint32_t j = 0; j < nc; ++j)
            scratch[static_cast<std::size_t>(i) * nc + j] = m.at(rows[i], cols[j]);
    return rank_generic(scratch, nr, nc, t, *m.field) >= t;
}

std::optional<MatrixGF> invert(const MatrixGF& m) {
    if (!m.square()) raise(Errc::not_square, "only square matrices can be inverted");
    const std::uint32_t n = m.n_rows;
    const FieldSpec& f = *m.field;
    // Gauss-Jordan on [M | I].
    std::vector<Fe> a = m.entries;
    MatrixGF inv = identity_matrix(m.field, n);
    for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t pivot = c;
        while (pivot < n && a[pivot * n + c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != c)
            for (std::uint32_t j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[c * n + j]);
                std::swap(inv.entries[pivot * n + j], inv.entries[c * n + j]);
            }
        const Fe pinv = fe_inv(a[c * n + c], f);
        for (std::uint32_t j = 0; j < n; ++j) {
            a[c * n + j] = fe_mul(a[c * n + j], pinv, f);
            inv.entries[c * n + j] = fe_mul(inv.entries[c * n + j], pinv, f);
        }
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const Fe v = a[i * n + c];
            if (v == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                a[i * n + j] = fe_sub(a[i * n + j], fe_mul(v, a[c * n + j], f), f);
                inv.entries[i * n + j] = fe_sub(inv.entries[i * n + j], fe_mul(v, inv.entries[c * n + j], f), f);
            }
        }
    }
    return inv;
}

MatrixGF submatrix(const MatrixGF& m, const SubmatrixSelector& sel) {
    check_selector(sel.row_idx, m.n_rows, "row");
    check_selector(sel.col_idx, m.n_cols, "column");
    MatrixGF r;
    r.field = m.field;
    r.n_rows = static_cast<std::uint32_t>(sel.row_idx.size());
    r.n_cols = static_cast<std::uint32_t>(sel.col_idx.size());
    r.entries.reserve(static_cast<std::size_t>(r.n_rows) * r.n_cols);
    for (auto i : sel.row_idx)
        for (auto j : sel.col_idx) r.entries.push_back(m.at(i, j));
    return r;
}

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b) {
    if (a.n_cols != b.n_rows) raise(Errc::dimension_mismatch, "inner dimensions differ");
    if (a.field->q != b.field->q) raise(Errc::dimension_mismatch, "fields differ");
    const FieldSpec& f = *a.field;
    MatrixGF r;
    r.field = a.field;
    r.n_rows = a.n_rows;
    r.n_cols = b.n_cols;
    r.entries.assign(static_cast<std::size_t>(a.n_rows) * b.n_cols, 0);
    for (std::uint32_t i = 0; i < a.n_rows; ++i)
        for (std::uint32_t k = 0; k < a.n_cols; ++k) {
            const Fe v = a.at(i, k);
            if (v == 0) continue;
            for (std::uint32_t j = 0; j < b.n_cols; ++j)
                r.at(i, j) = fe_add(r.at(i, j), fe_mul(v, b.at(k, j), f), f);
        }
    return r;
}

std::vector<Fe> row_vec_mul(std::span<const Fe> x, const MatrixGF& m) {
    if (x.size() != m.n_rows) raise(Errc::dimension_mismatch, "vector length does not match rows");
    const FieldSpec& f = *m.field;
    std::vector<Fe> y(m.n_cols, 0);
    for (std::uint32_t i = 0; i < m.n_rows; ++i) {
        if (x[i] == 0) continue;
        for (std::uint32_t j = 0; j < m.n_cols; ++j)
            y[j] = fe_add(y[j], fe_mul(x[i], m.at(i, j), f), f);
    }
    return y;
}

MatrixGF transpose(const MatrixGF& m) {
    MatrixGF r;
    r.field = m.field;
    r.n_rows = m.n_cols;
    r.n_cols = m.n_rows;
    r.entries.resize(m.entries.size());
    for (std::uint32_t i = 0; i < m.n_rows; ++i)
        for (std::uint32_t j = 0; j < m.n_cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

bool equal(const MatrixGF& a, const MatrixGF& b) {
    return a.field->q == b.field->q && a.n_rows == b.n_rows && a.n_cols == b.n_cols &&
           a.entries == b.entries;
}

std::string matrix_to_string(const MatrixGF& m) {
    std::ostringstream os;
    os << field_header(*m.field) << "\n" << m.n_rows << " " << m.n_cols << "\n";
    for (std::uint32_t i = 0; i < m.n_rows; ++i) {
        for (std::uint32_t j = 0; j < m.n_cols; ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
    return os.str();
}

MatrixGF matrix_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) raise(Errc::bad_format, "empty matrix text");
    Field f = parse_field_header(header);
    std::uint32_t nr, nc;
    if (!(is >> nr >> nc)) raise(Errc::bad_format, "missing matrix dimensions");
    std::vector<Fe> entries;
    entries.reserve(static_cast<std::size_t>(nr) * nc);
    for (std::size_t i = 0; i < static_cast<std::size_t>(nr) * nc; ++i) {
        long long v;
        if (!(is >> v)) raise(Errc::bad_format, "matrix text truncated");
        if (v < 0 || static_cast<std::uint64_t>(v) >= f->q)
            raise(Errc::bad_format, "entry " + std::to_string(v) + " out of range for q=" + std::to_string(f->q));
        entries.push_back(static_cast<Fe>(v));
    }
    long long extra;
    if (is >> extra) raise(Errc::bad_format, "trailing data after matrix entries");
    return make_matrix(std::move(f), nr, nc, std::move(entries));
}

void save_matrix(const MatrixGF& m, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) raise(Errc::io_error, "cannot open " + path + " for writing");
    os << matrix_to_string(m);
    if (!os) raise(Errc::io_error, "write failed: " + path);
}

MatrixGF load_matrix(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) raise(Errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return matrix_from_string(buf.str());
}

} // namespace aont
