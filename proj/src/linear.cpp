#include "aont/linear.hpp"

#include <sstream>

#include "aont/combi.hpp"
#include "aont/error.hpp"
#include "aont/parallel.hpp"

namespace aont {

AontParams make_params(std::uint32_t ti, std::uint32_t to, std::uint32_t s, std::uint32_t q) {
    if (!(1 <= ti && ti <= to && to <= s))
        raise(Errc::bad_params, "need 1 <= ti <= to <= s, got (" + std::to_string(ti) + "," +
                                    std::to_string(to) + "," + std::to_string(s) + ")");
    if (!prime_power_split(q))
        raise(Errc::bad_params, "q = " + std::to_string(q) + " is not a prime power");
    return AontParams{ti, to, s, q};
}

VerificationReport verify_linear_aont(const MatrixGF& m, std::uint32_t ti, std::uint32_t to,
                                      unsigned workers) {
    if (!m.square()) raise(Errc::not_square, "verification needs a square matrix");
    const std::uint32_t s = m.n_rows;
    make_params(ti, to, s, m.field->q);

    VerificationReport rep;
    rep.invertible = rank(m) == s;
    if (!rep.invertible) return rep; // fail cause: singular; no witness scan

    const std::uint64_t n_row_sets = binomial(s, to);
    const std::uint64_t n_col_sets = binomial(s, ti);
    const std::uint64_t total = n_row_sets * n_col_sets;

    // One selector pair per index, lexicographic (J, I).
    auto hit = [&](std::uint64_t idx) {
        const auto rows = unrank_combination(s, to, idx / n_col_sets);
        const auto cols = unrank_combination(s, ti, idx % n_col_sets);
        return !submatrix_rank_at_least(m, rows, cols, ti);
    };
    const auto bad = find_first_index(total, workers, hit);
    if (!bad) {
        rep.pass = true;
        rep.submatrices_checked = total;
        return rep;
    }
    RankWitness w;
    w.rows = unrank_combination(s, to, *bad / n_col_sets);
    w.cols = unrank_combination(s, ti, *bad % n_col_sets);
    w.rank = rank(submatrix(m, SubmatrixSelector{w.rows, w.cols}));
    rep.witness = std::move(w);
    rep.submatrices_checked = *bad + 1;
    return rep;
}

namespace {

std::string witness_str(const RankWitness& w) {
    std::ostringstream os;
    os << "rows {";
    for (std::size_t i = 0; i < w.rows.size(); ++i) os << (i ? "," : "") << w.rows[i];
    os << "} cols {";
    for (std::size_t i = 0; i < w.cols.size(); ++i) os << (i ? "," : "") << w.cols[i];
    os << "} rank " << w.rank;
    return os.str();
}

LinearAont certify(AontParams p, MatrixGF m) {
    VerificationReport rep = verify_linear_aont(m, p.ti, p.to, 1);
    if (!rep.pass) {
        std::string why = rep.invertible ? "rank criterion fails at " + witness_str(*rep.witness)
                                         : "matrix is singular";
        raise(Errc::bad_params, "not a (" + std::to_string(p.ti) + "," + std::to_string(p.to) + "," +
                                    std::to_string(p.s) + "," + std::to_string(p.q) + ") transform: " + why);
    }
    auto inv = invert(m);
    LinearAont a{p, std::move(m), std::move(*inv)};
    return a;
}

MatrixGF even_bastion_matrix(Field f, std::uint32_t s) {
    std::vector<Fe> e(static_cast<std::size_t>(s) * s, 1);
    for (std::uint32_t i = 0; i < s; ++i) e[static_cast<std::size_t>(i) * s + i] = 0;
    return make_matrix(std::move(f), s, s, std::move(e));
}

} // namespace

LinearAont make_linear_aont(std::uint32_t ti, std::uint32_t to, MatrixGF m) {
    if (!m.square()) raise(Errc::not_square, "need a square matrix");
    AontParams p = make_params(ti, to, m.n_rows, m.field->q);
    return certify(p, std::move(m));
}

std::vector<Fe> transform(const LinearAont& a, std::span<const Fe> x) {
    return row_vec_mul(x, a.m_inv);
}

std::vector<Fe> inverse_transform(const LinearAont& a, std::span<const Fe> y) {
    return row_vec_mul(y, a.m);
}

LinearAont construct_even_bastion(std::uint32_t s) {
    if (s < 2 || s % 2 != 0)
        raise(Errc::odd_size, "even bastion needs even s >= 2, got " + std::to_string(s));
    return certify(make_params(1, 2, s, 2), even_bastion_matrix(build_field(2, 1), s));
}

LinearAont construct_odd_bastion(std::uint32_t s) {
    if (s < 3 || s % 2 == 0)
        raise(Errc::even_size, "odd bastion needs odd s >= 3, got " + std::to_string(s));
    std::vector<Fe> e(static_cast<std::size_t>(s) * s, 1);
    for (std::uint32_t i = 1; i < s; ++i) e[static_cast<std::size_t>(i) * s + (i - 1)] = 0;
    return certify(make_params(1, 2, s, 2), make_matrix(build_field(2, 1), s, s, std::move(e)));
}

LinearAont construct_bs(std::uint32_t s) {
    if (s < 5 || s % 2 == 0)
        raise(Errc::bad_size, "diagonal-plus-border matrix needs odd s >= 5, got " + std::to_string(s));
    std::vector<Fe> e(static_cast<std::size_t>(s) * s, 0);
    for (std::uint32_t i = 0; i < s; ++i) {
        e[static_cast<std::size_t>(i) * s + i] = 1;
        e[static_cast<std::size_t>(i) * s + (s - 1)] = 1;
        e[static_cast<std::size_t>(s - 1) * s + i] = 1;
    }
    return certify(make_params(2, s - 1, s, 2), make_matrix(build_field(2, 1), s, s, std::move(e)));
}

LinearAont construct_even_2s1(std::uint32_t s) {
    if (s < 4 || s % 2 != 0)
        raise(Errc::bad_size, "needs even s >= 4, got " + std::to_string(s));
    return certify(make_params(2, s - 1, s, 2), even_bastion_matrix(build_field(2, 1), s));
}

LinearAont construct_cauchy(std::uint32_t t, std::uint32_t s, Field field) {
    if (!field || field->q < 2 * s)
        raise(Errc::field_too_small, "Cauchy construction needs q >= 2s");
    if (t < 1 || t > s) raise(Errc::bad_params, "need 1 <= t <= s");
    const FieldSpec& f = *field;
    std::vector<Fe> e;
    e.reserve(static_cast<std::size_t>(s) * s);
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = 0; j < s; ++j)
            e.push_back(fe_inv(fe_sub(i, s + j, f), f));
    return certify(make_params(t, t, s, f.q), make_matrix(field, s, s, std::move(e)));
}

std::optional<std::uint32_t> least_invertible_cofactor_col(const MatrixGF& m) {
    if (!m.square() || m.n_rows < 2) raise(Errc::not_square, "need a square matrix of size >= 2");
    const std::uint32_t s = m.n_rows;
    std::vector<std::uint32_t> rows(s - 1);
    for (std::uint32_t i = 0; i + 1 < s; ++i) rows[i] = i + 1;
    for (std::uint32_t j = 0; j < s; ++j) {
        std::vector<std::uint32_t> cols;
        cols.reserve(s - 1);
        for (std::uint32_t c = 0; c < s; ++c)
            if (c != j) cols.push_back(c);
        if (submatrix_rank_at_least(m, rows, cols, s - 1)) return j;
    }
    return std::nullopt;
}

LinearAont shrink_by_cofactor(const LinearAont& a) {
    if (a.params.s <= a.params.to)
        raise(Errc::bad_params, "shrinking needs s > to");
    const std::uint32_t s = a.params.s;
    auto j = least_invertible_cofactor_col(a.m);
    if (!j)
        raise(Errc::no_invertible_cofactor,
              "no invertible cofactor along row 0 (input matrix cannot have been invertible)");
    SubmatrixSelector sel;
    for (std::uint32_t i = 1; i < s; ++i) sel.row_idx.push_back(i);
    for (std::uint32_t c = 0; c < s; ++c)
        if (c != *j) sel.col_idx.push_back(c);
    return certify(make_params(a.params.ti, a.params.to, s - 1, a.params.q),
                   submatrix(a.m, sel));
}

std::vector<Fe> fast_bastion_transform(std::uint32_t s, std::span<const Fe> x,
                                       std::uint64_t* xor_count) {
    if (s < 2) raise(Errc::bad_size, "need s >= 2");
    if (x.size() != s) raise(Errc::dimension_mismatch, "input length != s");
    std::uint64_t xors = 0;
    std::vector<Fe> y(s);
    if (s % 2 == 0) {
        Fe r = x[0];
        for (std::uint32_t i = 1; i < s; ++i, ++xors) r ^= x[i];
        for (std::uint32_t i = 0; i < s; ++i, ++xors) y[i] = r ^ x[i];
    } else {
        // y1 is the full parity; the rest shift by one position and fold in
        // the last input. 2s-2 XORs total.
        Fe r = x[0];
        for (std::uint32_t i = 1; i < s; ++i, ++xors) r ^= x[i];
        y[0] = r;
        for (std::uint32_t i = 1; i < s; ++i, ++xors) y[i] = x[i - 1] ^ x[s - 1];
    }
    if (xor_count) *xor_count = xors;
    return y;
}

std::vector<Fe> fast_bastion_inverse(std::uint32_t s, std::span<const Fe> y,
                                     std::uint64_t* xor_count) {
    if (s < 2) raise(Errc::bad_size, "need s >= 2");
    if (y.size() != s) raise(Errc::dimension_mismatch, "input length != s");
    std::uint64_t xors = 0;
    std::vector<Fe> x(s);
    if (s % 2 == 0) {
        Fe r = y[0];
        for (std::uint32_t i = 1; i < s; ++i, ++xors) r ^= y[i];
        for (std::uint32_t i = 0; i < s; ++i, ++xors) x[i] = r ^ y[i];
    } else {
        Fe last = y[0];
        for (std::uint32_t i = 1; i < s; ++i, ++xors) last ^= y[i];
        x[s - 1] = last;
        for (std::uint32_t i = 0; i + 1 < s; ++i, ++xors) x[i] = last ^ y[i + 1];
    }
    if (xor_count) *xor_count = xors;
    return x;
}

} // namespace aont
