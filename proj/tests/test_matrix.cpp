#include "doctest.h"

#include <random>

#include "aont/matrix.hpp"

using namespace aont;

namespace {

MatrixGF mk(std::uint32_t q, const std::vector<std::vector<Fe>>& rows) {
    std::vector<Fe> entries;
    for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
    return make_matrix(build_field_q(q), static_cast<std::uint32_t>(rows.size()),
                       static_cast<std::uint32_t>(rows[0].size()), std::move(entries));
}

// Independent GF(2) elimination; oracle for the bit-packed fast path.
std::uint32_t gf2_rank_oracle(const MatrixGF& m) {
    std::vector<std::vector<Fe>> a(m.n_rows, std::vector<Fe>(m.n_cols));
    for (std::uint32_t i = 0; i < m.n_rows; ++i)
        for (std::uint32_t j = 0; j < m.n_cols; ++j) a[i][j] = m.at(i, j);
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < m.n_cols && r < m.n_rows; ++c) {
        std::uint32_t piv = r;
        while (piv < m.n_rows && a[piv][c] == 0) ++piv;
        if (piv == m.n_rows) continue;
        std::swap(a[piv], a[r]);
        for (std::uint32_t i = r + 1; i < m.n_rows; ++i)
            if (a[i][c])
                for (std::uint32_t j = c; j < m.n_cols; ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

const std::vector<std::vector<Fe>> kOddBastion5 = {
    {1, 1, 1, 1, 1}, {0, 1, 1, 1, 1}, {1, 0, 1, 1, 1}, {1, 1, 0, 1, 1}, {1, 1, 1, 0, 1}};
const std::vector<std::vector<Fe>> kOddBastion5Inv = {
    {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 0, 1}, {1, 1, 1, 1, 1}};
const std::vector<std::vector<Fe>> kB5 = {
    {1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {1, 1, 1, 1, 1}};
const std::vector<std::vector<Fe>> kE232 = {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 0}};

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(identity_matrix(build_field_q(3), 6)) == 6);
    CHECK(rank(mk(2, {{0, 0}, {0, 0}, {0, 0}, {0, 0}})) == 0);
    CHECK(rank(mk(2, kB5)) == 5);
}

TEST_CASE("invert") {
    auto id = identity_matrix(build_field_q(5), 4);
    CHECK(equal(*invert(id), id));

    auto m = mk(2, kOddBastion5);
    auto inv = invert(m);
    REQUIRE(inv.has_value());
    CHECK(equal(*inv, mk(2, kOddBastion5Inv)));
    CHECK(equal(mat_mul(m, *inv), identity_matrix(build_field_q(2), 5)));

    CHECK(!invert(mk(3, {{1, 2}, {1, 2}})).has_value());
    CHECK_THROWS_AS(invert(mk(2, {{1, 0}})), Error); // not square
}

TEST_CASE("submatrix") {
    auto m = mk(2, kE232);
    SubmatrixSelector full{{0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(equal(submatrix(m, full), m));

    auto id = identity_matrix(build_field_q(2), 3);
    auto one = submatrix(id, {{0}, {0}});
    CHECK(one.n_rows == 1);
    CHECK(one.entries == std::vector<Fe>{1});

    CHECK(rank(submatrix(m, {{0, 1}, {0, 1}})) == 2); // identity block
    CHECK(rank(submatrix(m, {{1, 2}, {0, 1}})) == 1); // contains a zero row

    CHECK_THROWS_AS(submatrix(m, {{0, 4}, {0}}), Error);
    CHECK_THROWS_AS(submatrix(m, {{1, 0}, {0}}), Error); // not increasing
}

TEST_CASE("products") {
    auto m = mk(2, kOddBastion5);
    std::vector<Fe> x = {1, 0, 1, 1, 0};
    CHECK(row_vec_mul(x, identity_matrix(build_field_q(2), 5)) == x);

    // even bastion s=4: first unit vector maps to the complement pattern
    auto even = mk(2, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
    auto even_inv = invert(even);
    REQUIRE(even_inv.has_value());
    CHECK(row_vec_mul(std::vector<Fe>{1, 0, 0, 0}, *even_inv) == std::vector<Fe>{0, 1, 1, 1});

    CHECK_THROWS_AS(mat_mul(mk(2, {{1, 0}}), mk(2, {{1, 0}})), Error);
    CHECK_THROWS_AS(row_vec_mul(std::vector<Fe>{1}, m), Error);
}

TEST_CASE("rank equals transpose rank, exhaustively for 3x3 over GF(2) and GF(3)") {
    for (std::uint32_t q : {2u, 3u}) {
        auto f = build_field_q(q);
        std::uint64_t total = 1;
        for (int i = 0; i < 9; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            std::vector<Fe> e(9);
            for (auto& v : e) {
                v = c % q;
                c /= q;
            }
            MatrixGF m = make_matrix(f, 3, 3, e);
            CHECK(rank(m) == rank(transpose(m)));
        }
    }
}

TEST_CASE("invertible iff full rank; 168 invertible 3x3 over GF(2)") {
    auto f = build_field_q(2);
    int invertible = 0;
    for (std::uint32_t code = 0; code < 512; ++code) {
        std::vector<Fe> e(9);
        for (int b = 0; b < 9; ++b) e[b] = (code >> b) & 1;
        MatrixGF m = make_matrix(f, 3, 3, e);
        const bool inv = invert(m).has_value();
        CHECK(inv == (rank(m) == 3));
        invertible += inv;
    }
    CHECK(invertible == 168);
}

TEST_CASE("bit-packed GF(2) rank agrees with plain elimination on random matrices") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 10000; ++iter) {
        const std::uint32_t nr = 1 + rng() % 16, nc = 1 + rng() % 16;
        std::vector<Fe> e(static_cast<std::size_t>(nr) * nc);
        for (auto& v : e) v = rng() & 1;
        MatrixGF m = make_matrix(build_field_q(2), nr, nc, e);
        CHECK(rank(m) == gf2_rank_oracle(m));
    }
}

TEST_CASE("matrix file format round trips bit-exactly") {
    for (const auto& m : {mk(2, kB5), mk(4, {{0, 1, 2}, {3, 0, 1}, {2, 2, 1}}),
                          mk(7, {{6, 5}, {1, 0}})}) {
        const std::string text = matrix_to_string(m);
        MatrixGF back = matrix_from_string(text);
        CHECK(equal(back, m));
        CHECK(matrix_to_string(back) == text);
    }
    CHECK_THROWS_AS(matrix_from_string("2 2 1 0 1\n1 2\n0 1\n7\n"), Error); // trailing data
    CHECK_THROWS_AS(matrix_from_string("2 2 1 0 1\n1 2\n0 3\n"), Error);    // out of range
    CHECK_THROWS_AS(matrix_from_string("2 2 1 0 1\n2 2\n0 1\n"), Error);    // truncated
}

TEST_CASE("submatrix_rank_at_least short-circuits correctly") {
    auto m = mk(3, {{1, 2, 0}, {2, 1, 1}, {0, 0, 0}});
    const std::uint32_t rows[] = {0, 1, 2};
    const std::uint32_t cols[] = {0, 1, 2};
    CHECK(submatrix_rank_at_least(m, rows, cols, 2));
    CHECK(!submatrix_rank_at_least(m, rows, cols, 3));
    const std::uint32_t zrow[] = {2};
    CHECK(!submatrix_rank_at_least(m, zrow, cols, 1));
}
