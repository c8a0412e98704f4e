#include "doctest.h"

#include <random>

#include "aont/array.hpp"
#include "aont/combi.hpp"
#include "aont/linear.hpp"

using namespace aont;

namespace {

MatrixGF mk(std::uint32_t q, const std::vector<std::vector<Fe>>& rows) {
    std::vector<Fe> entries;
    for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
    return make_matrix(build_field_q(q), static_cast<std::uint32_t>(rows.size()),
                       static_cast<std::uint32_t>(rows[0].size()), std::move(entries));
}

const std::vector<std::vector<Fe>> kE232 = {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 0}};

// Oracle: first (J, I) in lexicographic order whose submatrix drops rank.
std::optional<RankWitness> first_low_rank(const MatrixGF& m, std::uint32_t ti, std::uint32_t to) {
    std::vector<std::uint32_t> rows(to);
    for (std::uint32_t i = 0; i < to; ++i) rows[i] = i;
    do {
        std::vector<std::uint32_t> cols(ti);
        for (std::uint32_t i = 0; i < ti; ++i) cols[i] = i;
        do {
            auto sub = submatrix(m, {rows, cols});
            if (rank(sub) < ti) return RankWitness{rows, cols, rank(sub)};
        } while (next_combination(cols, m.n_cols));
    } while (next_combination(rows, m.n_rows));
    return std::nullopt;
}

} // namespace

TEST_CASE("verify: the (2,3,4,2) reference matrix") {
    auto m = mk(2, kE232);
    auto rep = verify_linear_aont(m, 2, 3);
    CHECK(rep.pass);
    CHECK(rep.invertible);
    CHECK(rep.submatrices_checked == binomial(4, 3) * binomial(4, 2));

    // Same matrix fails at (2,2); the witness is the lexicographically first
    // singular 2x2 selection, cross-checked by the brute-force oracle.
    auto bad = verify_linear_aont(m, 2, 2);
    CHECK(!bad.pass);
    CHECK(bad.invertible);
    REQUIRE(bad.witness.has_value());
    auto expect = first_low_rank(m, 2, 2);
    REQUIRE(expect.has_value());
    CHECK(bad.witness->rows == expect->rows);
    CHECK(bad.witness->cols == expect->cols);
    CHECK(bad.witness->rank == expect->rank);
    CHECK(bad.witness->rank < 2);
    CHECK(bad.witness->rows == std::vector<std::uint32_t>{0, 1});
    CHECK(bad.witness->cols == std::vector<std::uint32_t>{0, 2});

    // Parallel scan reports the same witness.
    auto bad2 = verify_linear_aont(m, 2, 2, 2);
    CHECK(bad2.witness->rows == bad.witness->rows);
    CHECK(bad2.witness->cols == bad.witness->cols);
}

TEST_CASE("verify: identity passes exactly when to = s") {
    auto id = identity_matrix(build_field_q(3), 5);
    CHECK(verify_linear_aont(id, 2, 5).pass);
    CHECK(verify_linear_aont(id, 1, 5).pass);
    CHECK(!verify_linear_aont(id, 1, 4).pass);
}

TEST_CASE("verify: singular matrix fails with no witness") {
    auto rep = verify_linear_aont(mk(2, {{1, 1}, {1, 1}}), 1, 1);
    CHECK(!rep.pass);
    CHECK(!rep.invertible);
    CHECK(!rep.witness.has_value());
}

TEST_CASE("verify rejects bad parameters") {
    auto m = mk(2, kE232);
    CHECK_THROWS_AS(verify_linear_aont(m, 3, 2), Error);
    CHECK_THROWS_AS(verify_linear_aont(m, 0, 2), Error);
    CHECK_THROWS_AS(verify_linear_aont(mk(2, {{1, 0}}), 1, 1), Error);
    CHECK_THROWS_AS(make_params(2, 3, 4, 6), Error); // 6 is not a prime power
}

TEST_CASE("even bastion") {
    auto a = construct_even_bastion(4);
    CHECK(a.params.ti == 1);
    CHECK(a.params.to == 2);
    CHECK(equal(mat_mul(a.m, a.m), identity_matrix(a.m.field, 4))); // self-inverse
    CHECK(equal(a.m, a.m_inv));
    CHECK(verify_linear_aont(a.m, 1, 2).pass);
    CHECK(!verify_linear_aont(a.m, 2, 2).pass); // no (2,2) transform of size > 2 exists over GF(2)
    CHECK_THROWS_AS(construct_even_bastion(3), Error);
    CHECK(construct_even_bastion(2).params.s == 2);
}

TEST_CASE("odd bastion matches the displayed matrix and inverse") {
    auto a = construct_odd_bastion(5);
    CHECK(equal(a.m, mk(2, {{1, 1, 1, 1, 1},
                            {0, 1, 1, 1, 1},
                            {1, 0, 1, 1, 1},
                            {1, 1, 0, 1, 1},
                            {1, 1, 1, 0, 1}})));
    CHECK(equal(a.m_inv, mk(2, {{1, 1, 0, 0, 0},
                                {1, 0, 1, 0, 0},
                                {1, 0, 0, 1, 0},
                                {1, 0, 0, 0, 1},
                                {1, 1, 1, 1, 1}})));
    CHECK(verify_linear_aont(construct_odd_bastion(3).m, 1, 2).pass);
    CHECK_THROWS_AS(construct_odd_bastion(4), Error);
}

TEST_CASE("diagonal-plus-border construction") {
    auto a = construct_bs(5);
    CHECK(equal(a.m, mk(2, {{1, 0, 0, 0, 1},
                            {0, 1, 0, 0, 1},
                            {0, 0, 1, 0, 1},
                            {0, 0, 0, 1, 1},
                            {1, 1, 1, 1, 1}})));
    CHECK(verify_linear_aont(a.m, 2, 4).pass);
    CHECK(verify_linear_aont(construct_bs(7).m, 2, 6).pass);
    CHECK_THROWS_AS(construct_bs(4), Error);
    CHECK_THROWS_AS(construct_bs(3), Error);
}

TEST_CASE("even matrix recertified at (2, s-1)") {
    CHECK(verify_linear_aont(construct_even_2s1(4).m, 2, 3).pass);
    CHECK(verify_linear_aont(construct_even_2s1(6).m, 2, 5).pass);
    CHECK_THROWS_AS(construct_even_2s1(2), Error);
    CHECK_THROWS_AS(construct_even_2s1(5), Error);
}

TEST_CASE("cauchy construction") {
    auto f5 = build_field_q(5);
    for (std::uint32_t t = 1; t <= 2; ++t) {
        auto a = construct_cauchy(t, 2, f5);
        CHECK(verify_linear_aont(a.m, t, t).pass);
    }
    auto a37 = construct_cauchy(2, 3, build_field_q(7));
    CHECK(verify_linear_aont(a37.m, 2, 2).pass);
    CHECK(verify_linear_aont(a37.m, 3, 3).pass); // Cauchy gives every strength at once
    CHECK_THROWS_AS(construct_cauchy(2, 3, build_field_q(5)), Error); // q < 2s
    // extension field works too
    CHECK(verify_linear_aont(construct_cauchy(2, 2, build_field_q(4)).m, 2, 2).pass);
}

TEST_CASE("transform and inverse") {
    auto even = construct_even_bastion(4);
    CHECK(transform(even, std::vector<Fe>{1, 0, 0, 0}) == std::vector<Fe>{0, 1, 1, 1});
    CHECK(inverse_transform(even, std::vector<Fe>{0, 1, 1, 1}) == std::vector<Fe>{1, 0, 0, 0});
    CHECK(transform(even, std::vector<Fe>{0, 0, 0, 0}) == std::vector<Fe>{0, 0, 0, 0});

    auto odd = construct_odd_bastion(5);
    CHECK(transform(odd, std::vector<Fe>{1, 0, 0, 0, 0}) == std::vector<Fe>{1, 1, 0, 0, 0});
    CHECK(inverse_transform(odd, std::vector<Fe>{1, 1, 0, 0, 0}) == std::vector<Fe>{1, 0, 0, 0, 0});
    CHECK(inverse_transform(odd, std::vector<Fe>{0, 0, 0, 0, 0}) == std::vector<Fe>{0, 0, 0, 0, 0});

    CHECK_THROWS_AS(transform(even, std::vector<Fe>{1, 0}), Error);
}

TEST_CASE("fast bastion paths agree with the matrix route on every input") {
    for (std::uint32_t s : {2u, 3u, 4u, 5u, 6u, 7u}) {
        auto a = s % 2 == 0 ? construct_even_bastion(s) : construct_odd_bastion(s);
        for (std::uint32_t code = 0; code < (1u << s); ++code) {
            std::vector<Fe> x(s);
            for (std::uint32_t b = 0; b < s; ++b) x[b] = (code >> b) & 1;
            const auto y_fast = fast_bastion_transform(s, x);
            CHECK(y_fast == transform(a, x));
            CHECK(fast_bastion_inverse(s, y_fast) == x);
        }
    }
}

TEST_CASE("odd fast path costs exactly 2s-2 XORs") {
    for (std::uint32_t s : {3u, 5u, 7u, 9u}) {
        std::vector<Fe> x(s, 0);
        x[0] = 1;
        std::uint64_t xors = 0;
        auto y = fast_bastion_transform(s, x, &xors);
        CHECK(xors == 2 * s - 2);
        xors = 0;
        fast_bastion_inverse(s, y, &xors);
        CHECK(xors == 2 * s - 2);
    }
    CHECK_THROWS_AS(fast_bastion_transform(1, std::vector<Fe>{1}), Error);
}

TEST_CASE("catalog loads, certifies and serves lookups") {
    const auto& entries = catalog();
    CHECK(entries.size() == 16);
    for (const auto& e : entries) {
        CHECK(verify_linear_aont(e.m, e.params.ti, e.params.to).pass);
        CHECK(e.params.ti == 2);
    }
    auto a242 = catalog_lookup(2, 4, 5, 2);
    REQUIRE(a242.has_value());
    CHECK(equal(a242->m, mk(2, {{1, 1, 1, 0, 1},
                                {1, 0, 0, 1, 0},
                                {0, 1, 0, 1, 0},
                                {0, 0, 1, 1, 0},
                                {0, 0, 0, 0, 1}})));
    CHECK(catalog_lookup(2, 3, 8, 7).has_value());
    CHECK(!catalog_lookup(9, 9, 9, 2).has_value());
}

TEST_CASE("round trip on catalog transforms with random inputs") {
    std::mt19937_64 rng(7);
    for (const auto& a : catalog()) {
        for (int iter = 0; iter < 1000; ++iter) {
            std::vector<Fe> x(a.params.s);
            for (auto& v : x) v = rng() % a.params.q;
            CHECK(inverse_transform(a, transform(a, x)) == x);
        }
    }
}

TEST_CASE("passing verdicts are monotone in to and antitone in ti") {
    for (const auto& a : catalog()) {
        for (std::uint32_t to2 = a.params.to; to2 <= a.params.s; ++to2)
            CHECK(verify_linear_aont(a.m, a.params.ti, to2, 2).pass);
        for (std::uint32_t ti2 = 1; ti2 <= a.params.ti; ++ti2)
            CHECK(verify_linear_aont(a.m, ti2, a.params.to, 2).pass);
    }
}

TEST_CASE("symmetric-case duality: small Cauchy matrices") {
    struct Case {
        std::uint32_t s, q;
    };
    for (auto [s, q] : {Case{2, 5}, Case{3, 7}, Case{4, 8}, Case{5, 11}, Case{6, 13}}) {
        auto a = construct_cauchy(1, s, build_field_q(q));
        for (std::uint32_t t = 1; t <= s; ++t) {
            REQUIRE(verify_linear_aont(a.m, t, t).pass);
            if (t == s) continue;
            // every (s-t) x (s-t) submatrix of the inverse must be invertible
            std::vector<std::uint32_t> rows(s - t);
            for (std::uint32_t i = 0; i < s - t; ++i) rows[i] = i;
            do {
                std::vector<std::uint32_t> cols(s - t);
                for (std::uint32_t i = 0; i < s - t; ++i) cols[i] = i;
                do {
                    CHECK(rank(submatrix(a.m_inv, {rows, cols})) == s - t);
                } while (next_combination(cols, s));
            } while (next_combination(rows, s));
        }
    }
}

TEST_CASE("shrinking drops one dimension and stays certified") {
    auto a242 = *catalog_lookup(2, 4, 5, 2);
    auto shrunk = shrink_by_cofactor(a242);
    CHECK(shrunk.params.s == 4);
    CHECK(verify_linear_aont(shrunk.m, 2, 4).pass);

    // chain: (2,5,8,2) -> 7 -> 6 -> 5, every stop certified
    auto cur = *catalog_lookup(2, 5, 8, 2);
    for (std::uint32_t expect = 7; expect >= 5; --expect) {
        cur = shrink_by_cofactor(cur);
        CHECK(cur.params.s == expect);
        CHECK(verify_linear_aont(cur.m, 2, 5).pass);
    }
    CHECK_THROWS_AS(shrink_by_cofactor(cur), Error); // s == to now

    // cofactor mechanics on the identity: row 0 with column 0 removed leaves
    // the smaller identity
    auto id = identity_matrix(build_field_q(2), 3);
    auto col = least_invertible_cofactor_col(id);
    REQUIRE(col.has_value());
    CHECK(*col == 0);
    CHECK(equal(submatrix(id, {{1, 2}, {1, 2}}), identity_matrix(build_field_q(2), 2)));
    CHECK(!least_invertible_cofactor_col(mk(2, {{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("make_linear_aont refuses matrices that fail the criterion") {
    CHECK_THROWS_AS(make_linear_aont(2, 2, mk(2, kE232)), Error);
    CHECK_NOTHROW(make_linear_aont(2, 3, mk(2, kE232)));
}
