#include "doctest.h"

#include "aont/gf.hpp"

using namespace aont;

namespace {

// Independent oracle: schoolbook polynomial multiplication mod the modulus,
// used to pin down extension-field products.
Fe poly_mul_oracle(Fe a, Fe b, std::uint32_t p, std::uint32_t k,
                   const std::vector<std::uint32_t>& mod) {
    std::vector<std::uint32_t> da(k, 0), db(k, 0), prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i, a /= p) da[i] = a % p;
    for (std::uint32_t i = 0; i < k; ++i, b /= p) db[i] = b % p;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::uint32_t d = 2 * k; d-- > k;) {
        const std::uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i <= k; ++i)
            prod[d - k + i] = (prod[d - k + i] + (p - c % p) * mod[i]) % p;
    }
    Fe out = 0;
    for (std::uint32_t i = k; i-- > 0;) out = out * p + prod[i];
    return out;
}

} // namespace

TEST_CASE("prime field basics") {
    auto f2 = build_field(2, 1);
    CHECK(f2->q == 2);
    CHECK(fe_add(1, 1, *f2) == 0);

    auto f5 = build_field(5, 1);
    CHECK(fe_mul(3, 4, *f5) == 2);

    auto f7 = build_field(7, 1);
    CHECK(fe_inv(3, *f7) == 5);
    CHECK(fe_mul(3, fe_inv(3, *f7), *f7) == 1);
}

TEST_CASE("gf4 uses the unique degree-2 modulus and matches the oracle") {
    auto f4 = build_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4->q == 4);
    CHECK(fe_mul(2, 2, *f4) == poly_mul_oracle(2, 2, 2, 2, {1, 1, 1}));
    CHECK(fe_mul(2, 2, *f4) == 3);
    CHECK(fe_inv(2, *f4) == 3);

    // default modulus picks the same polynomial
    auto fd = build_field(2, 2);
    CHECK(fd->modulus == std::vector<std::uint32_t>{1, 1, 1});

    for (Fe a = 0; a < 4; ++a)
        for (Fe b = 0; b < 4; ++b)
            CHECK(fe_mul(a, b, *f4) == poly_mul_oracle(a, b, 2, 2, {1, 1, 1}));
}

TEST_CASE("build_field rejects bad input") {
    CHECK_THROWS_WITH_AS(build_field(4, 1), doctest::Contains("not prime"), Error);
    CHECK_THROWS_AS(build_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error); // (x+1)^2
    try {
        build_field(2, 2, std::vector<std::uint32_t>{1, 0, 1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_irreducible);
        CHECK(std::string(e.what()).find("factor") != std::string::npos);
    }
    CHECK_THROWS_AS(build_field(2, 3, std::vector<std::uint32_t>{1, 1, 1}), Error); // wrong degree
    CHECK_THROWS_AS(fe_inv(0, *build_field(5, 1)), Error);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 64u}) {
        auto f = build_field_q(q);
        CAPTURE(q);
        for (Fe a = 0; a < q; ++a) {
            CHECK(fe_add(a, 0, *f) == a);
            CHECK(fe_mul(a, 1, *f) == a);
            CHECK(fe_add(a, fe_neg(a, *f), *f) == 0);
            if (a) CHECK(fe_mul(a, fe_inv(a, *f), *f) == 1);
            for (Fe b = 0; b < q; ++b) {
                CHECK(fe_add(a, b, *f) == fe_add(b, a, *f));
                CHECK(fe_mul(a, b, *f) == fe_mul(b, a, *f));
                CHECK(fe_sub(fe_add(a, b, *f), b, *f) == a);
                for (Fe c = 0; c < q; ++c) {
                    CHECK(fe_add(fe_add(a, b, *f), c, *f) == fe_add(a, fe_add(b, c, *f), *f));
                    CHECK(fe_mul(fe_mul(a, b, *f), c, *f) == fe_mul(a, fe_mul(b, c, *f), *f));
                    CHECK(fe_mul(a, fe_add(b, c, *f), *f) ==
                          fe_add(fe_mul(a, b, *f), fe_mul(a, c, *f), *f));
                }
            }
        }
    }
}

TEST_CASE("multiplication is repeated addition in prime fields") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
        auto f = build_field_q(q);
        for (Fe a = 0; a < q; ++a)
            for (Fe n = 0; n < q; ++n) {
                Fe acc = 0;
                for (Fe i = 0; i < n; ++i) acc = fe_add(acc, a, *f);
                CHECK(acc == fe_mul(a, n, *f));
            }
    }
}

TEST_CASE("prime power split") {
    CHECK(prime_power_split(8) == std::make_pair(2u, 3u));
    CHECK(prime_power_split(49) == std::make_pair(7u, 2u));
    CHECK(prime_power_split(13) == std::make_pair(13u, 1u));
    CHECK(!prime_power_split(6));
    CHECK(!prime_power_split(12));
    CHECK(!prime_power_split(1));
}

TEST_CASE("field header round trip") {
    for (std::uint32_t q : {2u, 3u, 4u, 9u, 49u}) {
        auto f = build_field_q(q);
        auto g = parse_field_header(field_header(*f));
        CHECK(g->q == f->q);
        CHECK(g->p == f->p);
        CHECK(g->k == f->k);
        CHECK(g->modulus == f->modulus);
    }
    CHECK_THROWS_AS(parse_field_header("4 2"), Error);
    CHECK_THROWS_AS(parse_field_header("8 2 3 1 1"), Error);
}
