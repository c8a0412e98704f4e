#include "doctest.h"

#include "aont/bounds.hpp"
#include "aont/error.hpp"
#include "aont/linear.hpp"

using namespace aont;

TEST_CASE("general counting bound") {
    // ti = 3, q = 3: floor(13(to-1)/2)
    CHECK(bound_general(3, 3, 3).value == 13);
    CHECK(bound_general(3, 4, 3).value == 19);
    CHECK(bound_general(3, 5, 3).value == 26);
    CHECK(bound_general(2, 2, 2).value == 3);
    CHECK(bound_general(2, 5, 2).value == (5 - 1) * 3); // (to-1)(q+1) at ti=2
    CHECK_THROWS_AS(bound_general(1, 3, 2), Error);
    CHECK_THROWS_AS(bound_general(2, 3, 6), Error); // not a prime power
}

TEST_CASE("ti=2 bound") {
    CHECK(bound_ti2(4, 2).value == 7);
    CHECK(bound_ti2(5, 2).value == 10);
    CHECK(bound_ti2(2, 2).value == 3);
    for (std::uint32_t to = 3; to <= 12; ++to) CHECK(bound_ti2(to, 2).value == 3 * to - 5);
    for (std::uint32_t to = 2; to <= 3; ++to) CHECK(bound_ti2(to, 3).value == 2 * to);
    for (std::uint32_t to = 4; to <= 12; ++to) CHECK(bound_ti2(to, 3).value == 4 * to - 7);
    CHECK_THROWS_AS(bound_ti2(1, 2), Error);
}

TEST_CASE("ti=2 bound always beats the general bound") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u})
        for (std::uint32_t to = 2; to <= 20; ++to) {
            const long long general = bound_general(2, to, q).value;
            CHECK(general == static_cast<long long>(to - 1) * (q + 1));
            CHECK(bound_ti2(to, q).value < static_cast<long long>(to - 1) * (q + 1));
            CHECK(bound_ti2(to, q).value <= general);
        }
}

TEST_CASE("best upper bound folds in recorded knowledge") {
    auto b = best_upper_bound(2, 4, 2);
    CHECK(b.value == 5);
    CHECK(b.source == "exhaustive search");

    auto p = best_upper_bound(2, 2, 7);
    CHECK(p.value == 7);
    CHECK(p.source == "S(2,2,q) = q for prime q");

    auto e = best_upper_bound(2, 2, 8);
    CHECK(e.value == 8);
    CHECK(e.source == "S(2,2,q) <= q");

    CHECK(best_upper_bound(2, 3, 3).value == 6);
    CHECK(best_upper_bound(2, 5, 2).value == 8);

    auto open = best_upper_bound(1, 3, 2);
    CHECK(!open.finite);

    CHECK_THROWS_AS(best_upper_bound(3, 2, 2), Error);
}

TEST_CASE("theorem-only refusal bound") {
    CHECK(!theorem_upper_s(1, 2, 2).has_value());
    CHECK(theorem_upper_s(2, 4, 2) == 7);  // not the search-settled 5
    CHECK(theorem_upper_s(2, 2, 7) == 8);  // not the recorded q
    CHECK(theorem_upper_s(3, 3, 3) == 13);
}

TEST_CASE("known ranges") {
    auto r = known_range(6, 3);
    CHECK(r.lower == 13);
    CHECK(r.upper == 17);
    CHECK(!r.exact);

    auto r2 = known_range(3, 7);
    CHECK(r2.lower == 8);
    CHECK(r2.upper == 14);

    auto r3 = known_range(3, 2);
    CHECK(r3.lower == 4);
    CHECK(r3.upper == 4);
    CHECK(r3.exact);
    CHECK(r3.upper_source == "ti=2 counting bound");

    auto r4 = known_range(4, 2);
    CHECK(r4.upper == 5);
    CHECK(r4.upper_source == "exhaustive search");
    CHECK(r4.exact);

    CHECK_THROWS_AS(known_range(9, 2), Error);
    CHECK_THROWS_AS(known_range(3, 11), Error);
}

TEST_CASE("every catalog matrix respects the best upper bound") {
    for (const auto& a : catalog()) {
        auto b = best_upper_bound(a.params.ti, a.params.to, a.params.q);
        REQUIRE(b.finite);
        CHECK(static_cast<long long>(a.params.s) <= b.value);
        // and the catalog sizes are exactly the recorded lower bounds
        auto r = known_range(a.params.to, a.params.q);
        CHECK(r.lower == a.params.s);
    }
}

TEST_CASE("published grid rows: seven match the theorems, two are looser") {
    const auto rows = bound_table_rows();
    REQUIRE(rows.size() == 9);
    int inconsistent = 0;
    for (const auto& r : rows) {
        const std::uint32_t hi = r.to_max ? r.to_max : r.to_min + 12;
        for (std::uint32_t to = r.to_min; to <= hi; ++to) {
            if (r.consistent)
                CHECK(published_bound_value(r, to) == theorem_bound_value(r, to));
            else
                CHECK(theorem_bound_value(r, to) <= published_bound_value(r, to));
        }
        inconsistent += !r.consistent;
    }
    CHECK(inconsistent == 2);
    // the two looser cells are the 3-input rows over q = 4 and q = 5
    CHECK(!rows[7].consistent);
    CHECK(rows[7].ti == 3);
    CHECK(rows[7].q == 4);
    CHECK(published_bound_value(rows[7], 2) == 20);
    CHECK(theorem_bound_value(rows[7], 2) == 10);
    CHECK(!rows[8].consistent);
    CHECK(published_bound_value(rows[8], 3) == 121);
    CHECK(theorem_bound_value(rows[8], 3) == 31);
}
