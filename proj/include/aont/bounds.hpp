#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aont {

/// An upper bound on the largest s admitting a linear (ti,to,s,q) transform,
/// together with where it came from. `finite == false` marks the ti = 1 case,
/// where constructions exist for every s and these bounds say nothing.
struct BoundResult {
    long long value = 0;
    bool finite = true;
    std::string source;
    std::uint32_t ti = 0, to = 0, q = 0;
};

/// General bound for ti >= 2: counting rows of a fixed ti-column submatrix by
/// scaling-equivalence classes gives
///   s <= (to - 1)(q^ti - 1) / ((ti - 1)(q - 1)),
/// floored since s is integral.
BoundResult bound_general(std::uint32_t ti, std::uint32_t to, std::uint32_t q);

/// Refinement for ti = 2:
///   s <= max{ 1 + (to - 2)(q + 1), 2 + (to - 1)(q - 1) }.
BoundResult bound_ti2(std::uint32_t to, std::uint32_t q);

/// Minimum over every bound applicable to (ti, to, q), folding in recorded
/// special knowledge: S(2,2,q) <= q (equality for prime q) and the two
/// exhaustively settled values S(2,4,2) = 5 and S(2,5,2) = 8.
BoundResult best_upper_bound(std::uint32_t ti, std::uint32_t to, std::uint32_t q);

/// Theorem-only upper bound used to refuse hopeless searches: min of
/// bound_general and (for ti = 2) bound_ti2. nullopt when ti == 1.
std::optional<long long> theorem_upper_s(std::uint32_t ti, std::uint32_t to, std::uint32_t q);

/// One row of the ti = 2 summary: best published lower and upper bounds on
/// the maximal s, with provenance. `exact` when they meet.
struct KnownRange {
    std::uint32_t to = 0, q = 0;
    std::uint32_t lower = 0;
    std::string lower_source;
    std::uint32_t upper = 0;
    std::string upper_source;
    bool exact = false;
};

/// The recorded (to, q) row; throws unknown_entry for pairs outside the table.
KnownRange known_range(std::uint32_t to, std::uint32_t q);

/// All recorded rows, grouped by q then to (the order they are published in).
std::vector<KnownRange> known_range_table();

/// Row of the evaluated-bounds summary grid: the published cell is the linear
/// form (a*to + b)/den in to, valid for to in [to_min, to_max] (to_max == 0
/// means unbounded). `consistent` records whether evaluating the cited
/// theorem reproduces the published value for every to in range; the two
/// 3-column rows over q = 4 and q = 5 are published looser than the theorem
/// actually gives, and are kept here as published.
struct Table1Row {
    std::uint32_t ti = 0, q = 0;
    std::uint32_t to_min = 0, to_max = 0;
    long long a = 0, b = 0, den = 1;
    std::string justification;
    bool consistent = true;
};

std::vector<Table1Row> bound_table_rows();

/// The published cell of `row` evaluated at to (floored).
long long published_bound_value(const Table1Row& row, std::uint32_t to);

/// The cited theorem evaluated at (row.ti, to, row.q).
long long theorem_bound_value(const Table1Row& row, std::uint32_t to);

} // namespace aont
