#pragma once

#include <cstdint>
#include <vector>

namespace aont {

/// C(n, k) saturating at UINT64_MAX (inputs here are desk-scale; the guard
/// only matters for user-supplied extremes).
std::uint64_t binomial(unsigned n, unsigned k);

/// Advances `c` (strictly increasing indices into [0, n)) to the next
/// combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n);

/// The combination of k indices from [0, n) with lexicographic rank r.
std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k, std::uint64_t r);

} // namespace aont
