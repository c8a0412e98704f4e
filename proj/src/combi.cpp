#include "aont/combi.hpp"

#include <limits>

namespace aont {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        // r * num / i is integral at every step; watch for overflow first.
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
    const std::uint32_t k = static_cast<std::uint32_t>(c.size());
    if (k == 0) return false;
    std::uint32_t i = k;
    while (i-- > 0) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k, std::uint64_t r) {
    std::vector<std::uint32_t> c(k);
    std::uint32_t x = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binomial(n - x - 1, k - i - 1);
            if (r < block) break;
            r -= block;
            ++x;
        }
        c[i] = x++;
    }
    return c;
}

} // namespace aont
