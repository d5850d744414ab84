#ifndef LEFSCHETZ_SRC_BINOMIAL_HPP
#define LEFSCHETZ_SRC_BINOMIAL_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace lefschetz::detail {

// C(n, k) in 64-bit arithmetic; 0 outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    __int128 result = 1;
    for (std::int64_t i = 1; i <= k; ++i)
    {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::int64_t>(result);
}

}   // namespace lefschetz::detail

#endif
