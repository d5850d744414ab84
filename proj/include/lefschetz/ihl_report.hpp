#ifndef LEFSCHETZ_IHL_REPORT_HPP
#define LEFSCHETZ_IHL_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace lefschetz {

/** Rank of multiplication by ω^power from degree `from` to `from + power`. */
struct MapRank
{
    int from = 0;
    int power = 0;
    std::int64_t rank = 0;
    bool injective = false;
};

/**
 * Injective hard Lefschetz certificate for a graded algebra with top degree
 * k: ranks of ω^{k-2i}: A_i -> A_{k-i} for 0 <= 2i <= k, and of the single
 * steps ω: A_i -> A_{i+1} for 2i <= k. Only the steps below the middle
 * (2i < k) count towards allStepsInjective; the middle step of an even-k
 * algebra is reported for information.
 */
struct IHLReport
{
    int k = 0;
    std::vector<std::int64_t> dims;
    std::vector<MapRank> lefschetz;
    std::vector<MapRank> steps;

    bool allLefschetzInjective() const
    {
        return std::all_of(lefschetz.begin(), lefschetz.end(), [](const MapRank& m) { return m.injective; });
    }
    bool allStepsInjective() const
    {
        return std::all_of(steps.begin(), steps.end(),
                           [this](const MapRank& m) { return m.injective || 2 * m.from >= k; });
    }
    bool allInjective() const { return allLefschetzInjective() && allStepsInjective(); }
};

}   // namespace lefschetz

#endif
