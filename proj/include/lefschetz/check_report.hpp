#ifndef LEFSCHETZ_CHECK_REPORT_HPP
#define LEFSCHETZ_CHECK_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

/**
 * Outcome of a combinatorial verification. On failure `condition` names the
 * first violated condition and `witness` carries the offending face, vertex
 * set or sequence index, depending on the check.
 */
struct CheckReport
{
    bool passed = true;
    std::string condition;
    std::vector<int> witness;
    std::optional<std::size_t> index;
    std::string message;

    static CheckReport pass() { return {}; }

    static CheckReport fail(std::string condition, std::vector<int> witness = {},
                            std::optional<std::size_t> index = std::nullopt, std::string message = {})
    {
        return {false, std::move(condition), std::move(witness), index, std::move(message)};
    }
};

}   // namespace lefschetz

#endif
