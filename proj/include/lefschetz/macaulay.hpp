/**
 * Macaulay binomial representations, pseudopowers and the inequalities
 * built from them: M-sequences, g-inequalities and flatness of h-vectors.
 */

#ifndef LEFSCHETZ_MACAULAY_HPP
#define LEFSCHETZ_MACAULAY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/check_report.hpp"

namespace lefschetz {

/**
 * a = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_r, r) with
 * n_i > n_{i-1} > ... > n_r >= r >= 1. Terms are stored as (n_j, j),
 * highest j first.
 */
struct MacaulayRep
{
    int degree = 0;
    std::vector<std::pair<std::int64_t, int>> terms;

    std::int64_t value() const;
};

/** Greedy representation of a >= 1 in degree i >= 1. */
MacaulayRep macaulayRepresentation(std::int64_t a, int i);

/** a^<i>: sum of C(n_j + 1, j + 1) over the representation; 0 maps to 0. */
std::int64_t pseudopower(std::int64_t a, int i);

/**
 * seq_0 = 1, all entries nonnegative, and seq_{i+1} <= seq_i^<i> for i >= 1.
 * On failure `index` is the first offending position.
 */
CheckReport isMSequence(std::span<const std::int64_t> seq);

struct Violation
{
    std::size_t first = 0;   // index i
    std::size_t second = 0;  // index j for pairwise conditions, else i
    std::string kind;
};

struct HVectorChecks
{
    std::vector<std::int64_t> h;
    std::vector<std::int64_t> g;   // g_1 .. g_k
    std::optional<bool> gOk;
    std::optional<bool> flatnessOk;
    std::optional<bool> hibiChainOk;  // h_1 <= h_2 <= ... <= h_{floor(k/2)}
    std::optional<Violation> firstViolation;
};

/**
 * g_i >= 0 for 1 <= i <= floor(k/2), and g_{i+1} <= g_i^<i> for
 * 1 <= i < floor(k/2). Throws std::invalid_argument unless h_0 = 1.
 */
HVectorChecks checkGInequalities(std::span<const std::int64_t> h);

/** h_i <= h_j whenever 0 <= i <= j <= k - i; reports the first failing pair. */
HVectorChecks checkFlatness(std::span<const std::int64_t> h);

}   // namespace lefschetz

#endif
