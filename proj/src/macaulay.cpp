#include "lefschetz/macaulay.hpp"

#include <stdexcept>

#include "binomial.hpp"

namespace lefschetz {

using detail::binomial;

std::int64_t MacaulayRep::value() const
{
    std::int64_t sum = 0;
    for (const auto& [n, j] : terms)
        sum += binomial(n, j);
    return sum;
}

MacaulayRep macaulayRepresentation(std::int64_t a, int i)
{
    if (a <= 0)
        throw std::invalid_argument("Macaulay representation needs a positive integer");
    if (i <= 0)
        throw std::invalid_argument("Macaulay representation needs a positive degree");
    MacaulayRep rep;
    rep.degree = i;
    std::int64_t rest = a;
    for (int j = i; j >= 1 && rest > 0; --j)
    {
        // Largest n with C(n, j) <= rest; C(j, j) = 1 <= rest so n >= j.
        std::int64_t n = j;
        while (binomial(n + 1, j) <= rest)
            ++n;
        rep.terms.emplace_back(n, j);
        rest -= binomial(n, j);
    }
    return rep;
}

std::int64_t pseudopower(std::int64_t a, int i)
{
    if (a < 0)
        throw std::invalid_argument("pseudopower of a negative integer");
    if (a == 0)
        return 0;
    std::int64_t sum = 0;
    for (const auto& [n, j] : macaulayRepresentation(a, i).terms)
        sum += binomial(n + 1, j + 1);
    return sum;
}

CheckReport isMSequence(std::span<const std::int64_t> seq)
{
    if (seq.empty())
        throw std::invalid_argument("empty sequence");
    if (seq[0] != 1)
        return CheckReport::fail("h0_not_one", {}, 0, "sequence must start with 1");
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] < 0)
            return CheckReport::fail("negative_entry", {}, i, "negative entry");
    // seq_1 <= seq_0^<0> = number of variables is unconstrained.
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
    {
        const std::int64_t bound = pseudopower(seq[i], static_cast<int>(i));
        if (seq[i + 1] > bound)
            return CheckReport::fail("macaulay_growth", {}, i + 1,
                                     "entry " + std::to_string(seq[i + 1]) + " exceeds Macaulay bound " +
                                         std::to_string(bound));
    }
    return CheckReport::pass();
}

HVectorChecks checkGInequalities(std::span<const std::int64_t> h)
{
    if (h.empty() || h[0] != 1)
        throw std::invalid_argument("g-inequalities need h_0 = 1");
    HVectorChecks out;
    out.h.assign(h.begin(), h.end());
    const std::size_t k = h.size() - 1;
    for (std::size_t i = 1; i <= k; ++i)
        out.g.push_back(h[i] - h[i - 1]);
    auto g = [&](std::size_t i) { return out.g[i - 1]; };

    const std::size_t half = k / 2;
    for (std::size_t i = 1; i <= half; ++i)
        if (g(i) < 0)
        {
            out.gOk = false;
            out.firstViolation = Violation{i, i, "g_negative"};
            return out;
        }
    for (std::size_t i = 1; i < half; ++i)
        if (g(i + 1) > pseudopower(g(i), static_cast<int>(i)))
        {
            out.gOk = false;
            out.firstViolation = Violation{i + 1, i + 1, "macaulay_growth"};
            return out;
        }
    out.gOk = true;
    return out;
}

HVectorChecks checkFlatness(std::span<const std::int64_t> h)
{
    HVectorChecks out;
    out.h.assign(h.begin(), h.end());
    if (h.empty())
    {
        out.flatnessOk = true;
        out.hibiChainOk = true;
        return out;
    }
    const std::size_t k = h.size() - 1;
    for (std::size_t i = 1; i <= k; ++i)
        out.g.push_back(h[i] - h[i - 1]);

    out.flatnessOk = true;
    for (std::size_t i = 0; 2 * i <= k && *out.flatnessOk; ++i)
        for (std::size_t j = i; j <= k - i; ++j)
            if (h[i] > h[j])
            {
                out.flatnessOk = false;
                out.firstViolation = Violation{i, j, "flatness"};
                break;
            }

    out.hibiChainOk = true;
    for (std::size_t i = 1; i + 1 <= k / 2; ++i)
        if (h[i] > h[i + 1])
            out.hibiChainOk = false;
    return out;
}

}   // namespace lefschetz
