#include "lefschetz/sr_algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>

namespace lefschetz {

std::vector<Monomial> standardMonomials(const SimplicialComplex& s, int d)
{
    const int n = static_cast<int>(s.vertices().size());
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    if (d == 0)
    {
        out.emplace_back(n, 0);
        return out;
    }
    for (int size = 1; size <= std::min(d, s.rank()); ++size)
    {
        for (FaceMask face : s.faceMasks(size))
        {
            std::vector<int> support;
            for (int v = 0; v < n; ++v)
                if (face >> v & 1)
                    support.push_back(v);
            // Compositions of d into `size` positive parts placed on the support.
            Monomial m(n, 0);
            std::function<void(int, int)> fill = [&](int slot, int left) {
                if (slot == size - 1)
                {
                    m[support[slot]] = left;
                    out.push_back(m);
                    return;
                }
                for (int e = 1; e <= left - (size - 1 - slot); ++e)
                {
                    m[support[slot]] = e;
                    fill(slot + 1, left - e);
                }
            };
            fill(0, d);
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
    return out;
}

namespace {

std::int64_t drawCoefficient(std::mt19937_64& gen, int bound)
{
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
    std::uint64_t x;
    do
        x = gen();
    while (x >= limit);
    return static_cast<std::int64_t>(x % range) - bound;
}

using Polynomial = std::map<Monomial, Rational>;

Polynomial multiplyByLinear(const Polynomial& p, const std::vector<Rational>& form)
{
    Polynomial out;
    for (const auto& [mono, coef] : p)
        for (std::size_t t = 0; t < form.size(); ++t)
        {
            if (form[t] == 0)
                continue;
            Monomial shifted = mono;
            ++shifted[t];
            Rational& slot = out[shifted];
            slot += coef * form[t];
        }
    std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
    return out;
}

Polynomial constantOne(int m)
{
    return Polynomial{{Monomial(m, 0), Rational(1)}};
}

/**
 * C[Σ]/(θ) presented as C[y_1..y_m]/J after eliminating the pivot
 * variables of θ. `linear[v]` is the image of vertex variable v.
 */
class ReducedQuotient
{
  public:
    ReducedQuotient(const SimplicialComplex& s, const RationalMatrix& forms)
    {
        const int n = static_cast<int>(s.vertices().size());
        std::vector<Eigen::Index> pivots;
        const RationalMatrix rref = reducedRowEchelon(forms, &pivots);
        std::vector<int> free;
        for (int v = 0; v < n; ++v)
            if (std::find(pivots.begin(), pivots.end(), v) == pivots.end())
                free.push_back(v);
        m_ = static_cast<int>(free.size());

        linear_.assign(n, std::vector<Rational>(m_, Rational(0)));
        for (int t = 0; t < m_; ++t)
            linear_[free[t]][t] = 1;
        for (std::size_t j = 0; j < pivots.size(); ++j)
            for (int t = 0; t < m_; ++t)
                linear_[pivots[j]][t] = -rref(static_cast<Eigen::Index>(j), free[t]);

        omega_.assign(m_, Rational(0));
        for (int v = 0; v < n; ++v)
            for (int t = 0; t < m_; ++t)
                omega_[t] += linear_[v][t];

        topDegree_ = s.rank() + 1;
        for (FaceMask nonFace : s.minimalNonFaces(topDegree_))
        {
            Polynomial p = constantOne(m_);
            for (int v = 0; v < n; ++v)
                if (nonFace >> v & 1)
                    p = multiplyByLinear(p, linear_[v]);
            generators_.emplace_back(std::popcount(nonFace), std::move(p));
        }
    }

    int freeVariables() const { return m_; }

    // Spanning rows of J_d.
    const std::vector<Polynomial>& ideal(int d)
    {
        auto it = idealRows_.find(d);
        if (it != idealRows_.end())
            return it->second;
        std::vector<Polynomial> rows;
        for (const auto& [size, p] : generators_)
        {
            if (size > d)
                continue;
            for (const Monomial& beta : monomialsOfDegree(m_, d - size))
                rows.push_back(shift(p, beta));
        }
        return idealRows_.emplace(d, std::move(rows)).first->second;
    }

    std::int64_t idealRank(int d)
    {
        auto it = idealRank_.find(d);
        if (it != idealRank_.end())
            return it->second;
        const std::int64_t r = rankOf(ideal(d), d);
        idealRank_.emplace(d, r);
        return r;
    }

    std::int64_t dim(int d)
    {
        if (d < 0)
            return 0;
        return static_cast<std::int64_t>(monomialsOfDegree(m_, d).size()) - idealRank(d);
    }

    // Rank of the map A_from -> A_{from+power} given by ω^power.
    std::int64_t lefschetzRank(int from, int power)
    {
        Polynomial w = constantOne(m_);
        for (int e = 0; e < power; ++e)
            w = multiplyByLinear(w, omega_);
        std::vector<Polynomial> rows = ideal(from + power);
        for (const Monomial& alpha : monomialsOfDegree(m_, from))
            rows.push_back(shift(w, alpha));
        return rankOf(rows, from + power) - idealRank(from + power);
    }

  private:
    static Polynomial shift(const Polynomial& p, const Monomial& beta)
    {
        Polynomial out;
        for (const auto& [mono, coef] : p)
        {
            Monomial shifted = mono;
            for (std::size_t t = 0; t < beta.size(); ++t)
                shifted[t] += beta[t];
            out.emplace(std::move(shifted), coef);
        }
        return out;
    }

    std::int64_t rankOf(const std::vector<Polynomial>& rows, int d) const
    {
        const std::vector<Monomial> columns = monomialsOfDegree(m_, d);
        if (rows.empty() || columns.empty())
            return 0;
        std::map<Monomial, Eigen::Index> position;
        for (std::size_t c = 0; c < columns.size(); ++c)
            position.emplace(columns[c], static_cast<Eigen::Index>(c));
        RationalMatrix matrix = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                                     static_cast<Eigen::Index>(columns.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [mono, coef] : rows[r])
                matrix(static_cast<Eigen::Index>(r), position.at(mono)) = coef;
        return static_cast<std::int64_t>(rank(matrix));
    }

    int m_ = 0;
    int topDegree_ = 0;
    std::vector<std::vector<Rational>> linear_;
    std::vector<Rational> omega_;
    std::vector<std::pair<int, Polynomial>> generators_;
    std::map<int, std::vector<Polynomial>> idealRows_;
    std::map<int, std::int64_t> idealRank_;
};

void requireShape(const SimplicialComplex& s, const LsopCandidate& theta)
{
    if (theta.forms.rows() != s.rank() || theta.forms.cols() != static_cast<Eigen::Index>(s.vertices().size()))
        throw std::invalid_argument("theta must have rank(s) = " + std::to_string(s.rank()) +
                                    " forms over " + std::to_string(s.vertices().size()) + " vertices");
}

QuotientReport computeQuotient(const SimplicialComplex& s, const LsopCandidate& theta, bool withIhl)
{
    requireShape(s, theta);
    ReducedQuotient quotient(s, theta.forms);
    const int k = s.rank();
    QuotientReport report;
    report.seedUsed = theta.seed;
    for (int d = 0; d <= k + 1; ++d)
        report.dims.push_back(quotient.dim(d));
    report.isLsop = report.dims[k + 1] == 0;
    const std::vector<std::int64_t> h = faceVectors(s).h;
    report.matchesH = std::equal(h.begin(), h.end(), report.dims.begin());

    if (withIhl && report.isLsop)
    {
        IHLReport ihl;
        ihl.k = k;
        ihl.dims.assign(report.dims.begin(), report.dims.begin() + k + 1);
        for (int i = 0; 2 * i <= k; ++i)
        {
            const std::int64_t rk = quotient.lefschetzRank(i, k - 2 * i);
            ihl.lefschetz.push_back({i, k - 2 * i, rk, rk == ihl.dims[i]});
        }
        for (int i = 0; 2 * i <= k && i < k; ++i)
        {
            const std::int64_t rk = quotient.lefschetzRank(i, 1);
            ihl.steps.push_back({i, 1, rk, rk == ihl.dims[i]});
        }
        report.ihl = std::move(ihl);
    }
    return report;
}

}   // namespace

LsopCandidate randomLsop(const SimplicialComplex& s, std::uint64_t seed, int bound)
{
    if (bound < 1)
        throw std::invalid_argument("coefficient bound must be at least 1");
    const int k = s.rank();
    const auto n = static_cast<Eigen::Index>(s.vertices().size());
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < 16; ++attempt)
    {
        RationalMatrix forms(k, n);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                forms(i, j) = Rational(drawCoefficient(gen, bound));
        if (rank(forms) == k)
            return {forms, seed};
    }
    throw std::runtime_error("could not draw " + std::to_string(k) + " independent linear forms");
}

QuotientReport quotientDims(const SimplicialComplex& s, const LsopCandidate& theta)
{
    return computeQuotient(s, theta, false);
}

QuotientReport quotientWithIhl(const SimplicialComplex& s, const LsopCandidate& theta)
{
    return computeQuotient(s, theta, true);
}

QuotientReport srIhlCheck(const SimplicialComplex& s, std::uint64_t seed, int maxResamples, int bound)
{
    if (!s.isPure())
        throw std::invalid_argument("IHL check needs a pure complex");
    std::optional<QuotientReport> lastValid;
    for (int attempt = 0; attempt <= maxResamples; ++attempt)
    {
        const std::uint64_t attemptSeed = seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
        QuotientReport report = quotientWithIhl(s, randomLsop(s, attemptSeed, bound));
        report.resamplesUsed = attempt;
        if (!report.isLsop)
            continue;
        if (report.ihl->allInjective())
        {
            report.status = IhlStatus::Pass;
            return report;
        }
        lastValid = std::move(report);
    }
    if (!lastValid)
        throw LsopNotFound("l.s.o.p. not found after " + std::to_string(maxResamples) + " resamples");
    lastValid->status = IhlStatus::Inconclusive;
    lastValid->resamplesUsed = maxResamples;
    return *lastValid;
}

}   // namespace lefschetz
