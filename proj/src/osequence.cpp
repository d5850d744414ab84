#include "lefschetz/osequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "binomial.hpp"

namespace lefschetz {

int degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

bool divides(const Monomial& a, const Monomial& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v])
            return false;
    return true;
}

std::vector<Monomial> monomialsOfDegree(int n, int d)
{
    std::vector<Monomial> out;
    if (n < 0 || d < 0)
        return out;
    if (n == 0)
    {
        if (d == 0)
            out.emplace_back();
        return out;
    }
    Monomial current(n, 0);
    std::function<void(int, int)> fill = [&](int v, int left) {
        if (v == n - 1)
        {
            current[v] = left;
            out.push_back(current);
            return;
        }
        for (int e = left; e >= 0; --e)
        {
            current[v] = e;
            fill(v + 1, left - e);
        }
    };
    fill(0, d);
    return out;
}

namespace {

// Every divisor of m, in no particular order.
std::vector<Monomial> divisorsOf(const Monomial& m)
{
    std::vector<Monomial> out;
    Monomial current(m.size(), 0);
    std::function<void(std::size_t)> fill = [&](std::size_t v) {
        if (v == m.size())
        {
            out.push_back(current);
            return;
        }
        for (int e = 0; e <= m[v]; ++e)
        {
            current[v] = e;
            fill(v + 1);
        }
    };
    fill(0);
    return out;
}

bool basisOrder(const Monomial& a, const Monomial& b)
{
    return a > b;
}

Integer multinomial(const Monomial& exponents)
{
    Integer result = 1;
    int total = 0;
    for (int e : exponents)
    {
        total += e;
        result *= detail::binomial(total, e);
    }
    return result;
}

}   // namespace

MonomialSet::MonomialSet(int vars, std::vector<Monomial> generators)
    : vars_(vars), degree_(0)
{
    if (vars < 1)
        throw std::invalid_argument("a monomial set needs at least one variable");
    if (generators.empty())
        throw std::invalid_argument("a monomial set needs at least one generator");
    for (const Monomial& m : generators)
    {
        if (static_cast<int>(m.size()) != vars)
            throw std::invalid_argument("exponent vector of length " + std::to_string(m.size()) + ", expected " +
                                        std::to_string(vars));
        if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; }))
            throw std::invalid_argument("negative exponent");
    }
    degree_ = lefschetz::degree(generators.front());
    if (degree_ < 1)
        throw std::invalid_argument("generators must have degree at least 1");
    for (const Monomial& m : generators)
        if (lefschetz::degree(m) != degree_)
            throw std::invalid_argument("generators of mixed degrees " + std::to_string(degree_) + " and " +
                                        std::to_string(lefschetz::degree(m)));
    std::sort(generators.begin(), generators.end(), basisOrder);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    generators_ = std::move(generators);
}

InverseSystemRing::InverseSystemRing(int vars, std::vector<std::vector<Monomial>> bases)
    : vars_(vars), bases_(std::move(bases))
{
    for (auto& level : bases_)
    {
        std::sort(level.begin(), level.end(), basisOrder);
        std::map<Monomial, std::size_t> positions;
        for (std::size_t i = 0; i < level.size(); ++i)
            positions.emplace(level[i], i);
        index_.push_back(std::move(positions));
    }
}

std::vector<std::int64_t> InverseSystemRing::dims() const
{
    std::vector<std::int64_t> out;
    for (const auto& level : bases_)
        out.push_back(static_cast<std::int64_t>(level.size()));
    return out;
}

std::optional<std::size_t> InverseSystemRing::indexOf(const Monomial& m) const
{
    const int d = degree(m);
    if (d < 0 || d >= static_cast<int>(index_.size()))
        return std::nullopt;
    auto it = index_[d].find(m);
    if (it == index_[d].end())
        return std::nullopt;
    return it->second;
}

InverseSystemRing orderIdeal(const MonomialSet& ms)
{
    std::vector<std::set<Monomial>> levels(ms.degree() + 1);
    for (const Monomial& g : ms.generators())
        for (Monomial& d : divisorsOf(g))
        {
            const int deg = degree(d);
            levels[deg].insert(std::move(d));
        }
    std::vector<std::vector<Monomial>> bases;
    for (auto& level : levels)
        bases.emplace_back(level.begin(), level.end());
    return InverseSystemRing(ms.vars(), std::move(bases));
}

PureOSequence pureOSequence(const MonomialSet& ms)
{
    PureOSequence out;
    out.h = orderIdeal(ms).dims();
    for (int v = 0; v < ms.vars(); ++v)
    {
        const bool used = std::any_of(ms.generators().begin(), ms.generators().end(),
                                      [&](const Monomial& g) { return g[v] > 0; });
        if (!used)
            out.unusedVariables.push_back(v + 1);
    }
    return out;
}

template <typename Scalar>
DenseMatrix<Scalar> lefschetzMatrix(const InverseSystemRing& r, int degree, int power)
{
    if (degree < 0 || power < 0 || degree + power > r.topDegree())
        throw std::out_of_range("Lefschetz map from degree " + std::to_string(degree) + " by power " +
                                std::to_string(power) + " leaves degrees 0.." + std::to_string(r.topDegree()));
    const auto& source = r.basis(degree);
    const auto& target = r.basis(degree + power);
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(target.size()),
                                                      static_cast<Eigen::Index>(source.size()));
    Monomial diff(r.vars());
    for (std::size_t b = 0; b < target.size(); ++b)
        for (std::size_t a = 0; a < source.size(); ++a)
        {
            if (!divides(source[a], target[b]))
                continue;
            for (int v = 0; v < r.vars(); ++v)
                diff[v] = target[b][v] - source[a][v];
            m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = Scalar(multinomial(diff));
        }
    return m;
}

template DenseMatrix<Rational> lefschetzMatrix<Rational>(const InverseSystemRing&, int, int);
template DenseMatrix<Integer> lefschetzMatrix<Integer>(const InverseSystemRing&, int, int);

IHLReport checkIhl(const InverseSystemRing& r)
{
    IHLReport report;
    report.k = r.topDegree();
    report.dims = r.dims();
    const int k = report.k;
    for (int i = 0; 2 * i <= k; ++i)
    {
        const auto rk = static_cast<std::int64_t>(rank(lefschetzMatrix<Integer>(r, i, k - 2 * i)));
        report.lefschetz.push_back({i, k - 2 * i, rk, rk == report.dims[i]});
    }
    for (int i = 0; 2 * i <= k && i < k; ++i)
    {
        const auto rk = static_cast<std::int64_t>(rank(lefschetzMatrix<Integer>(r, i, 1)));
        report.steps.push_back({i, 1, rk, rk == report.dims[i]});
    }
    return report;
}

std::vector<std::int64_t> factorRingDims(const MonomialSet& ms, std::size_t j)
{
    if (j >= ms.generators().size())
        throw std::out_of_range("generator index " + std::to_string(j) + " out of range");
    std::vector<std::int64_t> dims(ms.degree() + 1, 0);
    for (const Monomial& d : divisorsOf(ms.generators()[j]))
        ++dims[degree(d)];
    return dims;
}

ProjectionReport projectionSeparation(const InverseSystemRing& r, const MonomialSet& ms)
{
    ProjectionReport report;
    report.check = CheckReport::pass();
    for (int l = 0; l <= r.topDegree(); ++l)
    {
        std::vector<int> counts;
        for (const Monomial& b : r.basis(l))
        {
            const auto c = std::count_if(ms.generators().begin(), ms.generators().end(),
                                         [&](const Monomial& g) { return divides(b, g); });
            counts.push_back(static_cast<int>(c));
            if (c == 0 && report.check.passed)
                report.check = CheckReport::fail("uncovered_basis_monomial", b, static_cast<std::size_t>(l),
                                                 "basis monomial divides no generator");
        }
        report.multiplicity.push_back(std::move(counts));
    }
    return report;
}

namespace {

class RealizationSearch
{
  public:
    RealizationSearch(std::span<const std::int64_t> h, int vars)
        : h_(h.begin(), h.end()), k_(static_cast<int>(h.size()) - 1), vars_(vars),
          candidates_(monomialsOfDegree(vars, k_)), refs_(k_ + 1)
    {
        for (const Monomial& c : candidates_)
        {
            std::vector<std::int64_t> perDegree(k_ + 1, 0);
            auto divisors = divisorsOf(c);
            for (const Monomial& d : divisors)
                ++perDegree[degree(d)];
            divisors_.push_back(std::move(divisors));
            if (maxNew_.empty())
                maxNew_ = perDegree;
            for (int l = 0; l <= k_; ++l)
                maxNew_[l] = std::max(maxNew_[l], perDegree[l]);
        }
    }

    std::optional<MonomialSet> run()
    {
        if (search(0))
            return MonomialSet(vars_, chosenMonomials());
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::size_t candidateCount() const { return candidates_.size(); }

  private:
    bool search(std::size_t next)
    {
        ++nodes_;
        const auto remaining = static_cast<std::int64_t>(h_[k_]) - static_cast<std::int64_t>(chosen_.size());
        if (remaining == 0)
        {
            for (int l = 0; l <= k_; ++l)
                if (static_cast<std::int64_t>(refs_[l].size()) != h_[l])
                    return false;
            return true;
        }
        if (static_cast<std::int64_t>(candidates_.size() - next) < remaining)
            return false;
        for (int l = 0; l <= k_; ++l)
            if (static_cast<std::int64_t>(refs_[l].size()) + remaining * maxNew_[l] < h_[l])
                return false;

        for (std::size_t c = next; c < candidates_.size(); ++c)
        {
            if (chosen_.empty() && !std::is_sorted(candidates_[c].rbegin(), candidates_[c].rend()))
                continue;
            add(c);
            bool feasible = true;
            for (int l = 0; l <= k_ && feasible; ++l)
                feasible = static_cast<std::int64_t>(refs_[l].size()) <= h_[l];
            if (feasible && search(c + 1))
                return true;
            remove(c);
        }
        return false;
    }

    void add(std::size_t c)
    {
        chosen_.push_back(c);
        for (const Monomial& d : divisors_[c])
            ++refs_[degree(d)][d];
    }

    void remove(std::size_t c)
    {
        chosen_.pop_back();
        for (const Monomial& d : divisors_[c])
        {
            auto& level = refs_[degree(d)];
            auto it = level.find(d);
            if (--it->second == 0)
                level.erase(it);
        }
    }

    std::vector<Monomial> chosenMonomials() const
    {
        std::vector<Monomial> out;
        for (std::size_t c : chosen_)
            out.push_back(candidates_[c]);
        return out;
    }

    std::vector<std::int64_t> h_;
    int k_;
    int vars_;
    std::vector<Monomial> candidates_;
    std::vector<std::vector<Monomial>> divisors_;
    std::vector<std::int64_t> maxNew_;
    std::vector<std::map<Monomial, int>> refs_;
    std::vector<std::size_t> chosen_;
    std::uint64_t nodes_ = 0;
};

}   // namespace

RealizationResult findPureORealization(std::span<const std::int64_t> h, int maxVars)
{
    if (h.size() < 2 || h[0] != 1)
        throw std::invalid_argument("realization search needs h_0 = 1 and k >= 1");
    if (std::any_of(h.begin(), h.end(), [](std::int64_t x) { return x <= 0; }))
        throw std::invalid_argument("realization search needs positive entries");
    const int k = static_cast<int>(h.size()) - 1;
    if (k > 5 || maxVars > 5 || h[1] > maxVars || h[k] > 8)
        throw std::invalid_argument("realization search limited to k <= 5, h_1 <= max_vars <= 5, h_k <= 8");

    const int vars = static_cast<int>(h[1]);
    RealizationSearch search(h, vars);
    RealizationResult result;
    result.witness = search.run();
    result.nodesVisited = search.nodes();

    // C(candidates, h_k) without overflow.
    Integer space = 1;
    const auto m = static_cast<std::int64_t>(search.candidateCount());
    const std::int64_t s = h[k];
    if (s > m)
        space = 0;
    else
        for (std::int64_t i = 1; i <= s; ++i)
            space = space * (m - s + i) / i;
    result.searchSpace = space;
    return result;
}

}   // namespace lefschetz
