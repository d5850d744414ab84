#include "lefschetz/matroids.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>

namespace lefschetz {

namespace {

std::string formatFace(const Face& face)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < face.size(); ++i)
        out << (i ? "," : "") << face[i];
    out << '}';
    return out.str();
}

}   // namespace

BasisExchangeError::BasisExchangeError(Face first, Face second, int element)
    : std::invalid_argument("basis exchange fails for (" + formatFace(first) + ", " + formatFace(second) + ", " +
                            std::to_string(element) + ")"),
      first_(std::move(first)), second_(std::move(second)), element_(element)
{
}

struct Matroid::RankCache
{
    std::mutex mutex;
    std::map<std::uint64_t, int> ranks;
    std::vector<std::uint64_t> basisMasks;
};

Matroid::Matroid(std::vector<int> ground, std::variant<LinearOverQ, ExplicitBases> backend)
    : ground_(std::move(ground)), backend_(std::move(backend)), cache_(std::make_shared<RankCache>())
{
    if (ground_.size() > 63)
        throw std::invalid_argument("matroids are limited to 63 elements");
    if (const auto* linear = std::get_if<LinearOverQ>(&backend_))
    {
        rank_ = static_cast<int>(lefschetz::rank(linear->configuration));
    }
    else
    {
        const auto& bases = std::get<ExplicitBases>(backend_).bases;
        rank_ = static_cast<int>(bases.front().size());
        for (const Face& b : bases)
            cache_->basisMasks.push_back(maskOf(b));
    }
}

Matroid Matroid::fromMatrix(RationalMatrix configuration)
{
    std::vector<int> labels(configuration.cols());
    for (std::size_t j = 0; j < labels.size(); ++j)
        labels[j] = static_cast<int>(j) + 1;
    return fromMatrix(std::move(configuration), std::move(labels));
}

Matroid Matroid::fromMatrix(RationalMatrix configuration, std::vector<int> labels)
{
    if (configuration.cols() == 0)
        throw std::invalid_argument("matroid needs at least one column");
    if (static_cast<Eigen::Index>(labels.size()) != configuration.cols())
        throw std::invalid_argument("one label per column required");
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("labels must be strictly increasing");
    return Matroid(std::move(labels), LinearOverQ{std::move(configuration)});
}

Matroid Matroid::fromBases(int n, std::vector<Face> bases)
{
    if (n < 0)
        throw std::invalid_argument("negative ground set size");
    std::vector<int> ground(n);
    for (int i = 0; i < n; ++i)
        ground[i] = i + 1;
    return fromBases(std::move(ground), std::move(bases));
}

Matroid Matroid::fromBases(std::vector<int> ground, std::vector<Face> bases)
{
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw std::invalid_argument("repeated element in ground set");
    if (bases.empty())
        throw std::invalid_argument("a matroid needs at least one basis");
    for (Face& b : bases)
    {
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("basis " + formatFace(b) + " repeats an element");
        for (int e : b)
            if (!std::binary_search(ground.begin(), ground.end(), e))
                throw std::invalid_argument("basis element " + std::to_string(e) + " outside the ground set");
        if (b.size() != bases.front().size())
            throw std::invalid_argument("bases of different sizes");
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

    const std::set<Face> lookup(bases.begin(), bases.end());
    for (const Face& first : bases)
        for (const Face& second : bases)
            for (int e : first)
            {
                if (std::binary_search(second.begin(), second.end(), e))
                    continue;
                bool exchanged = false;
                for (int f : second)
                {
                    if (std::binary_search(first.begin(), first.end(), f))
                        continue;
                    Face swapped;
                    for (int x : first)
                        if (x != e)
                            swapped.push_back(x);
                    swapped.push_back(f);
                    std::sort(swapped.begin(), swapped.end());
                    if (lookup.count(swapped))
                    {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged)
                    throw BasisExchangeError(first, second, e);
            }
    return Matroid(std::move(ground), ExplicitBases{std::move(bases)});
}

std::uint64_t Matroid::maskOf(const Face& subset) const
{
    std::uint64_t mask = 0;
    for (int e : subset)
    {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), e);
        if (it == ground_.end() || *it != e)
            throw std::invalid_argument("element " + std::to_string(e) + " is not in the ground set");
        mask |= std::uint64_t{1} << (it - ground_.begin());
    }
    return mask;
}

int Matroid::rankOfMask(std::uint64_t mask) const
{
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->ranks.find(mask);
        if (it != cache_->ranks.end())
            return it->second;
    }
    int r = 0;
    if (const auto* linear = std::get_if<LinearOverQ>(&backend_))
    {
        std::vector<Eigen::Index> cols;
        for (std::size_t j = 0; j < ground_.size(); ++j)
            if (mask >> j & 1)
                cols.push_back(static_cast<Eigen::Index>(j));
        RationalMatrix sub(linear->configuration.rows(), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.col(j) = linear->configuration.col(cols[j]);
        r = static_cast<int>(lefschetz::rank(sub));
    }
    else
    {
        for (std::uint64_t b : cache_->basisMasks)
            r = std::max(r, std::popcount(b & mask));
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->ranks.emplace(mask, r);
    return r;
}

int Matroid::rankOf(const Face& subset) const
{
    return rankOfMask(maskOf(subset));
}

bool Matroid::isIndependent(const Face& subset) const
{
    const std::uint64_t mask = maskOf(subset);
    return rankOfMask(mask) == std::popcount(mask);
}

std::vector<Face> Matroid::bases() const
{
    if (const auto* explicitBases = std::get_if<ExplicitBases>(&backend_))
        return explicitBases->bases;

    std::vector<Face> out;
    const int n = static_cast<int>(ground_.size());
    std::vector<int> idx(rank_);
    for (int i = 0; i < rank_; ++i)
        idx[i] = i;
    while (true)
    {
        std::uint64_t mask = 0;
        for (int i : idx)
            mask |= std::uint64_t{1} << i;
        if (rankOfMask(mask) == rank_)
        {
            Face b;
            for (int i : idx)
                b.push_back(ground_[i]);
            out.push_back(std::move(b));
        }
        int i = rank_ - 1;
        while (i >= 0 && idx[i] == n - rank_ + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < rank_; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Matroid matroidFromMatrix(const RationalMatrix& configuration)
{
    return Matroid::fromMatrix(configuration);
}

Matroid matroidFromBases(int n, const std::vector<Face>& bases)
{
    return Matroid::fromBases(n, bases);
}

SimplicialComplex independenceComplex(const Matroid& m)
{
    return SimplicialComplex(m.bases());
}

ColoopReport coloops(const Matroid& m)
{
    ColoopReport report;
    for (int e : m.groundSet())
    {
        Face rest;
        for (int x : m.groundSet())
            if (x != e)
                rest.push_back(x);
        if (m.rankOf(rest) < m.rank())
            report.coloops.push_back(e);
    }
    report.coloopFree = report.coloops.empty();
    return report;
}

Matroid restriction(const Matroid& m, const Face& subset)
{
    Face w = subset;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    for (int e : w)
        if (!std::binary_search(m.groundSet().begin(), m.groundSet().end(), e))
            throw std::invalid_argument("restriction to element " + std::to_string(e) + " outside the ground set");

    if (const auto* linear = std::get_if<Matroid::LinearOverQ>(&m.backend()))
    {
        if (w.empty())
            return Matroid::fromBases(std::vector<int>{}, {Face{}});
        RationalMatrix sub(linear->configuration.rows(), static_cast<Eigen::Index>(w.size()));
        for (std::size_t j = 0; j < w.size(); ++j)
        {
            const auto pos = std::lower_bound(m.groundSet().begin(), m.groundSet().end(), w[j]) - m.groundSet().begin();
            sub.col(j) = linear->configuration.col(pos);
        }
        return Matroid::fromMatrix(std::move(sub), w);
    }

    // Maximal independent subsets of w are exactly the largest traces B ∩ w.
    std::vector<Face> traces;
    std::size_t best = 0;
    for (const Face& b : m.bases())
    {
        Face trace;
        std::set_intersection(b.begin(), b.end(), w.begin(), w.end(), std::back_inserter(trace));
        best = std::max(best, trace.size());
        traces.push_back(std::move(trace));
    }
    std::vector<Face> bases;
    for (Face& t : traces)
        if (t.size() == best)
            bases.push_back(std::move(t));
    return Matroid::fromBases(w, std::move(bases));
}

CheckReport verifyMatroidProperty(const SimplicialComplex& s)
{
    const std::size_t n = s.vertices().size();
    if (n > 20)
        throw std::invalid_argument("exhaustive check infeasible: more than 20 vertices");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<FaceMask> traces;
    for (std::uint64_t w = 1; w <= full; ++w)
    {
        traces.clear();
        for (FaceMask f : s.facetMasks())
            traces.push_back(f & w);
        std::sort(traces.begin(), traces.end());
        traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
        int top = 0;
        for (FaceMask t : traces)
            top = std::max(top, std::popcount(t));
        for (FaceMask t : traces)
        {
            if (std::popcount(t) == top)
                continue;
            const bool dominated = std::any_of(traces.begin(), traces.end(), [&](FaceMask u) {
                return std::popcount(u) == top && (t & ~u) == 0;
            });
            if (!dominated)
                return CheckReport::fail("impure_induced_subcomplex", s.fromMask(w), std::nullopt,
                                         "induced subcomplex is not pure");
        }
    }
    return CheckReport::pass();
}

IntegerMatrix galeDual(const IntegerMatrix& a)
{
    if (lefschetz::rank(a) != a.rows())
        throw std::invalid_argument("Gale dual needs a matrix of full row rank");
    Integer minorGcd = 1;
    for (const Integer& f : smithInvariantFactors(a))
        minorGcd *= f;
    if (minorGcd != 1)
        throw std::invalid_argument("maximal minors have gcd " + minorGcd.str() + ", expected 1");
    return integerKernel(a);
}

}   // namespace lefschetz
