#include "lefschetz/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

#include "binomial.hpp"

namespace lefschetz {

struct SimplicialComplex::FaceCache
{
    std::mutex mutex;
    std::map<int, std::vector<FaceMask>> bySize;
};

SimplicialComplex::SimplicialComplex(std::vector<Face> facets)
    : cache_(std::make_shared<FaceCache>())
{
    if (facets.empty())
        throw std::invalid_argument("empty complex");
    for (Face& facet : facets)
    {
        std::sort(facet.begin(), facet.end());
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
            throw std::invalid_argument("facet with repeated vertex " + std::to_string(*std::adjacent_find(facet.begin(), facet.end())));
        if (!facet.empty() && facet.front() <= 0)
            throw std::invalid_argument("vertex labels must be positive integers");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Keep maximal sets only; checking larger candidates first is enough.
    std::vector<Face> bySize = facets;
    std::stable_sort(bySize.begin(), bySize.end(), [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> maximal;
    for (const Face& candidate : bySize)
    {
        const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const Face& big) {
            return std::includes(big.begin(), big.end(), candidate.begin(), candidate.end());
        });
        if (!covered)
            maximal.push_back(candidate);
    }
    std::sort(maximal.begin(), maximal.end());
    facets_ = std::move(maximal);

    std::set<int> labels;
    for (const Face& facet : facets_)
        labels.insert(facet.begin(), facet.end());
    vertices_.assign(labels.begin(), labels.end());
    if (vertices_.size() > static_cast<std::size_t>(kMaxVertices))
        throw std::invalid_argument("complex has more than " + std::to_string(kMaxVertices) + " vertices");

    rank_ = 0;
    for (const Face& facet : facets_)
        rank_ = std::max(rank_, static_cast<int>(facet.size()));
    pure_ = std::all_of(facets_.begin(), facets_.end(),
                        [&](const Face& facet) { return static_cast<int>(facet.size()) == rank_; });
    for (const Face& facet : facets_)
        facetMasks_.push_back(toMask(facet));
}

FaceMask SimplicialComplex::toMask(const Face& face) const
{
    FaceMask mask = 0;
    for (int v : face)
    {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the complex");
        mask |= FaceMask{1} << (it - vertices_.begin());
    }
    return mask;
}

Face SimplicialComplex::fromMask(FaceMask mask) const
{
    Face face;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (mask >> i & 1)
            face.push_back(vertices_[i]);
    return face;
}

bool SimplicialComplex::containsMask(FaceMask mask) const
{
    return std::any_of(facetMasks_.begin(), facetMasks_.end(), [&](FaceMask f) { return (mask & ~f) == 0; });
}

bool SimplicialComplex::contains(const Face& face) const
{
    Face sorted = face;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted)
        if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
            return false;
    return containsMask(toMask(sorted));
}

const std::vector<FaceMask>& SimplicialComplex::faceMasks(int size) const
{
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bySize.find(size);
    if (it != cache_->bySize.end())
        return it->second;

    std::vector<FaceMask> faces;
    if (size >= 0)
    {
        for (FaceMask facet : facetMasks_)
        {
            if (std::popcount(facet) < size)
                continue;
            // Enumerate every submask of the facet, keeping those of the right size.
            FaceMask sub = facet;
            while (true)
            {
                if (std::popcount(sub) == size)
                    faces.push_back(sub);
                if (sub == 0)
                    break;
                sub = (sub - 1) & facet;
            }
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    }
    return cache_->bySize.emplace(size, std::move(faces)).first->second;
}

std::vector<Face> SimplicialComplex::faces(int size) const
{
    std::vector<Face> out;
    for (FaceMask mask : faceMasks(size))
        out.push_back(fromMask(mask));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FaceMask> SimplicialComplex::minimalNonFaces(int maxSize) const
{
    std::vector<FaceMask> result;
    const int n = static_cast<int>(vertices_.size());
    for (int size = 2; size <= std::min(maxSize, n); ++size)
    {
        const std::vector<FaceMask>& smaller = faceMasks(size - 1);
        auto isFace = [&](FaceMask m) { return std::binary_search(smaller.begin(), smaller.end(), m); };
        std::vector<FaceMask> candidates;
        for (FaceMask base : smaller)
        {
            for (int v = 0; v < n; ++v)
            {
                const FaceMask bit = FaceMask{1} << v;
                // Only extend by vertices above the top of `base` so each set is built once.
                if (base != 0 && bit <= (FaceMask{1} << (63 - std::countl_zero(base))))
                    continue;
                const FaceMask candidate = base | bit;
                if (containsMask(candidate))
                    continue;
                bool minimal = true;
                for (FaceMask rest = candidate; rest != 0 && minimal; rest &= rest - 1)
                {
                    const FaceMask drop = rest & -rest;
                    minimal = isFace(candidate & ~drop);
                }
                if (minimal)
                    candidates.push_back(candidate);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        result.insert(result.end(), candidates.begin(), candidates.end());
    }
    return result;
}

SimplicialComplex buildComplex(std::vector<Face> facets)
{
    return SimplicialComplex(std::move(facets));
}

FaceVectors faceVectors(const SimplicialComplex& s)
{
    FaceVectors out;
    const int k = s.rank();
    out.rank = k;
    // fm1[i] = f_{i-1}, i = 0..k
    std::vector<std::int64_t> fm1(k + 1);
    for (int i = 0; i <= k; ++i)
        fm1[i] = static_cast<std::int64_t>(s.faceMasks(i).size());
    out.f.assign(fm1.begin() + 1, fm1.end());

    out.h.assign(k + 1, 0);
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i)
        {
            const std::int64_t term = fm1[i] * detail::binomial(k - i, j - i);
            out.h[j] += ((j - i) % 2 == 0) ? term : -term;
        }

    out.hPrinted.assign(k + 1, 0);
    for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j)
        {
            // f_{k-j-1} = fm1[k-j]
            const std::int64_t term = detail::binomial(j, i) * fm1[k - j];
            out.hPrinted[i] += ((j - i) % 2 == 0) ? term : -term;
        }

    for (int i = 1; i <= k; ++i)
        out.g.push_back(out.h[i] - out.h[i - 1]);
    return out;
}

std::vector<std::int64_t> hPolynomial(const SimplicialComplex& s)
{
    return faceVectors(s).h;
}

std::vector<std::int64_t> multiplyPolynomials(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

SimplicialComplex posetProduct(const SimplicialComplex& s, const SimplicialComplex& t)
{
    std::vector<int> common;
    std::set_intersection(s.vertices().begin(), s.vertices().end(), t.vertices().begin(), t.vertices().end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw std::invalid_argument("poset product of complexes sharing vertex " + std::to_string(common.front()));
    std::vector<Face> facets;
    facets.reserve(s.facets().size() * t.facets().size());
    for (const Face& a : s.facets())
        for (const Face& b : t.facets())
        {
            Face joined;
            std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(joined));
            facets.push_back(std::move(joined));
        }
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex relabelDisjoint(const SimplicialComplex& s, int offset)
{
    std::vector<Face> facets = s.facets();
    for (Face& facet : facets)
        for (int& v : facet)
            v += offset;
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex simplexBoundary(const Face& vertices)
{
    if (vertices.size() < 2)
        throw std::invalid_argument("boundary of a simplex needs at least 2 vertices");
    std::vector<Face> facets;
    for (std::size_t skip = 0; skip < vertices.size(); ++skip)
    {
        Face facet;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (i != skip)
                facet.push_back(vertices[i]);
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex(std::move(facets));
}

SimplicialComplex fullSimplex(const Face& vertices)
{
    return SimplicialComplex({vertices});
}

SimplicialComplex psSphere(const std::vector<Face>& factors)
{
    SimplicialComplex result({Face{}});
    for (const Face& factor : factors)
        result = posetProduct(result, simplexBoundary(factor));
    return result;
}

SimplicialComplex psSphere(const std::vector<int>& factorSizes, const std::vector<int>& vertexPool)
{
    std::vector<Face> factors;
    std::size_t next = 0;
    for (int size : factorSizes)
    {
        if (size < 2)
            throw std::invalid_argument("PS-sphere factor of size " + std::to_string(size) + " (need >= 2)");
        if (next + size > vertexPool.size())
            throw std::invalid_argument("vertex pool too small for the requested PS-sphere");
        factors.emplace_back(vertexPool.begin() + next, vertexPool.begin() + next + size);
        next += size;
    }
    return psSphere(factors);
}

SimplicialComplex earComplex(const Ear& ear)
{
    return posetProduct(fullSimplex(ear.simplex), psSphere(ear.sphereFactors));
}

namespace {

// Largest face first, then lexicographically smallest label list.
Face pickWitness(const SimplicialComplex& s, const std::vector<FaceMask>& candidates)
{
    std::vector<Face> faces;
    for (FaceMask m : candidates)
        faces.push_back(s.fromMask(m));
    return *std::min_element(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
}

std::vector<FaceMask> allSubmasks(const std::vector<FaceMask>& facets)
{
    std::vector<FaceMask> out;
    for (FaceMask facet : facets)
    {
        FaceMask sub = facet;
        while (true)
        {
            out.push_back(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & facet;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool insideSome(FaceMask face, const std::vector<FaceMask>& facets)
{
    return std::any_of(facets.begin(), facets.end(), [&](FaceMask f) { return (face & ~f) == 0; });
}

}   // namespace

CheckReport verifyPsDecomposition(const SimplicialComplex& s, const EarDecomposition& decomposition)
{
    if (!s.isPure())
        throw std::invalid_argument("PS-decomposition check needs a pure complex");
    const int k = s.rank();

    for (const Ear& ear : decomposition.ears)
    {
        auto check = [&](const Face& vs) {
            for (int v : vs)
                if (!std::binary_search(s.vertices().begin(), s.vertices().end(), v))
                    throw std::invalid_argument("ear uses vertex " + std::to_string(v) + " outside the complex");
        };
        check(ear.simplex);
        for (const Face& factor : ear.sphereFactors)
            check(factor);
    }

    std::vector<FaceMask> earlier;  // facets of all previous ears, in s-coordinates
    for (std::size_t i = 0; i < decomposition.ears.size(); ++i)
    {
        const Ear& ear = decomposition.ears[i];
        if (i == 0 && !ear.simplex.empty())
            return CheckReport::fail("ear_shape", ear.simplex, i, "the first ear must be a PS-sphere");

        std::optional<SimplicialComplex> piece;
        try
        {
            piece = earComplex(ear);
        }
        catch (const std::invalid_argument& e)
        {
            return CheckReport::fail("ear_shape", {}, i, e.what());
        }
        if (piece->rank() != k || !piece->isPure())
            return CheckReport::fail("ear_rank", {}, i,
                                     "ear has rank " + std::to_string(piece->rank()) + ", expected " + std::to_string(k));

        std::vector<FaceMask> facets;
        for (const Face& facet : piece->facets())
        {
            if (!s.contains(facet))
                return CheckReport::fail("not_subcomplex", facet, i, "ear facet is not a face of the complex");
            facets.push_back(s.toMask(facet));
        }

        if (i > 0)
        {
            // (k-1)-faces lying in exactly one facet of the ear.
            std::map<FaceMask, int> ridgeCount;
            for (FaceMask facet : facets)
                for (FaceMask rest = facet; rest != 0; rest &= rest - 1)
                    ++ridgeCount[facet & ~(rest & -rest)];
            std::vector<FaceMask> boundary;
            for (const auto& [ridge, count] : ridgeCount)
                if (count == 1)
                    boundary.push_back(ridge);

            std::vector<FaceMask> mismatch;
            for (FaceMask face : allSubmasks(facets))
                if (insideSome(face, earlier) != insideSome(face, boundary))
                    mismatch.push_back(face);
            if (!mismatch.empty())
                return CheckReport::fail("intersection", pickWitness(s, mismatch), i,
                                         "intersection with earlier ears differs from the ear boundary");
        }
        earlier.insert(earlier.end(), facets.begin(), facets.end());
    }

    for (std::size_t f = 0; f < s.facets().size(); ++f)
        if (std::find(earlier.begin(), earlier.end(), s.facetMasks()[f]) == earlier.end())
            return CheckReport::fail("cover", s.facets()[f], std::nullopt, "facet not covered by any ear");
    return CheckReport::pass();
}

}   // namespace lefschetz
