#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace lefschetz;

namespace {

using Sequence = std::vector<std::int64_t>;

SimplicialComplex triangleBoundary()
{
    return buildComplex({{1, 2}, {2, 3}, {1, 3}});
}

SimplicialComplex u24()
{
    return buildComplex({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

EarDecomposition u24Ears()
{
    return {{Ear{{}, {{1, 2, 3}}}, Ear{{4}, {{1, 2}}}, Ear{{3, 4}, {}}}};
}

std::vector<Face> randomFacets(std::mt19937_64& rng, int vertices, int count)
{
    std::vector<Face> facets;
    for (int c = 0; c < count; ++c)
    {
        Face f;
        for (int v = 1; v <= vertices; ++v)
            if (rng() % 2)
                f.push_back(v);
        if (f.empty())
            f.push_back(1 + static_cast<int>(rng() % vertices));
        facets.push_back(f);
    }
    return facets;
}

}   // namespace

TEST_CASE("build_complex normalizes facets", "[complexes]")
{
    const SimplicialComplex t = triangleBoundary();
    CHECK(t.isPure());
    CHECK(t.rank() == 2);
    CHECK(t.facets() == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}});

    CHECK(buildComplex({{2, 1}, {2}}).facets() == std::vector<Face>{{1, 2}});

    const SimplicialComplex mixed = buildComplex({{1, 2}, {3}});
    CHECK_FALSE(mixed.isPure());
    CHECK(mixed.rank() == 2);
    CHECK(mixed.vertices() == std::vector<int>{1, 2, 3});
}

TEST_CASE("build_complex rejects bad input", "[complexes]")
{
    CHECK_THROWS_WITH(buildComplex({}), Catch::Matchers::ContainsSubstring("empty complex"));
    CHECK_THROWS_AS(buildComplex({{1, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(buildComplex({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(buildComplex({{-3}}), std::invalid_argument);
}

TEST_CASE("face membership and enumeration", "[complexes]")
{
    const SimplicialComplex t = triangleBoundary();
    CHECK(t.contains({}));
    CHECK(t.contains({1, 3}));
    CHECK_FALSE(t.contains({1, 2, 3}));
    CHECK(t.faces(1) == std::vector<Face>{{1}, {2}, {3}});
    CHECK(t.faces(3).empty());
    CHECK(t.minimalNonFaces(3) == std::vector<FaceMask>{t.toMask({1, 2, 3})});
    CHECK(t.fromMask(t.toMask({2, 3})) == Face{2, 3});

    const SimplicialComplex twoPoints = buildComplex({{1}, {2}});
    CHECK(twoPoints.minimalNonFaces(2) == std::vector<FaceMask>{twoPoints.toMask({1, 2})});
}

TEST_CASE("face vectors of small complexes", "[complexes]")
{
    const FaceVectors simplex = faceVectors(fullSimplex({1, 2, 3}));
    CHECK(simplex.f == Sequence{3, 3, 1});
    CHECK(simplex.h == Sequence{1, 0, 0, 0});

    const FaceVectors triangle = faceVectors(triangleBoundary());
    CHECK(triangle.f == Sequence{3, 3});
    CHECK(triangle.h == Sequence{1, 1, 1});
    CHECK(triangle.g == Sequence{0, 0});

    const FaceVectors u = faceVectors(u24());
    CHECK(u.rank == 2);
    CHECK(u.f == Sequence{4, 6});
    CHECK(u.h == Sequence{1, 2, 3});
    CHECK(u.g == Sequence{1, 1});
    CHECK(u.hPrinted == Sequence{3, 2, 1});

    const FaceVectors empty = faceVectors(fullSimplex({}));
    CHECK(empty.rank == 0);
    CHECK(empty.f.empty());
    CHECK(empty.h == Sequence{1});
}

TEST_CASE("face vectors agree with subset enumeration", "[complexes][property]")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial)
    {
        const std::vector<Face> facets = randomFacets(rng, 2 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 5));
        const SimplicialComplex s = buildComplex(facets);
        const FaceVectors fv = faceVectors(s);
        const Sequence f = oracle::bruteFVector(facets);
        CHECK(fv.f == f);
        CHECK(fv.h == oracle::hFromF(f));
        CHECK(fv.h.front() == 1);

        Sequence g;
        for (std::size_t i = 1; i < fv.h.size(); ++i)
            g.push_back(fv.h[i] - fv.h[i - 1]);
        CHECK(fv.g == g);
        CHECK(std::accumulate(g.begin(), g.end(), std::int64_t{0}) == fv.h.back() - 1);

        // The alternating-binomial formula read verbatim gives h reversed.
        CHECK(fv.hPrinted == Sequence(fv.h.rbegin(), fv.h.rend()));
    }
}

TEST_CASE("poset products", "[complexes]")
{
    const SimplicialComplex edge = posetProduct(buildComplex({{1}}), buildComplex({{2}}));
    CHECK(edge.facets() == std::vector<Face>{{1, 2}});
    CHECK(faceVectors(edge).h == Sequence{1, 0, 0});

    const SimplicialComplex product = posetProduct(triangleBoundary(), buildComplex({{4}, {5}}));
    CHECK(product.rank() == 3);
    CHECK(faceVectors(product).h == Sequence{1, 2, 2, 1});

    const SimplicialComplex t = triangleBoundary();
    CHECK(posetProduct(t, fullSimplex({})) == t);

    CHECK_THROWS_AS(posetProduct(t, buildComplex({{3, 4}})), std::invalid_argument);
    CHECK(relabelDisjoint(t, 10).vertices() == std::vector<int>{11, 12, 13});
}

TEST_CASE("h-polynomials multiply under poset products", "[complexes][property]")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial)
    {
        const SimplicialComplex s = buildComplex(randomFacets(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3)));
        const SimplicialComplex t =
            relabelDisjoint(buildComplex(randomFacets(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3))), 10);
        const SimplicialComplex p = posetProduct(s, t);
        CHECK(p.rank() == s.rank() + t.rank());
        CHECK(p.facets().size() == s.facets().size() * t.facets().size());
        CHECK(hPolynomial(p) == multiplyPolynomials(hPolynomial(s), hPolynomial(t)));
    }
}

TEST_CASE("PS-spheres", "[complexes]")
{
    const std::vector<int> pool{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(psSphere({3}, pool) == triangleBoundary());
    CHECK(faceVectors(psSphere({3, 2}, pool)).h == Sequence{1, 2, 2, 1});

    const SimplicialComplex square = psSphere({2, 2}, pool);
    CHECK(square.facets() == std::vector<Face>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(faceVectors(square).h == Sequence{1, 2, 1});

    CHECK(psSphere({}, pool) == fullSimplex({}));
    CHECK_THROWS_AS(psSphere({1}, pool), std::invalid_argument);
    CHECK_THROWS_AS(psSphere({5, 5}, pool), std::invalid_argument);

    for (int a = 2; a <= 7; ++a)
        CHECK(faceVectors(psSphere({a}, pool)).h == Sequence(a, 1));
}

TEST_CASE("PS-sphere h-polynomial is a product of geometric sums", "[complexes][property]")
{
    std::vector<int> pool(20);
    std::iota(pool.begin(), pool.end(), 1);
    const std::vector<std::vector<int>> shapes{{2}, {2, 2}, {2, 2, 2}, {3, 2}, {4}, {4, 3}, {3, 3}, {5, 2}};
    for (const auto& sizes : shapes)
    {
        Sequence expected{1};
        for (int a : sizes)
            expected = multiplyPolynomials(expected, Sequence(a, 1));
        const SimplicialComplex s = psSphere(sizes, pool);
        CHECK(hPolynomial(s) == expected);
        CHECK(s.rank() == std::accumulate(sizes.begin(), sizes.end(), 0) - static_cast<int>(sizes.size()));
    }
}

TEST_CASE("PS-ear decompositions", "[complexes]")
{
    const CheckReport single = verifyPsDecomposition(triangleBoundary(), {{Ear{{}, {{1, 2, 3}}}}});
    CHECK(single.passed);

    const CheckReport good = verifyPsDecomposition(u24(), u24Ears());
    CHECK(good.passed);

    const EarDecomposition broken{{Ear{{}, {{1, 2, 3}}}, Ear{{3}, {{1, 4}}}}};
    const CheckReport bad = verifyPsDecomposition(u24(), broken);
    CHECK_FALSE(bad.passed);
    CHECK(bad.condition == "intersection");
    CHECK(bad.index == std::optional<std::size_t>{1});
    CHECK(bad.witness == Face{1, 3});

    const EarDecomposition partial{{Ear{{}, {{1, 2, 3}}}, Ear{{4}, {{1, 2}}}}};
    const CheckReport uncovered = verifyPsDecomposition(u24(), partial);
    CHECK_FALSE(uncovered.passed);
    CHECK(uncovered.condition == "cover");
    CHECK(uncovered.witness == Face{3, 4});

    const EarDecomposition wrongRank{{Ear{{}, {{1, 2}}}}};
    CHECK(verifyPsDecomposition(u24(), wrongRank).condition == "ear_rank");

    const EarDecomposition outside{{Ear{{}, {{1, 2, 9}}}}};
    CHECK_THROWS_AS(verifyPsDecomposition(u24(), outside), std::invalid_argument);
    CHECK_THROWS_AS(verifyPsDecomposition(buildComplex({{1, 2}, {3}}), {{Ear{{}, {{1, 2}}}}}), std::invalid_argument);
}

TEST_CASE("a passing decomposition partitions the facets", "[complexes][property]")
{
    const SimplicialComplex s = u24();
    const EarDecomposition d = u24Ears();
    REQUIRE(verifyPsDecomposition(s, d).passed);

    // Facets of the first ear plus the facets each later ear adds.
    std::set<Face> seen;
    std::size_t interior = 0;
    for (const Ear& ear : d.ears)
    {
        const SimplicialComplex piece = earComplex(ear);
        for (const Face& f : piece.facets())
            interior += seen.insert(f).second;
    }
    CHECK(interior == s.facets().size());
    CHECK(std::vector<Face>(seen.begin(), seen.end()) == s.facets());
}
