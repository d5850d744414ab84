#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace lefschetz;

namespace {

RationalMatrix columns(std::initializer_list<std::initializer_list<int>> cols)
{
    const auto rows = static_cast<Eigen::Index>(cols.begin()->size());
    RationalMatrix m(rows, static_cast<Eigen::Index>(cols.size()));
    Eigen::Index j = 0;
    for (const auto& col : cols)
    {
        Eigen::Index i = 0;
        for (int x : col)
            m(i++, j) = x;
        ++j;
    }
    return m;
}

// Vertex-edge incidence columns of a graph on vertices 1..n.
RationalMatrix incidence(int n, const std::vector<std::pair<int, int>>& edges)
{
    RationalMatrix m = RationalMatrix::Zero(n, static_cast<Eigen::Index>(edges.size()));
    for (std::size_t e = 0; e < edges.size(); ++e)
    {
        m(edges[e].first - 1, static_cast<Eigen::Index>(e)) = 1;
        m(edges[e].second - 1, static_cast<Eigen::Index>(e)) = -1;
    }
    return m;
}

const std::vector<std::pair<int, int>> kK4Edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
const std::vector<std::pair<int, int>> kC4Edges{{1, 2}, {2, 3}, {3, 4}, {1, 4}};

RationalMatrix randomConfiguration(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols)
{
    RationalMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = static_cast<int>(rng() % 3) - 1;
    return m;
}

}   // namespace

TEST_CASE("matroids from matrices", "[matroids]")
{
    const Matroid u23 = matroidFromMatrix(columns({{1, 0}, {0, 1}, {1, 1}}));
    CHECK(u23.rank() == 2);
    CHECK(u23.bases() == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}});

    const Matroid free2 = matroidFromMatrix(columns({{1, 0}, {0, 1}}));
    CHECK(free2.bases() == std::vector<Face>{{1, 2}});

    const Matroid withColoop = matroidFromMatrix(columns({{1, 0}, {2, 0}, {0, 1}}));
    CHECK(withColoop.bases() == std::vector<Face>{{1, 3}, {2, 3}});
    CHECK_FALSE(withColoop.isIndependent({1, 2}));
    CHECK(withColoop.rankOf({1, 2}) == 1);

    CHECK_THROWS_AS(matroidFromMatrix(RationalMatrix(2, 0)), std::invalid_argument);
}

TEST_CASE("matroids from bases", "[matroids]")
{
    const Matroid u23 = matroidFromBases(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(u23.rank() == 2);
    CHECK_FALSE(u23.isLinear());
    CHECK(u23.rankOf({1, 2, 3}) == 2);

    CHECK(matroidFromBases(2, {{1, 2}}).bases() == std::vector<Face>{{1, 2}});

    try
    {
        matroidFromBases(4, {{1, 2}, {3, 4}});
        FAIL("exchange violation not detected");
    }
    catch (const BasisExchangeError& e)
    {
        CHECK(e.first() == Face{1, 2});
        CHECK(e.second() == Face{3, 4});
        CHECK(e.element() == 1);
    }

    CHECK_THROWS_AS(matroidFromBases(3, {{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(matroidFromBases(2, {{1, 5}}), std::invalid_argument);
}

TEST_CASE("independence complexes", "[matroids]")
{
    const SimplicialComplex triangle = independenceComplex(matroidFromBases(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(triangle == buildComplex({{1, 2}, {2, 3}, {1, 3}}));

    const SimplicialComplex u24 = independenceComplex(matroidFromMatrix(columns({{1, 0}, {0, 1}, {1, 1}, {1, 2}})));
    CHECK(u24.facets().size() == 6);
    CHECK(faceVectors(u24).h == std::vector<std::int64_t>{1, 2, 3});

    const SimplicialComplex cycle = independenceComplex(matroidFromMatrix(incidence(4, kC4Edges)));
    CHECK(cycle.facets() == oracle::spanningTrees(4, kC4Edges));
    CHECK(cycle.facets().size() == 4);
}

TEST_CASE("graphic matroid of K4 has the sixteen spanning trees as bases", "[matroids]")
{
    const Matroid k4 = matroidFromMatrix(incidence(4, kK4Edges));
    CHECK(k4.rank() == 3);
    const std::vector<Face> trees = oracle::spanningTrees(4, kK4Edges);
    CHECK(trees.size() == 16);
    CHECK(k4.bases() == trees);
    CHECK(coloops(k4).coloopFree);
    CHECK(faceVectors(independenceComplex(k4)).h == std::vector<std::int64_t>{1, 3, 6, 6});
}

TEST_CASE("coloops", "[matroids]")
{
    const ColoopReport free2 = coloops(matroidFromBases(2, {{1, 2}}));
    CHECK(free2.coloops == std::vector<int>{1, 2});
    CHECK_FALSE(free2.coloopFree);

    const ColoopReport u24 = coloops(matroidFromBases(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(u24.coloops.empty());
    CHECK(u24.coloopFree);

    CHECK(coloops(matroidFromMatrix(columns({{1, 0}, {2, 0}, {0, 1}}))).coloops == std::vector<int>{3});
}

TEST_CASE("restrictions", "[matroids]")
{
    const Matroid u24 = matroidFromBases(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(restriction(u24, {1, 2}).bases() == std::vector<Face>{{1, 2}});
    const Matroid single = restriction(u24, {1});
    CHECK(single.rank() == 1);
    CHECK(single.groundSet() == std::vector<int>{1});

    const Matroid coloopExample = matroidFromMatrix(columns({{1, 0}, {2, 0}, {0, 1}}));
    const Matroid parallel = restriction(coloopExample, {1, 2});
    CHECK(parallel.rank() == 1);
    CHECK(parallel.bases() == std::vector<Face>{{1}, {2}});

    CHECK_THROWS_AS(restriction(u24, {1, 7}), std::invalid_argument);
}

TEST_CASE("restriction is idempotent and inherits independence", "[matroids][property]")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial)
    {
        const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng() % 4);
        const Matroid m = matroidFromMatrix(randomConfiguration(rng, 3, n));
        Face w;
        for (int e = 1; e <= n; ++e)
            if (rng() % 2)
                w.push_back(e);
        const Matroid r = restriction(m, w);
        const Matroid rr = restriction(r, w);
        CHECK(r.bases() == rr.bases());
        CHECK(r.rank() == m.rankOf(w));

        const Matroid fromBases = matroidFromBases(static_cast<int>(n), m.bases());
        CHECK(restriction(fromBases, w).bases() == r.bases());
        for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask)
        {
            Face sub;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (mask & (1u << i))
                    sub.push_back(w[i]);
            CHECK(r.isIndependent(sub) == m.isIndependent(sub));
        }
    }
}

TEST_CASE("induced purity", "[matroids]")
{
    CHECK(verifyMatroidProperty(buildComplex({{1, 2}, {2, 3}, {1, 3}})).passed);

    const CheckReport impure = verifyMatroidProperty(buildComplex({{1, 2}, {3}}));
    CHECK_FALSE(impure.passed);
    CHECK(impure.condition == "impure_induced_subcomplex");
    CHECK(impure.witness == Face{1, 2, 3});

    // A path is the complex of a matroid with a coloop, so it passes.
    CHECK(verifyMatroidProperty(buildComplex({{1, 2}, {2, 3}})).passed);

    // Two disjoint edges: W = {1, 3} sees two points (pure), W = {1, 2, 3} an edge and a point.
    const CheckReport twoEdges = verifyMatroidProperty(buildComplex({{1, 2}, {3, 4}}));
    CHECK_FALSE(twoEdges.passed);
    CHECK(twoEdges.witness == Face{1, 2, 3});

    std::vector<Face> big;
    for (int v = 1; v <= 21; ++v)
        big.push_back({v});
    CHECK_THROWS_AS(verifyMatroidProperty(buildComplex(big)), std::invalid_argument);
}

TEST_CASE("induced purity agrees with brute force", "[matroids][property]")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 120; ++trial)
    {
        std::vector<Face> facets;
        const int vertices = 2 + static_cast<int>(rng() % 5);
        for (int c = 0; c < 1 + static_cast<int>(rng() % 4); ++c)
        {
            Face f;
            for (int v = 1; v <= vertices; ++v)
                if (rng() % 2)
                    f.push_back(v);
            if (!f.empty())
                facets.push_back(f);
        }
        if (facets.empty())
            continue;
        const SimplicialComplex s = buildComplex(facets);
        CHECK(verifyMatroidProperty(s).passed == oracle::inducedSubcomplexesPure(s.facets(), s.vertices()));
    }
}

TEST_CASE("matrix matroids satisfy induced purity", "[matroids][property]")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial)
    {
        const Matroid m = matroidFromMatrix(randomConfiguration(rng, 2 + static_cast<Eigen::Index>(rng() % 3),
                                                                3 + static_cast<Eigen::Index>(rng() % 5)));
        if (m.rank() == 0)
            continue;
        CHECK(verifyMatroidProperty(independenceComplex(m)).passed);
    }
}

TEST_CASE("Gale duals", "[matroids]")
{
    CHECK(galeDual(IntegerMatrix(IntegerMatrix::Identity(2, 2))).cols() == 0);

    IntegerMatrix ones(1, 3);
    ones << 1, 1, 1;
    const IntegerMatrix b = galeDual(ones);
    CHECK(b.rows() == 3);
    CHECK(b.cols() == 2);
    CHECK((ones * b).isZero());
    CHECK(oracle::saturatedByMinors(b));

    IntegerMatrix a(2, 3);
    a << 1, 0, 1, 0, 1, 1;
    const IntegerMatrix c = galeDual(a);
    IntegerMatrix expected(3, 1);
    expected << 1, 1, -1;
    CHECK((c == expected || c == IntegerMatrix(-expected)));

    IntegerMatrix deficient(2, 3);
    deficient << 1, 1, 1, 2, 2, 2;
    CHECK_THROWS_AS(galeDual(deficient), std::invalid_argument);

    IntegerMatrix nonCoprime(2, 3);
    nonCoprime << 2, 0, 2, 0, 2, 2;
    CHECK_THROWS_AS(galeDual(nonCoprime), std::invalid_argument);
}

TEST_CASE("Gale duals exchange loops and coloops", "[matroids][property]")
{
    // The rows of B realize the dual matroid, so an element is a coloop of
    // M(B) iff its column of A vanishes, and a loop of M(B) iff it is a
    // coloop of M(A).
    const std::vector<std::vector<int>> examples{
        {1, 0, 0, 0, 1, 1},   // 2 x 3: column 1 is not in the span of the others
        {1, 0, 1, 0, 1, 1},
        {1, 0, 0, 0, 0, 1},   // column 2 is zero
        {1, 1, 0, 0, 1, 1},
    };
    for (const auto& entries : examples)
    {
        IntegerMatrix a(2, 3);
        for (int i = 0; i < 6; ++i)
            a(i / 3, i % 3) = entries[i];
        const IntegerMatrix b = galeDual(a);
        CHECK((a * b).isZero());
        const Matroid ma = matroidFromMatrix(toRational(a));
        const Matroid mb = matroidFromMatrix(toRational(IntegerMatrix(b.transpose())));
        const ColoopReport ca = coloops(ma);
        const ColoopReport cb = coloops(mb);
        for (int e = 1; e <= 3; ++e)
        {
            const bool zeroColumn = a.col(e - 1).isZero();
            const bool coloopOfB = std::count(cb.coloops.begin(), cb.coloops.end(), e) > 0;
            const bool coloopOfA = std::count(ca.coloops.begin(), ca.coloops.end(), e) > 0;
            CHECK(coloopOfB == zeroColumn);
            CHECK((mb.rankOf({e}) == 0) == coloopOfA);
        }
    }
}
