#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "lefschetz/lefschetz.hpp"

using namespace lefschetz;

namespace {

std::ifstream data(const std::string& name)
{
    std::ifstream in(std::string(LEFSCHETZ_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return in;
}

template <typename Fn>
std::size_t parseErrorLine(const std::string& text, Fn parse)
{
    std::istringstream in(text);
    try
    {
        parse(in);
    }
    catch (const io::ParseError& e)
    {
        return e.line();
    }
    FAIL("no parse error for: " << text);
    return 0;
}

}   // namespace

TEST_CASE("facet files", "[io]")
{
    auto in = data("u24.facets");
    const std::vector<Face> facets = io::readFaces(in);
    CHECK(facets.size() == 6);
    CHECK(facets.back() == Face{3, 4});

    std::istringstream commented("# header\n\n1 2   # trailing\n  3\n");
    CHECK(io::readFaces(commented) == std::vector<Face>{{1, 2}, {3}});

    CHECK(parseErrorLine("1 2\n1 x\n", io::readFaces) == 2);
    CHECK(parseErrorLine("1 2\n\n0 1\n", io::readFaces) == 3);
    CHECK(parseErrorLine("1 -2\n", io::readFaces) == 1);
}

TEST_CASE("matrix files", "[io]")
{
    auto in = data("u24.tsv");
    const RationalMatrix m = io::readMatrix(in);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 4);
    CHECK(m(1, 3) == 2);

    std::istringstream fractions("1/2 -3/4\n2 0\n");
    const RationalMatrix q = io::readMatrix(fractions);
    CHECK(q(0, 0) == Rational(1, 2));
    CHECK(q(0, 1) == Rational(-3, 4));

    CHECK(parseErrorLine("1 2\n3\n", io::readMatrix) == 2);
    CHECK(parseErrorLine("1 2/0\n", io::readMatrix) == 1);
    CHECK(parseErrorLine("# nothing\n", io::readMatrix) == 0);
}

TEST_CASE("monomial files", "[io]")
{
    auto in = data("squares.mon");
    const MonomialSet ms = io::readMonomials(in);
    CHECK(ms.vars() == 2);
    CHECK(ms.degree() == 2);
    CHECK(ms.generators() == std::vector<Monomial>{{2, 0}, {0, 2}});

    CHECK(parseErrorLine("2 0\n", io::readMonomials) == 1);
    CHECK(parseErrorLine("vars=2 k=2\n2 0\n1 0\n", io::readMonomials) == 3);
    CHECK(parseErrorLine("vars=2 k=2\n2 0 0\n", io::readMonomials) == 2);
    CHECK(parseErrorLine("vars=2 k=2\n", io::readMonomials) == 1);
    CHECK(parseErrorLine("vars=2 k=2\n3 -1\n", io::readMonomials) == 2);
}

TEST_CASE("ear files", "[io]")
{
    auto in = data("u24.ears");
    const EarDecomposition d = io::readEars(in);
    REQUIRE(d.ears.size() == 3);
    CHECK(d.ears[0].simplex.empty());
    CHECK(d.ears[0].sphereFactors == std::vector<Face>{{1, 2, 3}});
    CHECK(d.ears[1].simplex == Face{4});
    CHECK(d.ears[1].sphereFactors == std::vector<Face>{{1, 2}});
    CHECK(d.ears[2].simplex == Face{3, 4});
    CHECK(d.ears[2].sphereFactors.empty());

    CHECK(parseErrorLine("B [1] 2:1,2\n", io::readEars) == 1);
    CHECK(parseErrorLine("S 3:1,2,3\nS 2:4,5\n", io::readEars) == 2);
    CHECK(parseErrorLine("S 3:1,2\n", io::readEars) == 1);
    CHECK(parseErrorLine("S 3:1,2,3\nB 4 2:1,2\n", io::readEars) == 2);
    CHECK(parseErrorLine("X 2:1,2\n", io::readEars) == 1);
}

TEST_CASE("integer lists", "[io]")
{
    CHECK(io::parseIntegerList("1,2,3") == std::vector<std::int64_t>{1, 2, 3});
    CHECK(io::parseIntegerList("-4") == std::vector<std::int64_t>{-4});
    CHECK_THROWS_AS(io::parseIntegerList("1,,2"), io::ParseError);
    CHECK_THROWS_AS(io::parseIntegerList(""), io::ParseError);
}
