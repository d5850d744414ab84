#include "lefschetz/io.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace lefschetz::io {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

struct Line
{
    std::size_t number;
    std::vector<std::string> tokens;
};

// Non-blank lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw))
    {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream fields(raw);
        Line line{number, {}};
        for (std::string token; fields >> token;)
            line.tokens.push_back(token);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

std::int64_t parseInteger(const std::string& token, std::size_t line)
{
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (!token.empty() && token[0] == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end)
        throw ParseError(line, "expected an integer, got '" + token + "'");
    return value;
}

int parseVertex(const std::string& token, std::size_t line)
{
    const std::int64_t v = parseInteger(token, line);
    if (v <= 0 || v > std::numeric_limits<int>::max())
        throw ParseError(line, "vertex labels must be positive integers, got '" + token + "'");
    return static_cast<int>(v);
}

std::vector<int> parseVertexList(const std::string& text, std::size_t line)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = text.find(',', start);
        out.push_back(parseVertex(text.substr(start, comma - start), line));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Face parseFactor(const std::string& token, std::size_t line)
{
    const auto colon = token.find(':');
    if (colon == std::string::npos)
        throw ParseError(line, "sphere factor must look like <size>:<v,...>, got '" + token + "'");
    const std::int64_t size = parseInteger(token.substr(0, colon), line);
    Face vertices = parseVertexList(token.substr(colon + 1), line);
    if (static_cast<std::int64_t>(vertices.size()) != size)
        throw ParseError(line, "sphere factor '" + token + "' lists " + std::to_string(vertices.size()) +
                                   " vertices but declares " + std::to_string(size));
    return vertices;
}

}   // namespace

std::vector<Face> readFaces(std::istream& in)
{
    std::vector<Face> faces;
    for (const Line& line : tokenize(in))
    {
        Face face;
        for (const std::string& token : line.tokens)
            face.push_back(parseVertex(token, line.number));
        faces.push_back(std::move(face));
    }
    return faces;
}

RationalMatrix readMatrix(std::istream& in)
{
    std::vector<std::vector<Rational>> rows;
    std::size_t width = 0;
    for (const Line& line : tokenize(in))
    {
        std::vector<Rational> row;
        for (const std::string& token : line.tokens)
        {
            try
            {
                row.push_back(parseRational(token));
            }
            catch (const std::invalid_argument& e)
            {
                throw ParseError(line.number, e.what());
            }
        }
        if (rows.empty())
            width = row.size();
        else if (row.size() != width)
            throw ParseError(line.number, "row has " + std::to_string(row.size()) + " entries, expected " +
                                              std::to_string(width));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError(0, "empty matrix file");
    RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

MonomialSet readMonomials(std::istream& in)
{
    const std::vector<Line> lines = tokenize(in);
    if (lines.empty())
        throw ParseError(0, "missing header 'vars=<n> k=<d>'");
    int vars = -1;
    int k = -1;
    for (const std::string& token : lines.front().tokens)
    {
        if (token.rfind("vars=", 0) == 0)
            vars = static_cast<int>(parseInteger(token.substr(5), lines.front().number));
        else if (token.rfind("k=", 0) == 0)
            k = static_cast<int>(parseInteger(token.substr(2), lines.front().number));
        else
            throw ParseError(lines.front().number, "unexpected header field '" + token + "'");
    }
    if (vars < 1 || k < 1)
        throw ParseError(lines.front().number, "header must give vars=<n> k=<d> with n, d >= 1");

    std::vector<Monomial> generators;
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const Line& line = lines[i];
        if (static_cast<int>(line.tokens.size()) != vars)
            throw ParseError(line.number, "expected " + std::to_string(vars) + " exponents");
        Monomial m;
        for (const std::string& token : line.tokens)
        {
            const std::int64_t e = parseInteger(token, line.number);
            if (e < 0)
                throw ParseError(line.number, "negative exponent");
            m.push_back(static_cast<int>(e));
        }
        if (degree(m) != k)
            throw ParseError(line.number, "monomial has degree " + std::to_string(degree(m)) + ", header says k=" +
                                              std::to_string(k));
        generators.push_back(std::move(m));
    }
    if (generators.empty())
        throw ParseError(lines.front().number, "no monomials after the header");
    return MonomialSet(vars, std::move(generators));
}

EarDecomposition readEars(std::istream& in)
{
    EarDecomposition decomposition;
    for (const Line& line : tokenize(in))
    {
        Ear ear;
        std::size_t next = 1;
        const std::string& kind = line.tokens.front();
        if (kind == "S")
        {
            if (!decomposition.ears.empty())
                throw ParseError(line.number, "only the first ear may be a sphere ('S')");
        }
        else if (kind == "B")
        {
            if (decomposition.ears.empty())
                throw ParseError(line.number, "the first ear must be a sphere ('S')");
            if (line.tokens.size() < 2 || line.tokens[1].size() < 2 || line.tokens[1].front() != '[' ||
                line.tokens[1].back() != ']')
                throw ParseError(line.number, "ball ear needs a simplex '[v,...]'");
            const std::string& inner = line.tokens[1];
            ear.simplex = parseVertexList(inner.substr(1, inner.size() - 2), line.number);
            next = 2;
        }
        else
        {
            throw ParseError(line.number, "ear lines start with 'S' or 'B', got '" + kind + "'");
        }
        for (std::size_t t = next; t < line.tokens.size(); ++t)
            ear.sphereFactors.push_back(parseFactor(line.tokens[t], line.number));
        decomposition.ears.push_back(std::move(ear));
    }
    return decomposition;
}

std::vector<std::int64_t> parseIntegerList(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = text.find(',', start);
        out.push_back(parseInteger(text.substr(start, comma - start), 0));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

}   // namespace lefschetz::io
