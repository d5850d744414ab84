/**
 * Text formats.
 *
 *   facets / bases  one face per line, space-separated positive integers
 *   matrix          one row per line, tab- or space-separated integers or p/q
 *   monomials       header `vars=<n> k=<d>`, then one exponent vector per line
 *   ears            `S <size>:<v,...> ...` for the first ear, then
 *                   `B [<v,...>] <size>:<v,...> ...` for each later ear
 *
 * Blank lines and everything after `#` are ignored in all of them.
 */

#ifndef LEFSCHETZ_IO_HPP
#define LEFSCHETZ_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/complexes.hpp"
#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/osequence.hpp"

namespace lefschetz::io {

class ParseError : public std::runtime_error
{
  public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

std::vector<Face> readFaces(std::istream& in);
RationalMatrix readMatrix(std::istream& in);
MonomialSet readMonomials(std::istream& in);
EarDecomposition readEars(std::istream& in);

/** Comma-separated integers, e.g. `1,2,3`. */
std::vector<std::int64_t> parseIntegerList(const std::string& text);

}   // namespace lefschetz::io

#endif
