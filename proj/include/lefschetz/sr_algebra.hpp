/**
 * Stanley-Reisner rings, Artinian reductions by random linear systems of
 * parameters, and injective hard Lefschetz checks with ω = x_1 + ... + x_n.
 *
 * Quotients are never built with Gröbner bases. A candidate θ (k linear
 * forms) is put in reduced echelon form and its pivot variables are solved
 * for, so C[Σ]/(θ) becomes a polynomial ring in the remaining n - r
 * variables modulo the images of the minimal non-face monomials. Every
 * dimension and Lefschetz rank is then an exact rank computation on a
 * degree-wise coefficient matrix.
 */

#ifndef LEFSCHETZ_SR_ALGEBRA_HPP
#define LEFSCHETZ_SR_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lefschetz/complexes.hpp"
#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/ihl_report.hpp"
#include "lefschetz/osequence.hpp"

namespace lefschetz {

/**
 * Degree-d monomials in the vertex variables whose support is a face of s:
 * a basis of C[Σ]_d. Exponent vectors are indexed by position in
 * s.vertices() and listed in basis order (descending lex).
 */
std::vector<Monomial> standardMonomials(const SimplicialComplex& s, int d);

/** k linear forms in the vertex variables (rows), drawn from `seed`. */
struct LsopCandidate
{
    RationalMatrix forms;
    std::uint64_t seed = 0;
};

inline constexpr int kDefaultCoefficientBound = 10;
inline constexpr int kDefaultMaxResamples = 3;

/**
 * k = rank(s) forms with integer coefficients uniform in [-bound, bound].
 * The stream is std::mt19937_64 seeded with `seed`; each coefficient is
 * taken by rejection sampling on the raw 64-bit output, so draws are
 * reproducible across platforms. Dependent draws are redrawn from the same
 * stream; std::runtime_error after 16 failures.
 */
LsopCandidate randomLsop(const SimplicialComplex& s, std::uint64_t seed, int bound = kDefaultCoefficientBound);

enum class IhlStatus
{
    Pass,
    Inconclusive,
};

struct QuotientReport
{
    std::vector<std::int64_t> dims;  // degrees 0..k+1
    bool isLsop = false;             // dims[k+1] == 0
    bool matchesH = false;           // dims[0..k] == h-vector
    std::optional<IHLReport> ihl;
    std::optional<IhlStatus> status;
    int resamplesUsed = 0;
    std::uint64_t seedUsed = 0;
};

/**
 * Graded dimensions of C[Σ]/(θ) in degrees 0..k+1. Throws
 * std::invalid_argument if theta does not have k rows and one column per
 * vertex. A non-l.s.o.p. is reported through isLsop, not an exception.
 */
QuotientReport quotientDims(const SimplicialComplex& s, const LsopCandidate& theta);

/** quotient_dims plus the Lefschetz and step ranks for ω = Σ x_i. */
QuotientReport quotientWithIhl(const SimplicialComplex& s, const LsopCandidate& theta);

class LsopNotFound : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Draw θ from `seed` and certify IHL around k/2 for ω = Σ x_i, redrawing up
 * to `maxResamples` times when θ is not an l.s.o.p. or some map is not
 * injective. A surviving failure is Inconclusive: a bad draw cannot refute a
 * statement about generic θ. Attempt a uses seed + a * 0x9E3779B97F4A7C15.
 *
 * Throws std::invalid_argument if s is not pure, LsopNotFound if no draw is
 * an l.s.o.p.
 */
QuotientReport srIhlCheck(const SimplicialComplex& s, std::uint64_t seed, int maxResamples = kDefaultMaxResamples,
                          int bound = kDefaultCoefficientBound);

}   // namespace lefschetz

#endif
