/**
 * Pure O-sequences and their inverse-system rings.
 *
 * For monomials m_1, ..., m_s of a common degree k, the ring
 * R = C[∂_1, ..., ∂_n] / (ann(m_1) ∩ ... ∩ ann(m_s)) has as graded basis the
 * order ideal generated by the m_j: a monomial ∂^a survives iff x^a divides
 * some m_j, and ∂^a · ∂^b = ∂^{a+b} when that is still in the ideal, 0
 * otherwise. Everything below works in these monomial bases.
 */

#ifndef LEFSCHETZ_OSEQUENCE_HPP
#define LEFSCHETZ_OSEQUENCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lefschetz/check_report.hpp"
#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/ihl_report.hpp"

namespace lefschetz {

/** Exponent vector; entry v is the power of variable v+1. */
using Monomial = std::vector<int>;

int degree(const Monomial& m);

/** True iff a divides b (componentwise <=). */
bool divides(const Monomial& a, const Monomial& b);

/** All monomials of degree d in n variables, in basis order (descending lex). */
std::vector<Monomial> monomialsOfDegree(int n, int d);

/** Generators of a pure order ideal: distinct monomials of one degree k >= 1. */
class MonomialSet
{
  public:
    /**
     * Throws std::invalid_argument for an empty list, wrong exponent-vector
     * length, negative exponents, degree 0 or mixed degrees. Duplicates are
     * dropped; generators are kept in basis order.
     */
    MonomialSet(int vars, std::vector<Monomial> generators);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    const std::vector<Monomial>& generators() const { return generators_; }

    bool operator==(const MonomialSet& other) const = default;

  private:
    int vars_;
    int degree_;
    std::vector<Monomial> generators_;
};

/** The graded ring R with its per-degree monomial bases (degrees 0..k). */
class InverseSystemRing
{
  public:
    InverseSystemRing(int vars, std::vector<std::vector<Monomial>> bases);

    int vars() const { return vars_; }
    int topDegree() const { return static_cast<int>(bases_.size()) - 1; }
    const std::vector<Monomial>& basis(int degree) const { return bases_.at(degree); }
    std::vector<std::int64_t> dims() const;

    /** Position of `m` in the basis of its degree, if it survives in R. */
    std::optional<std::size_t> indexOf(const Monomial& m) const;

  private:
    int vars_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::map<Monomial, std::size_t>> index_;
};

/** order_ideal: per-degree divisor sets of the generators. */
InverseSystemRing orderIdeal(const MonomialSet& ms);

struct PureOSequence
{
    std::vector<std::int64_t> h;        // h_0 .. h_k
    std::vector<int> unusedVariables;   // 1-based, divide no generator
};

PureOSequence pureOSequence(const MonomialSet& ms);

/**
 * Matrix of multiplication by ω^power, ω = ∂_1 + ... + ∂_n, from R_degree to
 * R_{degree+power}: entry (b, a) is the multinomial coefficient of ∂^{b-a}
 * in ω^power when a divides b, else 0. Columns follow basis(degree), rows
 * basis(degree + power). Throws std::out_of_range if degree + power > k.
 *
 * Instantiated for Rational and Integer scalars.
 */
template <typename Scalar = Rational>
DenseMatrix<Scalar> lefschetzMatrix(const InverseSystemRing& r, int degree, int power);

/** Ranks of ω^{k-2i} for 0 <= 2i <= k and of ω on degrees up to the middle. */
IHLReport checkIhl(const InverseSystemRing& r);

/**
 * Graded dimensions of C[∂]/ann(m_j) for generator j (0-based, basis order),
 * i.e. divisor counts of the single monomial m_j.
 */
std::vector<std::int64_t> factorRingDims(const MonomialSet& ms, std::size_t j);

struct ProjectionReport
{
    CheckReport check;
    /** multiplicity[l][b]: number of generators divisible by basis monomial b of degree l. */
    std::vector<std::vector<int>> multiplicity;
};

/**
 * Joint projection R -> R^1 × ... × R^s is injective: every basis monomial
 * of R divides at least one generator.
 */
ProjectionReport projectionSeparation(const InverseSystemRing& r, const MonomialSet& ms);

struct RealizationResult
{
    std::optional<MonomialSet> witness;
    Integer searchSpace;          // C(#degree-k monomials in h_1 variables, h_k)
    std::uint64_t nodesVisited = 0;
};

/**
 * Exhaustive search for generators whose pure O-sequence is h. Generator
 * sets are enumerated in basis order with the first generator restricted to
 * non-increasing exponents (one representative per variable permutation)
 * and branches dropped as soon as some degree overshoots. Returns the first
 * witness found.
 *
 * Throws std::invalid_argument outside h_0 = 1, positive entries,
 * 1 <= k <= 5, h_1 <= maxVars <= 5, h_k <= 8.
 */
RealizationResult findPureORealization(std::span<const std::int64_t> h, int maxVars);

}   // namespace lefschetz

#endif
