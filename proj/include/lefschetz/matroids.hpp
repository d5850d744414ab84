/**
 * Matroids from rational vector configurations or explicit basis lists,
 * independence complexes, coloops, restrictions, the induced-purity
 * characterization, and integer Gale duals.
 */

#ifndef LEFSCHETZ_MATROIDS_HPP
#define LEFSCHETZ_MATROIDS_HPP

#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "lefschetz/check_report.hpp"
#include "lefschetz/complexes.hpp"
#include "lefschetz/exact_linalg.hpp"

namespace lefschetz {

/** Thrown when a basis list violates the exchange axiom. */
class BasisExchangeError : public std::invalid_argument
{
  public:
    BasisExchangeError(Face first, Face second, int element);

    const Face& first() const { return first_; }
    const Face& second() const { return second_; }
    int element() const { return element_; }

  private:
    Face first_;
    Face second_;
    int element_;
};

/**
 * A matroid on a set of positive labels. Backed either by the columns of a
 * rational matrix (column j is element groundSet()[j]) or by an explicit
 * list of bases. Rank queries are memoized; the cache is shared between
 * copies and guarded by a mutex.
 */
class Matroid
{
  public:
    struct LinearOverQ
    {
        RationalMatrix configuration;
    };
    struct ExplicitBases
    {
        std::vector<Face> bases;
    };

    /** Column matroid of `configuration`, elements labelled 1..n. */
    static Matroid fromMatrix(RationalMatrix configuration);

    /** Column matroid with explicit labels, one per column. */
    static Matroid fromMatrix(RationalMatrix configuration, std::vector<int> labels);

    /** Matroid on {1..n} with the given bases. Throws BasisExchangeError. */
    static Matroid fromBases(int n, std::vector<Face> bases);

    /** Matroid on `ground` with the given bases. Throws BasisExchangeError. */
    static Matroid fromBases(std::vector<int> ground, std::vector<Face> bases);

    const std::vector<int>& groundSet() const { return ground_; }
    int rank() const { return rank_; }
    bool isLinear() const { return std::holds_alternative<LinearOverQ>(backend_); }
    const std::variant<LinearOverQ, ExplicitBases>& backend() const { return backend_; }

    int rankOf(const Face& subset) const;
    bool isIndependent(const Face& subset) const;

    /** All bases, lexicographically sorted. */
    std::vector<Face> bases() const;

  private:
    struct RankCache;

    Matroid(std::vector<int> ground, std::variant<LinearOverQ, ExplicitBases> backend);
    int rankOfMask(std::uint64_t mask) const;
    std::uint64_t maskOf(const Face& subset) const;

    std::vector<int> ground_;
    std::variant<LinearOverQ, ExplicitBases> backend_;
    int rank_ = 0;
    std::shared_ptr<RankCache> cache_;
};

/** matroid_from_matrix. Throws std::invalid_argument for a matrix without columns. */
Matroid matroidFromMatrix(const RationalMatrix& configuration);

/** matroid_from_bases. */
Matroid matroidFromBases(int n, const std::vector<Face>& bases);

/** The complex of independent sets: its facets are the bases. */
SimplicialComplex independenceComplex(const Matroid& m);

struct ColoopReport
{
    std::vector<int> coloops;
    bool coloopFree = true;
};

/** e is a coloop iff deleting it drops the rank. */
ColoopReport coloops(const Matroid& m);

/** Restriction to `subset`, keeping labels. Throws if subset is not in the ground set. */
Matroid restriction(const Matroid& m, const Face& subset);

/**
 * Exhaustive induced-purity test: passes iff every vertex-induced
 * subcomplex is pure. Subsets W are scanned by increasing bit mask over the
 * sorted vertex list (smallest label = lowest bit); the first impure W is
 * the witness. Throws std::invalid_argument above 20 vertices.
 */
CheckReport verifyMatroidProperty(const SimplicialComplex& s);

/**
 * Integer Gale dual: an n x (n-d) matrix B with a B = 0 whose columns are a
 * basis of the kernel lattice, so 0 -> Z^{n-d} -> Z^n -> Z^d -> 0 is exact.
 * Throws std::invalid_argument if a lacks full row rank or its maximal
 * minors are not coprime.
 */
IntegerMatrix galeDual(const IntegerMatrix& a);

}   // namespace lefschetz

#endif
