/**
 * Simplicial complexes stored by their facets, face vectors, poset-theoretic
 * products, PS-spheres and PS-balls, and verification of PS-ear
 * decompositions.
 */

#ifndef LEFSCHETZ_COMPLEXES_HPP
#define LEFSCHETZ_COMPLEXES_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "lefschetz/check_report.hpp"

namespace lefschetz {

/** A face is a sorted list of distinct positive vertex labels. */
using Face = std::vector<int>;

/** Vertex subsets as bit masks over the complex's sorted vertex list. */
using FaceMask = std::uint64_t;

/**
 * A finite simplicial complex given by its facets. Faces are implied by
 * downward closure; the facet list never contains two nested sets. The
 * complex {∅} (a single empty facet) is allowed and has rank 0.
 *
 * Instances are immutable. Per-size face tables are materialized lazily and
 * shared between copies; filling them is guarded by a mutex.
 */
class SimplicialComplex
{
  public:
    static constexpr int kMaxVertices = 64;

    /**
     * Normalize a facet list: sort each facet, drop sets contained in
     * another. Throws std::invalid_argument for an empty list, a facet with
     * repeated vertices, non-positive labels, or more than kMaxVertices
     * vertices.
     */
    explicit SimplicialComplex(std::vector<Face> facets);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    int rank() const { return rank_; }
    bool isPure() const { return pure_; }

    bool contains(const Face& face) const;
    bool containsMask(FaceMask mask) const;

    FaceMask toMask(const Face& face) const;
    Face fromMask(FaceMask mask) const;
    const std::vector<FaceMask>& facetMasks() const { return facetMasks_; }

    /** All faces with exactly `size` vertices, as masks in increasing order. */
    const std::vector<FaceMask>& faceMasks(int size) const;

    /** All faces with exactly `size` vertices, lexicographically sorted. */
    std::vector<Face> faces(int size) const;

    /**
     * Minimal non-faces with at most `maxSize` vertices: vertex sets that
     * are not faces although every proper subset is.
     */
    std::vector<FaceMask> minimalNonFaces(int maxSize) const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

  private:
    struct FaceCache;

    std::vector<int> vertices_;
    std::vector<Face> facets_;
    std::vector<FaceMask> facetMasks_;
    int rank_ = 0;
    bool pure_ = true;
    std::shared_ptr<FaceCache> cache_;
};

/** build_complex: normalize a facet list into a complex. */
SimplicialComplex buildComplex(std::vector<Face> facets);

struct FaceVectors
{
    int rank = 0;
    std::vector<std::int64_t> f;         // f_0 .. f_{k-1}
    std::vector<std::int64_t> h;         // h_0 .. h_k
    std::vector<std::int64_t> g;         // g_1 .. g_k
    std::vector<std::int64_t> hPrinted;  // alternating-binomial formula read verbatim
};

/**
 * f by face enumeration; h from sum_i f_{i-1} t^i (1-t)^{k-i} = sum_i h_i t^i,
 * which matches the graded dimensions of an Artinian reduction.
 *
 * `hPrinted` is h'_i = sum_{j=i}^{k} (-1)^{j-i} C(j,i) f_{k-j-1}; it comes
 * out as the reversal (h_k, ..., h_0) and is kept only so the two readings
 * can be compared.
 */
FaceVectors faceVectors(const SimplicialComplex& s);

/** h-vector read as polynomial coefficients h_0 + h_1 t + ... */
std::vector<std::int64_t> hPolynomial(const SimplicialComplex& s);

/** Coefficients of the product of two integer polynomials. */
std::vector<std::int64_t> multiplyPolynomials(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& b);

/**
 * Poset-theoretic product: faces are unions F ∪ F' with F in s and F' in t.
 * Throws std::invalid_argument if the vertex sets overlap.
 */
SimplicialComplex posetProduct(const SimplicialComplex& s, const SimplicialComplex& t);

/** Shift every label of `s` by `offset` so it can be multiplied with another complex. */
SimplicialComplex relabelDisjoint(const SimplicialComplex& s, int offset);

/** Boundary of the full simplex on `vertices` (at least two of them). */
SimplicialComplex simplexBoundary(const Face& vertices);

/** The full simplex on `vertices`; the empty list gives {∅}. */
SimplicialComplex fullSimplex(const Face& vertices);

/**
 * Product of simplex boundaries with the given vertex counts, drawing labels
 * from `vertexPool` in order. An empty size list gives the rank-0 sphere {∅}.
 */
SimplicialComplex psSphere(const std::vector<int>& factorSizes, const std::vector<int>& vertexPool);

/** Product of the boundaries of the given vertex sets. */
SimplicialComplex psSphere(const std::vector<Face>& factors);

/** One piece of a PS-ear decomposition: simplex × (product of simplex boundaries). */
struct Ear
{
    Face simplex;                  // empty for the initial sphere
    std::vector<Face> sphereFactors;  // vertex sets whose boundaries are multiplied
};

struct EarDecomposition
{
    std::vector<Ear> ears;
};

/** The subcomplex an ear describes. Throws on overlapping or undersized factors. */
SimplicialComplex earComplex(const Ear& ear);

/**
 * Check a proposed PS-ear decomposition of a pure complex.
 *
 * Ears are checked in order: shape and rank, containment in `s`, and for
 * every ear after the first, that its intersection with the union of the
 * earlier ears is the closure of its (k-1)-faces lying in exactly one of its
 * facets. Coverage of all facets of `s` is checked last. Failure reports the
 * condition, the ear index and a witness face (largest, then lexicographically
 * smallest, face of the discrepancy).
 *
 * Throws std::invalid_argument if `s` is not pure or an ear uses a vertex
 * outside `s`.
 */
CheckReport verifyPsDecomposition(const SimplicialComplex& s, const EarDecomposition& decomposition);

}   // namespace lefschetz

#endif
