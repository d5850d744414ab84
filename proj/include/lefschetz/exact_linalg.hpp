/**
 * Exact dense linear algebra over the rationals and the integers.
 *
 * Matrices are plain Eigen dense matrices whose scalar is a GMP-backed
 * multiprecision number, so the usual Eigen expressions (products,
 * transposes, blocks) work unchanged. Rank, kernel and normal-form
 * routines are free functions; nothing here ever rounds.
 */

#ifndef LEFSCHETZ_EXACT_LINALG_HPP
#define LEFSCHETZ_EXACT_LINALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace lefschetz {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
using DenseVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<Integer>;

/**
 * Rank of an integer matrix by fraction-free (Bareiss) elimination.
 *
 * Every intermediate entry is a minor of the input, so the exact division
 * step never leaves the integers.
 */
Eigen::Index rank(const IntegerMatrix& m);

/**
 * Rank of a rational matrix. Each row is scaled by the lcm of its
 * denominators and the result is handed to the fraction-free routine.
 */
Eigen::Index rank(const RationalMatrix& m);

/** Rank by plain Gaussian elimination in the rationals. */
Eigen::Index rankByRationalElimination(RationalMatrix m);

/**
 * Reduced row echelon form. If `pivots` is non-null it receives the pivot
 * column of each nonzero row, in order.
 */
RationalMatrix reducedRowEchelon(RationalMatrix m, std::vector<Eigen::Index>* pivots = nullptr);

/**
 * Basis of the right kernel: the columns of the result are linearly
 * independent, annihilated by `m`, and there are cols - rank of them.
 */
RationalMatrix kernelBasis(const RationalMatrix& m);

/**
 * Basis of the integer kernel lattice {x in Z^n : a x = 0}.
 *
 * Computed by column-style Hermite reduction: unimodular column operations
 * bring `a` to [H | 0] and the trailing columns of the accumulated
 * transform span the kernel lattice. Columns are primitive; the basis is
 * not otherwise canonicalized.
 */
IntegerMatrix integerKernel(const IntegerMatrix& a);

/** Nonzero invariant factors of the Smith normal form, in divisibility order. */
std::vector<Integer> smithInvariantFactors(IntegerMatrix m);

/**
 * True iff the columns of `basis` are linearly independent and span a
 * saturated sublattice of Z^n, i.e. every Smith invariant factor equals 1.
 */
bool isSaturated(const IntegerMatrix& basis);

/** Determinant of a square integer matrix (Bareiss). */
Integer determinant(IntegerMatrix m);

/** gcd of the absolute values of the entries of a vector; 0 for the zero vector. */
Integer content(const DenseVector<Integer>& v);

/** gcd of all maximal (rows x rows) minors, by direct enumeration. */
Integer maximalMinorGcd(const IntegerMatrix& a);

/** True iff every maximal minor lies in {0, 1, -1}. */
bool isUnimodular(const IntegerMatrix& a);

IntegerMatrix toInteger(const RationalMatrix& m);
RationalMatrix toRational(const IntegerMatrix& m);

/** `p/q` for non-integers, plain integer text otherwise. */
std::string toString(const Rational& q);

/** Parse `n`, `-n` or `p/q`. Throws std::invalid_argument on bad input. */
Rational parseRational(const std::string& text);

}   // namespace lefschetz

#endif
