// Bezoutian constructions for Toeplitz and Hankel matrices, plus the
// O(n^2) structured inversion routine built on them.
//
// Two independent constructions are provided for each Bezoutian:
//   * an entry-recursion "oracle" that builds the matrix from the
//     defining two-variable polynomial identity, and
//   * closed-form products of triangular Toeplitz factors.
// For the Toeplitz Bezoutian both product forms agree with the oracle.
// For the Hankel Bezoutian the two literal product forms do NOT agree
// with the oracle in general; bez_hankel_gs_report exposes all three so
// callers can inspect the discrepancy.  The oracle is the authoritative
// definition throughout this library.
//
// toeplitz_inverse_structured inverts an invertible Toeplitz matrix in
// O(n^2) multiplications: a kernel pair for the del operator is found by
// the extended Euclidean algorithm on (lambda^(2n-1), band polynomial),
// the candidate inverse is their Bezoutian, and the product B*T is formed
// through its displacement structure and checked against lambda*I.

#pragma once

#include <utility>
#include <vector>

#include "cma/matrix.hpp"
#include "cma/polynomial.hpp"
#include "cma/structured.hpp"

namespace cma {

/* Toeplitz Bezoutian of u and v (both of length n+1), built by the
 * two-dimensional entry recursion.  Throws std::invalid_argument on
 * length mismatch and std::logic_error if the recursion's boundary
 * consistency identities fail (an internal fault). */
Mat bez_toeplitz_oracle(const PolyVec& u, const PolyVec& v);

/* Hankel Bezoutian of u and v, built by the analogous recursion running
 * upward from the bottom row.  The result is symmetric. */
Mat bez_hankel_oracle(const PolyVec& u, const PolyVec& v);

/* Toeplitz Bezoutian as a difference of triangular Toeplitz products:
 * U+ V- - V+ U-.  The equivalent form V- U+ - U- V+ is computed as well
 * and compared; disagreement throws std::logic_error. */
Mat bez_toeplitz_gs(const PolyVec& u, const PolyVec& v);

/* Both literal triangular-product forms for the Hankel Bezoutian,
 * compared against the oracle.  form2 always equals form1 flipped about
 * the secondary diagonal; neither is guaranteed to match the oracle. */
struct HankelGsReport {
    Mat oracle;
    Mat form1; ///< V+ J U-  -  U+ J V-
    Mat form2; ///< U- J V+  -  V- J U+
    bool form1_matches_oracle = false;
    bool form2_matches_oracle = false;
    bool forms_mutually_flipped = false;
};

HankelGsReport bez_hankel_gs_report(const PolyVec& u, const PolyVec& v);

/* Transform sending the Toeplitz Bezoutian of (u, v) to a Hankel
 * Bezoutian candidate: Q = -B^T J, i.e. negate, transpose and flip the
 * columns.  No arithmetic beyond the sign change is performed. */
Mat q_transform_of(const Mat& toeplitz_bezoutian);

/* Convenience: q_transform_of applied to bez_toeplitz_oracle(u, v). */
Mat q_transform(const PolyVec& u, const PolyVec& v);

/* Kernel pair for del(T) computed by the extended Euclidean algorithm in
 * O(n^2) multiplications, each vector of length n+1.  The pair is exactly
 * verified to annihilate del(T) and to be linearly independent; if the
 * fast construction fails those checks the routine falls back to exact
 * elimination.  Vectors are scaled to primitive integer form when
 * possible (scaling does not touch the multiplication counter). */
std::pair<std::vector<Rat>, std::vector<Rat>> fast_kernel_pair(const ToeplitzBand& T);

/* Exact inverse of an invertible Toeplitz matrix in O(n^2)
 * multiplications.  Throws std::domain_error("singular matrix") when the
 * matrix is not invertible.  Never forms a dense n^3 elimination. */
Mat toeplitz_inverse_structured(const ToeplitzBand& T);

/* Exact inverse of an invertible Hankel matrix: reduces to the Toeplitz
 * case through H = (HJ)J and a row flip, at no extra multiplications. */
Mat hankel_inverse_structured(const HankelBand& H);

} // namespace cma
