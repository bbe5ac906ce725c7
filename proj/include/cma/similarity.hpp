// Similarity relations between companion matrices and structured
// (Toeplitz/Hankel) matrices: kernel-membership reports, conjugation
// probes over a power range, structure-preserving shift transforms, and
// the canonical similarity between the two standard single-input
// realizations of a rational function.

#pragma once

#include <map>
#include <vector>

#include "cma/companion.hpp"
#include "cma/matrix.hpp"
#include "cma/polynomial.hpp"
#include "cma/structured.hpp"

namespace cma {

/* Report for the Toeplitz similarity equivalence.  The three statements
 * are computed independently, never inferred from one another:
 *   stmt1: u annihilates del(T)
 *   stmt2: C_t T = T C_r and the common value is Toeplitz
 *   stmt3: C_b T = T C_l and the common value is Toeplitz
 * power_checks[k] records T^{-1} C_t^k T == C_r^k.  For an invertible
 * Toeplitz T the three statements are equivalent; `all` is the
 * conjunction of everything in the report. */
struct SimilarityReport {
    bool stmt1 = false;
    bool stmt2 = false;
    bool stmt3 = false;
    std::map<long, bool> power_checks;
    bool all = false;
};

/* Report for the Hankel analogue.
 *   stmt1: the reversed vector annihilates del(H)
 *   stmt2: C_t H = H Cbar_l and the common value is Hankel
 *   stmt3: C_b H = H Cbar_r and the common value is Hankel
 * Three candidate conjugation relations are probed empirically:
 *   probe_a: H^{-1} C_b^k H == Cbar_l^k   (fails beyond trivial powers)
 *   probe_b: H^{-1} C_t^k H == Cbar_l^k
 *   probe_c: H^{-1} C_b^k H == Cbar_r^k
 * Probes b and c follow from the Toeplitz-case relations under H = TJ
 * and enter `all`; probe_a is reported for inspection only. */
struct HankelSimilarityReport {
    bool stmt1 = false;
    bool stmt2 = false;
    bool stmt3 = false;
    std::map<long, bool> probe_a;
    std::map<long, bool> probe_b;
    std::map<long, bool> probe_c;
    bool all = false;
};

/* Evaluate the Toeplitz similarity report for u against T over powers
 * k_min..k_max.  Requires u of length T.n + 1 with nonzero endpoints
 * (std::invalid_argument) and invertible T (std::domain_error). */
SimilarityReport check_theorem_2_1(const ToeplitzBand& T, const PolyVec& u,
                                   long k_min = -3, long k_max = 3);

/* Evaluate the Hankel similarity report for u against H. */
HankelSimilarityReport check_corollary_2_2(const HankelBand& H, const PolyVec& u,
                                           long k_min = -3, long k_max = 3);

/* Where a companion power multiplies the matrix being transformed. */
enum class ShiftSide {
    PreTop,          ///< C_t(u)^k * A
    PostRight,       ///< A * C_r(u)^k
    PostBarredRight, ///< A * Cbar_r(u)^k
};

/* Structure-preserving shift: multiply the invertible matrix A by the
 * k-th power of the appropriate companion matrix of u.  If A conjugates
 * C_t into C_r (resp. Cbar_l), so does the result.  k may be negative.
 * Throws std::domain_error on singular A. */
Mat shift_transform(const Mat& A, const PolyVec& u, ShiftSide side, long k = 1);

/* Controllability matrix [b, Ab, ..., A^{n-1} b]. */
Mat ctrb(const Mat& A, const std::vector<Rat>& b);

/* Observability matrix with rows d, dA, ..., d A^{n-1}. */
Mat obsv(const std::vector<Rat>& d, const Mat& A);

/* Canonical similarity between the two standard realizations of
 * v(z)/u(z) with monic u(z) = z^n + a_1 z^(n-1) + ... + a_n and
 * numerator v(z) = b_1 z^(n-1) + ... + b_n; in this library's vector
 * convention u = (a_n, ..., a_1, 1) and v = (b_n, ..., b_1, 0):
 *   observer form:   A1 = C_t(u)^T, B1 = e_1,            D1 = (b_1 .. b_n)
 *   controller form: A2 = C_t(u),   B2 = (b_1 .. b_n)^T, D2 = e_1^T
 * Returns Q = obsv(D2,A2)^{-1} obsv(D1,A1), which must also equal
 * ctrb(A2,B2) ctrb(A1,B1)^{-1} and conjugate A2 into A1; violation of
 * either identity is an internal fault (std::logic_error).  A singular
 * observability or controllability matrix raises std::domain_error
 * naming the offender.  When bezoutian_match is non-null it receives the
 * result of cross-checking Q against -Bez_T(u,v)^T J (q_transform): the
 * cross-check holds at n = 1 but fails for generic data at larger sizes,
 * so it is reported rather than asserted. */
Mat canonical_q(const std::vector<Rat>& a, const std::vector<Rat>& b,
                bool* bezoutian_match = nullptr);

/* Check B C_t(w)^k B^{-1} = C_r(w)^k for the Toeplitz Bezoutian B of the
 * coprime pair (u, v) and both generators w in {u, v}, over k_min..k_max.
 * Throws std::domain_error if B is singular (non-coprime generators). */
bool bezoutian_similarity_check(const PolyVec& u, const PolyVec& v,
                                long k_min = -2, long k_max = 2);

} // namespace cma
