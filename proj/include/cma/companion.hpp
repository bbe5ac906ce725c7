#pragma once

/*
 * The four companion matrices of a coefficient vector u = (u_1,...,u_{n+1})^T
 * and their integer powers. With 1-based indices and n = deg u:
 *
 *   Top:    first row (-u_n, ..., -u_1)/u_{n+1}, then [I_{n-1} | 0]
 *   Bottom: [0 | I_{n-1}] on top, last row (-u_{n+1}, ..., -u_2)/u_1
 *   Left:   first column (-u_2, ..., -u_{n+1})^T/u_1, I_{n-1} in the
 *           top-right block
 *   Right:  last column (-u_1, ..., -u_n)^T/u_{n+1}, I_{n-1} in the
 *           bottom-left block
 *
 * Useful identities, each covered by tests:
 *   C_t C_b = C_b C_t = I and C_l C_r = C_r C_l = I   (inverse pairs)
 *   C_t^J = C_r, C_b^J = C_l                          (secondary flip)
 *   C_t^T = barred Left, C_b^T = barred Right, etc.   (transposes)
 * where a "barred" matrix is the companion matrix of the reversed vector u^J.
 */

#include "cma/matrix.hpp"
#include "cma/polynomial.hpp"

namespace cma {

enum class CompanionKind { Top, Bottom, Left, Right };

/* The n x n companion matrix of u. Top/Right require u_{n+1} != 0,
 * Bottom/Left require u_1 != 0 (checked after reversal when barred = true);
 * violations throw std::invalid_argument. Requires n >= 1. */
Mat companion(const PolyVec& u, CompanionKind kind, bool barred = false);

/* k-th power. Negative k goes through the inverse-pair partner
 * (Top<->Bottom, Left<->Right) and repeated multiplication, never through
 * generic matrix inversion. */
Mat companion_power(const PolyVec& u, CompanionKind kind, long k,
                    bool barred = false);

} // namespace cma
