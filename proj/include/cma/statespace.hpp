#pragma once

/*
 * Discrete-time SISO state-space realizations of the rational transfer map
 * -v(lambda)/u(lambda), built directly on companion matrices, and exact
 * closed-form state evolution.
 *
 * The underlying sequence picture: a scalar sequence b_1, b_2, ... carries
 * the dynamics; inputs and outputs are the sliding-window functionals
 *   x_k = -(u_{n+1} b_k + u_n b_{k+1} + ... + u_1 b_{k+n}),
 *   y_k =   v_{n+1} b_k + v_n b_{k+1} + ... + v_1 b_{k+n},
 * and the state is the window beta(k) = (b_k, ..., b_{k+n-1})^T, with
 * beta(1) = (b_1, ..., b_n)^T as the initial state. In that basis the
 * evolution is beta(k+1) = C_b(u) beta(k) + B x_k; conjugating by the
 * Toeplitz Bezoutian B_T(u,v) turns it into the form driven by C_l(u).
 * The closed forms below reproduce whole trajectory segments in one exact
 * matrix expression built from the structure-preserving extensions.
 */

#include "cma/matrix.hpp"
#include "cma/polynomial.hpp"

#include <utility>
#include <vector>

namespace cma {

/* A SISO system given by denominator u and numerator -v of equal formal
 * degree n (pad v with zero leading coefficients as needed; the canonical
 * strictly-proper case has v_{n+1} = 0). Endpoint conditions are imposed by
 * the individual operations, not here. Coprimality of (u, v) is recorded as
 * a warning flag: simulation stays well-defined without it, but the
 * Bezoutian-transformed realization does not exist. */
struct SisoSystem {
    PolyVec u;
    PolyVec v;
    bool coprime;

    SisoSystem(PolyVec u_, PolyVec v_);

    int n() const { return u.n(); }
};

/* One canonical realization: beta(k+1) = A beta(k) + B x_k,
 * y_k = D beta(k) + d x_k, all entries exact rationals. */
struct Realization {
    Mat A;              /* n x n companion matrix        */
    std::vector<Rat> B; /* n x 1 input map               */
    std::vector<Rat> D; /* 1 x n output map              */
    Rat d;              /* feedthrough scalar, -v_1/u_1  */
};

struct Trajectory {
    /* states.size() == inputs.size() + 1; outputs.size() == inputs.size() */
    std::vector<std::vector<Rat>> states;
    std::vector<Rat> outputs;
    std::vector<Rat> inputs;
};

/* The window-basis realization: A = C_b(u), B = -(0,...,0,1/u_1)^T,
 * D = (1/u_1)(u_1 v_{n+1} - v_1 u_{n+1}, ..., u_1 v_2 - v_1 u_2) (which is
 * the first row of the Toeplitz Bezoutian of (u, v) divided by u_1), and
 * d = -v_1/u_1. Requires u_1 != 0. */
Realization controller_form(const SisoSystem& sys);

/* The Bezoutian-transformed realization acting on beta'(k) = B_T beta(k):
 * A = C_l(u), B_1 = -(1/u_1) (last column of B_T), D_1 = (1/u_1) e_1^T,
 * same feedthrough. Requires u_1 != 0 and B_T invertible
 * (std::domain_error("singular bezoutian (non-coprime generators)")). */
Realization transformed_form(const SisoSystem& sys);

/* Exact stepwise simulation from an initial state. */
Trajectory simulate(const Realization& r, const std::vector<Rat>& beta0,
                    const std::vector<Rat>& inputs);

/* The difference-equation reading of a raw sequence b (1-based windows):
 * returns ({x_k}, {y_k}) for k = 1 .. len(b) - n. Requires
 * len(b) >= n + 1. */
std::pair<std::vector<Rat>, std::vector<Rat>>
b_to_io(const std::vector<Rat>& b, const SisoSystem& sys);

/* The p x p lower-triangular Toeplitz matrix F_p with unit diagonal whose
 * i-th sub-diagonal holds s_i = (C_b^i)_{n,n}; (1/u_1) F_p is the inverse of
 * the p x p lower-triangular truncation of the semi-infinite banded matrix
 * with first column (u_1, ..., u_{n+1}, 0, ...). Requires u_1 != 0, p >= 1. */
Mat build_F(const PolyVec& u, int p);

/* The whole segment (b_1, ..., b_{n+p}) reached from beta(1) = beta_init
 * under inputs x_1..x_p, in one closed form: the downward extension of the
 * identity times beta_init, minus (1/u_1) [0; F_p] x. Requires u_1 != 0 and
 * p >= 1; matches stepwise simulation of the controller form exactly. */
std::vector<Rat> long_state(const SisoSystem& sys,
                            const std::vector<Rat>& beta_init,
                            const std::vector<Rat>& inputs);

/* The transformed state beta'(q+1) reached from beta'(1) = betaP_init under
 * inputs x_1..x_q, in closed form: C_l^q betaP_init plus the horizontal
 * extension of the identity applied to the banded stack of B_1-columns times
 * x. Requires a coprime system and q >= 1; matches stepwise simulation of
 * the transformed form exactly. */
std::vector<Rat> late_state(const SisoSystem& sys,
                            const std::vector<Rat>& betaP_init,
                            const std::vector<Rat>& inputs);

/* Mixed two-phase evolution: q steps in the transformed basis from
 * beta'(1) = betaP_init, then the basis change B_T^{-1}, then p more window
 * steps, p = inputs.size() - q >= 1, returning the segment
 * (b_{q+1}, ..., b_{n+q+p}). Evaluated as the three-term closed form
 *   T[B_T^{-1} : 0,-p ; -q,-q] beta'(1)
 *   + T[B_T^{-1} : 0,-p ; 0,1-q] E_q x_{[1:q]}
 *   - (1/u_1) [0; F_p] x_{[q+1:q+p]},
 * where E_q is the (n+q-1) x q banded stack of B_1 columns; the middle term
 * is absent when q = 0. Requires a coprime system. */
std::vector<Rat> mixed_state(const SisoSystem& sys,
                             const std::vector<Rat>& betaP_init,
                             const std::vector<Rat>& inputs, int q);

} // namespace cma
