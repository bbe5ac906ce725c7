#pragma once

/*
 * Banded representations of Toeplitz and Hankel matrices, the del operator
 * that characterizes companion-similarity transformers, the triangular
 * factors U+ / U-, and constructive band completion.
 *
 * Conventions (1-based indices):
 *   ToeplitzBand: T_{ij} = a_{i-j},     band stores a_{1-n}, ..., a_{n-1}
 *   HankelBand:   H_{ij} = a_{i+j-n-1}, band stores a_{1-n}, ..., a_{n-1}
 *
 * del(T) is the (n-1) x (n+1) matrix obtained by extending T one column to
 * the right (preserving its structure) and deleting the first row (Toeplitz)
 * or the last row (Hankel):
 *   (del T)_{ij} = a_{i-j+1}
 *   (del H)_{ij} = a_{i+j-n-1}
 * T commutes with the companion action (C_t T = T C_r, C_b T = T C_l, both
 * again Toeplitz) exactly when u lies in ker del(T); the Hankel counterpart
 * uses u^J.
 */

#include "cma/matrix.hpp"
#include "cma/polynomial.hpp"

#include <utility>
#include <vector>

namespace cma {

struct ToeplitzBand {
    int n = 0;
    /* band[k] = a_{k-(n-1)}, k = 0 .. 2n-2 */
    std::vector<Rat> band;

    ToeplitzBand(int size, std::vector<Rat> values);

    /* a_d for d in [1-n, n-1]. */
    const Rat& at_offset(int d) const;

    Mat to_dense() const;
};

struct HankelBand {
    int n = 0;
    /* band[k] = a_{k-(n-1)}, k = 0 .. 2n-2 */
    std::vector<Rat> band;

    HankelBand(int size, std::vector<Rat> values);

    const Rat& at_offset(int d) const;

    Mat to_dense() const;
};

/* Band extraction with exact verification that every diagonal
 * (anti-diagonal) is constant; throws std::domain_error naming the first
 * offending entry pair otherwise. Square input required. */
ToeplitzBand detect_toeplitz(const Mat& A);
HankelBand detect_hankel(const Mat& A);

/* True iff the matrix has constant diagonals / anti-diagonals. Unlike the
 * detect functions these accept rectangular input and do not throw. */
bool is_toeplitz(const Mat& A);
bool is_hankel(const Mat& A);

/* The del operator; requires n >= 2... n = 1 yields the degenerate 0 x 2
 * matrix, which is permitted and has full kernel. */
Mat del_toeplitz(const ToeplitzBand& T);
Mat del_hankel(const HankelBand& H);

/* Two linearly independent vectors spanning ker del(T), computed by exact
 * elimination. Requires T invertible (std::domain_error otherwise); also
 * throws std::domain_error if the kernel dimension is not 2, reporting the
 * rank. For invertible T the dimension is always exactly 2. */
std::pair<PolyVec, PolyVec> kernel_del(const ToeplitzBand& T);

/* Completes a Toeplitz band from its first n values a_{1-n}, ..., a_0 (the
 * matrix's first row read right to left) so that del(T) u = 0:
 *   a_i = -(1/u_1) (a_{i-1} u_2 + ... + a_{i-n} u_{n+1}),  i = 1 .. n-1.
 * Requires u_1 != 0 and free.size() == n. */
ToeplitzBand complete_band(const PolyVec& u, const std::vector<Rat>& free);

/* Triangular Toeplitz factors:
 *   U+ lower triangular, first column (u_1, ..., u_n)
 *   U- upper triangular, first row (u_{n+1}, ..., u_2)  */
ToeplitzBand build_u_plus(const PolyVec& u);
ToeplitzBand build_u_minus(const PolyVec& u);

} // namespace cma
