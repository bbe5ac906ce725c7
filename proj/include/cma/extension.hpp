#pragma once

/*
 * Structure-preserving extensions. Given an n x n matrix A and a coefficient
 * vector u, the extension operator T[A : k,l ; s,t] produces the
 * (n + k - l) x (n + s - t) matrix whose aligned n x n windows are
 * C_t^i A C_r^j, the vertical window index i running from k (top) down to l
 * (bottom) and the horizontal index j from t (left) to s (right). Rows are
 * added by taking first rows of C_t-multiples and columns by taking last
 * columns of C_r-multiples, so consecutive windows overlap consistently by
 * construction. The Hankel variant replaces C_r by the barred companion
 * matrix (the companion of u^J) horizontally; vertical steps always use C_t.
 *
 * When u lies in ker del(A) (so A commutes with the companion action and is
 * Toeplitz up to that characterization), the extension of a Toeplitz matrix
 * is again Toeplitz on the larger index range, and the extension of a Hankel
 * matrix (with u^J in ker del(A)) is again Hankel. The kernel of the full
 * extension, viewed as a linear map, is spanned by shifted copies of u
 * itself, which is what makes the extension canonical.
 */

#include "cma/matrix.hpp"
#include "cma/polynomial.hpp"
#include "cma/structured.hpp"

#include <string>
#include <utility>

namespace cma {

/* Extension extents. k >= l and s >= t are required (std::invalid_argument
 * otherwise); all four may be negative, which trims instead of extending.
 * hankel_mode selects the barred horizontal shifts. */
struct ExtensionSpec {
    int k = 0;
    int l = 0;
    int s = 0;
    int t = 0;
    bool hankel_mode = false;

    ExtensionSpec(int k_, int l_, int s_, int t_, bool hankel = false);
};

/* Result of a full extension. origin_row / origin_col give the 0-based
 * position where the original A-block sits inside matrix (virtual when the
 * extents exclude it): the window anchored at (origin_row, origin_col)
 * equals A itself whenever l <= 0 <= k and t <= 0 <= s. */
struct ExtensionGrid {
    Mat matrix;
    int origin_row = 0; /* = k  */
    int origin_col = 0; /* = -t */
};

/* Vertical extension T[A : k,l]: the (n + k - l) x n matrix whose bottom
 * n rows are C_t^l A and whose row above the window C_t^i A is the first row
 * of C_t^{i+1} A. Requires A square of size matching u, nonzero endpoint
 * coefficients, and k >= l. */
Mat extend_vertical(const Mat& A, const PolyVec& u, int k, int l);

/* Full extension: extend_vertical, then shift horizontally by C_r^t and
 * append the last columns of successive C_r-multiples until the horizontal
 * extent s is reached (barred companions in hankel_mode). */
ExtensionGrid extend_full(const Mat& A, const PolyVec& u,
                          const ExtensionSpec& spec);

/* The n x n window of a grid anchored at 0-based (row0, col0): plain
 * bounds-checked sub-matrix extraction. The window at
 * (origin_row - i, origin_col + j) equals C_t^i A C_r^j. */
Mat grid_window(const ExtensionGrid& g, int n, int row0, int col0);

/* The (n + r) x r matrix whose columns span the kernel of any full extension
 * of width n + r built from u: column i holds u_1, ..., u_{n+1} starting at
 * row i (0-based). With hankel = true the columns hold the reversed vector
 * u^J, column i starting at row r - 1 - i, matching the Hankel extension's
 * kernel. Requires r >= 1. */
Mat extension_kernel_basis(const PolyVec& u, int r, bool hankel = false);

/* Verifies that the full extension of an invertible A has rank exactly n and
 * that every column of extension_kernel_basis annihilates it (vacuous when
 * s == t). Throws std::domain_error("singular matrix") when A is singular;
 * otherwise returns the verdict as a bool. */
bool check_extension_kernel(const Mat& A, const PolyVec& u,
                            const ExtensionSpec& spec);

/* Structure preservation, Toeplitz side. Preconditions: spec.hankel_mode is
 * false, del(T) u = 0 (std::invalid_argument reporting the residual
 * otherwise) and T invertible (std::domain_error). The extension is built on
 * the equalized square extents (k, k-E ; s, s-E), E = max(k-l, s-t), whose
 * top-left corner contains the requested grid, and must have constant
 * diagonals; a violation would contradict the kernel characterization and
 * throws std::logic_error. Returns the extended band of size n + E. */
ToeplitzBand verify_structure_preservation(const ToeplitzBand& T,
                                           const PolyVec& u,
                                           const ExtensionSpec& spec);

/* Hankel counterpart: requires spec.hankel_mode, del(H) u^J = 0, and H
 * invertible; returns the extended anti-diagonal band of size n + E. */
HankelBand verify_structure_preservation_hankel(const HankelBand& H,
                                                const PolyVec& u,
                                                const ExtensionSpec& spec);

/* Band anatomy of the extension of U+^{-1} (lower triangular, del-kernel
 * vector u). Writing d = row - col for the diagonals of the grid and
 * anchoring at d0 = k + t:
 *
 *   (a) the n - 1 diagonals d0 - n < d < d0 vanish identically;
 *   (b) the n + h diagonals d0 <= d <= d0 + n + h - 1 (h = -l - t), read as
 *       a lower-triangular Toeplitz matrix S, satisfy S L = I where L is the
 *       (n+h) x (n+h) lower-triangular Toeplitz matrix with first column
 *       (u_1, ..., u_{n+1}, 0, ...);
 *   (c) the m = k + s diagonals d <= d0 - n, read as an upper-triangular
 *       Toeplitz matrix R, satisfy R W = I where W is the m x m
 *       upper-triangular Toeplitz matrix whose first row is the m-truncation
 *       of (-u_{n+1}, ..., -u_1, 0, ...).
 *
 * Requires k >= 0 >= l, s >= 0 >= t, u_1 != 0 and u_{n+1} != 0, and a
 * non-Hankel spec. Feature failures are reported in the returned struct, not
 * thrown. */
struct UplusReport {
    bool structure_ok = false;   /* grid has constant diagonals */
    bool zero_middle_band = false;
    bool below_ok = false;       /* feature (b) */
    bool above_ok = false;       /* feature (c) */
    int m = 0;                   /* above-band diagonal count, k + s  */
    int h = 0;                   /* extra below-band depth, -l - t    */
    std::string detail;          /* first mismatch, empty when clean  */
    bool all = false;
};

UplusReport analyze_uplus_extension(const PolyVec& u,
                                    const ExtensionSpec& spec);

/* Extends the inverse of the Toeplitz Bezoutian of a coprime pair (u, v)
 * with each generator in turn. Both grids are Toeplitz and agree on the
 * central 2n - 1 diagonals (the original matrix), differing only in the way
 * the band continues outward. Throws std::domain_error("singular bezoutian
 * (non-coprime generators)") when the Bezoutian is singular. */
std::pair<ExtensionGrid, ExtensionGrid>
bezoutian_extension_pair(const PolyVec& u, const PolyVec& v,
                         const ExtensionSpec& spec);

} // namespace cma
