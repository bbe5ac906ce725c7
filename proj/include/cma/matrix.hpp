#pragma once

/*
 * Dense matrices over exact rationals, with the primitive operations the
 * whole library builds on: exact product, inverse by elimination,
 * secondary-diagonal reflection A^J = J A^T J, rank and null-space.
 *
 * Storage is row-major; indices are 0-based in code. Where a comment states
 * a formula with 1-based indices (matching the usual mathematical
 * conventions for these objects), it says so explicitly.
 */

#include "cma/rational.hpp"

#include <string>
#include <vector>

namespace cma {

class Mat {
public:
    Mat() = default;

    /* rows x cols zero matrix. Zero-sized dimensions are permitted (they
     * occur naturally, e.g. as the 0 x 2 boundary case of the del operator
     * at n = 1). */
    Mat(int rows, int cols);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c);
    const Rat& at(int r, int c) const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;

    Mat scaled(const Rat& c) const;
    Mat transpose() const;

    /* A^J = J A^T J, reflection about the secondary diagonal; with 1-based
     * indices (A^J)_{ij} = A_{n+1-j, n+1-i}. Square input required. */
    Mat flip_secondary() const;

    /* J * A (reverses row order) and A * J (reverses column order); both are
     * permutations and perform no scalar arithmetic. */
    Mat flip_rows() const;
    Mat flip_cols() const;

    /* Exact inverse by Gauss-Jordan elimination; the pivot in each column is
     * the first nonzero entry at or below the diagonal. Throws
     * std::domain_error("singular matrix") when no pivot exists. */
    Mat inverse() const;

    bool is_zero() const;

    std::vector<Rat> row(int r) const;
    std::vector<Rat> col(int c) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> e_;
};

/* Copy of the rows x cols sub-block of A anchored at (r0, c0); the block
 * must lie entirely inside A. */
Mat sub_block(const Mat& A, int r0, int c0, int rows, int cols);

/* A * x for a column vector x. */
std::vector<Rat> mat_vec(const Mat& A, const std::vector<Rat>& x);

/* x^T * A for a row vector x. */
std::vector<Rat> vec_mat(const std::vector<Rat>& x, const Mat& A);

/* Rank by exact elimination. */
int mat_rank(Mat A);

/* Basis of the right null space {x : A x = 0}, by exact elimination.
 * Returns kernel-dimension many vectors of length A.cols(). */
std::vector<std::vector<Rat>> null_space(Mat A);

} // namespace cma
