#include "cma/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cma {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              Rat(0));
}

Mat Mat::identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = Rat(1);
    return I;
}

Rat& Mat::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return e_[static_cast<std::size_t>(r) * cols_ + c];
}

const Rat& Mat::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return e_[static_cast<std::size_t>(r) * cols_ + c];
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] != o.e_[i]) return false;
    }
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_,
            "matrix addition: dimension mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_,
            "matrix subtraction: dimension mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    require(cols_ == o.rows_, "matrix product: dimension mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r = *this;
    for (auto& v : r.e_) v *= c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
}

Mat Mat::flip_secondary() const {
    require(rows_ == cols_, "flip_secondary: square matrix required");
    Mat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            r.at(i, j) = at(rows_ - 1 - j, cols_ - 1 - i);
        }
    }
    return r;
}

Mat Mat::flip_rows() const {
    Mat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - 1 - i, j);
    }
    return r;
}

Mat Mat::flip_cols() const {
    Mat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, cols_ - 1 - j);
    }
    return r;
}

Mat Mat::inverse() const {
    require(rows_ == cols_, "inverse: square matrix required");
    const int n = rows_;
    Mat a = *this;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Rat p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rat f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Mat::is_zero() const {
    for (const auto& v : e_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

std::vector<Rat> Mat::row(int r) const {
    std::vector<Rat> out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

std::vector<Rat> Mat::col(int c) const {
    std::vector<Rat> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

Mat sub_block(const Mat& A, int r0, int c0, int rows, int cols) {
    require(rows >= 0 && cols >= 0 && r0 >= 0 && c0 >= 0 &&
                r0 + rows <= A.rows() && c0 + cols <= A.cols(),
            "sub-block out of range");
    Mat out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = A.at(r0 + i, c0 + j);
    return out;
}

std::vector<Rat> mat_vec(const Mat& A, const std::vector<Rat>& x) {
    require(static_cast<int>(x.size()) == A.cols(),
            "matrix-vector product: dimension mismatch");
    std::vector<Rat> out(static_cast<std::size_t>(A.rows()), Rat(0));
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) {
            if (A.at(i, j).is_zero() || x[j].is_zero()) continue;
            out[i] += A.at(i, j) * x[j];
        }
    }
    return out;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& x, const Mat& A) {
    require(static_cast<int>(x.size()) == A.rows(),
            "vector-matrix product: dimension mismatch");
    std::vector<Rat> out(static_cast<std::size_t>(A.cols()), Rat(0));
    for (int i = 0; i < A.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < A.cols(); ++j) {
            if (A.at(i, j).is_zero()) continue;
            out[j] += x[i] * A.at(i, j);
        }
    }
    return out;
}

namespace {

/* Row echelon reduction; returns pivot column per pivot row. */
std::vector<int> echelon(Mat& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < a.rows(); ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < a.cols(); ++j) {
                std::swap(a.at(pivot, j), a.at(row, j));
            }
        }
        const Rat p = a.at(row, col);
        for (int j = col; j < a.cols(); ++j) a.at(row, j) /= p;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            const Rat f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int j = col; j < a.cols(); ++j) {
                a.at(r, j) -= f * a.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int mat_rank(Mat A) {
    return static_cast<int>(echelon(A).size());
}

std::vector<std::vector<Rat>> null_space(Mat A) {
    const int ncols = A.cols();
    const std::vector<int> pivots = echelon(A);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(ncols), Rat(0));
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -A.at(static_cast<int>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace cma
