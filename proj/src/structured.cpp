#include "cma/structured.hpp"

#include <stdexcept>
#include <string>

namespace cma {

namespace {

void check_band(int n, const std::vector<Rat>& values) {
    if (n < 1) {
        throw std::invalid_argument("band size must be at least 1");
    }
    if (static_cast<int>(values.size()) != 2 * n - 1) {
        throw std::invalid_argument(
            "band of size n must hold exactly 2n-1 values, got " +
            std::to_string(values.size()) + " for n = " + std::to_string(n));
    }
}

} // namespace

ToeplitzBand::ToeplitzBand(int size, std::vector<Rat> values)
    : n(size), band(std::move(values)) {
    check_band(n, band);
}

const Rat& ToeplitzBand::at_offset(int d) const {
    if (d < 1 - n || d > n - 1) {
        throw std::out_of_range("band offset out of range");
    }
    return band[static_cast<std::size_t>(d + n - 1)];
}

Mat ToeplitzBand::to_dense() const {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = at_offset(i - j);
    }
    return m;
}

HankelBand::HankelBand(int size, std::vector<Rat> values)
    : n(size), band(std::move(values)) {
    check_band(n, band);
}

const Rat& HankelBand::at_offset(int d) const {
    if (d < 1 - n || d > n - 1) {
        throw std::out_of_range("band offset out of range");
    }
    return band[static_cast<std::size_t>(d + n - 1)];
}

Mat HankelBand::to_dense() const {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            /* 1-based H_{ij} = a_{i+j-n-1} */
            m.at(i, j) = at_offset(i + j + 1 - n);
        }
    }
    return m;
}

ToeplitzBand detect_toeplitz(const Mat& A) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("detect_toeplitz: square matrix required");
    }
    const int n = A.rows();
    if (n < 1) {
        throw std::invalid_argument("detect_toeplitz: empty matrix");
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (A.at(i, j) != A.at(i - 1, j - 1)) {
                throw std::domain_error(
                    "not Toeplitz: entry (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") differs from entry (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    std::vector<Rat> band(static_cast<std::size_t>(2 * n - 1));
    for (int d = 1 - n; d <= n - 1; ++d) {
        band[static_cast<std::size_t>(d + n - 1)] =
            d >= 0 ? A.at(d, 0) : A.at(0, -d);
    }
    return ToeplitzBand(n, std::move(band));
}

HankelBand detect_hankel(const Mat& A) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("detect_hankel: square matrix required");
    }
    const int n = A.rows();
    if (n < 1) {
        throw std::invalid_argument("detect_hankel: empty matrix");
    }
    for (int i = 0; i < n - 1; ++i) {
        for (int j = 1; j < n; ++j) {
            if (A.at(i, j) != A.at(i + 1, j - 1)) {
                throw std::domain_error(
                    "not Hankel: entry (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") differs from entry (" +
                    std::to_string(i + 2) + "," + std::to_string(j) + ")");
            }
        }
    }
    std::vector<Rat> band(static_cast<std::size_t>(2 * n - 1));
    for (int d = 1 - n; d <= n - 1; ++d) {
        /* 1-based H_{ij} = a_{i+j-n-1}; read from the first column / last row */
        band[static_cast<std::size_t>(d + n - 1)] =
            d <= 0 ? A.at(d + n - 1, 0) : A.at(n - 1, d);
    }
    return HankelBand(n, std::move(band));
}

bool is_toeplitz(const Mat& A) {
    for (int i = 1; i < A.rows(); ++i) {
        for (int j = 1; j < A.cols(); ++j) {
            if (A.at(i, j) != A.at(i - 1, j - 1)) return false;
        }
    }
    return true;
}

bool is_hankel(const Mat& A) {
    for (int i = 0; i + 1 < A.rows(); ++i) {
        for (int j = 1; j < A.cols(); ++j) {
            if (A.at(i, j) != A.at(i + 1, j - 1)) return false;
        }
    }
    return true;
}

Mat del_toeplitz(const ToeplitzBand& T) {
    const int n = T.n;
    Mat d(n - 1, n + 1);
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n + 1; ++j) {
            d.at(i - 1, j - 1) = T.at_offset(i - j + 1);
        }
    }
    return d;
}

Mat del_hankel(const HankelBand& H) {
    const int n = H.n;
    Mat d(n - 1, n + 1);
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n + 1; ++j) {
            d.at(i - 1, j - 1) = H.at_offset(i + j - n - 1);
        }
    }
    return d;
}

std::pair<PolyVec, PolyVec> kernel_del(const ToeplitzBand& T) {
    /* Invertibility is a precondition; verify it by exact elimination. */
    if (mat_rank(T.to_dense()) != T.n) {
        throw std::domain_error("singular matrix");
    }
    if (T.n == 1) {
        /* del(T) is 0 x 2: the kernel is the whole plane. */
        return {PolyVec({Rat(1), Rat(0)}), PolyVec({Rat(0), Rat(1)})};
    }
    std::vector<std::vector<Rat>> basis = null_space(del_toeplitz(T));
    if (basis.size() != 2) {
        throw std::domain_error(
            "kernel of del(T) has dimension " + std::to_string(basis.size()) +
            " (rank " + std::to_string(T.n + 1 - static_cast<int>(basis.size())) +
            "), expected 2");
    }
    return {PolyVec(std::move(basis[0])), PolyVec(std::move(basis[1]))};
}

ToeplitzBand complete_band(const PolyVec& u, const std::vector<Rat>& free) {
    const int n = u.n();
    if (n < 1) {
        throw std::invalid_argument("complete_band requires degree >= 1");
    }
    if (!u.first_nonzero()) {
        throw std::invalid_argument("complete_band requires u_1 != 0");
    }
    if (static_cast<int>(free.size()) != n) {
        throw std::invalid_argument(
            "complete_band needs exactly n free values a_{1-n}..a_0");
    }
    std::vector<Rat> band(static_cast<std::size_t>(2 * n - 1));
    for (int i = 0; i < n; ++i) band[i] = free[i];
    /* a_i = -(1/u_1) (a_{i-1} u_2 + ... + a_{i-n} u_{n+1}) */
    for (int i = 1; i <= n - 1; ++i) {
        Rat acc(0);
        for (int j = 1; j <= n; ++j) {
            const Rat& prev = band[static_cast<std::size_t>(i - j + n - 1)];
            if (prev.is_zero()) continue;
            acc += prev * u.coeff1(j + 1);
        }
        band[static_cast<std::size_t>(i + n - 1)] = -(acc / u.first());
    }
    return ToeplitzBand(n, std::move(band));
}

ToeplitzBand build_u_plus(const PolyVec& u) {
    const int n = u.n();
    if (n < 1) {
        throw std::invalid_argument("build_u_plus requires degree >= 1");
    }
    std::vector<Rat> band(static_cast<std::size_t>(2 * n - 1), Rat(0));
    for (int d = 0; d <= n - 1; ++d) {
        band[static_cast<std::size_t>(d + n - 1)] = u.coeff1(d + 1);
    }
    return ToeplitzBand(n, std::move(band));
}

ToeplitzBand build_u_minus(const PolyVec& u) {
    const int n = u.n();
    if (n < 1) {
        throw std::invalid_argument("build_u_minus requires degree >= 1");
    }
    std::vector<Rat> band(static_cast<std::size_t>(2 * n - 1), Rat(0));
    for (int d = 0; d <= n - 1; ++d) {
        band[static_cast<std::size_t>(n - 1 - d)] = u.coeff1(n + 1 - d);
    }
    return ToeplitzBand(n, std::move(band));
}

} // namespace cma
