#include "cma/bezoutian.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cma {

namespace {

void check_pair(const PolyVec& u, const PolyVec& v) {
    if (u.n() != v.n()) {
        throw std::invalid_argument("u and v must have the same length");
    }
    if (u.n() < 1) {
        throw std::invalid_argument("vectors must have length at least 2");
    }
}

/* The antisymmetric seed N_{ij} = u_{i+1} v_{n+1-j} - u_{n+1-j} v_{i+1}
 * for the Toeplitz recursion, 0-based over [0,n]^2. */
Mat toeplitz_seed(const PolyVec& u, const PolyVec& v) {
    const int n = u.n();
    Mat N(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            N.at(i, j) = u.coeff1(i + 1) * v.coeff1(n + 1 - j) -
                         u.coeff1(n + 1 - j) * v.coeff1(i + 1);
        }
    }
    return N;
}

} // namespace

Mat bez_toeplitz_oracle(const PolyVec& u, const PolyVec& v) {
    check_pair(u, v);
    const int n = u.n();
    const Mat N = toeplitz_seed(u, v);
    /* b_{i+1,j+1} = N_{ij} + b_{ij}, zero boundary at row/column 0. */
    Mat B(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            B.at(i, j) = N.at(i, j);
            if (i >= 1 && j >= 1) B.at(i, j) += B.at(i - 1, j - 1);
        }
    }
    /* The recursion continued past the matrix must produce zeros. */
    for (int j = 0; j <= n; ++j) {
        Rat overflow = N.at(n, j);
        if (j >= 1) overflow += B.at(n - 1, j - 1);
        if (!overflow.is_zero()) {
            throw std::logic_error("toeplitz bezoutian boundary identity failed");
        }
    }
    for (int i = 0; i <= n; ++i) {
        Rat overflow = N.at(i, n);
        if (i >= 1) overflow += B.at(i - 1, n - 1);
        if (!overflow.is_zero()) {
            throw std::logic_error("toeplitz bezoutian boundary identity failed");
        }
    }
    return B;
}

Mat bez_hankel_oracle(const PolyVec& u, const PolyVec& v) {
    check_pair(u, v);
    const int n = u.n();
    /* w_{ij} = u_{i+1} v_{j+1} - u_{j+1} v_{i+1}, 0-based over [0,n]^2. */
    Mat w(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            w.at(i, j) = u.coeff1(i + 1) * v.coeff1(j + 1) -
                         u.coeff1(j + 1) * v.coeff1(i + 1);
        }
    }
    /* b_{i,j+1} = w_{ij} + b_{i+1,j}, seeded at the bottom row, with zero
     * boundary below row n and left of column 1. */
    Mat B(n, n);
    for (int j = 0; j < n; ++j) B.at(n - 1, j) = w.at(n, j);
    for (int i = n - 1; i >= 1; --i) {
        for (int j = 0; j < n; ++j) {
            B.at(i - 1, j) = w.at(i, j);
            if (j >= 1) B.at(i - 1, j) += B.at(i, j - 1);
        }
    }
    /* Continuing the recursion above row 1 and right of column n must
     * produce zeros. */
    for (int j = 1; j <= n; ++j) {
        if (B.at(0, j - 1) != -w.at(0, j)) {
            throw std::logic_error("hankel bezoutian boundary identity failed");
        }
    }
    for (int i = 1; i <= n - 1; ++i) {
        if (B.at(i, n - 1) != -w.at(i, n)) {
            throw std::logic_error("hankel bezoutian boundary identity failed");
        }
    }
    return B;
}

Mat bez_toeplitz_gs(const PolyVec& u, const PolyVec& v) {
    check_pair(u, v);
    const Mat up = build_u_plus(u).to_dense();
    const Mat um = build_u_minus(u).to_dense();
    const Mat vp = build_u_plus(v).to_dense();
    const Mat vm = build_u_minus(v).to_dense();
    const Mat first = up * vm - vp * um;
    const Mat second = vm * up - um * vp;
    if (first != second) {
        throw std::logic_error("triangular product forms disagree");
    }
    return first;
}

HankelGsReport bez_hankel_gs_report(const PolyVec& u, const PolyVec& v) {
    check_pair(u, v);
    HankelGsReport rep;
    rep.oracle = bez_hankel_oracle(u, v);
    const Mat up = build_u_plus(u).to_dense();
    const Mat um = build_u_minus(u).to_dense();
    const Mat vp = build_u_plus(v).to_dense();
    const Mat vm = build_u_minus(v).to_dense();
    /* A*J is a column flip. */
    rep.form1 = vp.flip_cols() * um - up.flip_cols() * vm;
    rep.form2 = um.flip_cols() * vp - vm.flip_cols() * up;
    rep.form1_matches_oracle = rep.form1 == rep.oracle;
    rep.form2_matches_oracle = rep.form2 == rep.oracle;
    rep.forms_mutually_flipped = rep.form2 == rep.form1.flip_secondary();
    return rep;
}

Mat q_transform_of(const Mat& toeplitz_bezoutian) {
    if (toeplitz_bezoutian.rows() != toeplitz_bezoutian.cols()) {
        throw std::invalid_argument("q_transform_of: square matrix required");
    }
    return -(toeplitz_bezoutian.transpose().flip_cols());
}

Mat q_transform(const PolyVec& u, const PolyVec& v) {
    return q_transform_of(bez_toeplitz_oracle(u, v));
}

namespace {

/* ---- dense polynomial helpers (coefficient index = degree) ---- */

int vdeg(const std::vector<Rat>& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
        if (!p[static_cast<std::size_t>(d)].is_zero()) return d;
    }
    return -1;
}

/* Divide a by b in place: a becomes the remainder, the quotient is
 * returned.  b must be nonzero. */
std::vector<Rat> vdivmod(std::vector<Rat>& a, const std::vector<Rat>& b) {
    const int db = vdeg(b);
    const Rat& lead = b[static_cast<std::size_t>(db)];
    int da = vdeg(a);
    std::vector<Rat> q(static_cast<std::size_t>(std::max(da - db + 1, 1)), Rat(0));
    while (da >= db) {
        Rat c = a[static_cast<std::size_t>(da)] / lead;
        q[static_cast<std::size_t>(da - db)] = c;
        for (int i = 0; i < db; ++i) {
            if (b[static_cast<std::size_t>(i)].is_zero()) continue;
            a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
        }
        a[static_cast<std::size_t>(da)] = Rat(0);
        while (da >= 0 && a[static_cast<std::size_t>(da)].is_zero()) --da;
    }
    return q;
}

/* tp - q * tc, returned with the given capacity; any nonzero coefficient
 * beyond it is an internal fault. */
std::vector<Rat> vsubmul(const std::vector<Rat>& tp, const std::vector<Rat>& q,
                         const std::vector<Rat>& tc, int capacity) {
    std::vector<Rat> full(tp.size() + q.size() + tc.size(), Rat(0));
    for (std::size_t i = 0; i < tp.size(); ++i) full[i] = tp[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) continue;
        for (std::size_t j = 0; j < tc.size(); ++j) {
            if (tc[j].is_zero()) continue;
            full[i + j] -= q[i] * tc[j];
        }
    }
    for (std::size_t d = static_cast<std::size_t>(capacity); d < full.size(); ++d) {
        if (!full[d].is_zero()) {
            throw std::logic_error("cofactor degree bound violated");
        }
    }
    full.resize(static_cast<std::size_t>(capacity), Rat(0));
    return full;
}

/* Scale a vector to primitive integer form with positive leading nonzero
 * entry.  Works directly on the underlying integers so the multiplication
 * counter is untouched. */
void normalize_primitive(std::vector<Rat>& v) {
    mpz_class den_lcm(1);
    bool any = false;
    for (const Rat& r : v) {
        if (r.is_zero()) continue;
        any = true;
        den_lcm = lcm(den_lcm, r.value().get_den());
    }
    if (!any) return;
    std::vector<mpz_class> nums(v.size());
    mpz_class g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        nums[i] = v[i].value().get_num() * (den_lcm / v[i].value().get_den());
        g = gcd(g, nums[i]);
    }
    int lead_sign = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (nums[i] != 0) {
            lead_sign = sgn(nums[i]);
            break;
        }
    }
    if (lead_sign < 0) g = -g;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = Rat(mpq_class(nums[i] / g));
    }
}

bool annihilates(const Mat& del, const std::vector<Rat>& x) {
    const std::vector<Rat> image = mat_vec(del, x);
    for (const Rat& r : image) {
        if (!r.is_zero()) return false;
    }
    return true;
}

bool independent(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    std::size_t pivot = x.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero() || !y[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot == x.size()) return false;
    for (std::size_t j = pivot + 1; j < x.size(); ++j) {
        if (!(x[pivot] * y[j] - x[j] * y[pivot]).is_zero()) return true;
    }
    return false;
}

/* B * T for B the Toeplitz Bezoutian of the kernel pair (x, y), computed
 * in O(n^2) multiplications through the displacement equation
 *   ZM - MZ = (ZB - BZ) T + B (ZT - TZ).
 * Only the first column of M is formed directly; the rest follows from
 * the displacement together with a redundancy check on the last column. */
Mat displacement_product(const Mat& B, const ToeplitzBand& T,
                         const std::vector<Rat>& x, const std::vector<Rat>& y) {
    const int n = T.n;

    /* First column of M: B times the first column of T. */
    std::vector<Rat> mcol0(static_cast<std::size_t>(n), Rat(0));
    for (int r = 0; r < n; ++r) {
        Rat acc(0);
        for (int c = 0; c < n; ++c) {
            const Rat& t = T.at_offset(c);
            if (t.is_zero() || B.at(r, c).is_zero()) continue;
            acc += B.at(r, c) * t;
        }
        mcol0[static_cast<std::size_t>(r)] = acc;
    }

    /* ZT - TZ = -e1 p~^T + q~ en^T. */
    std::vector<Rat> p(static_cast<std::size_t>(n), Rat(0));
    for (int c = 0; c + 1 < n; ++c) p[static_cast<std::size_t>(c)] = T.at_offset(-(c + 1));
    std::vector<Rat> qv(static_cast<std::size_t>(n), Rat(0));
    for (int r = 1; r < n; ++r) qv[static_cast<std::size_t>(r)] = T.at_offset(r - n);

    /* Columns of B entering the displacement. */
    const std::vector<Rat> be1 = B.col(0);
    const std::vector<Rat> ben = B.col(n - 1);
    std::vector<Rat> bq(static_cast<std::size_t>(n), Rat(0));
    for (int r = 0; r < n; ++r) {
        Rat acc(0);
        for (int c = 0; c < n; ++c) {
            if (qv[static_cast<std::size_t>(c)].is_zero() || B.at(r, c).is_zero()) continue;
            acc += B.at(r, c) * qv[static_cast<std::size_t>(c)];
        }
        bq[static_cast<std::size_t>(r)] = acc;
    }
    std::vector<Rat> zben(static_cast<std::size_t>(n), Rat(0));
    for (int r = 1; r < n; ++r) zben[static_cast<std::size_t>(r)] = ben[static_cast<std::size_t>(r - 1)];

    /* Row vectors y~^T Z and x~^T Z: component c holds the (n-c)-th entry
     * of the kernel vector, with a zero in the last slot. */
    std::vector<Rat> yz(static_cast<std::size_t>(n), Rat(0));
    std::vector<Rat> xz(static_cast<std::size_t>(n), Rat(0));
    for (int c = 0; c + 1 < n; ++c) {
        yz[static_cast<std::size_t>(c)] = y[static_cast<std::size_t>(n - 1 - c)];
        xz[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(n - 1 - c)];
    }

    /* Row-vector-by-Toeplitz products and the last row of T. */
    std::vector<Rat> yzT(static_cast<std::size_t>(n), Rat(0));
    std::vector<Rat> xzT(static_cast<std::size_t>(n), Rat(0));
    for (int c2 = 0; c2 < n; ++c2) {
        Rat accy(0);
        Rat accx(0);
        for (int c = 0; c < n; ++c) {
            const Rat& t = T.at_offset(c - c2);
            if (t.is_zero()) continue;
            if (!yz[static_cast<std::size_t>(c)].is_zero()) accy += yz[static_cast<std::size_t>(c)] * t;
            if (!xz[static_cast<std::size_t>(c)].is_zero()) accx += xz[static_cast<std::size_t>(c)] * t;
        }
        yzT[static_cast<std::size_t>(c2)] = accy;
        xzT[static_cast<std::size_t>(c2)] = accx;
    }
    std::vector<Rat> enT(static_cast<std::size_t>(n), Rat(0));
    for (int c = 0; c < n; ++c) enT[static_cast<std::size_t>(c)] = T.at_offset(n - 1 - c);

    /* D = -(B e1) p~^T + (B q~) en^T - x (y~^T Z T) + y (x~^T Z T)
     *     + (Z B en)(en^T T). */
    Mat D(n, n);
    for (int r = 0; r < n; ++r) {
        const Rat& xr = x[static_cast<std::size_t>(r)];
        const Rat& yr = y[static_cast<std::size_t>(r)];
        for (int c = 0; c < n; ++c) {
            Rat acc(0);
            if (!be1[static_cast<std::size_t>(r)].is_zero() && !p[static_cast<std::size_t>(c)].is_zero()) {
                acc -= be1[static_cast<std::size_t>(r)] * p[static_cast<std::size_t>(c)];
            }
            if (c == n - 1) acc += bq[static_cast<std::size_t>(r)];
            if (!xr.is_zero() && !yzT[static_cast<std::size_t>(c)].is_zero()) {
                acc -= xr * yzT[static_cast<std::size_t>(c)];
            }
            if (!yr.is_zero() && !xzT[static_cast<std::size_t>(c)].is_zero()) {
                acc += yr * xzT[static_cast<std::size_t>(c)];
            }
            if (!zben[static_cast<std::size_t>(r)].is_zero() && !enT[static_cast<std::size_t>(c)].is_zero()) {
                acc += zben[static_cast<std::size_t>(r)] * enT[static_cast<std::size_t>(c)];
            }
            D.at(r, c) = acc;
        }
    }

    /* Reconstruct M column by column: M_{i,j+1} = M_{i-1,j} - D_{ij}. */
    Mat M(n, n);
    for (int r = 0; r < n; ++r) M.at(r, 0) = mcol0[static_cast<std::size_t>(r)];
    for (int c = 1; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            M.at(r, c) = -D.at(r, c - 1);
            if (r >= 1) M.at(r, c) += M.at(r - 1, c - 1);
        }
    }
    /* The unused last column of D must reproduce the last column of M
     * shifted down; anything else is an internal fault. */
    for (int r = 0; r < n; ++r) {
        Rat expected(0);
        if (r >= 1) expected = M.at(r - 1, n - 1);
        if (D.at(r, n - 1) != expected) {
            throw std::logic_error("displacement reconstruction mismatch");
        }
    }
    return M;
}

} // namespace

std::pair<std::vector<Rat>, std::vector<Rat>> fast_kernel_pair(const ToeplitzBand& T) {
    const int n = T.n;
    if (n == 1) {
        return {std::vector<Rat>{Rat(1), Rat(0)}, std::vector<Rat>{Rat(0), Rat(1)}};
    }

    /* Band polynomial A and the modulus lambda^(2n-1). */
    std::vector<Rat> A(T.band);
    std::vector<Rat> Mpoly(static_cast<std::size_t>(2 * n), Rat(0));
    Mpoly[static_cast<std::size_t>(2 * n - 1)] = Rat(1);

    std::vector<Rat> x;
    std::vector<Rat> y;
    if (vdeg(A) >= 0) {
        std::vector<Rat> r_prev = std::move(Mpoly);
        std::vector<Rat> r_cur = std::move(A);
        std::vector<Rat> t_prev{Rat(0)};
        std::vector<Rat> t_cur{Rat(1)};
        while (vdeg(r_cur) > n - 1) {
            std::vector<Rat> q = vdivmod(r_prev, r_cur);
            std::vector<Rat> t_next = vsubmul(t_prev, q, t_cur, n + 1);
            std::swap(r_prev, r_cur);
            t_prev = std::move(t_cur);
            t_cur = std::move(t_next);
        }
        x = t_cur;
        x.resize(static_cast<std::size_t>(n + 1), Rat(0));
        if (vdeg(r_cur) == n - 1) {
            std::vector<Rat> q = vdivmod(r_prev, r_cur);
            y = vsubmul(t_prev, q, t_cur, n + 1);
        } else {
            /* Degree jump: lambda * t is a second kernel element. */
            y.assign(static_cast<std::size_t>(n + 1), Rat(0));
            for (int d = 0; d < n; ++d) {
                y[static_cast<std::size_t>(d + 1)] = x[static_cast<std::size_t>(d)];
            }
        }
        normalize_primitive(x);
        normalize_primitive(y);
    }

    const Mat del = del_toeplitz(T);
    if (!x.empty() && annihilates(del, x) && annihilates(del, y) && independent(x, y)) {
        return {std::move(x), std::move(y)};
    }

    /* Fallback: exact elimination.  A basis of the kernel always exists
     * and always annihilates del(T); the invertibility of T is judged
     * later by the product check. */
    std::vector<std::vector<Rat>> basis = null_space(del);
    if (basis.size() < 2) {
        throw std::logic_error("kernel of del(T) has dimension below 2");
    }
    normalize_primitive(basis[0]);
    normalize_primitive(basis[1]);
    return {std::move(basis[0]), std::move(basis[1])};
}

Mat toeplitz_inverse_structured(const ToeplitzBand& T) {
    const int n = T.n;
    auto [x, y] = fast_kernel_pair(T);
    const Mat B = bez_toeplitz_oracle(PolyVec(x), PolyVec(y));
    const Mat M = displacement_product(B, T, x, y);
    const Rat lambda = M.at(0, 0);
    if (lambda.is_zero()) {
        throw std::domain_error("singular matrix");
    }
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const bool bad = (r == c) ? (M.at(r, c) != lambda) : !M.at(r, c).is_zero();
            if (bad) {
                throw std::domain_error("singular matrix");
            }
        }
    }
    return B.scaled(lambda.reciprocal());
}

Mat hankel_inverse_structured(const HankelBand& H) {
    /* H equals T J for the Toeplitz matrix T with the same band values,
     * so H^{-1} = J T^{-1}: invert the Toeplitz matrix and flip rows. */
    const ToeplitzBand T(H.n, H.band);
    return toeplitz_inverse_structured(T).flip_rows();
}

} // namespace cma
