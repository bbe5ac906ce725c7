#include "cma/similarity.hpp"

#include <stdexcept>
#include <string>

#include "cma/bezoutian.hpp"

namespace cma {

namespace {

bool all_zero(const std::vector<Rat>& v) {
    for (const Rat& r : v) {
        if (!r.is_zero()) return false;
    }
    return true;
}

void check_range(long k_min, long k_max) {
    if (k_min > k_max) {
        throw std::invalid_argument("empty power range");
    }
}

} // namespace

SimilarityReport check_theorem_2_1(const ToeplitzBand& T, const PolyVec& u,
                                   long k_min, long k_max) {
    if (u.n() != T.n) {
        throw std::invalid_argument("vector length must be matrix size plus one");
    }
    check_range(k_min, k_max);
    SimilarityReport rep;
    rep.stmt1 = all_zero(mat_vec(del_toeplitz(T), u.coeffs()));

    const Mat Td = T.to_dense();
    const Mat ct = companion(u, CompanionKind::Top);
    const Mat cb = companion(u, CompanionKind::Bottom);
    const Mat cl = companion(u, CompanionKind::Left);
    const Mat cr = companion(u, CompanionKind::Right);

    const Mat lhs2 = ct * Td;
    rep.stmt2 = (lhs2 == Td * cr) && is_toeplitz(lhs2);
    const Mat lhs3 = cb * Td;
    rep.stmt3 = (lhs3 == Td * cl) && is_toeplitz(lhs3);

    const Mat Ti = Td.inverse();
    bool powers_ok = true;
    for (long k = k_min; k <= k_max; ++k) {
        const bool ok =
            Ti * companion_power(u, CompanionKind::Top, k) * Td ==
            companion_power(u, CompanionKind::Right, k);
        rep.power_checks[k] = ok;
        powers_ok = powers_ok && ok;
    }
    rep.all = rep.stmt1 && rep.stmt2 && rep.stmt3 && powers_ok;
    return rep;
}

HankelSimilarityReport check_corollary_2_2(const HankelBand& H, const PolyVec& u,
                                           long k_min, long k_max) {
    if (u.n() != H.n) {
        throw std::invalid_argument("vector length must be matrix size plus one");
    }
    check_range(k_min, k_max);
    HankelSimilarityReport rep;
    rep.stmt1 = all_zero(mat_vec(del_hankel(H), u.reversed().coeffs()));

    const Mat Hd = H.to_dense();
    const Mat ct = companion(u, CompanionKind::Top);
    const Mat cb = companion(u, CompanionKind::Bottom);
    const Mat cbar_l = companion(u, CompanionKind::Left, /*barred=*/true);
    const Mat cbar_r = companion(u, CompanionKind::Right, /*barred=*/true);

    const Mat lhs2 = ct * Hd;
    rep.stmt2 = (lhs2 == Hd * cbar_l) && is_hankel(lhs2);
    const Mat lhs3 = cb * Hd;
    rep.stmt3 = (lhs3 == Hd * cbar_r) && is_hankel(lhs3);

    const Mat Hi = Hd.inverse();
    bool probes_ok = true;
    for (long k = k_min; k <= k_max; ++k) {
        const Mat conj_t = Hi * companion_power(u, CompanionKind::Top, k) * Hd;
        const Mat conj_b = Hi * companion_power(u, CompanionKind::Bottom, k) * Hd;
        const Mat pow_l = companion_power(u, CompanionKind::Left, k, /*barred=*/true);
        const Mat pow_r = companion_power(u, CompanionKind::Right, k, /*barred=*/true);
        rep.probe_a[k] = conj_b == pow_l;
        rep.probe_b[k] = conj_t == pow_l;
        rep.probe_c[k] = conj_b == pow_r;
        probes_ok = probes_ok && rep.probe_b[k] && rep.probe_c[k];
    }
    rep.all = rep.stmt1 && rep.stmt2 && rep.stmt3 && probes_ok;
    return rep;
}

Mat shift_transform(const Mat& A, const PolyVec& u, ShiftSide side, long k) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("shift_transform: square matrix required");
    }
    if (mat_rank(A) != A.rows()) {
        throw std::domain_error("singular matrix");
    }
    switch (side) {
        case ShiftSide::PreTop:
            return companion_power(u, CompanionKind::Top, k) * A;
        case ShiftSide::PostRight:
            return A * companion_power(u, CompanionKind::Right, k);
        case ShiftSide::PostBarredRight:
            return A * companion_power(u, CompanionKind::Right, k, /*barred=*/true);
    }
    throw std::logic_error("unreachable shift side");
}

Mat ctrb(const Mat& A, const std::vector<Rat>& b) {
    const int n = A.rows();
    if (A.cols() != n || n < 1) {
        throw std::invalid_argument("ctrb: square nonempty matrix required");
    }
    if (static_cast<int>(b.size()) != n) {
        throw std::invalid_argument("ctrb: vector length must match matrix size");
    }
    Mat result(n, n);
    std::vector<Rat> col = b;
    for (int j = 0; j < n; ++j) {
        if (j > 0) col = mat_vec(A, col);
        for (int i = 0; i < n; ++i) result.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return result;
}

Mat obsv(const std::vector<Rat>& d, const Mat& A) {
    const int n = A.rows();
    if (A.cols() != n || n < 1) {
        throw std::invalid_argument("obsv: square nonempty matrix required");
    }
    if (static_cast<int>(d.size()) != n) {
        throw std::invalid_argument("obsv: vector length must match matrix size");
    }
    Mat result(n, n);
    std::vector<Rat> row = d;
    for (int i = 0; i < n; ++i) {
        if (i > 0) row = vec_mat(row, A);
        for (int j = 0; j < n; ++j) result.at(i, j) = row[static_cast<std::size_t>(j)];
    }
    return result;
}

Mat canonical_q(const std::vector<Rat>& a, const std::vector<Rat>& b,
                bool* bezoutian_match) {
    const int n = static_cast<int>(a.size());
    if (n < 1) {
        throw std::invalid_argument("canonical_q: at least one coefficient required");
    }
    if (b.size() != a.size()) {
        throw std::invalid_argument("canonical_q: coefficient lists must match in length");
    }

    /* u = (a_n, ..., a_1, 1) and v = (b_n, ..., b_1, 0). */
    std::vector<Rat> ucoef(static_cast<std::size_t>(n + 1), Rat(0));
    std::vector<Rat> vcoef(static_cast<std::size_t>(n + 1), Rat(0));
    for (int d = 0; d < n; ++d) {
        ucoef[static_cast<std::size_t>(d)] = a[static_cast<std::size_t>(n - 1 - d)];
        vcoef[static_cast<std::size_t>(d)] = b[static_cast<std::size_t>(n - 1 - d)];
    }
    ucoef[static_cast<std::size_t>(n)] = Rat(1);
    const PolyVec u(ucoef);
    const PolyVec v(vcoef);

    const Mat a2 = companion(u, CompanionKind::Top);
    const Mat a1 = a2.transpose();
    std::vector<Rat> e1(static_cast<std::size_t>(n), Rat(0));
    e1[0] = Rat(1);

    const Mat o1 = obsv(b, a1);
    const Mat o2 = obsv(e1, a2);
    const Mat c1 = ctrb(a1, e1);
    const Mat c2 = ctrb(a2, b);

    if (mat_rank(o2) != n || mat_rank(o1) != n) {
        throw std::domain_error("singular observability matrix");
    }
    if (mat_rank(c1) != n || mat_rank(c2) != n) {
        throw std::domain_error("singular controllability matrix");
    }

    const Mat q = o2.inverse() * o1;
    if (q != c2 * c1.inverse()) {
        throw std::logic_error("canonical similarity factorizations disagree");
    }
    if (q.inverse() * a2 * q != a1) {
        throw std::logic_error("canonical similarity fails to conjugate the companions");
    }
    if (bezoutian_match != nullptr) {
        *bezoutian_match = (q == q_transform(u, v));
    }
    return q;
}

bool bezoutian_similarity_check(const PolyVec& u, const PolyVec& v,
                                long k_min, long k_max) {
    if (u.n() != v.n()) {
        throw std::invalid_argument("u and v must have the same length");
    }
    check_range(k_min, k_max);
    const Mat B = bez_toeplitz_oracle(u, v);
    if (mat_rank(B) != B.rows()) {
        throw std::domain_error("singular bezoutian (non-coprime generators)");
    }
    for (long k = k_min; k <= k_max; ++k) {
        if (companion_power(u, CompanionKind::Right, k) * B !=
            B * companion_power(u, CompanionKind::Top, k)) {
            return false;
        }
        if (companion_power(v, CompanionKind::Right, k) * B !=
            B * companion_power(v, CompanionKind::Top, k)) {
            return false;
        }
    }
    return true;
}

} // namespace cma
