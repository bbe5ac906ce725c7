#include "cma/extension.hpp"

#include "cma/bezoutian.hpp"
#include "cma/companion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cma {

namespace {

void check_shape(const Mat& A, int n) {
    if (A.rows() != n || A.cols() != n) {
        throw std::invalid_argument(
            "extension: matrix must be square of the size matching u");
    }
}

void check_endpoints(const PolyVec& u) {
    if (!u.first_nonzero() || !u.last_nonzero()) {
        throw std::invalid_argument(
            "extension requires nonzero endpoint coefficients");
    }
}

bool all_zero(const std::vector<Rat>& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::string vec_str(const std::vector<Rat>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

/* First entry of the diagonal d = row - col of G; assumes the diagonal is
 * nonempty, which the callers' extent arithmetic guarantees. */
const Rat& diag_value(const Mat& G, int d) {
    return G.at(d > 0 ? d : 0, d > 0 ? 0 : -d);
}

} // namespace

ExtensionSpec::ExtensionSpec(int k_, int l_, int s_, int t_, bool hankel)
    : k(k_), l(l_), s(s_), t(t_), hankel_mode(hankel) {
    if (k < l) {
        throw std::invalid_argument("extension spec requires k >= l");
    }
    if (s < t) {
        throw std::invalid_argument("extension spec requires s >= t");
    }
}

Mat extend_vertical(const Mat& A, const PolyVec& u, int k, int l) {
    const int n = u.n();
    check_shape(A, n);
    check_endpoints(u);
    if (k < l) {
        throw std::invalid_argument("extension spec requires k >= l");
    }

    Mat base = companion_power(u, CompanionKind::Top, l) * A;

    /* First row of C_t, 0-based: f_j = -u_{n-j} / u_{n+1}. */
    std::vector<Rat> f(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) f[j] = -(u.coeff1(n - j) / u.last());

    /* V holds the current top window C_t^{l+i} base-power; each step the new
     * row is f^T V (the first row of C_t V) and V shifts down one row, since
     * rows 2..n of C_t V are rows 1..n-1 of V. */
    std::vector<std::vector<Rat>> V(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) V[r] = base.row(r);
    std::vector<std::vector<Rat>> gammas; /* gamma_1 first */
    for (int step = 0; step < k - l; ++step) {
        std::vector<Rat> g(static_cast<std::size_t>(n), Rat(0));
        for (int j = 0; j < n; ++j) {
            for (int c = 0; c < n; ++c) g[c] += f[j] * V[j][c];
        }
        gammas.push_back(g);
        V.pop_back();
        V.insert(V.begin(), g);
    }

    Mat out(n + (k - l), n);
    int r = 0;
    for (int i = static_cast<int>(gammas.size()) - 1; i >= 0; --i, ++r) {
        for (int c = 0; c < n; ++c) out.at(r, c) = gammas[i][c];
    }
    for (int i = 0; i < n; ++i, ++r) {
        for (int c = 0; c < n; ++c) out.at(r, c) = base.at(i, c);
    }
    return out;
}

ExtensionGrid extend_full(const Mat& A, const PolyVec& u,
                          const ExtensionSpec& spec) {
    const int n = u.n();
    Mat W = extend_vertical(A, u, spec.k, spec.l);
    Mat M = W * companion_power(u, CompanionKind::Right, spec.t,
                                spec.hankel_mode);

    const int add = spec.s - spec.t;
    Mat G(M.rows(), n + add);
    for (int r = 0; r < M.rows(); ++r) {
        for (int c = 0; c < n; ++c) G.at(r, c) = M.at(r, c);
    }
    if (add > 0) {
        /* The rightmost n columns always form the window W C_r^{t+j}; the
         * next column is its product with the last column of C_r. */
        const std::vector<Rat> clast =
            companion(u, CompanionKind::Right, spec.hankel_mode).col(n - 1);
        for (int j = 0; j < add; ++j) {
            for (int r = 0; r < G.rows(); ++r) {
                Rat acc(0);
                for (int c = 0; c < n; ++c) acc += G.at(r, j + c) * clast[c];
                G.at(r, n + j) = acc;
            }
        }
    }
    return ExtensionGrid{G, spec.k, -spec.t};
}

Mat grid_window(const ExtensionGrid& g, int n, int row0, int col0) {
    return sub_block(g.matrix, row0, col0, n, n);
}

Mat extension_kernel_basis(const PolyVec& u, int r, bool hankel) {
    if (r < 1) {
        throw std::invalid_argument("kernel basis requires r >= 1");
    }
    const int n = u.n();
    Mat K(n + r, r);
    for (int c = 0; c < r; ++c) {
        for (int d = 0; d <= n; ++d) {
            if (hankel) {
                K.at(r - 1 - c + d, c) = u.coeff1(n + 1 - d);
            } else {
                K.at(c + d, c) = u.coeff1(d + 1);
            }
        }
    }
    return K;
}

bool check_extension_kernel(const Mat& A, const PolyVec& u,
                            const ExtensionSpec& spec) {
    const int n = u.n();
    check_shape(A, n);
    if (mat_rank(A) != n) {
        throw std::domain_error("singular matrix");
    }
    ExtensionGrid g = extend_full(A, u, spec);
    if (mat_rank(g.matrix) != n) return false;
    const int r = spec.s - spec.t;
    if (r > 0) {
        Mat K = extension_kernel_basis(u, r, spec.hankel_mode);
        if (!(g.matrix * K).is_zero()) return false;
    }
    return true;
}

ToeplitzBand verify_structure_preservation(const ToeplitzBand& T,
                                           const PolyVec& u,
                                           const ExtensionSpec& spec) {
    if (spec.hankel_mode) {
        throw std::invalid_argument(
            "toeplitz structure check requires a non-hankel spec");
    }
    const int n = T.n;
    if (u.n() != n) {
        throw std::invalid_argument(
            "extension: matrix must be square of the size matching u");
    }
    const std::vector<Rat> resid = mat_vec(del_toeplitz(T), u.coeffs());
    if (!all_zero(resid)) {
        throw std::invalid_argument("u is not in ker del(T): del(T) u = " +
                                    vec_str(resid));
    }
    Mat Td = T.to_dense();
    if (mat_rank(Td) != n) {
        throw std::domain_error("singular matrix");
    }
    const int e = std::max(spec.k - spec.l, spec.s - spec.t);
    const ExtensionSpec square(spec.k, spec.k - e, spec.s, spec.s - e, false);
    ExtensionGrid g = extend_full(Td, u, square);
    try {
        return detect_toeplitz(g.matrix);
    } catch (const std::domain_error& ex) {
        throw std::logic_error(std::string("structure preservation failed: ") +
                               ex.what());
    }
}

HankelBand verify_structure_preservation_hankel(const HankelBand& H,
                                                const PolyVec& u,
                                                const ExtensionSpec& spec) {
    if (!spec.hankel_mode) {
        throw std::invalid_argument(
            "hankel structure check requires a hankel spec");
    }
    const int n = H.n;
    if (u.n() != n) {
        throw std::invalid_argument(
            "extension: matrix must be square of the size matching u");
    }
    const std::vector<Rat> resid =
        mat_vec(del_hankel(H), u.reversed().coeffs());
    if (!all_zero(resid)) {
        throw std::invalid_argument(
            "u^J is not in ker del(H): del(H) u^J = " + vec_str(resid));
    }
    Mat Hd = H.to_dense();
    if (mat_rank(Hd) != n) {
        throw std::domain_error("singular matrix");
    }
    const int e = std::max(spec.k - spec.l, spec.s - spec.t);
    const ExtensionSpec square(spec.k, spec.k - e, spec.s, spec.s - e, true);
    ExtensionGrid g = extend_full(Hd, u, square);
    try {
        return detect_hankel(g.matrix);
    } catch (const std::domain_error& ex) {
        throw std::logic_error(std::string("structure preservation failed: ") +
                               ex.what());
    }
}

UplusReport analyze_uplus_extension(const PolyVec& u,
                                    const ExtensionSpec& spec) {
    if (spec.hankel_mode) {
        throw std::invalid_argument(
            "triangular band analysis requires a non-hankel spec");
    }
    if (spec.k < 0 || spec.l > 0 || spec.s < 0 || spec.t > 0) {
        throw std::invalid_argument(
            "triangular band analysis requires k >= 0 >= l and s >= 0 >= t");
    }
    check_endpoints(u);
    const int n = u.n();

    UplusReport rep;
    rep.m = spec.k + spec.s;
    rep.h = -spec.l - spec.t;

    /* T = U+^{-1}: first row (1/u_1) e_1^T, completed downward so that
     * del(T) u = 0. */
    std::vector<Rat> leading(static_cast<std::size_t>(n), Rat(0));
    leading[static_cast<std::size_t>(n - 1)] = u.first().reciprocal();
    const ToeplitzBand T = complete_band(u, leading);
    const ExtensionGrid g = extend_full(T.to_dense(), u, spec);
    const Mat& G = g.matrix;

    rep.structure_ok = is_toeplitz(G);
    if (!rep.structure_ok) rep.detail = "grid diagonals are not constant";

    const int d0 = spec.k + spec.t;

    rep.zero_middle_band = true;
    for (int d = d0 - n + 1; d <= d0 - 1; ++d) {
        if (!diag_value(G, d).is_zero()) {
            rep.zero_middle_band = false;
            if (rep.detail.empty()) {
                rep.detail = "middle diagonal d = " + std::to_string(d) +
                             " holds " + diag_value(G, d).str();
            }
            break;
        }
    }

    /* (b): the diagonals d0 .. d0+n+h-1 as a lower-triangular Toeplitz
     * matrix inverse-check against the u-column matrix. */
    const int bsz = n + rep.h;
    Mat S(bsz, bsz), L(bsz, bsz);
    for (int r = 0; r < bsz; ++r) {
        for (int c = 0; c <= r; ++c) {
            S.at(r, c) = diag_value(G, d0 + (r - c));
            if (r - c <= n) L.at(r, c) = u.coeff1(r - c + 1);
        }
    }
    const Mat sl = S * L;
    rep.below_ok = (sl == Mat::identity(bsz));
    if (!rep.below_ok && rep.detail.empty()) {
        for (int r = 0; r < bsz && rep.detail.empty(); ++r) {
            for (int c = 0; c < bsz; ++c) {
                const Rat want(r == c ? 1 : 0);
                if (sl.at(r, c) != want) {
                    rep.detail = "below-band product entry (" +
                                 std::to_string(r + 1) + ", " +
                                 std::to_string(c + 1) + ") = " +
                                 sl.at(r, c).str();
                    break;
                }
            }
        }
    }

    /* (c): the diagonals d0-n, d0-n-1, ... as an upper-triangular Toeplitz
     * matrix, inverse-check against the truncated reversed -u matrix. */
    Mat R(rep.m, rep.m), W(rep.m, rep.m);
    for (int r = 0; r < rep.m; ++r) {
        for (int c = r; c < rep.m; ++c) {
            R.at(r, c) = diag_value(G, d0 - n - (c - r));
            if (c - r <= n) W.at(r, c) = -u.coeff1(n + 1 - (c - r));
        }
    }
    const Mat rw = R * W;
    rep.above_ok = (rw == Mat::identity(rep.m));
    if (!rep.above_ok && rep.detail.empty()) {
        for (int r = 0; r < rep.m && rep.detail.empty(); ++r) {
            for (int c = 0; c < rep.m; ++c) {
                const Rat want(r == c ? 1 : 0);
                if (rw.at(r, c) != want) {
                    rep.detail = "above-band product entry (" +
                                 std::to_string(r + 1) + ", " +
                                 std::to_string(c + 1) + ") = " +
                                 rw.at(r, c).str();
                    break;
                }
            }
        }
    }

    rep.all = rep.structure_ok && rep.zero_middle_band && rep.below_ok &&
              rep.above_ok;
    return rep;
}

std::pair<ExtensionGrid, ExtensionGrid>
bezoutian_extension_pair(const PolyVec& u, const PolyVec& v,
                         const ExtensionSpec& spec) {
    if (u.n() != v.n()) {
        throw std::invalid_argument("generator degree mismatch");
    }
    const int n = u.n();
    const Mat B = bez_toeplitz_oracle(u, v);
    if (mat_rank(B) != n) {
        throw std::domain_error("singular bezoutian (non-coprime generators)");
    }
    const Mat Binv = B.inverse();
    return {extend_full(Binv, u, spec), extend_full(Binv, v, spec)};
}

} // namespace cma
