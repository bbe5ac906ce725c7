#include "cma/statespace.hpp"

#include "cma/bezoutian.hpp"
#include "cma/companion.hpp"
#include "cma/extension.hpp"

#include <stdexcept>

namespace cma {

namespace {

void check_state(const std::vector<Rat>& b, int n) {
    if (static_cast<int>(b.size()) != n) {
        throw std::invalid_argument("state vector length mismatch");
    }
}

/* The (n+q-1) x q banded stack whose column j holds `col` starting at
 * row j. */
Mat band_columns(const std::vector<Rat>& col, int q) {
    const int n = static_cast<int>(col.size());
    Mat e(n + q - 1, q);
    for (int c = 0; c < q; ++c) {
        for (int r = 0; r < n; ++r) e.at(c + r, c) = col[r];
    }
    return e;
}

Mat invertible_bezoutian(const PolyVec& u, const PolyVec& v) {
    Mat b = bez_toeplitz_oracle(u, v);
    if (mat_rank(b) != u.n()) {
        throw std::domain_error("singular bezoutian (non-coprime generators)");
    }
    return b;
}

} // namespace

SisoSystem::SisoSystem(PolyVec u_, PolyVec v_)
    : u(std::move(u_)), v(std::move(v_)), coprime(false) {
    if (u.n() != v.n()) {
        throw std::invalid_argument(
            "numerator and denominator must have equal length");
    }
    coprime = is_coprime(u, v);
}

Realization controller_form(const SisoSystem& sys) {
    const PolyVec& u = sys.u;
    const PolyVec& v = sys.v;
    if (!u.first_nonzero()) {
        throw std::invalid_argument("controller form requires u_1 != 0");
    }
    Realization r;
    r.A = companion(u, CompanionKind::Bottom);
    const int n = sys.n();
    const Rat inv_u1 = u.first().reciprocal();
    r.B.assign(static_cast<std::size_t>(n), Rat(0));
    r.B[static_cast<std::size_t>(n - 1)] = -inv_u1;
    r.D.resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        r.D[j - 1] = inv_u1 * (u.first() * v.coeff1(n + 2 - j) -
                               v.first() * u.coeff1(n + 2 - j));
    }
    r.d = -(v.first() * inv_u1);
    return r;
}

Realization transformed_form(const SisoSystem& sys) {
    const PolyVec& u = sys.u;
    if (!u.first_nonzero()) {
        throw std::invalid_argument("transformed form requires u_1 != 0");
    }
    const Mat bt = invertible_bezoutian(u, sys.v);
    Realization r;
    r.A = companion(u, CompanionKind::Left);
    const int n = sys.n();
    const Rat inv_u1 = u.first().reciprocal();
    r.B.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r.B[i] = -(inv_u1 * bt.at(i, n - 1));
    r.D.assign(static_cast<std::size_t>(n), Rat(0));
    r.D[0] = inv_u1;
    r.d = -(sys.v.first() * inv_u1);
    return r;
}

Trajectory simulate(const Realization& r, const std::vector<Rat>& beta0,
                    const std::vector<Rat>& inputs) {
    const int n = r.A.rows();
    check_state(beta0, n);
    if (static_cast<int>(r.B.size()) != n ||
        static_cast<int>(r.D.size()) != n) {
        throw std::invalid_argument("realization vector length mismatch");
    }
    Trajectory tr;
    tr.inputs = inputs;
    tr.states.push_back(beta0);
    for (const Rat& x : inputs) {
        const std::vector<Rat>& b = tr.states.back();
        Rat y = r.d * x;
        for (int i = 0; i < n; ++i) y += r.D[i] * b[i];
        tr.outputs.push_back(y);
        std::vector<Rat> nb = mat_vec(r.A, b);
        for (int i = 0; i < n; ++i) nb[i] += r.B[i] * x;
        tr.states.push_back(std::move(nb));
    }
    return tr;
}

std::pair<std::vector<Rat>, std::vector<Rat>>
b_to_io(const std::vector<Rat>& b, const SisoSystem& sys) {
    const int n = sys.n();
    if (static_cast<int>(b.size()) < n + 1) {
        throw std::invalid_argument(
            "sequence must hold at least n + 1 values");
    }
    const int count = static_cast<int>(b.size()) - n;
    std::vector<Rat> xs(static_cast<std::size_t>(count));
    std::vector<Rat> ys(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        Rat x(0), y(0);
        for (int j = 0; j <= n; ++j) {
            x += sys.u.coeff1(n + 1 - j) * b[k + j];
            y += sys.v.coeff1(n + 1 - j) * b[k + j];
        }
        xs[k] = -x;
        ys[k] = y;
    }
    return {xs, ys};
}

Mat build_F(const PolyVec& u, int p) {
    if (p < 1) {
        throw std::invalid_argument("truncation order must be at least 1");
    }
    const Mat cb = companion(u, CompanionKind::Bottom);
    const int n = u.n();
    std::vector<Rat> s(static_cast<std::size_t>(p), Rat(0));
    s[0] = Rat(1);
    /* s_i = (C_b^i)_{n,n} = e_n^T C_b^i e_n; track the row e_n^T C_b^i. */
    std::vector<Rat> row(static_cast<std::size_t>(n), Rat(0));
    row[static_cast<std::size_t>(n - 1)] = Rat(1);
    for (int i = 1; i < p; ++i) {
        row = vec_mat(row, cb);
        s[i] = row[static_cast<std::size_t>(n - 1)];
    }
    Mat f(p, p);
    for (int r = 0; r < p; ++r) {
        for (int c = 0; c <= r; ++c) f.at(r, c) = s[r - c];
    }
    return f;
}

std::vector<Rat> long_state(const SisoSystem& sys,
                            const std::vector<Rat>& beta_init,
                            const std::vector<Rat>& inputs) {
    const int n = sys.n();
    const int p = static_cast<int>(inputs.size());
    if (p < 1) {
        throw std::invalid_argument("at least one input is required");
    }
    check_state(beta_init, n);
    if (!sys.u.first_nonzero()) {
        throw std::invalid_argument("long state requires u_1 != 0");
    }
    const Mat stack = extend_vertical(Mat::identity(n), sys.u, 0, -p);
    std::vector<Rat> out = mat_vec(stack, beta_init);
    const std::vector<Rat> fx = mat_vec(build_F(sys.u, p), inputs);
    const Rat inv_u1 = sys.u.first().reciprocal();
    for (int i = 0; i < p; ++i) out[n + i] -= inv_u1 * fx[i];
    return out;
}

std::vector<Rat> late_state(const SisoSystem& sys,
                            const std::vector<Rat>& betaP_init,
                            const std::vector<Rat>& inputs) {
    const int n = sys.n();
    const int q = static_cast<int>(inputs.size());
    if (q < 1) {
        throw std::invalid_argument("at least one input is required");
    }
    check_state(betaP_init, n);
    const Realization tf = transformed_form(sys);
    std::vector<Rat> out =
        mat_vec(companion_power(sys.u, CompanionKind::Left, q), betaP_init);
    const std::vector<Rat> w = mat_vec(band_columns(tf.B, q), inputs);
    const ExtensionGrid g = extend_full(Mat::identity(n), sys.u,
                                        ExtensionSpec(0, 0, 0, 1 - q));
    const std::vector<Rat> gw = mat_vec(g.matrix, w);
    for (int i = 0; i < n; ++i) out[i] += gw[i];
    return out;
}

std::vector<Rat> mixed_state(const SisoSystem& sys,
                             const std::vector<Rat>& betaP_init,
                             const std::vector<Rat>& inputs, int q) {
    const int n = sys.n();
    if (q < 0) {
        throw std::invalid_argument("transformed phase length must be >= 0");
    }
    const int p = static_cast<int>(inputs.size()) - q;
    if (p < 1) {
        throw std::invalid_argument(
            "at least one input beyond the transformed phase is required");
    }
    check_state(betaP_init, n);
    if (!sys.u.first_nonzero()) {
        throw std::invalid_argument("mixed state requires u_1 != 0");
    }
    const Mat binv = invertible_bezoutian(sys.u, sys.v).inverse();

    const ExtensionGrid g1 =
        extend_full(binv, sys.u, ExtensionSpec(0, -p, -q, -q));
    std::vector<Rat> out = mat_vec(g1.matrix, betaP_init);

    if (q >= 1) {
        const Realization tf = transformed_form(sys);
        const std::vector<Rat> xq(inputs.begin(), inputs.begin() + q);
        const std::vector<Rat> w = mat_vec(band_columns(tf.B, q), xq);
        const ExtensionGrid g2 =
            extend_full(binv, sys.u, ExtensionSpec(0, -p, 0, 1 - q));
        const std::vector<Rat> t2 = mat_vec(g2.matrix, w);
        for (int i = 0; i < n + p; ++i) out[i] += t2[i];
    }

    const std::vector<Rat> xp(inputs.begin() + q, inputs.end());
    const std::vector<Rat> fx = mat_vec(build_F(sys.u, p), xp);
    const Rat inv_u1 = sys.u.first().reciprocal();
    for (int i = 0; i < p; ++i) out[n + i] -= inv_u1 * fx[i];
    return out;
}

} // namespace cma
