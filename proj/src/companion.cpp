#include "cma/companion.hpp"

#include <stdexcept>

namespace cma {

Mat companion(const PolyVec& u, CompanionKind kind, bool barred) {
    if (barred) return companion(u.reversed(), kind, false);

    const int n = u.n();
    if (n < 1) {
        throw std::invalid_argument("companion matrix requires degree >= 1");
    }
    const bool needs_last =
        (kind == CompanionKind::Top || kind == CompanionKind::Right);
    if (needs_last && !u.last_nonzero()) {
        throw std::invalid_argument(
            "companion matrix (top/right) requires a nonzero leading "
            "coefficient");
    }
    if (!needs_last && !u.first_nonzero()) {
        throw std::invalid_argument(
            "companion matrix (bottom/left) requires a nonzero constant "
            "coefficient");
    }

    Mat c(n, n);
    switch (kind) {
        case CompanionKind::Top:
            /* row 1 entry j = -u_{n+1-j}/u_{n+1} */
            for (int j = 1; j <= n; ++j) {
                c.at(0, j - 1) = -u.coeff1(n + 1 - j) / u.last();
            }
            for (int i = 2; i <= n; ++i) c.at(i - 1, i - 2) = Rat(1);
            break;
        case CompanionKind::Bottom:
            /* row n entry j = -u_{n+2-j}/u_1 */
            for (int i = 1; i <= n - 1; ++i) c.at(i - 1, i) = Rat(1);
            for (int j = 1; j <= n; ++j) {
                c.at(n - 1, j - 1) = -u.coeff1(n + 2 - j) / u.first();
            }
            break;
        case CompanionKind::Left:
            /* column 1 entry i = -u_{i+1}/u_1 */
            for (int i = 1; i <= n; ++i) {
                c.at(i - 1, 0) = -u.coeff1(i + 1) / u.first();
            }
            for (int i = 1; i <= n - 1; ++i) c.at(i - 1, i) = Rat(1);
            break;
        case CompanionKind::Right:
            /* column n entry i = -u_i/u_{n+1} */
            for (int i = 2; i <= n; ++i) c.at(i - 1, i - 2) = Rat(1);
            for (int i = 1; i <= n; ++i) {
                c.at(i - 1, n - 1) = -u.coeff1(i) / u.last();
            }
            break;
    }
    return c;
}

namespace {

CompanionKind inverse_partner(CompanionKind kind) {
    switch (kind) {
        case CompanionKind::Top: return CompanionKind::Bottom;
        case CompanionKind::Bottom: return CompanionKind::Top;
        case CompanionKind::Left: return CompanionKind::Right;
        case CompanionKind::Right: return CompanionKind::Left;
    }
    throw std::logic_error("unreachable companion kind");
}

} // namespace

Mat companion_power(const PolyVec& u, CompanionKind kind, long k,
                    bool barred) {
    if (k < 0) return companion_power(u, inverse_partner(kind), -k, barred);

    /* Validate the endpoint even for k = 0, matching the base operation. */
    Mat base = companion(u, kind, barred);
    const int n = base.rows();
    Mat acc = Mat::identity(n);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

} // namespace cma
