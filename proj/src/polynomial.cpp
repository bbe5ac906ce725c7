#include "cma/polynomial.hpp"

#include <stdexcept>

namespace cma {

namespace {

/* Trims zero leading coefficients; an all-zero input becomes empty. */
std::vector<Rat> trimmed(const std::vector<Rat>& c) {
    std::size_t len = c.size();
    while (len > 0 && c[len - 1].is_zero()) --len;
    return std::vector<Rat>(c.begin(), c.begin() + len);
}

/* Remainder of a by b over the rationals; b must be nonempty (nonzero). */
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    const std::size_t db = b.size() - 1;
    const Rat lead = b.back();
    while (a.size() > db) {
        const Rat q = a.back() / lead;
        const std::size_t shift = a.size() - 1 - db;
        if (!q.is_zero()) {
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] -= q * b[i];
            }
        }
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.size() <= db) break;
    }
    return a;
}

} // namespace

PolyVec::PolyVec(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        throw std::invalid_argument("polynomial vector must be nonempty");
    }
}

const Rat& PolyVec::coeff1(int i) const {
    if (i < 1 || i > n() + 1) {
        throw std::out_of_range("polynomial coefficient index out of range");
    }
    return c_[static_cast<std::size_t>(i - 1)];
}

Rat PolyVec::eval(const Rat& x) const {
    Rat acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

PolyVec PolyVec::reversed() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return PolyVec(std::move(r));
}

PolyVec poly_gcd(const PolyVec& u, const PolyVec& v) {
    std::vector<Rat> a = trimmed(u.coeffs());
    std::vector<Rat> b = trimmed(v.coeffs());
    if (a.empty() && b.empty()) {
        throw std::domain_error("gcd of two zero polynomials");
    }
    while (!b.empty()) {
        std::vector<Rat> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
    return PolyVec(std::move(a));
}

bool is_coprime(const PolyVec& u, const PolyVec& v) {
    return poly_gcd(u, v).coeffs().size() == 1;
}

} // namespace cma
