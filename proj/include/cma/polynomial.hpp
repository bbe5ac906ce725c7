#pragma once

/*
 * Coefficient vectors u = (u_1, ..., u_{n+1})^T representing
 * u(x) = sum_{i=0..n} u_{i+1} x^i. The formal degree n is the vector length
 * minus one; zero leading coefficients are permitted (some constructions
 * deliberately use them, e.g. the v_{n+1} = 0 convention for canonical
 * state-space forms), and operations that genuinely require a nonzero
 * endpoint validate it themselves.
 */

#include "cma/rational.hpp"

#include <vector>

namespace cma {

class PolyVec {
public:
    /* Throws std::invalid_argument when coeffs is empty. */
    explicit PolyVec(std::vector<Rat> coeffs);

    /* Formal degree: length - 1. */
    int n() const { return static_cast<int>(c_.size()) - 1; }

    /* 1-based coefficient access: u_i, i in [1, n+1]. */
    const Rat& coeff1(int i) const;

    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& first() const { return c_.front(); }  /* u_1     */
    const Rat& last() const { return c_.back(); }    /* u_{n+1} */

    bool first_nonzero() const { return !c_.front().is_zero(); }
    bool last_nonzero() const { return !c_.back().is_zero(); }

    /* Horner evaluation of sum u_{i+1} x^i. */
    Rat eval(const Rat& x) const;

    /* u^J = J u: coefficient order reversed. An involution. */
    PolyVec reversed() const;

    bool operator==(const PolyVec& o) const { return c_ == o.c_; }
    bool operator!=(const PolyVec& o) const { return !(*this == o); }

private:
    std::vector<Rat> c_;
};

/* Monic gcd by the exact Euclidean algorithm, trimmed to true degree.
 * Throws std::domain_error when both inputs are identically zero. */
PolyVec poly_gcd(const PolyVec& u, const PolyVec& v);

/* True degree 0 gcd, i.e. no common root. */
bool is_coprime(const PolyVec& u, const PolyVec& v);

} // namespace cma
