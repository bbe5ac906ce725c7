#pragma once

/*
 * Exact rational scalar type.
 *
 * Every scalar in this library is an arbitrary-precision rational kept in
 * canonical form at all times: denominator > 0 and gcd(|num|, den) = 1.
 * Arithmetic is exact; there is no floating-point mode anywhere. Equality is
 * therefore structural and all algebraic identities can be tested exactly.
 *
 * The global mul_count() counter is bumped on every multiplication and
 * division (divisions are multiplications by an inverse; counting both keeps
 * the measure monotone). The performance tests read it to verify asymptotic
 * multiplication counts of the structured algorithms.
 */

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <string>

namespace cma {

namespace detail {
inline std::atomic<std::uint64_t> mul_counter{0};
}

/* Number of exact scalar multiplications/divisions performed so far. */
inline std::uint64_t mul_count() {
    return detail::mul_counter.load(std::memory_order_relaxed);
}

inline void reset_mul_count() {
    detail::mul_counter.store(0, std::memory_order_relaxed);
}

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);

    /* Wraps an mpq value, canonicalizing it. Throws std::domain_error on a
     * zero denominator. */
    explicit Rat(const mpq_class& q);

    /* Parses "p" or "p/q" with optional leading sign and nonzero q.
     * Throws std::invalid_argument on any other shape. */
    static Rat parse(const std::string& text);

    /* Canonical text form: "p" when the denominator is 1, else "p/q". */
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const;

    Rat reciprocal() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    const mpq_class& value() const { return v_; }

private:
    mpq_class v_;
};

} // namespace cma
