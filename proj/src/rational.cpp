#include "cma/rational.hpp"

#include <stdexcept>

namespace cma {

namespace {

void bump_counter() {
    detail::mul_counter.fetch_add(1, std::memory_order_relaxed);
}

bool valid_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

/* mpz_set_str rejects an explicit leading '+', so drop it first */
mpz_class integer_of(const std::string& s) {
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpq_class& q) {
    if (sgn(q.get_den()) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = q;
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    const std::size_t slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_integer_literal(num)) {
        throw std::invalid_argument("invalid rational literal: \"" + text +
                                    "\" (expected \"p\" or \"p/q\")");
    }
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(integer_of(num));
    } else {
        const std::string den = text.substr(slash + 1);
        if (!valid_integer_literal(den)) {
            throw std::invalid_argument("invalid rational literal: \"" + text +
                                        "\" (expected \"p\" or \"p/q\")");
        }
        mpz_class d = integer_of(den);
        if (sgn(d) == 0) {
            throw std::invalid_argument("invalid rational literal: \"" + text +
                                        "\" (denominator must be nonzero)");
        }
        q = mpq_class(integer_of(num), d);
    }
    q.canonicalize();
    Rat r;
    r.v_ = q;
    return r;
}

std::string Rat::str() const {
    return v_.get_str();
}

Rat& Rat::operator*=(const Rat& o) {
    bump_counter();
    v_ *= o.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    bump_counter();
    v_ /= o.v_;
    return *this;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rat r;
    r.v_ = 1 / v_;
    bump_counter();
    return r;
}

} // namespace cma
