#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbi {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for violated preconditions of the orbifold calculus (bad ranges,
/// undefined operations such as gcd with an infinite multiplicity, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Exact k-th root: returns true and sets root when n is a perfect k-th power.
inline bool exact_root(const Integer& n, unsigned long k, Integer& root) {
    if (n < 0 && k % 2 == 0) return false;
    return mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace orbi
