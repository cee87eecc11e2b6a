#ifndef CF_RATIONAL_HPP
#define CF_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cf/errors.hpp"

namespace cf {

using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

/// "a/b" for non-integers, "a" otherwise; matches the polynomial grammar.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r; // canonical since base was
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    Integer z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

} // namespace cf

#endif
