#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace algden {

// Exact arithmetic substrate. Every quantity in the library is an Integer or
// a Rational; there is no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// floor(sqrt(n)) for n >= 0
inline Integer isqrt(const Integer& n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline int sign(const Integer& n) { return mpz_sgn(n.get_mpz_t()); }
inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Canonicalized fraction n/d, d != 0.
inline Rational make_rational(const Integer& n, const Integer& d)
{
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Integer numer(const Rational& q) { return q.get_num(); }
inline Integer denom(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer mod_floor(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// representative of a mod m in (-m/2, m/2]
inline Integer mod_symmetric(const Integer& a, const Integer& m)
{
    Integer r = mod_floor(a, m);
    if (2 * r > m)
        r -= m;
    return r;
}

} // namespace algden
