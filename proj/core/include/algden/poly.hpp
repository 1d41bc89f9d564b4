#pragma once

#include "algden/integer.hpp"

#include <vector>

namespace algden {

// Univariate polynomials, coefficients ascending (c[i] is the x^i term).
// The zero polynomial is the empty vector; otherwise c.back() != 0.
struct IntPoly {
    std::vector<Integer> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Integer& lead() const { return c.back(); }
    Integer coeff(int i) const { return i < int(c.size()) ? c[i] : Integer(0); }

    bool operator==(const IntPoly&) const = default;
};

struct RatPoly {
    std::vector<Rational> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rational& lead() const { return c.back(); }
    Rational coeff(int i) const
    {
        return i < int(c.size()) ? c[i] : Rational(0);
    }

    bool operator==(const RatPoly&) const = default;
};

IntPoly add(const IntPoly& f, const IntPoly& g);
IntPoly sub(const IntPoly& f, const IntPoly& g);
IntPoly mul(const IntPoly& f, const IntPoly& g);
IntPoly neg(const IntPoly& f);
IntPoly scale(const IntPoly& f, const Integer& k);
IntPoly derivative(const IntPoly& f);
Integer content(const IntPoly& f); // nonnegative; 0 for the zero polynomial
IntPoly primitive_part(const IntPoly& f);
Integer eval(const IntPoly& f, const Integer& x);
Rational eval(const IntPoly& f, const Rational& x);

// true exact division; throws if g does not divide f over Z
IntPoly divide_exact(const IntPoly& f, const IntPoly& g);
bool divides(const IntPoly& g, const IntPoly& f);

RatPoly to_rat(const IntPoly& f);
// f = (1/den) * primitive integer polynomial with positive lead times content
IntPoly clear_denominators(const RatPoly& f, Integer& den);

RatPoly add(const RatPoly& f, const RatPoly& g);
RatPoly sub(const RatPoly& f, const RatPoly& g);
RatPoly mul(const RatPoly& f, const RatPoly& g);
RatPoly scale(const RatPoly& f, const Rational& k);
RatPoly derivative(const RatPoly& f);
Rational eval(const RatPoly& f, const Rational& x);
void divmod(const RatPoly& f, const RatPoly& g, RatPoly& q, RatPoly& r);
RatPoly gcd(const RatPoly& f, const RatPoly& g); // monic unless zero
RatPoly monic(const RatPoly& f);

Integer resultant(const IntPoly& f, const IntPoly& g); // Sylvester + Bareiss
Integer discriminant(const IntPoly& f);

// Number of distinct real roots (Sturm); f must be squarefree.
int real_root_count(const IntPoly& f);

// Coefficients of k^(n)*f(x/k) cleared to integers: the minimal-polynomial
// transform sending a root r to k*r (input need not be monic).
IntPoly root_scale(const IntPoly& f, const Integer& k);

// Monic integer polynomial with root lead(f)*r for each root r of f.
IntPoly monicize(const IntPoly& f);

} // namespace algden
