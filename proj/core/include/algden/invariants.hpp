#pragma once

#include "algden/irreducible.hpp"
#include "algden/primes.hpp"

namespace algden {

// The denominator invariants of an algebraic number, read off its minimal
// polynomial a_n x^n + ... + a_0:
//   lead      = a_n
//   denom     = least k >= 1 with k*root an algebraic integer
//   tail_gcd  = gcd(a_1, ..., a_n)   (constant term excluded)
// They satisfy denom | lead | denom^degree and lead | denom^(degree-1)*tail_gcd.
struct Invariants {
    Integer lead;
    Integer denom;
    Integer tail_gcd;
    int degree;

    bool operator==(const Invariants&) const = default;
};

// denom is computed prime-by-prime over the primes dividing lead:
//   v_p(denom) = max(0, max_j ceil((v_p(a_n) - v_p(a_j)) / (n - j)))
// with j running over 0..n-1 and zero coefficients skipped.
Invariants invariants(const MinimalPolynomial& f);

// Independent oracle for denom: scan the divisors k of lead in increasing
// order and return the first one whose root-scaled polynomial is monic after
// content removal.
Integer smallest_denominator_bruteforce(const MinimalPolynomial& f);

// denom == lead exactly when no prime p has p^2 | a_n and p | a_{n-1}.
bool denom_equals_lead_criterion(const MinimalPolynomial& f);

} // namespace algden
