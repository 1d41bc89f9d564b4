#pragma once

#include "algden/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace algden::modp {

// Polynomials over Z/p, coefficients ascending in [0, p), trimmed.
using Poly = std::vector<Integer>;

Poly reduce(const IntPoly& f, const Integer& p);
IntPoly lift(const Poly& f); // coefficients as-is
IntPoly lift_symmetric(const Poly& f, const Integer& m); // into (-m/2, m/2]

int degree(const Poly& f);
bool is_zero(const Poly& f);
Poly add(const Poly& f, const Poly& g, const Integer& p);
Poly sub(const Poly& f, const Poly& g, const Integer& p);
Poly mul(const Poly& f, const Poly& g, const Integer& p);
Poly scale(const Poly& f, const Integer& k, const Integer& p);
void divmod(const Poly& f, const Poly& g, const Integer& p, Poly& q, Poly& r);
Poly gcd(const Poly& f, const Poly& g, const Integer& p); // monic unless zero
Poly monic(const Poly& f, const Integer& p);
Poly powmod(const Poly& base, const Integer& e, const Poly& mod,
            const Integer& p);
Poly derivative(const Poly& f, const Integer& p);
// extended euclid: returns (s, t) with s*f + t*g = gcd (gcd forced monic)
std::pair<Poly, Poly> bezout(const Poly& f, const Poly& g, const Integer& p);

// Squarefree decomposition of a monic f mod p: f = prod g_i^{e_i} with the
// g_i squarefree and pairwise coprime (handles the char-p x^p collapse).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f,
                                                           const Integer& p);

// Complete factorization of a monic f mod p into monic irreducibles with
// multiplicity, sorted deterministically.
std::vector<std::pair<Poly, int>> factor(const Poly& f, const Integer& p);

// Hensel lifting: given monic pairwise-coprime factors of a monic f mod p,
// lift them to factors mod p^k (k doublings until p^2^j >= target).
std::vector<Poly> hensel_lift(const IntPoly& f, const std::vector<Poly>& factors,
                              const Integer& p, const Integer& target,
                              Integer& modulus_out);

} // namespace algden::modp
