#pragma once

#include "algden/number_field.hpp"

#include <vector>

namespace algden {

// Nonzero fractional ideal: (1/den) times the Z-span of the rows of `basis`,
// written over the integral basis of the field. Canonical form: basis in HNF,
// den > 0 minimal. Unique per ideal, so == is ideal equality.
struct FractionalIdeal {
    FieldPtr field;
    Integer den;
    ZMat basis;

    bool operator==(const FractionalIdeal& o) const
    {
        return field->same_field(*o.field) && den == o.den && basis == o.basis;
    }
};

FractionalIdeal whole_ring(const FieldPtr& K);
FractionalIdeal principal_ideal(const FieldElement& a); // a != 0
FractionalIdeal ideal_from_generators(const FieldPtr& K,
                                      const std::vector<FieldElement>& gens);

FractionalIdeal mul(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal add(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal intersect(const FractionalIdeal& a, const FractionalIdeal& b);
// (a : b) = {x in K : x*b inside a}
FractionalIdeal quotient(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal inverse(const FractionalIdeal& a);
FractionalIdeal power(const FractionalIdeal& a, long e);
FractionalIdeal scale(const FractionalIdeal& a, const Rational& k);

Rational ideal_norm(const FractionalIdeal& a);
bool is_integral_ideal(const FractionalIdeal& a);
bool ideal_contains(const FractionalIdeal& a, const FieldElement& x);
bool ideal_divides(const FractionalIdeal& a, const FractionalIdeal& b); // bs a
std::vector<FieldElement> ideal_basis_elements(const FractionalIdeal& a);

// The denominator ideal of x: {a in O_K : a*x in O_K}, integral.
FractionalIdeal denominator_ideal(const FieldElement& x);

// A maximal ideal of O_K with two-element presentation (p, second_gen) and a
// precomputed anti-uniformizer tau: v_P(tau) = -1, v_Q(tau) >= 0 at every
// other prime Q.
struct PrimeIdeal {
    FieldPtr field;
    Integer p;
    int ram = 1;       // e
    int res_deg = 1;   // f
    FieldElement second_gen;
    FieldElement anti_uniformizer;
    ZMat hnf; // den 1, integral-basis coords

    bool operator==(const PrimeIdeal& o) const
    {
        return field->same_field(*o.field) && p == o.p && hnf == o.hnf;
    }
    // canonical order: (p, f, e, hnf lexicographic)
    bool operator<(const PrimeIdeal& o) const;
};

FractionalIdeal to_ideal(const PrimeIdeal& P);

// Complete splitting of p O_K; sum of e*f equals the degree, and the product
// of the primes with multiplicity reconstructs p O_K.
std::vector<PrimeIdeal> factor_prime(const FieldPtr& K, const Integer& p);

// Exact valuation of a nonzero element / nonzero fractional ideal at P.
int valuation(const PrimeIdeal& P, const FieldElement& a);
int valuation(const PrimeIdeal& P, const FractionalIdeal& a);

// Factorization of the principal ideal (a); exponents match valuation().
std::vector<std::pair<PrimeIdeal, int>> factor_element(const FieldElement& a,
                                                       int effort = 1);
std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const FractionalIdeal& a,
                                                     int effort = 1);

// Product of the distinct primes dividing an integral ideal.
FractionalIdeal radical(const FractionalIdeal& a, int effort = 1);

// Lower convex hull of (i, v_P(b_i)) for the coefficients of a polynomial
// over K. A segment of slope s and horizontal length l stands for l roots of
// valuation -s.
struct NewtonPolygon {
    struct Segment {
        Rational slope;
        int length;
        bool operator==(const Segment&) const = default;
    };
    std::vector<Segment> segments; // slopes strictly increasing
};

// b ascending, b.back() != 0; zero coefficients are skipped; b[0] must be
// nonzero (a zero constant term means zero is a root).
NewtonPolygon newton_polygon(const std::vector<FieldElement>& b,
                             const PrimeIdeal& P);

// Multiset of root valuations encoded by the polygon, sorted ascending,
// as (valuation, multiplicity) pairs.
std::vector<std::pair<Rational, int>> root_valuations(const NewtonPolygon& np);

} // namespace algden
