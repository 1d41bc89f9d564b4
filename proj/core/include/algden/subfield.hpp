#pragma once

#include "algden/ideal.hpp"

#include <optional>

namespace algden {

// A subfield K of an ambient field M, presented by an abstract field together
// with the embedding theta_K^i -> M.
struct Subfield {
    FieldPtr ambient;
    FieldPtr field;
    QMat embed; // deg(K) x deg(M), row i = power coords of theta_K^i in M
    FieldElement generator; // integral primitive generator, as element of M

    int degree() const { return field->degree(); }
    bool is_rationals() const { return field->degree() == 1; }
};

// Subfield generated by kappa (any element of M); the stored generator is an
// integral multiple of kappa generating the same field.
Subfield subfield_from_generator(const FieldElement& kappa, int degree_cap = 8);
Subfield rationals_subfield(const FieldPtr& M);
Subfield whole_subfield(const FieldPtr& M);

FieldElement to_ambient(const Subfield& K, const FieldElement& a);
// inverse image when the ambient element lies in K
std::optional<FieldElement> from_ambient(const Subfield& K, const FieldElement& m);
bool subfield_contains(const Subfield& K, const FieldElement& m);
// A inside B, both subfields of the same ambient field
bool subfield_leq(const Subfield& a, const Subfield& b);
bool same_subfield(const Subfield& a, const Subfield& b);

// Monic minimal polynomial of gamma over K, coefficients as elements of the
// abstract field K, ascending, b.back() = 1.
std::vector<FieldElement> min_poly_over_subfield(const Subfield& K,
                                                 const FieldElement& gamma);

// Dimension over Q of the subfield of M generated by the given elements.
int generated_degree(const FieldPtr& M, const std::vector<FieldElement>& gens);

// Primitive element for the subfield generated by a and b inside M; bounded
// search over a + t*b, certified by degree. Throws when the bound is hit.
FieldElement compositum_generator(const FieldElement& a, const FieldElement& b,
                                  int bound = 64);

// Subfield K /\ L inside the common ambient field.
Subfield intersect_subfields(const Subfield& a, const Subfield& b,
                             int bound = 64);

// q an ideal of L: the ideal q /\ O_K of K, for K inside L (both subfields
// of one ambient field).
FractionalIdeal ideal_below(const Subfield& K, const Subfield& L,
                            const FractionalIdeal& q);
// the prime q /\ O_K as a PrimeIdeal of K
PrimeIdeal prime_below(const Subfield& K, const Subfield& L, const PrimeIdeal& q);
// all primes of L above a prime of K
std::vector<PrimeIdeal> primes_above(const Subfield& K, const Subfield& L,
                                     const PrimeIdeal& p);

// Complete list of quadratic subfields of an abstract field of degree <= 4,
// each given by a generator with minimal polynomial x^2 - m, m squarefree.
// Degree 4 uses the resolvent cubic; every returned generator is verified.
std::vector<FieldElement> quadratic_subfield_generators(const FieldPtr& K);

// Extension of M by sqrt(m) (m squarefree, sqrt(m) not in M): a new ambient
// field with the embedding of M and the square root located inside it.
struct SqrtExtension {
    FieldPtr field;
    QMat embed_old;     // deg(M) x deg(new): images of M's power basis
    FieldElement sqrt_m;
};
SqrtExtension extend_with_sqrt(const FieldPtr& M, const Integer& m,
                               int degree_cap = 8);
// true when sqrt(m) already lies in M (decided via the certified subfield list)
bool has_sqrt(const FieldPtr& M, const Integer& m);

} // namespace algden
