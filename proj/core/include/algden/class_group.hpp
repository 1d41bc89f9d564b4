#pragma once

#include "algden/subfield.hpp"

#include <optional>

namespace algden {

struct ClassGroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The class group of O_K presented on the factor base of primes below the
// Minkowski bound. relations is the full syzygy lattice: Z^r / relations is
// the group. Quadratic fields are decided completely by binary-quadratic-form
// reduction; other degrees are certified only when every factor-base prime
// principalizes (h = 1), and fail loudly otherwise.
struct ClassGroup {
    FieldPtr field;
    Integer h;
    std::vector<Integer> elementary_divisors; // nontrivial divisors only
    std::vector<PrimeIdeal> factor_base;
    std::vector<Integer> orders; // class order of each factor-base prime
    ZMat relations;              // r x r HNF, full syzygy lattice
    std::vector<PrimeIdeal> generator_ideals; // base primes of nontrivial class
};

struct PrincipalityResult {
    bool principal = false;
    std::optional<FieldElement> generator;
    std::vector<Integer> class_vector; // exponents over the factor base
};

// Integer upper bound for the Minkowski constant of K (safe overestimate).
Integer minkowski_bound(const FieldPtr& K);

ClassGroup class_group(const FieldPtr& K, int effort = 1);

// Complete principality decision for degree <= 2 (forms / rationals); for
// higher degree a bounded generator search that may return nullopt on a
// genuinely principal ideal (callers treat nullopt as "not found").
std::optional<FieldElement> principal_generator(const FractionalIdeal& I,
                                                int effort = 1);
bool principality_is_decidable(const FieldPtr& K);

PrincipalityResult is_principal(const ClassGroup& G, const FractionalIdeal& I,
                                int effort = 1);

// Elementary divisors (nontrivial) of Cl(O_K) / <classes of X>.
std::vector<Integer> quotient_divisors(const ClassGroup& G,
                                       const std::vector<PrimeIdeal>& X,
                                       Integer* order_out = nullptr);

// Verified generator of P^k (throws ClassGroupError with the class vector
// message when the power is not principal).
FieldElement power_generator(const ClassGroup& G, const PrimeIdeal& P, long k,
                             int effort = 1);
// Verified generator of J^k for any integral ideal J.
FieldElement ideal_power_generator(const ClassGroup& G, const FractionalIdeal& J,
                                   long k, int effort = 1);

// Units used for canonical generator normalization: torsion units, plus a
// few fundamental-unit powers for real quadratic fields when the bounded
// Pell search finds one. Deterministic.
std::vector<FieldElement> unit_sweep(const FieldPtr& K);
// The canonical representative of g among g * unit_sweep: prefer all
// coordinates nonnegative, then lexicographically smallest integral coords.
FieldElement canonical_unit_rep(const FieldElement& g);
// g1 = u * g2 for a unit u of O_K?
bool equal_up_to_unit(const FieldElement& a, const FieldElement& b);

} // namespace algden
