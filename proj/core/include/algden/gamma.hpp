#pragma once

#include "algden/class_group.hpp"
#include "algden/invariants.hpp"

namespace algden {

// The algebraic number under study, fixed inside an explicit ambient field.
// The element matters, not just its minimal polynomial: conjugates get
// different prime sets.
struct ElementContext {
    FieldPtr ambient;
    FieldElement value;
    MinimalPolynomial min_poly; // over Q
    Invariants inv;
};

ElementContext make_context(const FieldElement& gamma);
// ambient field built from the minimal polynomial of lead*gamma
ElementContext make_context(const MinimalPolynomial& f, int degree_cap = 8);

// X(K, gamma): primes of O_K whose every extension to K(gamma) sees gamma
// with negative valuation (equivalently v_P(b_i) > v_P(b_0) for i >= 1).
// Y(K, gamma): primes with at least one such extension (some v_P(b_i) < 0,
// i < n). Both read off the relative minimal polynomial; X inside Y.
struct XYReport {
    Subfield K;
    std::vector<FieldElement> rel_coeffs; // monic, ascending, elements of K
    std::vector<PrimeIdeal> x_set;
    std::vector<PrimeIdeal> y_set;
};

XYReport compute_xy(const ElementContext& ctx, const Subfield& K);

// K(gamma) located inside the ambient field.
Subfield adjoin(const ElementContext& ctx, const Subfield& K);

// The primes of K at which alpha has negative valuation.
std::vector<PrimeIdeal> denominator_support(const FieldElement& alpha_in_K);

// alpha in O_K[gamma]? Decided through X(K, gamma).
bool membership(const XYReport& xy, const FieldElement& alpha_in_K);
bool membership(const ElementContext& ctx, const Subfield& K,
                const FieldElement& alpha_in_K);

// One-sided independent check: search for an explicit polynomial g over O_K
// with g(gamma) = alpha by exact integer linear algebra, degree bound
// doubling from 2*deg(f_K) up to the cap. A witness proves membership; no
// witness is inconclusive by design.
struct OracleWitness {
    std::vector<FieldElement> coeffs; // over K, ascending powers of gamma
};
struct OracleResult {
    std::optional<OracleWitness> witness;
    int cap;
};
OracleResult membership_oracle(const ElementContext& ctx, const Subfield& K,
                               const FieldElement& alpha_in_K,
                               int degree_cap = 64);

// O_K[gamma] /\ K described as the localization of O_K away from X.
struct RingDescription {
    std::vector<PrimeIdeal> x_set;
    bool is_whole_ring;                  // equals O_K exactly when X is empty
    std::vector<Integer> class_divisors; // class group of the localization
    Integer class_order;
    bool is_pid;
};
RingDescription ring_description(const ElementContext& ctx, const Subfield& K,
                                 int effort = 1);

// prod P^(-min_i v_P(b_i)): presents O_K[gamma] as O_K[x]/(f * I[x]).
FractionalIdeal kernel_ideal(const ElementContext& ctx, const Subfield& K);

// The section over O_K of the denominator ideal of gamma, computed by the
// independent ideal-quotient route in K(gamma), with its radical verified
// against the product over Y.
struct DenominatorSection {
    FractionalIdeal section;
    std::vector<PrimeIdeal> radical_primes;
    bool radical_matches_y;
};
DenominatorSection denominator_section(const ElementContext& ctx,
                                       const Subfield& K);

// Do gamma1 and gamma2 have the same denominator ideal? Decided by comparing
// X over the compositum; when verify_y is set the Y comparison is evaluated
// too and disagreement (impossible if the theory holds) throws.
bool same_denominator(const FieldElement& gamma1, const FieldElement& gamma2,
                      bool verify_y = true);

enum class LocalRing { integers, whole_field };
// The local ring O_{K_P}[gamma] /\ K_P through the valuation at Q above P.
LocalRing local_classify(const ElementContext& ctx, const Subfield& K,
                         const Subfield& K_adj, const PrimeIdeal& P,
                         const PrimeIdeal& Q);

struct CrossFieldReport {
    bool x_lower_equals = false;   // X(K) = {P : all Q above P lie in X(L)}
    bool x_lift_contained = false; // lifts of X(K) inside X(L)
    bool y_upper_equals = false;   // Y(K) = {P : some Q above P lies in Y(L)}
    bool y_lift_contains = false;  // Y(L) inside lifts of Y(K)
    bool exact_case = false;       // L /\ K(gamma) = K
    bool x_exact = true;           // equality in the X lift (exact case only)
    bool y_exact = true;
    bool membership_agrees = true; // sampled alpha in K agree in both rings

    bool all_ok() const
    {
        return x_lower_equals && x_lift_contained && y_upper_equals
               && y_lift_contains && (!exact_case || (x_exact && y_exact))
               && membership_agrees;
    }
};

CrossFieldReport cross_field_check(const ElementContext& ctx, const Subfield& K,
                                   const Subfield& L,
                                   const std::vector<FieldElement>& samples_in_K);

} // namespace algden
