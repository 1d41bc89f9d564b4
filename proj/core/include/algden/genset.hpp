#pragma once

#include "algden/gamma.hpp"

namespace algden {

// Complete subfield lattice of a field of degree <= 4 presented inside the
// ambient field: degree 1..3 have only the trivial members; degree 4 adds
// the quadratic subfields found through the resolvent cubic.
struct SubfieldLattice {
    Subfield top;
    std::vector<Subfield> fields; // includes Q and top, canonical order
};

SubfieldLattice subfields(const Subfield& K);

// The primes of X(K, gamma) not already explained by a proper subfield:
// q survives when q /\ K1 lies outside X(K1, gamma) for every proper K1.
std::vector<PrimeIdeal> fresh_primes(const ElementContext& ctx,
                                     const Subfield& K,
                                     const SubfieldLattice& lattice);

struct FieldGenData {
    Subfield field;
    std::vector<PrimeIdeal> fresh;
    FractionalIdeal fresh_product; // product of the fresh primes
    Integer class_number;
    FieldElement generator; // in the abstract field; canonical up to units
};

// S = one generator per field carrying fresh primes: the generator of
// (prod fresh)^h_K. Marks exactly the fresh primes in every number field.
struct GenSetResult {
    std::vector<FieldGenData> fields;
    std::vector<FieldElement> set; // ambient images of the generators
};

GenSetResult generating_set(const ElementContext& ctx, int effort = 1);

struct GenSetVerification {
    struct PerField {
        bool x_matches;       // X(L) == {q : q meets the set}
        bool members_ok;      // 1/alpha lies in the ring for alpha in S /\ L
        bool non_members_ok;  // an element with support off X is rejected
    };
    std::vector<PerField> fields;
    bool ok() const
    {
        for (const auto& f : fields)
            if (!f.x_matches || !f.members_ok || !f.non_members_ok)
                return false;
        return true;
    }
};

GenSetVerification verify_generating_set(const ElementContext& ctx,
                                         const std::vector<FieldElement>& set,
                                         const std::vector<Subfield>& test_fields);

struct MinimalityReport {
    std::size_t fresh_field_count; // #L(gamma)
    std::size_t candidate_size;    // |S'|
    bool size_ok;                  // #L(gamma) <= |S'|
    bool equality_case;
    bool compositum_matches; // product of the fields == Q(S') when equal
};

MinimalityReport minimality_check(const ElementContext& ctx,
                                  const std::vector<FieldElement>& candidate_set,
                                  int effort = 1);

} // namespace algden
