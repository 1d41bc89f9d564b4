#pragma once

#include "algden/invariants.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace algden {

// A candidate invariant tuple (lead, denom, tail_gcd, degree).
struct TupleQuery {
    Integer lead;
    Integer denom;
    Integer tail_gcd;
    int degree;

    bool operator==(const TupleQuery&) const = default;
    bool operator<(const TupleQuery& o) const
    {
        if (degree != o.degree)
            return degree < o.degree;
        if (lead != o.lead)
            return lead < o.lead;
        if (denom != o.denom)
            return denom < o.denom;
        return tail_gcd < o.tail_gcd;
    }
};

enum class TupleViolation {
    none,
    denom_divides_lead,        // denom | lead fails
    lead_divides_denom_pow,    // lead | denom^degree fails
    tail_divides_lead,         // tail_gcd | lead fails
    lead_divides_mixed,        // lead | denom^(degree-1)*tail_gcd fails
    prime_condition,           // neither per-prime alternative holds
};

std::string to_string(TupleViolation v);

struct TupleCertificate {
    bool realizable = false;
    TupleViolation violation = TupleViolation::none;
    Integer violating_prime; // set for prime_condition
    std::optional<MinimalPolynomial> witness;
    Integer eisenstein_prime;
    // Per prime dividing lead: which alternatives hold. Realizability is
    // slack || ceiling; `saturated` (the strict equality v_p(lead) =
    // degree*v_p(denom)) is reported as a diagnostic only, since it is too
    // strong: it implies ceiling but rejects realizable tuples.
    struct PrimeDiagnostic {
        Integer p;
        bool slack_holds;     // v_p(denom) + v_p(tail) <= v_p(lead)
        bool saturated_holds; // v_p(lead) == degree * v_p(denom)
        bool ceiling_holds;   // v_p(denom) == ceil(v_p(lead) / degree)
    };
    std::vector<PrimeDiagnostic> diagnostics;
};

// Realizability test. degree >= 2 is the general case; degree == 1 is the
// documented special case (realizable exactly when lead == denom == tail_gcd,
// witnessed by lead*x - 1).
TupleCertificate is_realizable(const TupleQuery& q);

// Constructs a minimal-magnitude witness for a realizable tuple: leading
// coefficient lead, constant term the Eisenstein prime, and for each prime
// p | lead the prescribed valuations max(v_p(lead)-(n-i)v_p(denom), v_p(tail))
// in the middle coefficients. Throws std::invalid_argument when unrealizable.
MinimalPolynomial construct_witness(const TupleQuery& q);
// same, certificate form (includes the Eisenstein prime used)
TupleCertificate certify(const TupleQuery& q);

// Enumerates the tuples realized by irreducible degree-n polynomials with
// positive lead, content 1, coefficients bounded by height. Independent of
// is_realizable; used to adjudicate it.
std::set<TupleQuery> bruteforce_realized_tuples(int degree, const Integer& height);

struct AtlasBounds {
    int degree_min = 2;
    int degree_max = 2;
    Integer max_lead;
    Integer max_denom;    // 0 = same as max_lead
    Integer max_tail;     // 0 = same as max_lead
};

// Deterministic sweep in lexicographic (degree, lead, denom, tail) order;
// every realizable record carries a witness that re-verifies exactly.
void atlas(const AtlasBounds& bounds,
           const std::function<void(const TupleQuery&, const TupleCertificate&)>& sink);

} // namespace algden
