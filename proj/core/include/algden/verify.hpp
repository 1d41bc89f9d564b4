#pragma once

#include "algden/format.hpp"

#include <cstdint>

namespace algden {

// deterministic splitmix64; seeds are echoed by every consumer
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    long range(long lo, long hi) // inclusive
    {
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }
};

// rejection-sampled random primitive irreducible polynomial, positive lead
MinimalPolynomial random_min_poly(Rng& rng, int degree, long height);
MinimalPolynomial random_min_poly_up_to(Rng& rng, int max_degree, long height);

// quadratic fields drawn from a fixed pool with small class numbers
FieldPtr random_quadratic_field(Rng& rng);
// nonzero element with small numerator coordinates over a small denominator
FieldElement random_element(Rng& rng, const FieldPtr& K, long height,
                            long max_denom);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "")
    {
        checks.push_back({name, pass, detail});
    }
};

// denominator formula against the divisor-scan oracle, divisibility chain,
// and the lead==denom characterization, over a random corpus
SuiteResult verify_dformula(std::uint64_t seed, int count, int max_degree = 4,
                            long height = 50);

// brute-force realized tuples against the classifier (soundness), and
// witness construction over the classifier's own positives (completeness)
SuiteResult verify_tuples(long bf_height, long max_c);

// the three X/Y detection routes: relative-coefficient valuations, primes
// above with the valuation of gamma, and the Newton polygon; plus the
// root-valuation multiset identity
SuiteResult verify_equivalences(std::uint64_t seed, int count);

// radical identities: sqrt(section of the denominator ideal) = prod Y and
// sqrt(product of the set elements in K) = prod X over pinned and random
// batteries
SuiteResult verify_radicals(std::uint64_t seed, int count);

// going up and down containments, the exact case, and the pinned
// strict-containment configuration over Q(i)
SuiteResult verify_cross_field(std::uint64_t seed, int count);

// X-compositum and Y-compositum criteria agree; pinned conjugate pairs
SuiteResult verify_same_denominator(std::uint64_t seed, int count);

// membership against the one-sided witness oracle
SuiteResult verify_membership(std::uint64_t seed, int count, int cap = 64);

// generating sets on sampled elements: size, field of each generator,
// battery verification, minimality equality case
SuiteResult verify_genset(std::uint64_t seed, int count);

} // namespace algden
