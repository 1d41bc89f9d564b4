#pragma once

#include "algden/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace algden {

// Thrown when the factoring effort bound is exhausted. Never a wrong answer:
// the unfactored composite cofactor is carried along.
struct FactorError : std::runtime_error {
    Integer cofactor;
    explicit FactorError(Integer c)
        : std::runtime_error("factorization effort exceeded, unfactored cofactor "
                             + c.get_str()),
          cofactor(std::move(c))
    {
    }
};

// Product of prime^exponent over strictly increasing certified primes.
struct PrimeFactorization {
    std::vector<std::pair<Integer, int>> factors;

    Integer product() const;
    bool operator==(const PrimeFactorization&) const = default;
};

// Deterministic primality: Miller-Rabin with the first 13 prime witnesses,
// a proven test for n < 3.3e24; larger inputs additionally cross-checked
// with a Lucas test.
bool is_prime(const Integer& n);

// Trial division to 10^6, then Brent-cycle Pollard rho with a deterministic
// parameter sequence. `effort` scales the rho iteration budget.
PrimeFactorization factorize(const Integer& n, int effort = 1);

// All positive divisors, sorted increasing.
std::vector<Integer> divisors(const PrimeFactorization& f);

// Largest squarefree divisor with the same sign (0 maps to 0).
Integer squarefree_part(const Integer& n, int effort = 1);

// Exact p-adic valuation of a nonzero integer.
int vp(const Integer& n, const Integer& p);

// Exact p-adic valuation of a nonzero rational; vp(0) is an error.
int vp(const Rational& r, const Integer& p);

// Smallest prime >= n.
Integer next_prime(const Integer& n);

} // namespace algden
