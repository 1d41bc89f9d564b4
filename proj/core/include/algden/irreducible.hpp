#pragma once

#include "algden/poly.hpp"

#include <optional>
#include <stdexcept>

namespace algden {

struct IrreducibilityResult {
    bool irreducible;
    // a verified nontrivial factor when reducible
    std::optional<IntPoly> witness;
};

// Decides irreducibility over Q. Rational-root screen, Eisenstein fast
// accept, degree patterns mod several primes, then Zassenhaus lift and
// recombine. A false answer always carries a checked factor.
IrreducibilityResult is_irreducible_over_q(const IntPoly& f);

struct NotIrreducibleError : std::runtime_error {
    IntPoly witness;
    explicit NotIrreducibleError(IntPoly w)
        : std::runtime_error("polynomial is reducible over Q"), witness(std::move(w))
    {
    }
};

// The primitive integer polynomial with positive leading coefficient,
// irreducible over Q, degree >= 1.
class MinimalPolynomial {
public:
    static MinimalPolynomial from_rational(const RatPoly& p);
    static MinimalPolynomial from_integer(const IntPoly& p);
    // skips the irreducibility check; `certificate` names the reason
    static MinimalPolynomial trusted(IntPoly p, const char* certificate);

    const IntPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    const Integer& lead() const { return poly_.lead(); }

    bool operator==(const MinimalPolynomial&) const = default;

private:
    explicit MinimalPolynomial(IntPoly p) : poly_(std::move(p)) {}
    IntPoly poly_;
};

// normalize: the unique MinimalPolynomial with the same roots.
MinimalPolynomial normalize(const RatPoly& p);

// Eisenstein test at q: q | a_i for i < n, q^2 does not divide a_0, q does
// not divide a_n.
bool is_eisenstein_at(const IntPoly& f, const Integer& q);

} // namespace algden
