#pragma once

#include "algden/irreducible.hpp"
#include "algden/linalg.hpp"

#include <memory>

namespace algden {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element written over the power basis 1, theta, ..., theta^(n-1) of the
// field's defining root. Immutable value; safe to share.
struct FieldElement {
    FieldPtr field;
    std::vector<Rational> coords;

    bool is_zero() const
    {
        for (const auto& c : coords)
            if (c != 0)
                return false;
        return true;
    }
    bool is_rational() const
    {
        for (size_t i = 1; i < coords.size(); ++i)
            if (coords[i] != 0)
                return false;
        return true;
    }
    Rational rational_value() const; // requires is_rational()
    bool operator==(const FieldElement& o) const;
};

// An explicit number field Q[x]/(g) with its maximal order. The integral
// basis is found by Dedekind's criterion plus round-2 enlargement at every
// prime whose square divides disc(g).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr create(const IntPoly& g, int degree_cap = 8);
    static FieldPtr create(const MinimalPolynomial& g, int degree_cap = 8);
    static FieldPtr rationals(); // Q[x]/(x)

    const IntPoly& defining_poly() const { return poly_; }
    int degree() const { return degree_; }
    const QMat& integral_basis() const { return basis_; }   // rows, power coords
    const QMat& basis_inverse() const { return basis_inv_; } // power -> integral
    const Integer& discriminant() const { return disc_; }
    const Integer& index() const { return index_; }
    const Integer& poly_discriminant() const { return poly_disc_; }
    int real_embeddings() const { return r1_; }
    int complex_pairs() const { return r2_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;
    FieldElement from_rational(const Rational& q) const;
    FieldElement element(std::vector<Rational> coords) const;
    FieldElement from_integral_coords(const std::vector<Integer>& v) const;
    FieldElement from_integral_coords(const std::vector<Rational>& v) const;

    // reduction of theta^k mod g for k <= 2*(n-1); integer coordinates
    const std::vector<Integer>& theta_power(int k) const;

    bool same_field(const NumberField& o) const { return poly_ == o.poly_; }

private:
    NumberField() = default;
    IntPoly poly_;
    int degree_ = 0;
    QMat basis_, basis_inv_;
    Integer disc_, index_, poly_disc_;
    int r1_ = 0, r2_ = 0;
    std::vector<std::vector<Integer>> theta_pows_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const Rational& k);
FieldElement inverse(const FieldElement& a); // throws on zero
FieldElement div(const FieldElement& a, const FieldElement& b);
FieldElement power(const FieldElement& a, long e);

// coordinates over the integral basis; integral elements have integer coords
std::vector<Rational> integral_coords(const FieldElement& a);
bool is_integral(const FieldElement& a);
// least t >= 1 with t*a integral
Integer integral_denominator(const FieldElement& a);

QMat mult_matrix(const FieldElement& a); // power-basis row action
Rational norm(const FieldElement& a);
Rational trace(const FieldElement& a);
RatPoly min_poly_q(const FieldElement& a); // monic minimal polynomial over Q
int degree_over_q(const FieldElement& a);

// evaluate a polynomial with rational coefficients at a field element
FieldElement eval_at(const RatPoly& f, const FieldElement& a);

} // namespace algden
