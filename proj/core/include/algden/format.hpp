#pragma once

#include "algden/gamma.hpp"
#include "algden/genset.hpp"
#include "algden/tuples.hpp"

#include <string>

namespace algden {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos)
    {
    }
};

// Polynomial input: either an expression in x with rational coefficients
// ("5*x^2-4*x+1", division by constants allowed) or an ascending coefficient
// list ("[1,-4,5]").
RatPoly parse_poly(const std::string& text);

// Field spec "Q[x]/(<monic integral polynomial>)".
FieldPtr parse_field(const std::string& text, int degree_cap = 8);

// Element expression in the generator x of the given field; full field
// arithmetic, division included ("1/(60+15*x)").
FieldElement parse_element(const FieldPtr& K, const std::string& text);

// canonical textual forms
std::string to_text(const Integer& n);
std::string to_text(const Rational& q);
std::string poly_text(const IntPoly& f);           // "5*x^2-4*x+1"
std::string poly_text(const RatPoly& f);
std::string element_text(const FieldElement& a);   // polynomial in x
std::string field_text(const FieldPtr& K);         // "Q[x]/(...)"
// "(p)" for p O_K, otherwise "(p, <second generator>)"
std::string prime_text(const PrimeIdeal& P);
std::string prime_list_text(const std::vector<PrimeIdeal>& ps);
std::string ideal_text(const FractionalIdeal& I); // HNF rows over the basis

} // namespace algden
