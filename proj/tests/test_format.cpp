#include "algden/format.hpp"

#include <doctest.h>

using namespace algden;

TEST_CASE("polynomial parsing, both forms")
{
    RatPoly a = parse_poly("5*x^2-4*x+1");
    RatPoly b = parse_poly("[1,-4,5]");
    CHECK(a == b);
    CHECK(a.degree() == 2);
    CHECK(a.c[2] == 5);
    CHECK(parse_poly("x^2 - (4/5)*x + 1/5").c[1] == make_rational(-4, 5));
    CHECK(parse_poly("[1/5, -4/5, 1]").c[0] == make_rational(1, 5));
    CHECK(parse_poly("-x+1/2").c[1] == -1);
    CHECK_THROWS_AS(parse_poly("x^2 + "), ParseError);
    CHECK_THROWS_AS(parse_poly("x^2 / x"), ParseError);
    CHECK_THROWS_AS(parse_poly("[1, 2"), ParseError);
}

TEST_CASE("polynomial printing round trip")
{
    CHECK(poly_text(parse_poly("5*x^2-4*x+1")) == "5*x^2-4*x+1");
    CHECK(poly_text(parse_poly("x^2+1")) == "x^2+1");
    CHECK(poly_text(parse_poly("-x+1/2")) == "-x+1/2");
    CHECK(poly_text(parse_poly("x^4+x^3+x^2+x+1")) == "x^4+x^3+x^2+x+1");
    CHECK(poly_text(RatPoly{}) == "0");
}

TEST_CASE("field and element parsing")
{
    FieldPtr Qi = parse_field("Q[x]/(x^2+1)");
    CHECK(Qi->degree() == 2);
    CHECK(Qi->discriminant() == -4);

    FieldElement g = parse_element(Qi, "1/(60+15*x)");
    CHECK(g == inverse(Qi->element({Rational(60), Rational(15)})));
    CHECK(element_text(parse_element(Qi, "4+x")) == "x+4");
    CHECK(parse_element(Qi, "x^2") == Qi->from_rational(Rational(-1)));
    CHECK_THROWS_AS(parse_element(Qi, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_field("Q[y]/(y^2+1)"), ParseError);
    CHECK_THROWS_AS(parse_field("Q[x]/(x^2+x/2)"), ParseError);
}

TEST_CASE("prime serialization")
{
    FieldPtr Qi = parse_field("Q[x]/(x^2+1)");
    auto p3 = factor_prime(Qi, 3);
    CHECK(prime_text(p3[0]) == "(3)");
    auto p5 = factor_prime(Qi, 5);
    // two conjugate primes, deterministic order
    std::string all = prime_list_text(p5);
    CHECK(all.substr(0, 1) == "{");
    CHECK(all.find("(5,") != std::string::npos);
    auto Q = NumberField::rationals();
    CHECK(prime_text(factor_prime(Q, 7)[0]) == "(7)");
}
