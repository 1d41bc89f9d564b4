#include <set>
#include "algden/subfield.hpp"

#include <doctest.h>

using namespace algden;

namespace {

IntPoly ip(std::vector<long> asc)
{
    std::vector<Integer> c(asc.begin(), asc.end());
    return IntPoly(std::move(c));
}

// Q(i)
FieldPtr gaussian() { return NumberField::create(ip({1, 0, 1})); }

FieldElement gauss(const FieldPtr& K, long re, long im)
{
    return K->element({Rational(re), Rational(im)});
}

} // namespace

TEST_CASE("build field: standard quadratic tables")
{
    auto Qi = gaussian();
    CHECK(Qi->discriminant() == -4);
    CHECK(Qi->index() == 1);
    CHECK(Qi->real_embeddings() == 0);

    auto K5 = NumberField::create(ip({-5, 0, 1})); // x^2-5
    CHECK(K5->discriminant() == 5);
    CHECK(K5->index() == 2);
    // basis {1, (1+theta)/2}
    CHECK(K5->integral_basis().at(0, 0) == 1);
    CHECK(K5->integral_basis().at(1, 0) == make_rational(1, 2));
    CHECK(K5->integral_basis().at(1, 1) == make_rational(1, 2));
    CHECK(K5->real_embeddings() == 2);

    auto Km5 = NumberField::create(ip({5, 0, 1})); // x^2+5
    CHECK(Km5->discriminant() == -20);
    CHECK(Km5->index() == 1);

    auto Km3 = NumberField::create(ip({3, 0, 1}));
    CHECK(Km3->discriminant() == -3);
    CHECK(Km3->index() == 2);

    auto zeta5 = NumberField::create(ip({1, 1, 1, 1, 1}));
    CHECK(zeta5->discriminant() == 125);
    CHECK(zeta5->index() == 1);
    CHECK(zeta5->complex_pairs() == 2);
}

TEST_CASE("element arithmetic and norms in Q(i)")
{
    auto Qi = gaussian();
    FieldElement a = gauss(Qi, 2, 1);
    FieldElement b = gauss(Qi, 2, -1);
    CHECK(mul(a, b) == gauss(Qi, 5, 0));
    CHECK(norm(a) == 5);
    CHECK(trace(a) == 4);
    CHECK(norm(gauss(Qi, 60, 15)) == 3825);
    FieldElement inv = inverse(a);
    CHECK(mul(a, inv) == Qi->one());
    CHECK(is_integral(a));
    CHECK(!is_integral(inv));
    CHECK(integral_denominator(inv) == 5);

    RatPoly mp = min_poly_q(inv); // 1/(2+i): x^2 - (4/5)x + 1/5
    CHECK(mp.coeff(0) == make_rational(1, 5));
    CHECK(mp.coeff(1) == make_rational(-4, 5));
    CHECK(mp.coeff(2) == 1);
}

TEST_CASE("prime splitting in Q(i)")
{
    auto Qi = gaussian();
    auto p5 = factor_prime(Qi, 5);
    REQUIRE(p5.size() == 2);
    CHECK(p5[0].ram == 1);
    CHECK(p5[0].res_deg == 1);
    CHECK(p5[1].res_deg == 1);
    CHECK(mul(to_ideal(p5[0]), to_ideal(p5[1]))
          == principal_ideal(gauss(Qi, 5, 0)));

    auto p2 = factor_prime(Qi, 2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].ram == 2);
    CHECK(p2[0].res_deg == 1);
    CHECK(to_ideal(p2[0]) == principal_ideal(gauss(Qi, 1, 1)));

    auto p3 = factor_prime(Qi, 3);
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].ram == 1);
    CHECK(p3[0].res_deg == 2);
    CHECK(to_ideal(p3[0]) == principal_ideal(gauss(Qi, 3, 0)));
}

TEST_CASE("prime splitting at an index divisor")
{
    // x^2-5 at p=2: 2 is inert in Q(sqrt5) (5 = 5 mod 8)
    auto K5 = NumberField::create(ip({-5, 0, 1}));
    auto p2 = factor_prime(K5, 2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].ram == 1);
    CHECK(p2[0].res_deg == 2);
    // p=5 ramifies
    auto p5 = factor_prime(K5, 5);
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].ram == 2);
    CHECK(p5[0].res_deg == 1);
}

TEST_CASE("valuations in Q(i)")
{
    auto Qi = gaussian();
    auto p5 = factor_prime(Qi, 5);
    FieldElement g = inverse(gauss(Qi, 60, 15)); // 1/(60+15i)
    // find (2+i): the prime containing 2+i
    const PrimeIdeal* p2i = nullptr;
    const PrimeIdeal* p2mi = nullptr;
    for (auto& P : p5) {
        if (ideal_contains(to_ideal(P), gauss(Qi, 2, 1)))
            p2i = &P;
        else
            p2mi = &P;
    }
    REQUIRE(p2i);
    REQUIRE(p2mi);
    CHECK(valuation(*p2i, g) == -1);
    CHECK(valuation(*p2mi, g) == -1);
    auto p2 = factor_prime(Qi, 2);
    CHECK(valuation(p2[0], g) == 0);
    CHECK(valuation(p2[0], Qi->one()) == 0);
    CHECK_THROWS_AS(valuation(p2[0], Qi->zero()), std::domain_error);
}

TEST_CASE("factor element 60+15i")
{
    auto Qi = gaussian();
    auto fact = factor_element(gauss(Qi, 60, 15));
    // 60+15i = 3 (2+i)(2-i)(4+i): four primes, all exponent 1
    REQUIRE(fact.size() == 4);
    for (auto& [P, v] : fact)
        CHECK(v == 1);
    // the inert prime 3 appears
    bool has3 = false;
    for (auto& [P, v] : fact)
        if (P.p == 3 && P.res_deg == 2)
            has3 = true;
    CHECK(has3);
    CHECK(factor_element(Qi->one()).empty());
}

TEST_CASE("ideal arithmetic")
{
    auto Qi = gaussian();
    FractionalIdeal five = principal_ideal(gauss(Qi, 5, 0));
    FractionalIdeal a = principal_ideal(gauss(Qi, 2, 1));
    FractionalIdeal b = principal_ideal(gauss(Qi, 2, -1));
    CHECK(mul(a, b) == five);
    CHECK(radical(five) == five);
    // (1+i)^4 = (-4); radical is (1+i)
    FractionalIdeal i4 = power(principal_ideal(gauss(Qi, 1, 1)), 4);
    CHECK(i4 == principal_ideal(gauss(Qi, -4, 0)));
    CHECK(radical(i4) == principal_ideal(gauss(Qi, 1, 1)));
    // inverse and product
    CHECK(mul(a, inverse(a)) == whole_ring(Qi));
    CHECK(ideal_norm(five) == 25);
    CHECK(is_integral_ideal(five));
    CHECK(!is_integral_ideal(inverse(a)));
    // denominator ideal of 1/(2+i) is (2+i)
    CHECK(denominator_ideal(inverse(gauss(Qi, 2, 1)))
          == principal_ideal(gauss(Qi, 2, 1)));
    CHECK(denominator_ideal(gauss(Qi, 7, 2)) == whole_ring(Qi));
}

TEST_CASE("ideals of Q")
{
    auto Q = NumberField::rationals();
    FieldElement three = Q->from_rational(Rational(3));
    FieldElement five = Q->from_rational(Rational(5));
    auto ps = factor_prime(Q, 5);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].ram == 1);
    CHECK(ps[0].res_deg == 1);
    CHECK(valuation(ps[0], Q->from_rational(make_rational(1, 3825))) == -2);
    CHECK(mul(principal_ideal(three), principal_ideal(five))
          == principal_ideal(Q->from_rational(Rational(15))));
}

TEST_CASE("newton polygons")
{
    auto Q = NumberField::rationals();
    auto p5 = factor_prime(Q, 5)[0];
    // 5x^2 - 4x + 1 at p=5: root valuations {0, -1}
    std::vector<FieldElement> f{Q->from_rational(Rational(1)),
                                Q->from_rational(Rational(-4)),
                                Q->from_rational(Rational(5))};
    auto np = newton_polygon(f, p5);
    auto rv = root_valuations(np);
    REQUIRE(rv.size() == 2);
    CHECK(rv[0] == std::pair<Rational, int>{Rational(-1), 1});
    CHECK(rv[1] == std::pair<Rational, int>{Rational(0), 1});

    // x^2+1 at p=3: single slope-0 segment of length 2
    auto p3 = factor_prime(Q, 3)[0];
    std::vector<FieldElement> g{Q->from_rational(Rational(1)), Q->zero(),
                                Q->from_rational(Rational(1))};
    auto np3 = newton_polygon(g, p3);
    REQUIRE(np3.segments.size() == 1);
    CHECK(np3.segments[0].slope == 0);
    CHECK(np3.segments[0].length == 2);

    // x - 1/(2+i) over Q(i) at (2+i): slope 1, root valuation -1
    auto Qi = gaussian();
    auto p5i = factor_prime(Qi, 5);
    const PrimeIdeal* p2i = nullptr;
    for (auto& P : p5i)
        if (ideal_contains(to_ideal(P), gauss(Qi, 2, 1)))
            p2i = &P;
    std::vector<FieldElement> h{neg(inverse(gauss(Qi, 2, 1))), Qi->one()};
    auto nph = newton_polygon(h, *p2i);
    auto rvh = root_valuations(nph);
    REQUIRE(rvh.size() == 1);
    CHECK(rvh[0] == std::pair<Rational, int>{Rational(-1), 1});
}

TEST_CASE("subfields and relative minimal polynomials")
{
    auto Qi = gaussian();
    Subfield q = rationals_subfield(Qi);
    FieldElement g = inverse(gauss(Qi, 2, 1));

    auto b = min_poly_over_subfield(q, g);
    REQUIRE(b.size() == 3);
    CHECK(b[0].rational_value() == make_rational(1, 5));
    CHECK(b[1].rational_value() == make_rational(-4, 5));
    CHECK(b[2].rational_value() == 1);

    Subfield self = subfield_from_generator(Qi->gen());
    auto b2 = min_poly_over_subfield(self, g);
    REQUIRE(b2.size() == 2); // x - gamma
    CHECK(to_ambient(self, b2[0]) == neg(g));

    // 1/(60+15i) over Q: x^2 - (8/255) x + 1/3825
    auto b3 = min_poly_over_subfield(q, inverse(gauss(Qi, 60, 15)));
    REQUIRE(b3.size() == 3);
    CHECK(b3[0].rational_value() == make_rational(1, 3825));
    CHECK(b3[1].rational_value() == make_rational(-8, 255));
}

TEST_CASE("subfield lattice of quartic fields")
{
    // Q(zeta5): unique quadratic subfield Q(sqrt 5)
    auto z5 = NumberField::create(ip({1, 1, 1, 1, 1}));
    auto quads = quadratic_subfield_generators(z5);
    REQUIRE(quads.size() == 1);
    CHECK(mul(quads[0], quads[0]) == z5->from_rational(Rational(5)));

    // Q(zeta8) = Q(i, sqrt2): three quadratic subfields -1, 2, -2
    auto z8 = NumberField::create(ip({1, 0, 0, 0, 1}));
    auto quads8 = quadratic_subfield_generators(z8);
    REQUIRE(quads8.size() == 3);
    std::set<Integer> ms;
    for (auto& xi : quads8)
        ms.insert(numer(mul(xi, xi).rational_value()));
    CHECK(ms == std::set<Integer>{-2, -1, 2});

    // cubic: no quadratic subfields
    auto c = NumberField::create(ip({-2, 0, 0, 1}));
    CHECK(quadratic_subfield_generators(c).empty());
}

TEST_CASE("compositum with sqrt")
{
    auto Qi = gaussian();
    CHECK(has_sqrt(Qi, -1));
    CHECK(!has_sqrt(Qi, 2));
    auto ext = extend_with_sqrt(Qi, 2);
    CHECK(ext.field->degree() == 4);
    CHECK(mul(ext.sqrt_m, ext.sqrt_m) == ext.field->from_rational(Rational(2)));
    // the image of i still squares to -1
    std::vector<Rational> irow(4);
    for (int j = 0; j < 4; ++j)
        irow[j] = ext.embed_old.at(1, j);
    FieldElement i_img{ext.field, irow};
    CHECK(mul(i_img, i_img) == ext.field->from_rational(Rational(-1)));
}

TEST_CASE("primes above and below")
{
    auto Qi = gaussian();
    Subfield q = rationals_subfield(Qi);
    Subfield l = whole_subfield(Qi);
    auto p5q = factor_prime(NumberField::rationals(), 5)[0];
    auto above = primes_above(q, l, p5q);
    CHECK(above.size() == 2);
    for (auto& P : above)
        CHECK(prime_below(q, l, P) == p5q);
    auto p3q = factor_prime(NumberField::rationals(), 3)[0];
    CHECK(primes_above(q, l, p3q).size() == 1);
}
