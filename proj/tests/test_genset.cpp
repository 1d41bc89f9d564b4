#include "algden/genset.hpp"

#include <doctest.h>

using namespace algden;

namespace {

IntPoly ip(std::vector<long> asc)
{
    std::vector<Integer> c(asc.begin(), asc.end());
    return IntPoly(std::move(c));
}

FieldPtr gaussian() { return NumberField::create(ip({1, 0, 1})); }

FieldElement gauss(const FieldPtr& K, long re, long im)
{
    return K->element({Rational(re), Rational(im)});
}

} // namespace

TEST_CASE("subfield lattices")
{
    auto Qi = gaussian();
    auto lat = subfields(whole_subfield(Qi));
    CHECK(lat.fields.size() == 2);

    auto z5 = NumberField::create(ip({1, 1, 1, 1, 1}));
    auto lat5 = subfields(whole_subfield(z5));
    REQUIRE(lat5.fields.size() == 3);
    CHECK(lat5.fields[0].degree() == 1);
    CHECK(lat5.fields[1].degree() == 2);
    CHECK(lat5.fields[1].field->discriminant() == 5);
    CHECK(lat5.fields[2].degree() == 4);

    auto c2 = NumberField::create(ip({-2, 0, 0, 1}));
    CHECK(subfields(whole_subfield(c2)).fields.size() == 2);

    auto z8 = NumberField::create(ip({1, 0, 0, 0, 1}));
    CHECK(subfields(whole_subfield(z8)).fields.size() == 5);
}

TEST_CASE("fresh primes of the worked example")
{
    auto Qi = gaussian();
    ElementContext ctx = make_context(inverse(gauss(Qi, 60, 15)));
    Subfield top = whole_subfield(Qi);
    SubfieldLattice lat = subfields(top);

    // over Q: everything in X is fresh
    auto freshq = fresh_primes(ctx, lat.fields[0], lat);
    REQUIRE(freshq.size() == 2);
    CHECK(freshq[0].p == 3);
    CHECK(freshq[1].p == 5);

    // over Q(i): only the prime over 17 survives the filter
    auto freshl = fresh_primes(ctx, top, lat);
    REQUIRE(freshl.size() == 1);
    CHECK(freshl[0].p == 17);
    CHECK(ideal_contains(to_ideal(freshl[0]), gauss(Qi, 4, 1)));
}

TEST_CASE("generating set of 1/(60+15i) is {15, 4+i}")
{
    auto Qi = gaussian();
    ElementContext ctx = make_context(inverse(gauss(Qi, 60, 15)));
    GenSetResult gs = generating_set(ctx);
    REQUIRE(gs.fields.size() == 2);
    CHECK(gs.fields[0].field.degree() == 1);
    CHECK(gs.fields[1].field.degree() == 2);
    CHECK(gs.fields[0].class_number == 1);
    CHECK(gs.fields[1].class_number == 1);
    // alpha_Q = 15 up to sign, alpha_{Q(i)} = 4+i up to units
    CHECK(gs.set[0] == Qi->from_rational(Rational(15)));
    CHECK(equal_up_to_unit(gs.set[1], gauss(Qi, 4, 1)));
}

TEST_CASE("generating set edge cases")
{
    auto Qi = gaussian();
    // integral element: empty set
    ElementContext ci = make_context(gauss(Qi, 0, 1));
    CHECK(generating_set(ci).set.empty());

    // gamma = 1/2: single field Q with set {2}
    ElementContext ch = make_context(Qi->from_rational(make_rational(1, 2)));
    GenSetResult gs = generating_set(ch);
    REQUIRE(gs.set.size() == 1);
    CHECK(gs.set[0] == Qi->from_rational(Rational(2)));
}

TEST_CASE("verify generating set on the battery")
{
    auto Qi = gaussian();
    ElementContext ctx = make_context(inverse(gauss(Qi, 60, 15)));
    GenSetResult gs = generating_set(ctx);
    std::vector<Subfield> battery{rationals_subfield(Qi), whole_subfield(Qi)};
    auto rep = verify_generating_set(ctx, gs.set, battery);
    CHECK(rep.ok());

    // a wrong set must fail the X comparison somewhere
    std::vector<FieldElement> wrong{Qi->from_rational(Rational(15))};
    auto bad = verify_generating_set(ctx, wrong, battery);
    CHECK(!bad.ok());
}

TEST_CASE("minimality")
{
    auto Qi = gaussian();
    ElementContext ctx = make_context(inverse(gauss(Qi, 60, 15)));
    GenSetResult gs = generating_set(ctx);

    auto rep = minimality_check(ctx, gs.set);
    CHECK(rep.size_ok);
    CHECK(rep.equality_case);
    CHECK(rep.compositum_matches);

    // redundant candidate set: size inequality only
    std::vector<FieldElement> bigger = gs.set;
    bigger.push_back(Qi->from_rational(Rational(3)));
    auto rep2 = minimality_check(ctx, bigger);
    CHECK(rep2.size_ok);
    CHECK(!rep2.equality_case);

    // gamma = 1/2: equality case with Q(S') = Q
    ElementContext ch = make_context(Qi->from_rational(make_rational(1, 2)));
    auto rep3 = minimality_check(
        ch, {Qi->from_rational(Rational(2))});
    CHECK(rep3.size_ok);
    CHECK(rep3.equality_case);
    CHECK(rep3.compositum_matches);
}

TEST_CASE("generating set over a quartic field")
{
    // gamma = 1/(1+zeta8): denominator (1+zeta8) has norm 2
    auto z8 = NumberField::create(ip({1, 0, 0, 0, 1}));
    FieldElement gamma = inverse(add(z8->one(), z8->gen()));
    ElementContext ctx = make_context(gamma);
    GenSetResult gs = generating_set(ctx);
    REQUIRE(!gs.set.empty());
    std::vector<Subfield> battery;
    auto lat = subfields(whole_subfield(z8));
    for (auto& f : lat.fields)
        battery.push_back(f);
    CHECK(verify_generating_set(ctx, gs.set, battery).ok());
}
