#include "algden/gamma.hpp"

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

bool has_prime_containing(const std::vector<PrimeIdeal>& set,
                          const FieldElement& x)
{
    for (const auto& P : set)
        if (ideal_contains(to_ideal(P), x))
            return true;
    return false;
}

} // namespace

TEST_CASE("xy for 1/(2+i) over Q and Q(i)")
{
    auto Qi = gaussian();
    ElementContext ctx = make_context(inverse(gauss(Qi, 2, 1)));
    CHECK(ctx.inv == Invariants{5, 5, 1, 2});

    Subfield q = rationals_subfield(Qi);
    XYReport xr_q = compute_xy(ctx, q);
    CHECK(xr_q.x_set.empty());
    REQUIRE(xr_q.y_set.size() == 1);
    CHECK(xr_q.y_set[0].p == 5);

    Subfield l = whole_subfield(Qi);
    XYReport xr_l = compute_xy(ctx, l);
    REQUIRE(xr_l.x_set.size() == 1);
    CHECK(xr_l.x_set == xr_l.y_set);
    CHECK(has_prime_containing(xr_l.x_set, gauss(Qi, 2, 1)));
    CHECK(!has_prime_containing(xr_l.x_set, gauss(Qi, 2, -1)));
}

TEST_CASE("xy for 1/(60+15i)")
{
    auto Qi = gaussian();
    ElementContext ctx = make_context(inverse(gauss(Qi, 60, 15)));
    CHECK(ctx.inv == Invariants{3825, 255, 15, 2});

    Subfield q = rationals_subfield(Qi);
    XYReport xq = compute_xy(ctx, q);
    // X(Q) = {3, 5} (primes of the tail gcd), Y(Q) = {3, 5, 17}
    REQUIRE(xq.x_set.size() == 2);
    CHECK(xq.x_set[0].p == 3);
    CHECK(xq.x_set[1].p == 5);
    REQUIRE(xq.y_set.size() == 3);
    CHECK(xq.y_set[2].p == 17);

    Subfield l = whole_subfield(Qi);
    XYReport xl = compute_xy(ctx, l);
    REQUIRE(xl.x_set.size() == 4);
    CHECK(has_prime_containing(xl.x_set, gauss(Qi, 3, 0)));
    CHECK(has_prime_containing(xl.x_set, gauss(Qi, 2, 1)));
    CHECK(has_prime_containing(xl.x_set, gauss(Qi, 2, -1)));
    CHECK(has_prime_containing(xl.x_set, gauss(Qi, 4, 1)));
    CHECK(!has_prime_containing(xl.x_set, gauss(Qi, 4, -1)));
    // gamma lies in Q(i), so X of the whole field equals Y
    CHECK(xl.y_set == xl.x_set);
}

TEST_CASE("membership through X")
{
    auto Qi = gaussian();
    ElementContext c1 = make_context(inverse(gauss(Qi, 2, 1)));
    Subfield q = rationals_subfield(Qi);
    Subfield l = whole_subfield(Qi);

    auto Q = NumberField::rationals();
    CHECK(membership(c1, q, q.field->from_rational(Rational(7))));
    CHECK(!membership(c1, q, q.field->from_rational(make_rational(1, 5))));

    ElementContext c2 = make_context(inverse(gauss(Qi, 60, 15)));
    CHECK(membership(c2, q, q.field->from_rational(make_rational(1, 3))));
    CHECK(membership(c2, q, q.field->from_rational(make_rational(1, 15))));
    CHECK(!membership(c2, q, q.field->from_rational(make_rational(1, 17))));

    // 1/5 is not in Z[i][1/(2+i)]: (2-i) sees it negatively but only (2+i)
    // lies in X
    auto fe = from_ambient(l, Qi->from_rational(make_rational(1, 5)));
    REQUIRE(fe);
    CHECK(!membership(c1, l, *fe));
    // 1/(2+i) itself is a member over Q(i)
    auto g = from_ambient(l, c1.value);
    REQUIRE(g);
    CHECK(membership(c1, l, *g));
}

TEST_CASE("membership oracle agrees")
{
    auto Qi = gaussian();
    ElementContext c1 = make_context(inverse(gauss(Qi, 2, 1)));
    Subfield q = rationals_subfield(Qi);
    Subfield l = whole_subfield(Qi);

    // 1/5 over Q: no witness at any bound (not a member)
    auto r = membership_oracle(c1, q, q.field->from_rational(make_rational(1, 5)), 20);
    CHECK(!r.witness.has_value());
    CHECK(r.cap == 20);

    // 1/5 over Q(i): also not a member (conjugate prime blocks it)
    auto fe = from_ambient(l, Qi->from_rational(make_rational(1, 5)));
    auto r2 = membership_oracle(c1, l, *fe, 16);
    CHECK(!r2.witness.has_value());

    // gamma itself over Q(i): witness g(x) = x
    auto g = from_ambient(l, c1.value);
    auto r3 = membership_oracle(c1, l, *g);
    REQUIRE(r3.witness.has_value());

    // integral combinations are members with witnesses over Q
    ElementContext c2 = make_context(inverse(gauss(Qi, 60, 15)));
    auto r4 = membership_oracle(c2, q, q.field->from_rational(make_rational(1, 15)));
    REQUIRE(r4.witness.has_value());
}

TEST_CASE("ring description")
{
    auto Qi = gaussian();
    ElementContext c1 = make_context(inverse(gauss(Qi, 2, 1)));
    Subfield q = rationals_subfield(Qi);
    auto rd = ring_description(c1, q);
    CHECK(rd.is_whole_ring);
    CHECK(rd.is_pid);

    // K = Q(sqrt-5), gamma = 1/2: X = primes above 2, quotient trivial
    auto K5 = NumberField::create(ip({5, 0, 1}));
    ElementContext ch = make_context(K5->from_rational(make_rational(1, 2)));
    Subfield w = whole_subfield(K5);
    auto rd2 = ring_description(ch, w);
    CHECK(!rd2.is_whole_ring);
    CHECK(rd2.class_divisors.empty());
    CHECK(rd2.is_pid);

    // gamma = sqrt-5 integral: ring is O_K, class group Z/2, not a PID
    ElementContext ci = make_context(K5->gen());
    auto rd3 = ring_description(ci, w);
    CHECK(rd3.is_whole_ring);
    CHECK(rd3.class_divisors == std::vector<Integer>{2});
    CHECK(!rd3.is_pid);
}

TEST_CASE("kernel ideal")
{
    auto Qi = gaussian();
    ElementContext c1 = make_context(inverse(gauss(Qi, 2, 1)));
    Subfield q = rationals_subfield(Qi);
    Subfield l = whole_subfield(Qi);

    auto Q = NumberField::rationals();
    CHECK(kernel_ideal(c1, q)
          == principal_ideal(Q->from_rational(Rational(5))));
    CHECK(kernel_ideal(c1, l) == principal_ideal(gauss(Qi, 2, 1)));

    ElementContext ci = make_context(Qi->gen()); // gamma = i integral
    CHECK(kernel_ideal(ci, q) == whole_ring(Q));
}

TEST_CASE("denominator section")
{
    auto Qi = gaussian();
    ElementContext c1 = make_context(inverse(gauss(Qi, 2, 1)));
    Subfield q = rationals_subfield(Qi);
    auto ds = denominator_section(c1, q);
    auto Q = NumberField::rationals();
    // section = d(gamma) Z = 5Z
    CHECK(ds.section == principal_ideal(Q->from_rational(Rational(5))));
    CHECK(ds.radical_matches_y);

    ElementContext ci = make_context(Qi->gen());
    auto ds2 = denominator_section(ci, q);
    CHECK(ds2.section == whole_ring(Q));
    CHECK(ds2.radical_matches_y);
    CHECK(ds2.radical_primes.empty());

    ElementContext c2 = make_context(inverse(gauss(Qi, 60, 15)));
    Subfield l = whole_subfield(Qi);
    auto ds3 = denominator_section(c2, l);
    CHECK(ds3.radical_matches_y);
    CHECK(ds3.radical_primes.size() == 4);
    // section over Q is d(gamma) Z = 255 Z
    auto ds4 = denominator_section(c2, q);
    CHECK(ds4.section == principal_ideal(Q->from_rational(Rational(255))));
}

TEST_CASE("same denominator")
{
    auto Qi = gaussian();
    FieldElement g1 = inverse(gauss(Qi, 2, 1));
    FieldElement g2 = inverse(gauss(Qi, 2, -1));
    FieldElement g3 = inverse(gauss(Qi, 3, 4)); // (3+4i) = (2+i)^2 up to units
    CHECK(same_denominator(g1, g1));
    CHECK(!same_denominator(g1, g2));
    CHECK(same_denominator(g1, g3));
    // integral pairs always match (empty denominators)
    CHECK(same_denominator(gauss(Qi, 1, 1), gauss(Qi, 3, 0)));
    CHECK(!same_denominator(g1, gauss(Qi, 1, 0)));
}

TEST_CASE("local classification")
{
    auto Qi = gaussian();
    ElementContext c1 = make_context(inverse(gauss(Qi, 2, 1)));
    Subfield q = rationals_subfield(Qi);
    Subfield adj = adjoin(c1, q);
    auto Q = NumberField::rationals();
    PrimeIdeal p5 = factor_prime(Q, 5)[0];
    auto above = primes_above(q, adj, p5);
    REQUIRE(above.size() == 2);
    int whole = 0, ints = 0;
    for (const auto& P : above) {
        if (local_classify(c1, q, adj, p5, P) == LocalRing::whole_field)
            ++whole;
        else
            ++ints;
    }
    CHECK(whole == 1);
    CHECK(ints == 1);

    // integral gamma: always integers
    ElementContext ci = make_context(Qi->gen());
    Subfield adji = adjoin(ci, q);
    PrimeIdeal p2 = factor_prime(Q, 2)[0];
    for (const auto& P : primes_above(q, adji, p2))
        CHECK(local_classify(ci, q, adji, p2, P) == LocalRing::integers);

    // mismatched pair errors
    PrimeIdeal p3 = factor_prime(Q, 3)[0];
    CHECK_THROWS_AS(local_classify(c1, q, adj, p3, above[0]),
                    std::invalid_argument);
}

TEST_CASE("cross field checks on the conjugate example")
{
    auto Qi = gaussian();
    ElementContext c1 = make_context(inverse(gauss(Qi, 2, 1)));
    Subfield q = rationals_subfield(Qi);
    Subfield l = whole_subfield(Qi);
    std::vector<FieldElement> samples{
        q.field->from_rational(Rational(7)),
        q.field->from_rational(make_rational(1, 5)),
        q.field->from_rational(make_rational(3, 2)),
    };
    auto rep = cross_field_check(c1, q, l, samples);
    CHECK(rep.x_lower_equals);
    CHECK(rep.x_lift_contained);
    CHECK(rep.y_upper_equals);
    CHECK(rep.y_lift_contains);
    CHECK(!rep.exact_case); // Q(i) /\ Q(gamma) = Q(i), not Q
    CHECK(rep.membership_agrees);
    CHECK(rep.all_ok());

    // strict containments of the counterexample: X(L) strictly bigger than
    // the lift of X(Q) = {}; Y(L) strictly smaller than the lift of Y(Q)
    XYReport xq = compute_xy(c1, q);
    XYReport xl = compute_xy(c1, l);
    CHECK(xq.x_set.empty());
    CHECK(xl.x_set.size() == 1);
    CHECK(xq.y_set.size() == 1);
    CHECK(xl.y_set.size() == 1);
    auto above5 = primes_above(q, l, xq.y_set[0]);
    CHECK(above5.size() == 2); // lift has two primes, Y(L) only one
}

TEST_CASE("cross field exact case with a disjoint control field")
{
    auto Qi = gaussian();
    auto ext = extend_with_sqrt(Qi, 2);
    // gamma = 1/(2+i) inside the degree-4 field
    std::vector<Rational> irow(4);
    for (int j = 0; j < 4; ++j)
        irow[j] = ext.embed_old.at(1, j);
    FieldElement i_img{ext.field, irow};
    FieldElement gamma = inverse(add(ext.field->from_rational(Rational(2)), i_img));
    ElementContext ctx = make_context(gamma);
    Subfield q = rationals_subfield(ext.field);
    Subfield l = subfield_from_generator(ext.sqrt_m); // Q(sqrt 2)
    std::vector<FieldElement> samples{
        q.field->from_rational(make_rational(1, 5)),
        q.field->from_rational(Rational(3)),
    };
    auto rep = cross_field_check(ctx, q, l, samples);
    CHECK(rep.exact_case); // Q(sqrt2) /\ Q(gamma) = Q
    CHECK(rep.x_exact);
    CHECK(rep.y_exact);
    CHECK(rep.all_ok());
}
