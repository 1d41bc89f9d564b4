#include "algden/invariants.hpp"
#include "algden/irreducible.hpp"
#include "algden/polymod.hpp"

#include <doctest.h>

#include <cstdint>

using namespace algden;

namespace {

IntPoly ip(std::vector<long> asc)
{
    std::vector<Integer> c(asc.begin(), asc.end());
    return IntPoly(std::move(c));
}

RatPoly rp(std::vector<Rational> asc) { return RatPoly(std::move(asc)); }

std::uint64_t splitmix(std::uint64_t& s)
{
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// random primitive irreducible polynomial, positive lead
MinimalPolynomial random_minpoly(std::uint64_t& seed, int max_deg, long height)
{
    for (;;) {
        int n = 1 + int(splitmix(seed) % max_deg);
        std::vector<Integer> c(n + 1);
        for (int i = 0; i < n; ++i)
            c[i] = long(splitmix(seed) % (2 * height + 1)) - height;
        c[n] = 1 + long(splitmix(seed) % height);
        IntPoly f(std::move(c));
        if (f.degree() != n)
            continue;
        auto r = is_irreducible_over_q(f);
        if (!r.irreducible)
            continue;
        IntPoly g = primitive_part(f);
        return MinimalPolynomial::trusted(std::move(g), "random corpus");
    }
}

} // namespace

TEST_CASE("poly arithmetic")
{
    IntPoly f = ip({1, 2, 1}); // (x+1)^2
    CHECK(mul(ip({1, 1}), ip({1, 1})) == f);
    CHECK(derivative(f) == ip({2, 2}));
    CHECK(eval(f, Integer(3)) == 16);
    CHECK(content(ip({2, 4, 6})) == 2);
    CHECK(primitive_part(ip({2, 4, 6})) == ip({1, 2, 3}));
    CHECK(divides(ip({1, 1}), f));
    CHECK(!divides(ip({-1, 1}), f));
    CHECK(divide_exact(f, ip({1, 1})) == ip({1, 1}));
}

TEST_CASE("resultant and discriminant")
{
    // disc(x^2+bx+c) = b^2-4c
    CHECK(discriminant(ip({3, 6, 4})) == 36 - 48);
    CHECK(discriminant(ip({1, 0, 1})) == -4);
    CHECK(discriminant(ip({-5, 0, 1})) == 20);
    // disc(x^3+px+q) = -4p^3-27q^2
    CHECK(discriminant(ip({7, 0, 0, 1})) == -27 * 49);
    CHECK(resultant(ip({-1, 1}), ip({-2, 1})) == -1);
    CHECK(resultant(ip({-1, 1}), ip({1, 1})) == 2);
}

TEST_CASE("sturm real roots")
{
    CHECK(real_root_count(ip({-2, 0, 1})) == 2);  // x^2-2
    CHECK(real_root_count(ip({1, 0, 1})) == 0);   // x^2+1
    CHECK(real_root_count(ip({-1, -1, 0, 1})) == 1); // x^3-x-1
    CHECK(real_root_count(ip({0, -1, 0, 0, 0, 1})) == 3); // x^5-x
}

TEST_CASE("mod p factorization")
{
    Integer p = 5;
    modp::Poly f = modp::reduce(ip({1, 0, 1}), p); // x^2+1 = (x+2)(x+3) mod 5
    auto fs = modp::factor(f, p);
    REQUIRE(fs.size() == 2);
    CHECK(modp::mul(fs[0].first, fs[1].first, p) == f);

    // x^2+1 irreducible mod 3
    auto fs3 = modp::factor(modp::reduce(ip({1, 0, 1}), 3), 3);
    CHECK(fs3.size() == 1);

    // squarefree decomposition with char-p collapse: (x+1)^2 mod 2 = x^2+1
    auto sq = modp::squarefree_decomposition(modp::reduce(ip({1, 0, 1}), 2), 2);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].second == 2);
}

TEST_CASE("hensel lift recovers integer factors")
{
    // f = (x^2+1)(x^2-2) factored mod 5 then lifted
    IntPoly f = mul(ip({1, 0, 1}), ip({-2, 0, 1}));
    auto r = is_irreducible_over_q(f);
    CHECK(!r.irreducible);
    REQUIRE(r.witness.has_value());
    CHECK(divides(*r.witness, f));
    CHECK(r.witness->degree() >= 1);
    CHECK(r.witness->degree() < 4);
}

TEST_CASE("irreducibility examples")
{
    CHECK(is_irreducible_over_q(ip({1, -4, 5})).irreducible);
    auto red = is_irreducible_over_q(ip({-1, 0, 1}));
    CHECK(!red.irreducible);
    CHECK(divides(*red.witness, ip({-1, 0, 1})));
    CHECK(is_irreducible_over_q(ip({3, 6, 4})).irreducible); // eisenstein at 3
    CHECK(is_irreducible_over_q(ip({1, 1, 1, 1, 1})).irreducible); // cyclotomic
    CHECK(is_irreducible_over_q(ip({1, 0, 0, 0, 1})).irreducible); // x^4+1
    // x^4+4 = (x^2-2x+2)(x^2+2x+2), no rational roots
    auto r44 = is_irreducible_over_q(ip({4, 0, 0, 0, 1}));
    CHECK(!r44.irreducible);
    CHECK(divides(*r44.witness, ip({4, 0, 0, 0, 1})));
    CHECK(r44.witness->degree() == 2);
    // repeated factor
    auto rsq = is_irreducible_over_q(mul(ip({1, 1}), ip({1, 1})));
    CHECK(!rsq.irreducible);
}

TEST_CASE("normalize")
{
    // x^2 - (4/5)x + 1/5 -> 5x^2 - 4x + 1
    RatPoly f = rp({make_rational(1, 5), make_rational(-4, 5), Rational(1)});
    CHECK(normalize(f).poly() == ip({1, -4, 5}));
    // -x + 1/2 -> 2x - 1
    CHECK(normalize(rp({make_rational(1, 2), Rational(-1)})).poly() == ip({-1, 2}));
    // x^2 - (8/255)x + 1/3825 -> 3825x^2 - 120x + 1
    RatPoly g = rp({make_rational(1, 3825), make_rational(-8, 255), Rational(1)});
    CHECK(normalize(g).poly() == ip({1, -120, 3825}));
    CHECK_THROWS_AS(normalize(rp({Rational(-1), Rational(0), Rational(1)})),
                    NotIrreducibleError);
}

TEST_CASE("invariants on pinned examples")
{
    auto inv = invariants(MinimalPolynomial::from_integer(ip({1, -4, 5})));
    CHECK(inv == Invariants{5, 5, 1, 2});
    inv = invariants(MinimalPolynomial::from_integer(ip({-1, 2})));
    CHECK(inv == Invariants{2, 2, 2, 1});
    inv = invariants(MinimalPolynomial::from_integer(ip({1, -120, 3825})));
    CHECK(inv == Invariants{3825, 255, 15, 2});
    inv = invariants(MinimalPolynomial::from_integer(ip({3, 6, 4})));
    CHECK(inv == Invariants{4, 2, 2, 2});
}

TEST_CASE("smallest denominator oracle on pinned examples")
{
    CHECK(smallest_denominator_bruteforce(MinimalPolynomial::from_integer(
              ip({1, -4, 5})))
          == 5);
    CHECK(smallest_denominator_bruteforce(MinimalPolynomial::from_integer(
              ip({7, 0, 0, 1})))
          == 1);
    CHECK(smallest_denominator_bruteforce(MinimalPolynomial::from_integer(
              ip({3, 6, 4})))
          == 2);
}

TEST_CASE("denominator formula agrees with brute force on random corpus")
{
    std::uint64_t seed = 2024;
    for (int i = 0; i < 120; ++i) {
        MinimalPolynomial f = random_minpoly(seed, 4, 50);
        Invariants inv = invariants(f);
        CHECK(inv.denom == smallest_denominator_bruteforce(f));
        CHECK((inv.denom == inv.lead) == denom_equals_lead_criterion(f));
    }
}
