#include "algden/primes.hpp"

#include <doctest.h>

#include <cstdint>

using namespace algden;

namespace {

// independent trial-division oracle
std::vector<std::pair<Integer, int>> trial_factor(Integer n)
{
    std::vector<std::pair<Integer, int>> out;
    for (Integer d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::uint64_t splitmix(std::uint64_t& s)
{
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

TEST_CASE("factorize basics")
{
    CHECK(factorize(60).factors
          == std::vector<std::pair<Integer, int>>{{2, 2}, {3, 1}, {5, 1}});
    CHECK(factorize(1).factors.empty());
    // 3825 = (60+15i)(60-15i); oracle cross-check
    CHECK(factorize(3825).factors == trial_factor(3825));
    CHECK(factorize(3825).factors
          == std::vector<std::pair<Integer, int>>{{3, 2}, {5, 2}, {17, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize large and primality")
{
    Integer p1("1000000007"), p2("1000000009");
    auto f = factorize(p1 * p2);
    CHECK(f.factors == std::vector<std::pair<Integer, int>>{{p1, 1}, {p2, 1}});
    CHECK(is_prime(p1));
    CHECK(!is_prime(p1 * p2));
    CHECK(is_prime(2));
    CHECK(!is_prime(1));
    // strong pseudoprime to several small bases
    CHECK(!is_prime(Integer("3215031751")));
    CHECK(is_prime(Integer("170141183460469231731687303715884105727"))); // 2^127-1
}

TEST_CASE("factorize product reconstruction on random inputs")
{
    std::uint64_t seed = 42;
    for (int i = 0; i < 10000; ++i) {
        Integer n(static_cast<unsigned long>(splitmix(seed) % 1000000000000ull + 1));
        auto f = factorize(n);
        CHECK(f.product() == n);
        for (auto& [p, e] : f.factors)
            CHECK(is_prime(p));
        for (size_t j = 1; j < f.factors.size(); ++j)
            CHECK(f.factors[j - 1].first < f.factors[j].first);
    }
}

TEST_CASE("divisors")
{
    auto ds = divisors(factorize(12));
    CHECK(ds == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(factorize(1)) == std::vector<Integer>{1});
}

TEST_CASE("valuations")
{
    CHECK(vp(make_rational(5, 4), 2) == -2);
    CHECK(vp(Integer(45), 3) == 2);
    CHECK(vp(make_rational(1, 3825), 17) == -1);
    CHECK_THROWS_AS(vp(Rational(0), 2), std::domain_error);

    // vp(rs) = vp(r) + vp(s); ultrametric inequality with equality off-ties
    std::uint64_t seed = 7;
    for (int i = 0; i < 500; ++i) {
        Integer p = (i % 3 == 0) ? 2 : (i % 3 == 1) ? 3 : 5;
        auto rnd = [&] {
            long n = long(splitmix(seed) % 2001) - 1000;
            long d = long(splitmix(seed) % 999) + 1;
            if (n == 0)
                n = 1;
            return make_rational(n, d);
        };
        Rational r = rnd(), s = rnd();
        CHECK(vp(r * s, p) == vp(r, p) + vp(s, p));
        if (r + s != 0) {
            int vsum = vp(r + s, p);
            int lo = std::min(vp(r, p), vp(s, p));
            CHECK(vsum >= lo);
            if (vp(r, p) != vp(s, p))
                CHECK(vsum == lo);
        }
    }
}

TEST_CASE("squarefree part")
{
    CHECK(squarefree_part(12) == 3);
    CHECK(squarefree_part(-18) == -2);
    CHECK(squarefree_part(1) == 1);
}
