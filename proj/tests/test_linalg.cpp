#include "algden/linalg.hpp"

#include <doctest.h>

using namespace algden;

namespace {

ZMat make(int r, int c, std::vector<long> v)
{
    ZMat m(r, c);
    for (int i = 0; i < r * c; ++i)
        m.a[i] = v[i];
    return m;
}

} // namespace

TEST_CASE("hnf echelon and transform")
{
    ZMat m = make(3, 3, {2, 0, 0, 0, 2, 0, 1, 1, 1});
    HnfResult r = hnf(m, true);
    CHECK(r.rank == 3);
    CHECK(mul(r.t, m) == r.h);
    // unique echelon: pivots positive, above-pivot entries reduced
    ZMat b = hnf_basis(m);
    CHECK(b == make(3, 3, {1, 1, 1, 0, 2, 0, 0, 0, 2}));
}

TEST_CASE("hnf membership and solve")
{
    ZMat m = make(2, 3, {2, 0, 4, 0, 3, 6});
    HnfResult r = hnf(m);
    CHECK(lattice_contains(r, {2, 3, 10}));
    CHECK(!lattice_contains(r, {1, 0, 2}));
    auto coeff = hnf_solve(r, {4, 3, 14});
    REQUIRE(coeff.has_value());
}

TEST_CASE("kernel")
{
    // rows (1,2,3),(2,4,6) have kernel (2,-1)
    ZMat m = make(2, 3, {1, 2, 3, 2, 4, 6});
    ZMat k = kernel(m);
    REQUIRE(k.rows == 1);
    std::vector<Integer> v{k.at(0, 0), k.at(0, 1)};
    auto prod = mul_vec(v, m);
    CHECK(prod == std::vector<Integer>{0, 0, 0});
}

TEST_CASE("lattice intersect")
{
    // 2Z^2 /\ 3Z^2 = 6Z^2
    ZMat a = make(2, 2, {2, 0, 0, 2});
    ZMat b = make(2, 2, {3, 0, 0, 3});
    CHECK(lattice_intersect(a, b) == make(2, 2, {6, 0, 0, 6}));
}

TEST_CASE("snf")
{
    ZMat m = make(2, 2, {2, 4, 6, 8});
    SnfResult s = snf(m);
    CHECK(mul(mul(s.u, m), s.v) == s.s);
    CHECK(s.s.at(0, 0) == 2);
    CHECK(s.s.at(1, 1) == 4); // det 16-24=-8, divisors 2|4
    CHECK(s.s.at(0, 1) == 0);
    CHECK(s.s.at(1, 0) == 0);
}

TEST_CASE("solve integer")
{
    ZMat a = make(2, 2, {2, 0, 0, 3});
    auto y = solve_integer(a, {4, 9});
    REQUIRE(y.has_value());
    CHECK(mul_vec(*y, a) == std::vector<Integer>{4, 9});
    CHECK(!solve_integer(a, {1, 0}).has_value());
}

TEST_CASE("bareiss determinant")
{
    CHECK(det(make(2, 2, {1, 2, 3, 4})) == -2);
    CHECK(det(make(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
    CHECK(det(make(2, 2, {1, 2, 2, 4})) == 0);
    CHECK(det(ZMat::identity(5)) == 1);
}

TEST_CASE("rational solve and inverse")
{
    QMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 3;
    m.at(1, 1) = 4;
    QMat inv = inverse(m);
    CHECK(mul(m, inv) == QMat::identity(2));
    auto x = solve_left(m, {Rational(1), Rational(0)});
    REQUIRE(x.has_value());
    CHECK(mul_vec(*x, m) == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(rank(m) == 2);
}

TEST_CASE("nullspace left")
{
    QMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    QMat ns = nullspace_left(m);
    REQUIRE(ns.rows == 1);
    auto v = mul_vec(std::vector<Rational>{ns.at(0, 0), ns.at(0, 1)}, m);
    CHECK(v == std::vector<Rational>{Rational(0), Rational(0)});
}
