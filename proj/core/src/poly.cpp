#include "algden/poly.hpp"

#include "algden/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace algden {

namespace {

template <typename P> void trim(P& f)
{
    while (!f.c.empty() && f.c.back() == 0)
        f.c.pop_back();
}

} // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(*this); }
RatPoly::RatPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(*this); }

IntPoly add(const IntPoly& f, const IntPoly& g)
{
    std::vector<Integer> r(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.coeff(int(i)) + g.coeff(int(i));
    return IntPoly(std::move(r));
}

IntPoly sub(const IntPoly& f, const IntPoly& g)
{
    std::vector<Integer> r(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.coeff(int(i)) - g.coeff(int(i));
    return IntPoly(std::move(r));
}

IntPoly mul(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return IntPoly();
    std::vector<Integer> r(f.c.size() + g.c.size() - 1);
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j)
            r[i + j] += f.c[i] * g.c[j];
    return IntPoly(std::move(r));
}

IntPoly neg(const IntPoly& f)
{
    IntPoly r = f;
    for (auto& x : r.c)
        x = -x;
    return r;
}

IntPoly scale(const IntPoly& f, const Integer& k)
{
    if (k == 0)
        return IntPoly();
    IntPoly r = f;
    for (auto& x : r.c)
        x *= k;
    return r;
}

IntPoly derivative(const IntPoly& f)
{
    if (f.degree() < 1)
        return IntPoly();
    std::vector<Integer> r(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i)
        r[i - 1] = f.c[i] * Integer(static_cast<unsigned long>(i));
    return IntPoly(std::move(r));
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (const auto& x : f.c)
        g = gcd(g, x);
    return g;
}

IntPoly primitive_part(const IntPoly& f)
{
    if (f.is_zero())
        return f;
    Integer ct = content(f);
    IntPoly r = f;
    for (auto& x : r.c)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ct.get_mpz_t());
    return r;
}

Integer eval(const IntPoly& f, const Integer& x)
{
    Integer r = 0;
    for (size_t i = f.c.size(); i-- > 0;)
        r = r * x + f.c[i];
    return r;
}

Rational eval(const IntPoly& f, const Rational& x)
{
    Rational r = 0;
    for (size_t i = f.c.size(); i-- > 0;)
        r = r * x + Rational(f.c[i]);
    return r;
}

bool divides(const IntPoly& g, const IntPoly& f)
{
    if (g.is_zero())
        return f.is_zero();
    if (f.is_zero())
        return true;
    if (f.degree() < g.degree())
        return false;
    IntPoly rem = f;
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        if (rem.lead() % g.lead() != 0)
            return false;
        Integer q = rem.lead() / g.lead();
        int shift = rem.degree() - g.degree();
        for (int i = 0; i <= g.degree(); ++i)
            rem.c[i + shift] -= q * g.c[i];
        trim(rem);
    }
    return rem.is_zero();
}

IntPoly divide_exact(const IntPoly& f, const IntPoly& g)
{
    if (g.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (f.is_zero())
        return IntPoly();
    std::vector<Integer> q(f.degree() - g.degree() + 1);
    IntPoly rem = f;
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        if (rem.lead() % g.lead() != 0)
            throw std::domain_error("inexact polynomial division");
        Integer qc = rem.lead() / g.lead();
        int shift = rem.degree() - g.degree();
        q[shift] = qc;
        for (int i = 0; i <= g.degree(); ++i)
            rem.c[i + shift] -= qc * g.c[i];
        trim(rem);
    }
    if (!rem.is_zero())
        throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(q));
}

RatPoly to_rat(const IntPoly& f)
{
    std::vector<Rational> r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i)
        r[i] = Rational(f.c[i]);
    return RatPoly(std::move(r));
}

IntPoly clear_denominators(const RatPoly& f, Integer& den)
{
    den = 1;
    for (const auto& q : f.c)
        den = lcm(den, denom(q));
    std::vector<Integer> r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i)
        r[i] = numer(f.c[i]) * (den / denom(f.c[i]));
    return IntPoly(std::move(r));
}

RatPoly add(const RatPoly& f, const RatPoly& g)
{
    std::vector<Rational> r(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.coeff(int(i)) + g.coeff(int(i));
    return RatPoly(std::move(r));
}

RatPoly sub(const RatPoly& f, const RatPoly& g)
{
    std::vector<Rational> r(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.coeff(int(i)) - g.coeff(int(i));
    return RatPoly(std::move(r));
}

RatPoly mul(const RatPoly& f, const RatPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return RatPoly();
    std::vector<Rational> r(f.c.size() + g.c.size() - 1);
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j)
            r[i + j] += f.c[i] * g.c[j];
    return RatPoly(std::move(r));
}

RatPoly scale(const RatPoly& f, const Rational& k)
{
    if (k == 0)
        return RatPoly();
    RatPoly r = f;
    for (auto& x : r.c)
        x *= k;
    return r;
}

RatPoly derivative(const RatPoly& f)
{
    if (f.degree() < 1)
        return RatPoly();
    std::vector<Rational> r(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i)
        r[i - 1] = f.c[i] * Rational(Integer(static_cast<unsigned long>(i)));
    return RatPoly(std::move(r));
}

Rational eval(const RatPoly& f, const Rational& x)
{
    Rational r = 0;
    for (size_t i = f.c.size(); i-- > 0;)
        r = r * x + f.c[i];
    return r;
}

void divmod(const RatPoly& f, const RatPoly& g, RatPoly& q, RatPoly& r)
{
    if (g.is_zero())
        throw std::domain_error("division by zero polynomial");
    r = f;
    if (f.degree() < g.degree()) {
        q = RatPoly();
        return;
    }
    std::vector<Rational> qc(f.degree() - g.degree() + 1);
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rational c = r.lead() / g.lead();
        int shift = r.degree() - g.degree();
        qc[shift] = c;
        for (int i = 0; i <= g.degree(); ++i)
            r.c[i + shift] -= c * g.c[i];
        trim(r);
    }
    q = RatPoly(std::move(qc));
}

RatPoly monic(const RatPoly& f)
{
    if (f.is_zero())
        return f;
    return scale(f, 1 / f.lead());
}

RatPoly gcd(const RatPoly& f, const RatPoly& g)
{
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
        RatPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return monic(a);
}

Integer resultant(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    int m = f.degree(), n = g.degree();
    if (m == 0)
        return pow(f.c[0], n);
    if (n == 0)
        return pow(g.c[0], m);
    ZMat s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s.at(i, i + j) = f.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s.at(n + i, i + j) = g.c[n - j];
    return det(s);
}

Integer discriminant(const IntPoly& f)
{
    int n = f.degree();
    if (n < 1)
        throw std::domain_error("discriminant needs degree >= 1");
    if (n == 1)
        return 1;
    Integer r = resultant(f, derivative(f));
    Integer d = r / f.lead();
    return (Integer(n) * (n - 1) / 2) % 2 == 0 ? d : -d;
}

namespace {

int sign_at_infinity(const RatPoly& p, bool plus)
{
    if (p.is_zero())
        return 0;
    int s = sign(p.lead());
    if (!plus && p.degree() % 2 == 1)
        s = -s;
    return s;
}

} // namespace

int real_root_count(const IntPoly& f)
{
    RatPoly p0 = to_rat(f), p1 = derivative(p0);
    std::vector<RatPoly> chain{p0, p1};
    while (!chain.back().is_zero()) {
        RatPoly q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        for (auto& x : r.c)
            x = -x;
        chain.push_back(RatPoly(std::move(r.c)));
    }
    chain.pop_back();
    auto variations = [&](bool plus) {
        int v = 0, prev = 0;
        for (const auto& p : chain) {
            int s = sign_at_infinity(p, plus);
            if (s != 0) {
                if (prev != 0 && s != prev)
                    ++v;
                prev = s;
            }
        }
        return v;
    };
    return variations(false) - variations(true);
}

IntPoly root_scale(const IntPoly& f, const Integer& k)
{
    // root r of f becomes k*r: coefficient i gets k^(n-i)
    int n = f.degree();
    std::vector<Integer> r(f.c.size());
    Integer kp = 1;
    for (int i = n; i >= 0; --i) {
        r[i] = f.c[i] * kp;
        kp *= k;
    }
    return IntPoly(std::move(r));
}

IntPoly monicize(const IntPoly& f)
{
    IntPoly g = root_scale(f, f.lead());
    assert(!g.is_zero());
    std::vector<Integer> r(g.c.size());
    for (size_t i = 0; i < g.c.size(); ++i) {
        assert(g.c[i] % g.lead() == 0);
        r[i] = g.c[i] / g.lead();
    }
    return IntPoly(std::move(r));
}

} // namespace algden
