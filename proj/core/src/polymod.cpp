#include "algden/polymod.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace algden::modp {

namespace {

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Integer inv_mod(const Integer& a, const Integer& p)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod p");
    return r;
}

// deterministic splitting-element source for equal-degree factorization
struct PolyStream {
    Integer p;
    int deg;
    std::uint64_t state = 0x9e3779b97f4a7c15ull;

    std::uint64_t next_u64()
    {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    Poly next()
    {
        Poly f(deg + 1);
        for (auto& c : f)
            c = mod_floor(Integer(static_cast<unsigned long>(next_u64() >> 8)), p);
        trim(f);
        if (is_zero(f))
            f = Poly{1};
        return f;
    }
};

} // namespace

Poly reduce(const IntPoly& f, const Integer& p)
{
    Poly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i)
        r[i] = mod_floor(f.c[i], p);
    trim(r);
    return r;
}

IntPoly lift(const Poly& f) { return IntPoly(std::vector<Integer>(f)); }

IntPoly lift_symmetric(const Poly& f, const Integer& m)
{
    std::vector<Integer> r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = mod_symmetric(f[i], m);
    return IntPoly(std::move(r));
}

int degree(const Poly& f) { return int(f.size()) - 1; }
bool is_zero(const Poly& f) { return f.empty(); }

Poly add(const Poly& f, const Poly& g, const Integer& p)
{
    Poly r(std::max(f.size(), g.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        Integer s = (i < f.size() ? f[i] : Integer(0))
                    + (i < g.size() ? g[i] : Integer(0));
        r[i] = mod_floor(s, p);
    }
    trim(r);
    return r;
}

Poly sub(const Poly& f, const Poly& g, const Integer& p)
{
    Poly r(std::max(f.size(), g.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        Integer s = (i < f.size() ? f[i] : Integer(0))
                    - (i < g.size() ? g[i] : Integer(0));
        r[i] = mod_floor(s, p);
    }
    trim(r);
    return r;
}

Poly mul(const Poly& f, const Poly& g, const Integer& p)
{
    if (is_zero(f) || is_zero(g))
        return {};
    Poly r(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] += f[i] * g[j];
    }
    for (auto& c : r)
        c = mod_floor(c, p);
    trim(r);
    return r;
}

Poly scale(const Poly& f, const Integer& k, const Integer& p)
{
    Poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = mod_floor(f[i] * k, p);
    trim(r);
    return r;
}

void divmod(const Poly& f, const Poly& g, const Integer& p, Poly& q, Poly& r)
{
    if (is_zero(g))
        throw std::domain_error("division by zero polynomial");
    r = f;
    q.clear();
    if (degree(f) >= degree(g))
        q.assign(degree(f) - degree(g) + 1, Integer(0));
    Integer linv = inv_mod(g.back(), p);
    while (!is_zero(r) && degree(r) >= degree(g)) {
        Integer c = mod_floor(r.back() * linv, p);
        int shift = degree(r) - degree(g);
        q[shift] = c;
        for (size_t i = 0; i < g.size(); ++i)
            r[i + shift] = mod_floor(r[i + shift] - c * g[i], p);
        trim(r);
    }
    trim(q);
}

Poly monic(const Poly& f, const Integer& p)
{
    if (is_zero(f))
        return f;
    return scale(f, inv_mod(f.back(), p), p);
}

Poly gcd(const Poly& f, const Poly& g, const Integer& p)
{
    Poly a = f, b = g;
    while (!is_zero(b)) {
        Poly q, r;
        divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly powmod(const Poly& base, const Integer& e, const Poly& mod, const Integer& p)
{
    Poly result{1};
    Poly b = base;
    {
        Poly q, r;
        divmod(b, mod, p, q, r);
        b = r;
    }
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) {
            Poly q, r;
            divmod(mul(result, b, p), mod, p, q, r);
            result = r;
        }
        Poly q, r;
        divmod(mul(b, b, p), mod, p, q, r);
        b = r;
        k >>= 1;
    }
    return result;
}

Poly derivative(const Poly& f, const Integer& p)
{
    if (degree(f) < 1)
        return {};
    Poly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i)
        r[i - 1] = mod_floor(f[i] * Integer(static_cast<unsigned long>(i)), p);
    trim(r);
    return r;
}

std::pair<Poly, Poly> bezout(const Poly& f, const Poly& g, const Integer& p)
{
    Poly r0 = f, r1 = g;
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!is_zero(r1)) {
        Poly q, r;
        divmod(r0, r1, p, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // normalize so that s0*f + t0*g is monic
    if (!is_zero(r0)) {
        Integer inv = inv_mod(r0.back(), p);
        s0 = scale(s0, inv, p);
        t0 = scale(t0, inv, p);
    }
    return {s0, t0};
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f,
                                                           const Integer& p)
{
    std::vector<std::pair<Poly, int>> out;
    if (degree(f) < 1)
        return out;
    Poly fp = derivative(f, p);
    if (is_zero(fp)) {
        // f = h(x^p); in F_p the coefficients are already their own p-th roots
        unsigned long pi = p.get_ui();
        Poly h((f.size() - 1) / pi + 1);
        for (size_t i = 0; i < h.size(); ++i)
            h[i] = f[i * pi];
        for (auto& [g, e] : squarefree_decomposition(h, p))
            out.emplace_back(g, e * int(pi));
        return out;
    }
    Poly c = gcd(f, fp, p);
    Poly w;
    {
        Poly q, r;
        divmod(f, c, p, q, r);
        w = q;
    }
    int i = 1;
    while (degree(w) > 0) {
        Poly y = gcd(w, c, p);
        Poly z, r;
        divmod(w, y, p, z, r);
        if (degree(z) > 0)
            out.emplace_back(monic(z, p), i);
        w = std::move(y);
        Poly q;
        divmod(c, w, p, q, r);
        c = q;
        ++i;
    }
    if (degree(c) > 0) {
        // leftover is a p-th power part
        unsigned long pi = p.get_ui();
        Poly h((c.size() - 1) / pi + 1);
        for (size_t j = 0; j < h.size(); ++j)
            h[j] = c[j * pi];
        for (auto& [g, e] : squarefree_decomposition(h, p))
            out.emplace_back(g, e * int(pi));
    }
    return out;
}

namespace {

// distinct-degree factorization of monic squarefree f; returns (product, d)
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, const Integer& p)
{
    std::vector<std::pair<Poly, int>> out;
    Poly rem = f;
    Poly x{0, 1};
    Poly h = x; // x^(p^d) mod rem, maintained incrementally
    int d = 0;
    while (degree(rem) > 0) {
        ++d;
        if (2 * d > degree(rem)) {
            out.emplace_back(rem, degree(rem));
            break;
        }
        h = powmod(h, p, rem, p);
        Poly g = gcd(sub(h, x, p), rem, p);
        if (degree(g) > 0) {
            out.emplace_back(g, d);
            Poly q, r;
            divmod(rem, g, p, q, r);
            rem = q;
            divmod(h, rem, p, q, r);
            h = r;
        }
    }
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus) of monic squarefree f whose
// irreducible factors all have degree d
void equal_degree(const Poly& f, int d, const Integer& p, PolyStream& stream,
                  std::vector<Poly>& out)
{
    if (degree(f) == d) {
        out.push_back(f);
        return;
    }
    Poly splitter;
    for (;;) {
        Poly t = stream.next();
        if (degree(t) < 1)
            continue;
        Poly g = gcd(t, f, p);
        if (degree(g) > 0 && degree(g) < degree(f)) {
            splitter = g;
            break;
        }
        Poly b;
        if (p == 2) {
            // trace map over F_2
            Poly acc = t, cur = t;
            Integer q = 2;
            for (int i = 1; i < d; ++i) {
                cur = powmod(cur, q, f, p);
                acc = add(acc, cur, p);
            }
            b = acc;
        } else {
            Integer e = (pow(p, static_cast<unsigned long>(d)) - 1) / 2;
            b = sub(powmod(t, e, f, p), Poly{1}, p);
        }
        Poly g2 = gcd(b, f, p);
        if (degree(g2) > 0 && degree(g2) < degree(f)) {
            splitter = g2;
            break;
        }
    }
    Poly q, r;
    divmod(f, splitter, p, q, r);
    equal_degree(splitter, d, p, stream, out);
    equal_degree(q, d, p, stream, out);
}

} // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f, const Integer& p)
{
    std::vector<std::pair<Poly, int>> out;
    for (auto& [g, e] : squarefree_decomposition(f, p)) {
        for (auto& [h, d] : distinct_degree(g, p)) {
            PolyStream stream{p, d};
            std::vector<Poly> irr;
            equal_degree(h, d, p, stream, irr);
            for (auto& u : irr)
                out.emplace_back(std::move(u), e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct LiftNode {
    Poly g;           // product of the factors below, mod current modulus
    Poly s, t;        // bezout data for the two children
    int lo = 0, hi = 0;
    int left = -1, right = -1;
};

} // namespace

std::vector<Poly> hensel_lift(const IntPoly& f, const std::vector<Poly>& factors,
                              const Integer& p, const Integer& target,
                              Integer& modulus_out)
{
    assert(f.lead() == 1);
    if (factors.size() == 1) {
        Integer m = p;
        while (m < target)
            m = m * m;
        modulus_out = m;
        return {reduce(f, m)};
    }
    // build a product tree over the factors
    std::vector<LiftNode> nodes;
    // leaves first
    std::vector<int> level;
    for (size_t i = 0; i < factors.size(); ++i) {
        LiftNode n;
        n.g = factors[i];
        n.lo = int(i);
        n.hi = int(i) + 1;
        nodes.push_back(n);
        level.push_back(int(nodes.size()) - 1);
    }
    while (level.size() > 1) {
        std::vector<int> next;
        for (size_t i = 0; i + 1 < level.size(); i += 2) {
            LiftNode n;
            n.left = level[i];
            n.right = level[i + 1];
            n.lo = nodes[n.left].lo;
            n.hi = nodes[n.right].hi;
            n.g = mul(nodes[n.left].g, nodes[n.right].g, p);
            auto [s, t] = bezout(nodes[n.left].g, nodes[n.right].g, p);
            n.s = s;
            n.t = t;
            nodes.push_back(n);
            next.push_back(int(nodes.size()) - 1);
        }
        if (level.size() % 2 == 1)
            next.push_back(level.back());
        level = next;
    }
    int root = level[0];
    nodes[root].g = reduce(f, p);

    Integer m = p;
    while (m < target) {
        Integer m2 = m * m;
        nodes[root].g = reduce(f, m2);
        // lift every internal node: g = left*right and the bezout identity
        // proceed root-down so each node's product is current before its
        // children are corrected
        std::vector<int> order;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            order.push_back(id);
            if (nodes[id].left >= 0) {
                stack.push_back(nodes[id].left);
                stack.push_back(nodes[id].right);
            }
        }
        for (int id : order) {
            LiftNode& n = nodes[id];
            if (n.left < 0)
                continue;
            Poly& g = nodes[n.left].g;
            Poly& h = nodes[n.right].g;
            // e = n.g - g*h mod m2
            Poly e = sub(n.g, mul(g, h, m2), m2);
            Poly se = mul(n.s, e, m2);
            Poly q, r;
            divmod(se, h, m2, q, r);
            Poly gnew = add(g, add(mul(n.t, e, m2), mul(q, g, m2), m2), m2);
            Poly hnew = add(h, r, m2);
            // refresh bezout data: b = s*gnew + t*hnew - 1 mod m2
            Poly b = sub(add(mul(n.s, gnew, m2), mul(n.t, hnew, m2), m2),
                         Poly{1}, m2);
            Poly sb = mul(n.s, b, m2);
            Poly c, d;
            divmod(sb, hnew, m2, c, d);
            Poly snew = sub(n.s, d, m2);
            Poly tnew = sub(sub(n.t, mul(n.t, b, m2), m2), mul(c, gnew, m2), m2);
            assert(degree(gnew) == degree(g) && gnew.back() == 1);
            assert(degree(hnew) == degree(h) && hnew.back() == 1);
            g = gnew;
            h = hnew;
            n.s = snew;
            n.t = tnew;
        }
        m = m2;
    }

    std::vector<Poly> lifted(factors.size());
    for (const auto& n : nodes)
        if (n.left < 0)
            lifted[n.lo] = n.g;
    modulus_out = m;
    return lifted;
}

} // namespace algden::modp
