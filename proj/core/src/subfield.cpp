#include "algden/subfield.hpp"

#include "algden/primes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace algden {

namespace {

std::vector<Rational> element_row(const FieldElement& a) { return a.coords; }

QMat rows_from_elements(const std::vector<FieldElement>& v, int cols)
{
    QMat m(int(v.size()), cols);
    for (size_t i = 0; i < v.size(); ++i)
        for (int j = 0; j < cols; ++j)
            m.at(int(i), j) = v[i].coords[j];
    return m;
}

std::vector<Rational> rational_roots_int(const IntPoly& f)
{
    std::vector<Rational> roots;
    if (f.is_zero())
        return roots;
    IntPoly g = f;
    while (!g.is_zero() && g.c[0] == 0) {
        roots.push_back(Rational(0));
        g.c.erase(g.c.begin());
        while (!g.c.empty() && g.c.back() == 0)
            g.c.pop_back();
    }
    if (g.degree() < 1)
        return roots;
    for (const Integer& den : divisors(factorize(abs(g.lead()))))
        for (const Integer& num : divisors(factorize(abs(g.c[0])))) {
            if (gcd(num, den) != 1)
                continue;
            for (int s : {1, -1}) {
                Rational r = make_rational(s * num, den);
                if (eval(g, r) == 0)
                    roots.push_back(r);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Rational> rational_roots(const RatPoly& f)
{
    Integer den;
    return rational_roots_int(clear_denominators(f, den));
}

// signed squarefree part of a nonzero rational: sf(a/b) = sf(a*b)
Integer rational_squarefree_part(const Rational& x)
{
    return squarefree_part(numer(x) * denom(x));
}

// x / m = s^2 for rational s? returns s
std::optional<Rational> sqrt_of_rational(const Rational& x)
{
    if (x < 0)
        return std::nullopt;
    if (x == 0)
        return Rational(0);
    Integer n = numer(x), d = denom(x);
    if (!is_square(n) || !is_square(d))
        return std::nullopt;
    return make_rational(isqrt(n), isqrt(d));
}

} // namespace

Subfield rationals_subfield(const FieldPtr& M)
{
    Subfield s;
    s.ambient = M;
    s.field = NumberField::rationals();
    s.embed = QMat(1, M->degree());
    s.embed.at(0, 0) = 1;
    s.generator = M->one();
    return s;
}

Subfield whole_subfield(const FieldPtr& M)
{
    Subfield s;
    s.ambient = M;
    s.field = M;
    s.embed = QMat::identity(M->degree());
    s.generator = M->gen();
    if (M->degree() == 1)
        s.generator = M->one();
    return s;
}

Subfield subfield_from_generator(const FieldElement& kappa, int degree_cap)
{
    const FieldPtr& M = kappa.field;
    Integer t = integral_denominator(kappa);
    FieldElement gen = mul(kappa, Rational(t));
    RatPoly mp = min_poly_q(gen);
    int d = mp.degree();
    if (d == 1)
        return rationals_subfield(M);
    if (d == M->degree() && M->degree() > 1) {
        // element generates the whole field; still build the embedding in
        // terms of the given generator only when it is theta itself
        if (gen == M->gen())
            return whole_subfield(M);
    }
    Integer den;
    IntPoly g = clear_denominators(mp, den);
    if (den != 1 || g.lead() != 1)
        throw std::logic_error("integral element with non-integral minimal polynomial");
    Subfield s;
    s.ambient = M;
    s.field = NumberField::create(g, degree_cap);
    s.generator = gen;
    std::vector<FieldElement> pows;
    FieldElement cur = M->one();
    for (int i = 0; i < d; ++i) {
        pows.push_back(cur);
        cur = mul(cur, gen);
    }
    s.embed = rows_from_elements(pows, M->degree());
    return s;
}

FieldElement to_ambient(const Subfield& K, const FieldElement& a)
{
    assert(a.field->same_field(*K.field));
    return {K.ambient, mul_vec(a.coords, K.embed)};
}

std::optional<FieldElement> from_ambient(const Subfield& K, const FieldElement& m)
{
    assert(m.field->same_field(*K.ambient));
    auto y = solve_left(K.embed, m.coords);
    if (!y)
        return std::nullopt;
    // solve_left returns some solution; verify it reproduces the element
    if (mul_vec(*y, K.embed) != m.coords)
        return std::nullopt;
    return FieldElement{K.field, *y};
}

bool subfield_contains(const Subfield& K, const FieldElement& m)
{
    return from_ambient(K, m).has_value();
}

bool subfield_leq(const Subfield& a, const Subfield& b)
{
    return subfield_contains(b, a.generator);
}

bool same_subfield(const Subfield& a, const Subfield& b)
{
    return a.degree() == b.degree() && subfield_leq(a, b);
}

std::vector<FieldElement> min_poly_over_subfield(const Subfield& K,
                                                 const FieldElement& gamma)
{
    const FieldPtr& M = K.ambient;
    assert(gamma.field->same_field(*M));
    const int N = M->degree();
    const int d = K.degree();
    const int rel = N / d;

    std::vector<FieldElement> kappa_pows; // images of theta_K^l in M
    for (int l = 0; l < d; ++l) {
        std::vector<Rational> row(N);
        for (int j = 0; j < N; ++j)
            row[j] = K.embed.at(l, j);
        kappa_pows.push_back(FieldElement{M, std::move(row)});
    }
    std::vector<FieldElement> gamma_pows{M->one()};
    for (int i = 1; i <= rel; ++i)
        gamma_pows.push_back(mul(gamma_pows.back(), gamma));

    for (int m = 1; m <= rel; ++m) {
        // solve sum_{i<m} sum_l y_{il} kappa^l gamma^i = -gamma^m
        QMat a(m * d, N);
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < d; ++l) {
                FieldElement prod = mul(kappa_pows[l], gamma_pows[i]);
                for (int j = 0; j < N; ++j)
                    a.at(i * d + l, j) = prod.coords[j];
            }
        std::vector<Rational> rhs(N);
        for (int j = 0; j < N; ++j)
            rhs[j] = -gamma_pows[m].coords[j];
        auto y = solve_left(a, rhs);
        if (!y)
            continue;
        if (mul_vec(*y, a) != rhs)
            continue;
        std::vector<FieldElement> b;
        for (int i = 0; i < m; ++i) {
            std::vector<Rational> c(d);
            for (int l = 0; l < d; ++l)
                c[l] = (*y)[i * d + l];
            b.push_back(FieldElement{K.field, std::move(c)});
        }
        b.push_back(K.field->one());
        // verify sum b_i gamma^i = 0 in M
        FieldElement acc = M->zero();
        for (int i = 0; i <= m; ++i)
            acc = add(acc, mul(to_ambient(K, b[i]), gamma_pows[i]));
        if (!acc.is_zero())
            throw std::logic_error("relative minimal polynomial check failed");
        return b;
    }
    throw std::logic_error("no relative minimal polynomial found");
}

int generated_degree(const FieldPtr& M, const std::vector<FieldElement>& gens)
{
    const int N = M->degree();
    std::vector<FieldElement> span{M->one()};
    auto dim = [&](const std::vector<FieldElement>& v) {
        return rank(rows_from_elements(v, N));
    };
    for (;;) {
        int before = dim(span);
        std::vector<FieldElement> next = span;
        for (const auto& g : gens)
            for (const auto& s : span)
                next.push_back(mul(s, g));
        int after = dim(next);
        span = std::move(next);
        if (after == before)
            return after;
    }
}

FieldElement compositum_generator(const FieldElement& a, const FieldElement& b,
                                  int bound)
{
    int target = generated_degree(a.field, {a, b});
    for (int k = 0; k <= bound; ++k) {
        for (int t : (k == 0 ? std::vector<int>{0} : std::vector<int>{k, -k})) {
            FieldElement cand = add(a, mul(b, Rational(t)));
            if (!cand.is_zero() && degree_over_q(cand) == target)
                return cand;
        }
        // also try b alone and b + t*a for robustness
        if (k == 0 && degree_over_q(b) == target)
            return b;
    }
    throw std::runtime_error("no compositum generator within the search bound");
}

Subfield intersect_subfields(const Subfield& a, const Subfield& b, int bound)
{
    assert(a.ambient->same_field(*b.ambient));
    const int N = a.ambient->degree();
    // solve u*A = v*B; intersection vectors are u*A
    QMat stacked(a.degree() + b.degree(), N);
    for (int i = 0; i < a.degree(); ++i)
        for (int j = 0; j < N; ++j)
            stacked.at(i, j) = a.embed.at(i, j);
    for (int i = 0; i < b.degree(); ++i)
        for (int j = 0; j < N; ++j)
            stacked.at(a.degree() + i, j) = -b.embed.at(i, j);
    QMat ker = nullspace_left(stacked);
    std::vector<FieldElement> basis;
    for (int i = 0; i < ker.rows; ++i) {
        std::vector<Rational> u(a.degree());
        for (int j = 0; j < a.degree(); ++j)
            u[j] = ker.at(i, j);
        basis.push_back(FieldElement{a.ambient, mul_vec(u, a.embed)});
    }
    int dim = int(basis.size());
    assert(dim >= 1);
    if (dim == 1)
        return rationals_subfield(a.ambient);
    // search a primitive element among small integer combinations
    for (int s = 1; s <= bound; ++s) {
        std::vector<int> coeff(dim);
        std::function<std::optional<FieldElement>(int)> rec =
            [&](int pos) -> std::optional<FieldElement> {
            if (pos == dim) {
                FieldElement cand = a.ambient->zero();
                for (int i = 0; i < dim; ++i)
                    cand = add(cand, mul(basis[i], Rational(coeff[i])));
                if (!cand.is_zero() && degree_over_q(cand) == dim)
                    return cand;
                return std::nullopt;
            }
            for (int c = -s; c <= s; ++c) {
                coeff[pos] = c;
                if (auto r = rec(pos + 1))
                    return r;
            }
            return std::nullopt;
        };
        if (auto r = rec(0))
            return subfield_from_generator(*r);
    }
    throw std::runtime_error("no primitive element for the intersection");
}

FractionalIdeal ideal_below(const Subfield& K, const Subfield& L,
                            const FractionalIdeal& q)
{
    assert(q.field->same_field(*L.field));
    assert(subfield_leq(K, L));
    const int dk = K.degree(), dl = L.degree();
    // K's abstract power basis written in L's abstract coordinates
    QMat e(dk, dl);
    for (int i = 0; i < dk; ++i) {
        std::vector<Rational> row(K.ambient->degree());
        for (int j = 0; j < K.ambient->degree(); ++j)
            row[j] = K.embed.at(i, j);
        auto inL = from_ambient(L, FieldElement{K.ambient, row});
        assert(inL);
        for (int j = 0; j < dl; ++j)
            e.at(i, j) = inL->coords[j];
    }
    // O_K integral basis -> L power coords
    QMat bk = mul(K.field->integral_basis(), e);
    // q lattice -> L power coords
    QMat qp(dl, dl);
    for (int i = 0; i < dl; ++i) {
        std::vector<Rational> r(dl);
        for (int j = 0; j < dl; ++j)
            r[j] = make_rational(q.basis.at(i, j), q.den);
        auto t = mul_vec(r, L.field->integral_basis());
        for (int j = 0; j < dl; ++j)
            qp.at(i, j) = t[j];
    }
    // common denominator, then integer kernel
    ZMat bz, qz;
    Integer bd, qd;
    clear_denominators(bk, bz, bd);
    clear_denominators(qp, qz, qd);
    Integer D = lcm(bd, qd);
    for (auto& x : bz.a)
        x *= D / bd;
    for (auto& x : qz.a)
        x *= D / qd;
    ZMat stacked(dk + dl, dl);
    for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dl; ++j)
            stacked.at(i, j) = bz.at(i, j);
    for (int i = 0; i < dl; ++i)
        for (int j = 0; j < dl; ++j)
            stacked.at(dk + i, j) = -qz.at(i, j);
    ZMat ker = kernel(stacked);
    ZMat rows(ker.rows, dk);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < dk; ++j)
            rows.at(i, j) = ker.at(i, j);
    if (!is_integral_ideal(q))
        throw std::invalid_argument("restriction expects an integral ideal");
    FractionalIdeal r = {K.field, 1, hnf_basis(rows)};
    if (r.basis.rows != dk)
        throw std::logic_error("ideal restriction is not full rank");
    return r;
}

PrimeIdeal prime_below(const Subfield& K, const Subfield& L, const PrimeIdeal& q)
{
    FractionalIdeal below = ideal_below(K, L, to_ideal(q));
    for (auto& P : factor_prime(K.field, q.p))
        if (to_ideal(P) == below)
            return P;
    throw std::logic_error("restriction of a prime is not prime");
}

std::vector<PrimeIdeal> primes_above(const Subfield& K, const Subfield& L,
                                     const PrimeIdeal& p)
{
    std::vector<PrimeIdeal> out;
    for (auto& q : factor_prime(L.field, p.p)) {
        FractionalIdeal below = ideal_below(K, L, to_ideal(q));
        if (below == to_ideal(p))
            out.push_back(q);
    }
    return out;
}

std::vector<FieldElement> quadratic_subfield_generators(const FieldPtr& K)
{
    const int n = K->degree();
    std::vector<FieldElement> out;
    if (n == 1 || n == 3)
        return out;
    if (n == 2) {
        const IntPoly& g = K->defining_poly();
        // (2 theta + b)^2 = b^2 - 4c
        Integer disc = g.c[1] * g.c[1] - 4 * g.c[0];
        Integer m = squarefree_part(disc);
        Rational s = *sqrt_of_rational(make_rational(disc, m));
        FieldElement xi =
            mul(add(mul(K->gen(), Rational(2)), K->from_rational(Rational(g.c[1]))),
                1 / s);
        assert(mul(xi, xi) == K->from_rational(Rational(m)));
        out.push_back(xi);
        return out;
    }
    if (n != 4)
        throw std::invalid_argument("quadratic subfields supported up to degree 4");

    const IntPoly& g = K->defining_poly();
    // depress: theta_dep = theta + a3/4 satisfies y^4 + p y^2 + q y + r
    Rational a3 = Rational(g.c[3]);
    FieldElement th = add(K->gen(), K->from_rational(a3 / 4));
    RatPoly dep = min_poly_q(th);
    assert(dep.degree() == 4 && dep.coeff(3) == 0);
    Rational p = dep.coeff(2), q = dep.coeff(1), r = dep.coeff(0);

    // T^3 + 2p T^2 + (p^2 - 4r) T - q^2, roots T = (relative trace coeff)^2
    RatPoly res(std::vector<Rational>{-q * q, p * p - 4 * r, 2 * p, Rational(1)});
    std::vector<Integer> seen;
    for (const Rational& t0 : rational_roots(res)) {
        FieldElement xi = K->zero();
        Integer m;
        if (t0 == 0) {
            Rational v2 = p * p / 4 - r;
            if (v2 == 0)
                continue;
            m = rational_squarefree_part(v2);
            auto dd = sqrt_of_rational(v2 / Rational(m));
            if (!dd)
                continue;
            // v = theta^2 + p/2 has v^2 = v2; xi = v / D
            FieldElement v = add(mul(th, th), K->from_rational(p / 2));
            xi = mul(v, 1 / *dd);
        } else {
            m = rational_squarefree_part(t0);
            auto bb = sqrt_of_rational(t0 / Rational(m));
            if (!bb)
                continue;
            Rational b = *bb;
            Rational d = -q / (2 * b * Rational(m));
            Rational c = (p + t0) / 2;
            // xi = -(theta^2 + c) / (b*theta + d)
            FieldElement numv = neg(add(mul(th, th), K->from_rational(c)));
            FieldElement denv = add(mul(th, b), K->from_rational(d));
            if (denv.is_zero())
                continue;
            xi = div(numv, denv);
        }
        if (!(mul(xi, xi) == K->from_rational(Rational(m))))
            continue;
        bool dup = false;
        for (const auto& s : seen)
            if (s == m)
                dup = true;
        if (dup)
            continue;
        seen.push_back(m);
        out.push_back(xi);
    }
    return out;
}

bool has_sqrt(const FieldPtr& M, const Integer& m)
{
    Integer sf = squarefree_part(m);
    if (sf == 1)
        return true;
    if (M->degree() == 1)
        return false;
    if (M->degree() == 3)
        return false;
    for (const auto& xi : quadratic_subfield_generators(M)) {
        FieldElement sq = mul(xi, xi);
        if (sq.rational_value() == Rational(sf))
            return true;
    }
    return false;
}

SqrtExtension extend_with_sqrt(const FieldPtr& M, const Integer& m,
                               int degree_cap)
{
    if (has_sqrt(M, m))
        throw std::invalid_argument("square root already lies in the field");
    const int N = M->degree();
    const int N2 = 2 * N;
    // algebra A = M[z]/(z^2 - m): elements (u, v) = u + v z
    using AElem = std::pair<FieldElement, FieldElement>;
    auto amul = [&](const AElem& x, const AElem& y) {
        return AElem{add(mul(x.first, y.first),
                         mul(mul(x.second, y.second), Rational(m))),
                     add(mul(x.first, y.second), mul(x.second, y.first))};
    };
    auto acoords = [&](const AElem& x) {
        std::vector<Rational> c(N2);
        for (int i = 0; i < N; ++i) {
            c[i] = x.first.coords[i];
            c[N + i] = x.second.coords[i];
        }
        return c;
    };

    for (int c = 1; c <= 16; ++c) {
        AElem beta{M->gen(), M->from_rational(Rational(c))};
        // powers of beta
        std::vector<AElem> pows;
        AElem cur{M->one(), M->zero()};
        QMat rows(N2 + 1, N2);
        bool full = true;
        for (int k = 0; k <= N2; ++k) {
            pows.push_back(cur);
            auto cc = acoords(cur);
            for (int j = 0; j < N2; ++j)
                rows.at(k, j) = cc[j];
            if (k < N2) {
                QMat sub(k + 1, N2);
                for (int i = 0; i <= k; ++i)
                    for (int j = 0; j < N2; ++j)
                        sub.at(i, j) = rows.at(i, j);
                if (rank(sub) < k + 1) {
                    full = false;
                    break;
                }
            }
            cur = amul(cur, beta);
        }
        if (!full)
            continue;
        // minimal polynomial from the dependency at degree N2
        QMat sub(N2, N2);
        for (int i = 0; i < N2; ++i)
            for (int j = 0; j < N2; ++j)
                sub.at(i, j) = rows.at(i, j);
        auto y = solve_left(sub, acoords(pows[N2]));
        assert(y);
        std::vector<Rational> mc(N2 + 1);
        for (int i = 0; i < N2; ++i)
            mc[i] = -(*y)[i];
        mc[N2] = 1;
        RatPoly mp(std::move(mc));
        Integer den;
        IntPoly gi = clear_denominators(mp, den);
        if (den != 1 || gi.lead() != 1)
            throw std::logic_error("integral primitive element with denominator");
        SqrtExtension ext;
        ext.field = NumberField::create(gi, degree_cap);
        // locate theta_M and sqrt(m) inside the new field
        QMat pinv = inverse(sub);
        auto locate = [&](const AElem& x) {
            auto yy = mul_vec(acoords(x), pinv);
            return FieldElement{ext.field, yy};
        };
        FieldElement theta_img = locate({M->gen(), M->zero()});
        ext.sqrt_m = locate({M->zero(), M->one()});
        assert(mul(ext.sqrt_m, ext.sqrt_m)
               == ext.field->from_rational(Rational(m)));
        // embed rows = powers of theta's image
        ext.embed_old = QMat(N, N2);
        FieldElement tp = ext.field->one();
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N2; ++j)
                ext.embed_old.at(i, j) = tp.coords[j];
            if (i + 1 < N)
                tp = mul(tp, theta_img);
        }
        return ext;
    }
    throw std::runtime_error("no primitive element for the quadratic extension");
}

} // namespace algden
