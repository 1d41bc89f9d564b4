#include "algden/class_group.hpp"

#include "algden/primes.hpp"

#include <cassert>
#include <functional>

namespace algden {

namespace {

// ---- binary quadratic forms (a, b, c) of discriminant D, with the GL2
// substitution tracked so a representation of +-1 pulls back to a generator

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

struct Form {
    Integer a, b, c;
    bool operator==(const Form&) const = default;
};

struct Mat2 {
    Integer m[2][2];
    static Mat2 identity() { return {{{1, 0}, {0, 1}}}; }
};

Mat2 mul2(const Mat2& x, const Mat2& y)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
    return r;
}

Mat2 inv2(const Mat2& x)
{
    Integer d = x.m[0][0] * x.m[1][1] - x.m[0][1] * x.m[1][0];
    assert(d == 1 || d == -1);
    Mat2 r{{{x.m[1][1] / d, -x.m[0][1] / d}, {-x.m[1][0] / d, x.m[0][0] / d}}};
    return r;
}

// substitute v -> v*s: Q'(v) = Q(v*s)
Form substitute(const Form& f, const Mat2& s)
{
    auto q = [&](const Integer& x, const Integer& y) -> Integer {
        return f.a * x * x + f.b * x * y + f.c * y * y;
    };
    Integer a2 = q(s.m[0][0], s.m[0][1]);
    Integer c2 = q(s.m[1][0], s.m[1][1]);
    Integer b2 = q(s.m[0][0] + s.m[1][0], s.m[0][1] + s.m[1][1]) - a2 - c2;
    return {a2, b2, c2};
}

// Gauss reduction of a positive definite form; s_out accumulates the
// substitution taking the reduced form back into the original.
Form reduce_definite(Form f, Mat2& s_out)
{
    s_out = Mat2::identity();
    for (;;) {
        // normalize b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            Integer k = -floor_div(f.b + f.a, 2 * f.a);
            Mat2 st{{{1, 0}, {k, 1}}};
            f = substitute(f, st);
            if (f.b <= -f.a) {
                Mat2 st1{{{1, 0}, {1, 1}}};
                f = substitute(f, st1);
                st = mul2(st1, st);
            }
            s_out = mul2(st, s_out);
        }
        if (f.a > f.c) {
            Mat2 st{{{0, 1}, {-1, 0}}};
            f = substitute(f, st);
            s_out = mul2(st, s_out);
            continue;
        }
        if (f.a == f.c && f.b < 0) {
            Mat2 st{{{0, 1}, {-1, 0}}};
            f = substitute(f, st);
            s_out = mul2(st, s_out);
        }
        break;
    }
    return f;
}

bool indefinite_reduced(const Form& f, const Integer& s /* isqrt(D) */,
                        const Integer& d)
{
    if (f.b <= 0 || f.b * f.b > d)
        return false;
    Integer t = 2 * abs(f.a) - f.b;
    // |sqrt(D) - 2|a|| < b  <=>  t < sqrt(D) < 2|a| + b
    if (t >= 0 && t * t >= d)
        return false;
    Integer u = 2 * abs(f.a) + f.b;
    return u * u > d;
}

// one reduction step for indefinite forms
Form rho(const Form& f, const Integer& s, Mat2& step)
{
    Integer twoc = 2 * abs(f.c);
    // b' in (s - 2|c|, s], b' = -b mod 2|c|
    Integer bp = s - mod_floor(s + f.b, twoc);
    assert((f.b + bp) % (2 * f.c) == 0);
    Integer m = (f.b + bp) / (2 * f.c);
    step = Mat2{{{0, 1}, {-1, m}}};
    Form g = substitute(f, step);
    assert(g.a == f.c && g.b == bp);
    return g;
}

Form reduce_indefinite(Form f, const Integer& s, const Integer& d, Mat2& s_out)
{
    s_out = Mat2::identity();
    int guard = 0;
    while (!indefinite_reduced(f, s, d)) {
        Mat2 step;
        f = rho(f, s, step);
        s_out = mul2(step, s_out);
        if (++guard > 10000)
            throw ClassGroupError("indefinite reduction did not terminate");
    }
    return f;
}

struct FormSearch {
    bool found = false;
    Integer x, y; // Q(x, y) = +-1
};

// decide whether f represents +1 or -1, with a witness vector
FormSearch represents_unit(const Form& f, const Integer& d)
{
    FormSearch out;
    if (d < 0) {
        Mat2 s;
        Form r = reduce_definite(f, s);
        Integer b0 = mod_floor(d, 2);
        Form principal{1, b0, (b0 * b0 - d) / 4};
        if (!(r == principal))
            return out;
        out.found = true;
        out.x = s.m[0][0];
        out.y = s.m[0][1];
        return out;
    }
    Integer s0 = isqrt(d);
    Mat2 sred;
    Form r = reduce_indefinite(f, s0, d, sred);
    // walk the cycles of the two principal forms
    Integer b0 = s0;
    if (mod_floor(b0 - d, 2) != 0)
        b0 -= 1;
    for (int sign_a : {1, -1}) {
        Form start{sign_a, b0, (b0 * b0 - d) / (4 * sign_a)};
        Mat2 w0;
        Form cur = reduce_indefinite(start, s0, d, w0);
        Mat2 w = w0;
        Form first = cur;
        int guard = 0;
        do {
            if (cur == r) {
                // f o sred = start o w  =>  f(e0 * w^{-1} * sred) = sign_a
                Mat2 t = mul2(inv2(w), sred);
                out.found = true;
                out.x = t.m[0][0];
                out.y = t.m[0][1];
                return out;
            }
            Mat2 step;
            cur = rho(cur, s0, step);
            w = mul2(step, w);
            if (++guard > 100000)
                throw ClassGroupError("principal cycle did not close");
        } while (!(cur == first));
    }
    return out;
}

// form attached to an integral ideal of a quadratic field
Form ideal_form(const FractionalIdeal& I, FieldElement& alpha, FieldElement& beta)
{
    auto bas = ideal_basis_elements(I);
    alpha = bas[0];
    beta = bas[1];
    Rational nrm = ideal_norm(I);
    Rational a = norm(alpha) / nrm;
    Rational c = norm(beta) / nrm;
    Rational b = (norm(add(alpha, beta)) - norm(alpha) - norm(beta)) / nrm;
    assert(is_integer(a) && is_integer(b) && is_integer(c));
    return {numer(a), numer(b), numer(c)};
}

std::optional<FieldElement> quadratic_principal_generator(const FractionalIdeal& I)
{
    const FieldPtr& K = I.field;
    FieldElement alpha = K->zero(), beta = K->zero();
    Form f = ideal_form(I, alpha, beta);
    Integer d = K->discriminant();
    assert(f.b * f.b - 4 * f.a * f.c == d);
    FormSearch r = represents_unit(f, d);
    if (!r.found)
        return std::nullopt;
    FieldElement g = add(mul(alpha, Rational(r.x)), mul(beta, Rational(r.y)));
    if (!(principal_ideal(g) == I))
        throw std::logic_error("form reduction produced a wrong generator");
    return g;
}

// bounded box search over the ideal basis for higher degrees
std::optional<FieldElement> search_principal_generator(const FractionalIdeal& I,
                                                       int effort)
{
    auto bas = ideal_basis_elements(I);
    const int n = int(bas.size());
    Rational target = ideal_norm(I);
    int box = 2 + 2 * effort;
    std::vector<int> u(n, -box);
    for (;;) {
        FieldElement cand = I.field->zero();
        for (int i = 0; i < n; ++i)
            if (u[i] != 0)
                cand = add(cand, mul(bas[i], Rational(u[i])));
        if (!cand.is_zero() && abs(norm(cand)) == target
            && principal_ideal(cand) == I)
            return cand;
        int i = 0;
        while (i < n && u[i] == box) {
            u[i] = -box;
            ++i;
        }
        if (i == n)
            return std::nullopt;
        ++u[i];
    }
}

} // namespace

Integer minkowski_bound(const FieldPtr& K)
{
    int n = K->degree();
    if (n == 1)
        return 0;
    // (n!/n^n) * (4/pi)^r2 * sqrt(|disc|), rounded up with 4/pi <= 41/32
    Rational nf(1);
    for (int i = 2; i <= n; ++i)
        nf *= i;
    Rational factor = nf / Rational(pow(Integer(n), static_cast<unsigned long>(n)));
    for (int i = 0; i < K->complex_pairs(); ++i)
        factor *= make_rational(41, 32);
    Rational bound = factor * Rational(isqrt(abs(K->discriminant())) + 1);
    return ceil_div(numer(bound), denom(bound));
}

bool principality_is_decidable(const FieldPtr& K) { return K->degree() <= 2; }

std::optional<FieldElement> principal_generator(const FractionalIdeal& I,
                                                int effort)
{
    const FieldPtr& K = I.field;
    if (!is_integral_ideal(I)) {
        // split into integral numerator over a rational denominator
        FractionalIdeal num = scale(I, Rational(I.den));
        auto g = principal_generator(num, effort);
        if (!g)
            return std::nullopt;
        return mul(*g, make_rational(1, I.den));
    }
    if (K->degree() == 1) {
        // ideals of Z: generator is the single HNF entry
        return K->from_rational(make_rational(I.basis.at(0, 0), I.den));
    }
    if (K->degree() == 2)
        return quadratic_principal_generator(I);
    return search_principal_generator(I, effort);
}

ClassGroup class_group(const FieldPtr& K, int effort)
{
    ClassGroup g;
    g.field = K;
    g.h = 1;
    Integer mb = minkowski_bound(K);
    for (Integer p = 2; p <= mb; p = next_prime(p + 1)) {
        for (auto& P : factor_prime(K, p)) {
            if (pow(p, static_cast<unsigned long>(P.res_deg)) <= mb)
                g.factor_base.push_back(P);
        }
    }
    const int r = int(g.factor_base.size());
    g.relations = ZMat(0, r);
    if (r == 0)
        return g;

    if (K->degree() > 2) {
        // certify h = 1 by principalizing every factor-base prime, or fail
        for (auto& P : g.factor_base) {
            auto gen = search_principal_generator(to_ideal(P), effort);
            if (!gen)
                throw ClassGroupError(
                    "class group beyond quadratic fields is only certified "
                    "when every Minkowski prime principalizes");
        }
        g.orders.assign(r, 1);
        ZMat rel = ZMat::identity(r);
        g.relations = rel;
        return g;
    }

    // exact class orders via complete principality
    for (auto& P : g.factor_base) {
        FractionalIdeal pw = to_ideal(P);
        Integer k = 1;
        while (!principal_generator(pw, effort)) {
            pw = mul(pw, to_ideal(P));
            ++k;
            if (k > 100000)
                throw ClassGroupError("class order search exceeded bound");
        }
        g.orders.push_back(k);
    }

    // full syzygy lattice inside prod Z/orders
    ZMat rel(r, r);
    for (int i = 0; i < r; ++i)
        rel.at(i, i) = g.orders[i];
    Integer cosets = 1;
    for (const auto& k : g.orders)
        cosets *= k;
    if (cosets > 200000)
        throw ClassGroupError("syzygy enumeration too large");
    std::vector<Integer> v(r, 0);
    for (Integer count = 1; count < cosets; ++count) {
        // increment mixed-radix counter
        int i = 0;
        while (true) {
            v[i] += 1;
            if (v[i] < g.orders[i])
                break;
            v[i] = 0;
            ++i;
        }
        if (lattice_contains(hnf(rel), v))
            continue;
        FractionalIdeal prod = whole_ring(K);
        for (int j = 0; j < r; ++j)
            if (v[j] > 0)
                prod = mul(prod, power(to_ideal(g.factor_base[j]), v[j].get_si()));
        if (principal_generator(prod, effort)) {
            ZMat bigger(rel.rows + 1, r);
            for (int a = 0; a < rel.rows; ++a)
                for (int b = 0; b < r; ++b)
                    bigger.at(a, b) = rel.at(a, b);
            for (int b = 0; b < r; ++b)
                bigger.at(rel.rows, b) = v[b];
            rel = hnf_basis(bigger);
        }
    }
    g.relations = hnf_basis(rel);
    g.h = abs(det(g.relations));

    SnfResult s = snf(g.relations);
    for (int i = 0; i < r; ++i)
        if (s.s.at(i, i) > 1)
            g.elementary_divisors.push_back(s.s.at(i, i));
    for (int i = 0; i < r; ++i)
        if (g.orders[i] > 1)
            g.generator_ideals.push_back(g.factor_base[i]);

    // certification: every factor-base class has the computed order
    for (int i = 0; i < r; ++i) {
        if (!principal_generator(power(to_ideal(g.factor_base[i]),
                                       g.orders[i].get_si()),
                                 effort))
            throw ClassGroupError("factor-base class order failed to verify");
    }
    return g;
}

namespace {

std::optional<std::vector<Integer>> find_class_vector(const ClassGroup& G,
                                                      const FractionalIdeal& I,
                                                      int effort)
{
    const int r = int(G.factor_base.size());
    if (r == 0) {
        if (principal_generator(I, effort))
            return std::vector<Integer>{};
        return std::nullopt;
    }
    Integer cosets = 1;
    for (const auto& k : G.orders)
        cosets *= k;
    std::vector<Integer> t(r, 0);
    for (Integer count = 0; count < cosets; ++count) {
        FractionalIdeal prod = I;
        for (int j = 0; j < r; ++j)
            if (t[j] > 0)
                prod = mul(prod, power(to_ideal(G.factor_base[j]), t[j].get_si()));
        if (principal_generator(prod, effort)) {
            // [I] = -sum t_j [P_j]
            std::vector<Integer> c(r);
            for (int j = 0; j < r; ++j)
                c[j] = mod_floor(-t[j], G.orders[j]);
            return c;
        }
        int i = 0;
        while (i < r) {
            t[i] += 1;
            if (t[i] < G.orders[i])
                break;
            t[i] = 0;
            ++i;
        }
        if (i == r)
            break;
    }
    return std::nullopt;
}

} // namespace

PrincipalityResult is_principal(const ClassGroup& G, const FractionalIdeal& I,
                                int effort)
{
    PrincipalityResult out;
    auto gen = principal_generator(I, effort);
    if (gen) {
        out.principal = true;
        out.generator = canonical_unit_rep(*gen);
        out.class_vector.assign(G.factor_base.size(), 0);
        return out;
    }
    auto cv = find_class_vector(G, I, effort);
    if (!cv)
        throw ClassGroupError("class vector search failed");
    out.principal = false;
    out.class_vector = *cv;
    bool zero = true;
    for (const auto& x : out.class_vector)
        if (x != 0)
            zero = false;
    if (zero)
        throw ClassGroupError(
            "generator search exhausted on an ideal of trivial class");
    return out;
}

std::vector<Integer> quotient_divisors(const ClassGroup& G,
                                       const std::vector<PrimeIdeal>& X,
                                       Integer* order_out)
{
    const int r = int(G.factor_base.size());
    std::vector<std::vector<Integer>> extra;
    for (const auto& P : X) {
        // class vector of P over the base
        auto cv = find_class_vector(G, to_ideal(P), 1);
        if (!cv)
            throw ClassGroupError("class vector search failed");
        extra.push_back(*cv);
    }
    ZMat stacked(G.relations.rows + int(extra.size()), r);
    for (int i = 0; i < G.relations.rows; ++i)
        for (int j = 0; j < r; ++j)
            stacked.at(i, j) = G.relations.at(i, j);
    for (size_t i = 0; i < extra.size(); ++i)
        for (int j = 0; j < r; ++j)
            stacked.at(G.relations.rows + int(i), j) = extra[i][j];
    if (r == 0) {
        if (order_out)
            *order_out = 1;
        return {};
    }
    SnfResult s = snf(stacked);
    std::vector<Integer> divs;
    Integer order = 1;
    for (int i = 0; i < r; ++i) {
        Integer d = i < s.rank ? s.s.at(i, i) : Integer(0);
        if (d == 0)
            throw std::logic_error("quotient of a finite group must be finite");
        order *= d;
        if (d > 1)
            divs.push_back(d);
    }
    if (order_out)
        *order_out = order;
    return divs;
}

FieldElement ideal_power_generator(const ClassGroup& G, const FractionalIdeal& J,
                                   long k, int effort)
{
    FractionalIdeal pw = power(J, k);
    auto gen = principal_generator(pw, effort);
    if (!gen) {
        auto cv = find_class_vector(G, pw, effort);
        std::string msg = "ideal power is not principal; class vector (";
        if (cv)
            for (size_t i = 0; i < cv->size(); ++i)
                msg += (i ? "," : "") + (*cv)[i].get_str();
        msg += ")";
        throw ClassGroupError(msg);
    }
    return canonical_unit_rep(*gen);
}

FieldElement power_generator(const ClassGroup& G, const PrimeIdeal& P, long k,
                             int effort)
{
    return ideal_power_generator(G, to_ideal(P), k, effort);
}

std::vector<FieldElement> unit_sweep(const FieldPtr& K)
{
    std::vector<FieldElement> units{K->one(),
                                    mul(K->one(), Rational(-1))};
    if (K->degree() != 2)
        return units;
    Integer d = K->discriminant();
    if (d == -4) {
        for (const auto& xi : quadratic_subfield_generators(K)) {
            units.push_back(xi); // xi^2 = -1
            units.push_back(neg(xi));
        }
    } else if (d == -3) {
        // sixth roots of unity: zeta = (1 + sqrt(-3))/2 in the right basis
        for (const auto& xi : quadratic_subfield_generators(K)) {
            FieldElement z = mul(add(K->one(), xi), make_rational(1, 2));
            if (is_integral(z) && norm(z) == 1) {
                FieldElement z2 = mul(z, z);
                units.push_back(z);
                units.push_back(neg(z));
                units.push_back(z2);
                units.push_back(neg(z2));
            }
        }
    } else if (d > 0) {
        // bounded Pell scan: x^2 - d y^2 = +-4
        for (Integer y = 1; y <= 2000; ++y) {
            Integer dy2 = d * y * y;
            for (int s : {-1, 1}) {
                Integer x2 = dy2 + 4 * s;
                if (x2 > 0 && is_square(x2)) {
                    Integer x = isqrt(x2);
                    // eps = (x + y sqrt d)/2
                    for (const auto& xi : quadratic_subfield_generators(K)) {
                        Rational m = mul(xi, xi).rational_value();
                        // xi = sqrt(m), d = m * t^2
                        Rational t2 = Rational(d) / m;
                        auto t = sqrt_of_rational(t2);
                        if (!t)
                            continue;
                        FieldElement sqrtd = mul(xi, *t);
                        FieldElement eps = mul(
                            add(K->from_rational(Rational(x)), mul(sqrtd, Rational(y))),
                            make_rational(1, 2));
                        if (!is_integral(eps) || abs(norm(eps)) != 1)
                            continue;
                        FieldElement cur = eps;
                        for (int k = 0; k < 2; ++k) {
                            units.push_back(cur);
                            units.push_back(neg(cur));
                            units.push_back(inverse(cur));
                            units.push_back(neg(inverse(cur)));
                            cur = mul(cur, eps);
                        }
                        return units;
                    }
                }
            }
        }
    }
    return units;
}

FieldElement canonical_unit_rep(const FieldElement& g)
{
    std::vector<FieldElement> cands;
    for (const auto& u : unit_sweep(g.field))
        cands.push_back(mul(g, u));
    auto coords_less = [](const FieldElement& a, const FieldElement& b) {
        return a.coords < b.coords;
    };
    std::vector<FieldElement> nonneg;
    for (const auto& c : cands) {
        bool ok = true;
        for (const auto& x : c.coords)
            if (x < 0)
                ok = false;
        if (ok)
            nonneg.push_back(c);
    }
    const auto& pool = nonneg.empty() ? cands : nonneg;
    FieldElement best = pool[0];
    for (const auto& c : pool)
        if (coords_less(c, best))
            best = c;
    return best;
}

bool equal_up_to_unit(const FieldElement& a, const FieldElement& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    FieldElement q = div(a, b);
    return is_integral(q) && abs(norm(q)) == 1 && is_integral(inverse(q));
}

} // namespace algden
