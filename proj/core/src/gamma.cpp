#include "algden/gamma.hpp"

#include "algden/primes.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace algden {

namespace {

bool prime_in(const std::vector<PrimeIdeal>& set, const PrimeIdeal& p)
{
    for (const auto& q : set)
        if (q == p)
            return true;
    return false;
}

} // namespace

ElementContext make_context(const FieldElement& gamma)
{
    MinimalPolynomial mp = MinimalPolynomial::from_rational(min_poly_q(gamma));
    Invariants inv = invariants(mp);
    return {gamma.field, gamma, std::move(mp), std::move(inv)};
}

ElementContext make_context(const MinimalPolynomial& f, int degree_cap)
{
    // the ambient field is generated by lead*gamma, an algebraic integer
    IntPoly monic = monicize(f.poly());
    FieldPtr M = NumberField::create(monic, degree_cap);
    FieldElement gamma = mul(M->gen(), make_rational(1, f.lead()));
    // the stated minimal polynomial must vanish at gamma
    FieldElement check = eval_at(to_rat(f.poly()), gamma);
    if (!check.is_zero())
        throw std::logic_error("context construction lost the root");
    return {M, std::move(gamma), f, invariants(f)};
}

XYReport compute_xy(const ElementContext& ctx, const Subfield& K)
{
    XYReport rep;
    rep.K = K;
    rep.rel_coeffs = min_poly_over_subfield(K, ctx.value);
    const auto& b = rep.rel_coeffs;
    const int n = int(b.size()) - 1;

    if (b[0].is_zero()) {
        // gamma = 0; integral, no denominator primes
        return rep;
    }

    // only primes dividing a coefficient denominator can appear
    Integer t = 1;
    for (const auto& bi : b)
        if (!bi.is_zero())
            t = lcm(t, integral_denominator(bi));
    if (t == 1)
        return rep;

    for (auto& [p, e] : factorize(t).factors) {
        for (auto& P : factor_prime(K.field, p)) {
            int v0 = valuation(P, b[0]);
            bool in_x = true;
            bool in_y = v0 < 0;
            for (int i = 1; i <= n; ++i) {
                if (b[i].is_zero())
                    continue;
                int vi = valuation(P, b[i]);
                if (vi <= v0)
                    in_x = false;
                if (i < n && vi < 0)
                    in_y = true;
            }
            if (in_x && !in_y)
                throw std::logic_error("X must be contained in Y");
            if (in_y)
                rep.y_set.push_back(P);
            if (in_x)
                rep.x_set.push_back(P);
        }
    }
    std::sort(rep.x_set.begin(), rep.x_set.end());
    std::sort(rep.y_set.begin(), rep.y_set.end());
    return rep;
}

Subfield adjoin(const ElementContext& ctx, const Subfield& K)
{
    if (subfield_contains(K, ctx.value))
        return K;
    FieldElement gen = compositum_generator(K.generator, ctx.value);
    if (degree_over_q(gen) == ctx.ambient->degree()) {
        // the adjoined field fills the ambient field; keep its presentation
        Subfield whole = whole_subfield(ctx.ambient);
        int rel = int(min_poly_over_subfield(K, ctx.value).size()) - 1;
        if (whole.degree() != K.degree() * rel)
            throw std::logic_error("adjoined field has the wrong degree");
        return whole;
    }
    Subfield adj = subfield_from_generator(gen);
    // certified: [K(gamma) : Q] = [K : Q] * deg f_{K,gamma}
    int rel = int(min_poly_over_subfield(K, ctx.value).size()) - 1;
    if (adj.degree() != K.degree() * rel)
        throw std::logic_error("adjoined field has the wrong degree");
    return adj;
}

std::vector<PrimeIdeal> denominator_support(const FieldElement& alpha)
{
    std::vector<PrimeIdeal> out;
    if (alpha.is_zero())
        return out;
    Integer t = integral_denominator(alpha);
    if (t == 1)
        return out;
    for (auto& [p, e] : factorize(t).factors)
        for (auto& P : factor_prime(alpha.field, p))
            if (valuation(P, alpha) < 0)
                out.push_back(P);
    std::sort(out.begin(), out.end());
    return out;
}

bool membership(const XYReport& xy, const FieldElement& alpha)
{
    for (const auto& P : denominator_support(alpha))
        if (!prime_in(xy.x_set, P))
            return false;
    return true;
}

bool membership(const ElementContext& ctx, const Subfield& K,
                const FieldElement& alpha)
{
    return membership(compute_xy(ctx, K), alpha);
}

OracleResult membership_oracle(const ElementContext& ctx, const Subfield& K,
                               const FieldElement& alpha, int degree_cap)
{
    OracleResult out;
    out.cap = degree_cap;
    const FieldPtr& M = ctx.ambient;
    const int N = M->degree();
    const int d = K.degree();

    // K's integral basis as ambient elements
    std::vector<FieldElement> kbasis;
    for (int l = 0; l < d; ++l) {
        std::vector<Integer> e(d);
        e[l] = 1;
        kbasis.push_back(to_ambient(K, K.field->from_integral_coords(e)));
    }
    FieldElement target = to_ambient(K, alpha);

    int rel = int(min_poly_over_subfield(K, ctx.value).size()) - 1;
    int m = 2 * rel;
    if (m < 1)
        m = 1;
    std::vector<FieldElement> gpows{M->one()};
    for (;;) {
        if (m > degree_cap)
            m = degree_cap;
        while (int(gpows.size()) <= m)
            gpows.push_back(mul(gpows.back(), ctx.value));
        // integer unknowns y_{k,l}: sum y_{k,l} * kbasis[l] * gamma^k = alpha
        QMat a((m + 1) * d, N);
        for (int k = 0; k <= m; ++k)
            for (int l = 0; l < d; ++l) {
                FieldElement prod = mul(kbasis[l], gpows[k]);
                for (int j = 0; j < N; ++j)
                    a.at(k * d + l, j) = prod.coords[j];
            }
        // clear denominators jointly with the right-hand side
        Integer den = 1;
        for (const auto& q : a.a)
            den = lcm(den, denom(q));
        for (const auto& q : target.coords)
            den = lcm(den, denom(q));
        ZMat az(a.rows, a.cols);
        for (size_t i = 0; i < a.a.size(); ++i)
            az.a[i] = numer(a.a[i]) * (den / denom(a.a[i]));
        std::vector<Integer> rhs(N);
        for (int j = 0; j < N; ++j)
            rhs[j] = numer(target.coords[j]) * (den / denom(target.coords[j]));

        auto y = solve_integer(az, rhs);
        if (y) {
            OracleWitness w;
            FieldElement acc = M->zero();
            for (int k = 0; k <= m; ++k) {
                std::vector<Rational> c(d);
                for (int l = 0; l < d; ++l)
                    c[l] = Rational((*y)[k * d + l]);
                FieldElement ck = K.field->from_integral_coords(c);
                w.coeffs.push_back(ck);
                acc = add(acc, mul(to_ambient(K, ck), gpows[k]));
            }
            if (!(acc == target))
                throw std::logic_error("oracle witness failed to verify");
            out.witness = std::move(w);
            return out;
        }
        if (m == degree_cap)
            return out;
        m *= 2;
    }
}

RingDescription ring_description(const ElementContext& ctx, const Subfield& K,
                                 int effort)
{
    RingDescription out;
    XYReport xy = compute_xy(ctx, K);
    out.x_set = xy.x_set;
    out.is_whole_ring = out.x_set.empty();
    ClassGroup g = class_group(K.field, effort);
    out.class_divisors = quotient_divisors(g, out.x_set, &out.class_order);
    out.is_pid = out.class_order == 1;
    return out;
}

FractionalIdeal kernel_ideal(const ElementContext& ctx, const Subfield& K)
{
    XYReport xy = compute_xy(ctx, K);
    FractionalIdeal I = whole_ring(K.field);
    // exponents -min_i v_P(b_i), supported on Y
    for (const auto& P : xy.y_set) {
        int mn = 0; // b_n = 1 contributes valuation 0
        for (const auto& bi : xy.rel_coeffs) {
            if (bi.is_zero())
                continue;
            mn = std::min(mn, valuation(P, bi));
        }
        if (mn < 0)
            I = mul(I, power(to_ideal(P), -mn));
    }
    return I;
}

DenominatorSection denominator_section(const ElementContext& ctx,
                                       const Subfield& K)
{
    DenominatorSection out;
    Subfield adj = adjoin(ctx, K);
    auto gamma_in_adj = from_ambient(adj, ctx.value);
    assert(gamma_in_adj);
    FractionalIdeal B = denominator_ideal(*gamma_in_adj);
    if (same_subfield(adj, K)) {
        out.section = B;
    } else {
        out.section = ideal_below(K, adj, B);
    }
    // radical check against the product over Y
    XYReport xy = compute_xy(ctx, K);
    FractionalIdeal rad = radical(out.section);
    FractionalIdeal prod = whole_ring(K.field);
    for (const auto& P : xy.y_set)
        prod = mul(prod, to_ideal(P));
    out.radical_matches_y = rad == prod;
    for (auto& [P, v] : factor_ideal(rad))
        out.radical_primes.push_back(P);
    return out;
}

bool same_denominator(const FieldElement& gamma1, const FieldElement& gamma2,
                      bool verify_y)
{
    if (!gamma1.field->same_field(*gamma2.field))
        throw std::invalid_argument("elements must share an ambient field");
    const FieldPtr& M = gamma1.field;
    // the compositum Q(gamma1, gamma2) inside M
    Subfield C = [&] {
        if (gamma1.is_zero() && gamma2.is_zero())
            return rationals_subfield(M);
        FieldElement g = compositum_generator(gamma1, gamma2);
        if (g.is_zero())
            return rationals_subfield(M);
        if (degree_over_q(g) == M->degree())
            return whole_subfield(M);
        return subfield_from_generator(g);
    }();

    ElementContext c1 = make_context(gamma1);
    ElementContext c2 = make_context(gamma2);
    XYReport x1 = compute_xy(c1, C);
    XYReport x2 = compute_xy(c2, C);
    bool x_equal = x1.x_set == x2.x_set;
    if (verify_y) {
        bool y_equal = x1.y_set == x2.y_set;
        if (x_equal != y_equal)
            throw std::logic_error(
                "X and Y equivalence criteria disagree on the compositum");
    }
    return x_equal;
}

LocalRing local_classify(const ElementContext& ctx, const Subfield& K,
                         const Subfield& K_adj, const PrimeIdeal& P,
                         const PrimeIdeal& Q)
{
    if (!(prime_below(K, K_adj, Q) == P))
        throw std::invalid_argument("prime does not lie above the given prime");
    auto gamma_in_adj = from_ambient(K_adj, ctx.value);
    assert(gamma_in_adj);
    if (gamma_in_adj->is_zero())
        return LocalRing::integers;
    return valuation(Q, *gamma_in_adj) < 0 ? LocalRing::whole_field
                                           : LocalRing::integers;
}

CrossFieldReport cross_field_check(const ElementContext& ctx, const Subfield& K,
                                   const Subfield& L,
                                   const std::vector<FieldElement>& samples_in_K)
{
    if (!subfield_leq(K, L))
        throw std::invalid_argument("fields are not nested");
    CrossFieldReport rep;
    XYReport xk = compute_xy(ctx, K);
    XYReport xl = compute_xy(ctx, L);

    // candidate primes of K: everything seen on either level
    std::vector<PrimeIdeal> cand = xk.x_set;
    for (const auto& P : xk.y_set)
        if (!prime_in(cand, P))
            cand.push_back(P);
    for (const auto& q : xl.y_set) {
        PrimeIdeal below = prime_below(K, L, q);
        if (!prime_in(cand, below))
            cand.push_back(below);
    }

    rep.x_lower_equals = true;
    rep.x_lift_contained = true;
    rep.y_upper_equals = true;
    rep.y_lift_contains = true;
    for (const auto& P : cand) {
        auto above = primes_above(K, L, P);
        bool all_x = true, some_y = false;
        for (const auto& q : above) {
            if (!prime_in(xl.x_set, q))
                all_x = false;
            if (prime_in(xl.y_set, q))
                some_y = true;
        }
        bool in_xk = prime_in(xk.x_set, P);
        bool in_yk = prime_in(xk.y_set, P);
        if (in_xk != all_x)
            rep.x_lower_equals = false;
        if (in_xk && !all_x)
            rep.x_lift_contained = false;
        if (in_yk != some_y)
            rep.y_upper_equals = false;
    }
    // Y(L) inside lifts of Y(K)
    for (const auto& q : xl.y_set)
        if (!prime_in(xk.y_set, prime_below(K, L, q)))
            rep.y_lift_contains = false;

    // exactness when L /\ K(gamma) = K
    Subfield adj = adjoin(ctx, K);
    Subfield inter = intersect_subfields(L, adj);
    rep.exact_case = same_subfield(inter, K);
    if (rep.exact_case) {
        // X(L) and Y(L) must be exactly the lifts
        std::vector<PrimeIdeal> candl = xl.x_set;
        for (const auto& q : xl.y_set)
            if (!prime_in(candl, q))
                candl.push_back(q);
        for (const auto& P : cand)
            for (const auto& q : primes_above(K, L, P))
                if (!prime_in(candl, q))
                    candl.push_back(q);
        for (const auto& q : candl) {
            PrimeIdeal below = prime_below(K, L, q);
            if (prime_in(xl.x_set, q) != prime_in(xk.x_set, below))
                rep.x_exact = false;
            if (prime_in(xl.y_set, q) != prime_in(xk.y_set, below))
                rep.y_exact = false;
        }
    }

    // membership agreement for elements of K
    rep.membership_agrees = true;
    for (const auto& alpha : samples_in_K) {
        bool in_k = membership(xk, alpha);
        // alpha as an element of L
        FieldElement amb = to_ambient(K, alpha);
        auto in_l_elt = from_ambient(L, amb);
        assert(in_l_elt);
        bool in_l = membership(xl, *in_l_elt);
        if (in_k != in_l)
            rep.membership_agrees = false;
    }
    return rep;
}

} // namespace algden
