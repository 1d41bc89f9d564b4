#include "algden/verify.hpp"

#include "algden/primes.hpp"

#include <algorithm>
#include <cassert>

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

MinimalPolynomial random_min_poly(Rng& rng, int degree, long height)
{
    for (;;) {
        std::vector<Integer> c(degree + 1);
        for (int i = 0; i < degree; ++i)
            c[i] = rng.range(-height, height);
        c[degree] = rng.range(1, height);
        IntPoly f(std::move(c));
        if (f.degree() != degree)
            continue;
        auto r = is_irreducible_over_q(f);
        if (!r.irreducible)
            continue;
        return MinimalPolynomial::trusted(primitive_part(f), "random corpus");
    }
}

MinimalPolynomial random_min_poly_up_to(Rng& rng, int max_degree, long height)
{
    return random_min_poly(rng, int(rng.range(1, max_degree)), height);
}

FieldPtr random_quadratic_field(Rng& rng)
{
    // small discriminants, class numbers 1 and 2
    static const long pool[] = {-1, -2, -3, -5, -6, -7, -10, 2, 3, 5, 6, 7, 10};
    long m = pool[rng.next() % (sizeof(pool) / sizeof(pool[0]))];
    return NumberField::create(
        IntPoly({Integer(-m), Integer(0), Integer(1)}));
}

FieldElement random_element(Rng& rng, const FieldPtr& K, long height,
                            long max_denom)
{
    for (;;) {
        std::vector<Rational> c(K->degree());
        Integer den(rng.range(1, max_denom));
        bool nonzero = false;
        for (int i = 0; i < K->degree(); ++i) {
            long v = rng.range(-height, height);
            if (v != 0)
                nonzero = true;
            c[i] = make_rational(v, den);
        }
        if (nonzero)
            return K->element(std::move(c));
    }
}

SuiteResult verify_dformula(std::uint64_t seed, int count, int max_degree,
                            long height)
{
    SuiteResult out{"dformula", {}};
    Rng rng(seed);
    bool formula_ok = true, chain_ok = true, crit_ok = true;
    std::string detail;
    for (int i = 0; i < count; ++i) {
        MinimalPolynomial f = random_min_poly_up_to(rng, max_degree, height);
        Invariants inv = invariants(f); // divisibility chain asserted inside
        Integer oracle = smallest_denominator_bruteforce(f);
        if (inv.denom != oracle) {
            formula_ok = false;
            detail = poly_text(f.poly());
        }
        unsigned long n = static_cast<unsigned long>(inv.degree);
        if (inv.lead % inv.denom != 0 || pow(inv.denom, n) % inv.lead != 0
            || inv.lead % inv.tail_gcd != 0
            || (pow(inv.denom, n - 1) * inv.tail_gcd) % inv.lead != 0)
            chain_ok = false;
        if ((inv.denom == inv.lead) != denom_equals_lead_criterion(f))
            crit_ok = false;
    }
    out.add("denominator-formula-vs-oracle", formula_ok, detail);
    out.add("divisibility-chain", chain_ok);
    out.add("lead-equals-denominator-criterion", crit_ok);
    return out;
}

SuiteResult verify_tuples(long bf_height, long max_c)
{
    SuiteResult out{"tuples", {}};
    auto realized = bruteforce_realized_tuples(2, bf_height);
    bool sound = true;
    std::string sdetail;
    for (const TupleQuery& q : realized)
        if (!is_realizable(q).realizable) {
            sound = false;
            sdetail = q.lead.get_str() + "," + q.denom.get_str() + ","
                      + q.tail_gcd.get_str();
        }
    out.add("sweep-soundness", sound, sdetail);

    bool witnesses = true, in_sweep = true;
    std::string wdetail, idetail;
    for (Integer c = 1; c <= max_c; ++c)
        for (Integer d = 1; d <= c; ++d)
            for (Integer e = 1; e <= c; ++e) {
                TupleQuery q{c, d, e, 2};
                if (!is_realizable(q).realizable)
                    continue;
                MinimalPolynomial w = construct_witness(q);
                Invariants inv = invariants(w);
                if (inv.lead != c || inv.denom != d || inv.tail_gcd != e) {
                    witnesses = false;
                    wdetail = poly_text(w.poly());
                }
                if (c <= 12 && !realized.count(q)) {
                    in_sweep = false;
                    idetail = c.get_str() + "," + d.get_str() + "," + e.get_str();
                }
            }
    out.add("witness-invariants-exact", witnesses, wdetail);
    if (bf_height >= 40)
        out.add("realizable-small-tuples-in-sweep", in_sweep, idetail);
    return out;
}

namespace {

// the three detection routes for one (gamma, K) pair; returns false with a
// detail string on any disagreement
bool equivalences_on(const ElementContext& ctx, const Subfield& K,
                     std::string& detail)
{
    XYReport xy = compute_xy(ctx, K);
    Subfield adj = adjoin(ctx, K);
    auto gamma_adj = from_ambient(adj, ctx.value);
    assert(gamma_adj);

    // candidate primes: denominators of the relative coefficients, plus the
    // sets themselves
    std::vector<PrimeIdeal> cand = xy.y_set;
    Integer t = 1;
    for (const auto& b : xy.rel_coeffs)
        if (!b.is_zero())
            t = lcm(t, integral_denominator(b));
    for (auto& [p, e] : factorize(t).factors)
        for (auto& P : factor_prime(K.field, p))
            if (!prime_in(cand, P))
                cand.push_back(P);

    for (const auto& P : cand) {
        bool x_coeff = prime_in(xy.x_set, P);
        bool y_coeff = prime_in(xy.y_set, P);

        // primes above P and the valuation of gamma
        bool all_neg = true, some_neg = false;
        std::vector<std::pair<Rational, int>> expected; // (valuation, e*f)
        for (const auto& q : primes_above(K, adj, P)) {
            int v = gamma_adj->is_zero() ? 1 : valuation(q, *gamma_adj);
            if (gamma_adj->is_zero())
                v = 0;
            if (v >= 0)
                all_neg = false;
            if (v < 0)
                some_neg = true;
            int rel_e = q.ram / P.ram;
            int rel_f = q.res_deg / P.res_deg;
            assert(q.ram % P.ram == 0 && q.res_deg % P.res_deg == 0);
            expected.emplace_back(make_rational(v, rel_e), rel_e * rel_f);
        }
        if (x_coeff != all_neg) {
            detail = "x-above at " + prime_text(P);
            return false;
        }
        if (y_coeff != some_neg) {
            detail = "y-above at " + prime_text(P);
            return false;
        }

        // newton polygon of the relative polynomial at P
        auto np = newton_polygon(xy.rel_coeffs, P);
        auto rv = root_valuations(np);
        bool np_all_neg = true, np_some_neg = false;
        for (auto& [val, len] : rv) {
            if (val >= 0)
                np_all_neg = false;
            else
                np_some_neg = true;
        }
        if (x_coeff != np_all_neg) {
            detail = "x-newton at " + prime_text(P);
            return false;
        }
        if (y_coeff != np_some_neg) {
            detail = "y-newton at " + prime_text(P);
            return false;
        }

        // multiset identity: root valuations == {v_q(gamma)/e with mult e*f}
        std::sort(expected.begin(), expected.end());
        std::vector<std::pair<Rational, int>> merged;
        for (auto& pr : expected) {
            if (!merged.empty() && merged.back().first == pr.first)
                merged.back().second += pr.second;
            else
                merged.push_back(pr);
        }
        if (merged != rv) {
            detail = "root-valuation-multiset at " + prime_text(P);
            return false;
        }
    }
    return true;
}

} // namespace

SuiteResult verify_equivalences(std::uint64_t seed, int count)
{
    SuiteResult out{"equivalences", {}};
    Rng rng(seed);
    bool ok = true, base_ok = true;
    std::string detail, base_detail;
    for (int i = 0; i < count && ok; ++i) {
        FieldPtr M = random_quadratic_field(rng);
        FieldElement gamma = random_element(rng, M, 9, 6);
        ElementContext ctx = make_context(gamma);
        // K = Q and K = M both exercised
        Subfield K = (i % 2 == 0) ? rationals_subfield(M) : whole_subfield(M);
        if (!equivalences_on(ctx, K, detail)) {
            ok = false;
            detail += " gamma=" + element_text(gamma);
        }
        // over Q the sets are exactly the primes of the invariants:
        // X = {p | tail_gcd}, Y = {p | lead} = {p | denom}
        XYReport xq = compute_xy(ctx, rationals_subfield(M));
        std::vector<Integer> xs, ys;
        for (const auto& P : xq.x_set)
            xs.push_back(P.p);
        for (const auto& P : xq.y_set)
            ys.push_back(P.p);
        std::vector<Integer> es, cs, ds;
        for (auto& [p, e] : factorize(ctx.inv.tail_gcd).factors)
            es.push_back(p);
        for (auto& [p, e] : factorize(ctx.inv.lead).factors)
            cs.push_back(p);
        for (auto& [p, e] : factorize(ctx.inv.denom).factors)
            ds.push_back(p);
        if (xs != es || ys != cs || ys != ds) {
            base_ok = false;
            base_detail = "gamma=" + element_text(gamma);
        }
    }
    out.add("three-route-agreement", ok, detail);
    out.add("rational-base-sets", base_ok, base_detail);
    return out;
}

namespace {

// battery of subfields for one context: Q, the quadratic subfields of
// Q(gamma), and Q(gamma) itself
std::vector<Subfield> standard_battery(const ElementContext& ctx)
{
    std::vector<Subfield> fields;
    Subfield qg = adjoin(ctx, rationals_subfield(ctx.ambient));
    if (qg.degree() <= 4) {
        for (auto& f : subfields(qg).fields)
            fields.push_back(f);
    } else {
        fields.push_back(rationals_subfield(ctx.ambient));
        fields.push_back(qg);
    }
    return fields;
}

bool radical_identities_on(const ElementContext& ctx, std::string& detail)
{
    GenSetResult gs;
    bool have_gs = false;
    Subfield qg = adjoin(ctx, rationals_subfield(ctx.ambient));
    if (qg.degree() <= 4) {
        gs = generating_set(ctx);
        have_gs = true;
    }
    for (const auto& K : standard_battery(ctx)) {
        DenominatorSection ds = denominator_section(ctx, K);
        if (!ds.radical_matches_y) {
            detail = "section-radical at " + field_text(K.field);
            return false;
        }
        if (!have_gs)
            continue;
        XYReport xy = compute_xy(ctx, K);
        // product of the set elements lying in K
        FieldElement prod = K.field->one();
        bool any = false;
        for (const auto& alpha : gs.set) {
            auto el = from_ambient(K, alpha);
            if (el) {
                prod = mul(prod, *el);
                any = true;
            }
        }
        FractionalIdeal expected = whole_ring(K.field);
        for (const auto& P : xy.x_set)
            expected = mul(expected, to_ideal(P));
        FractionalIdeal lhs =
            any ? radical(principal_ideal(prod)) : whole_ring(K.field);
        if (!(lhs == expected)) {
            detail = "set-radical at " + field_text(K.field);
            return false;
        }
    }
    return true;
}

} // namespace

SuiteResult verify_radicals(std::uint64_t seed, int count)
{
    SuiteResult out{"radicals", {}};
    // pinned examples
    {
        FieldPtr Qi = parse_field("Q[x]/(x^2+1)");
        std::string detail;
        bool ok = true;
        for (const char* g : {"1/(2+x)", "1/(60+15*x)", "x", "1/2"}) {
            ElementContext ctx = make_context(parse_element(Qi, g));
            if (!radical_identities_on(ctx, detail)) {
                ok = false;
                detail += std::string(" gamma=") + g;
                break;
            }
        }
        out.add("pinned-batteries", ok, detail);
    }
    Rng rng(seed);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < count && ok; ++i) {
        FieldPtr M = random_quadratic_field(rng);
        FieldElement gamma = random_element(rng, M, 7, 5);
        ElementContext ctx = make_context(gamma);
        if (!radical_identities_on(ctx, detail)) {
            ok = false;
            detail += " gamma=" + element_text(gamma) + " over "
                      + field_text(M);
        }
    }
    out.add("random-batteries", ok, detail);
    return out;
}

SuiteResult verify_cross_field(std::uint64_t seed, int count)
{
    SuiteResult out{"cross-field", {}};

    // pinned counterexample configuration with its strict containments
    {
        FieldPtr Qi = parse_field("Q[x]/(x^2+1)");
        ElementContext ctx = make_context(parse_element(Qi, "1/(2+x)"));
        Subfield q = rationals_subfield(Qi);
        Subfield l = whole_subfield(Qi);
        std::vector<FieldElement> samples{
            q.field->from_rational(Rational(7)),
            q.field->from_rational(make_rational(1, 5)),
        };
        auto rep = cross_field_check(ctx, q, l, samples);
        XYReport xq = compute_xy(ctx, q);
        XYReport xl = compute_xy(ctx, l);
        bool strict = xq.x_set.empty() && xl.x_set.size() == 1
                      && xq.y_set.size() == 1 && xl.y_set.size() == 1
                      && primes_above(q, l, xq.y_set[0]).size() == 2;
        out.add("pinned-conjugate-configuration", rep.all_ok() && !rep.exact_case
                                                      && strict);
    }

    Rng rng(seed);
    bool ok = true;
    std::string detail;
    int exact_seen = 0;
    for (int i = 0; i < count && ok; ++i) {
        if (i % 3 == 2) {
            // exact configuration: adjoin a disjoint square root
            FieldPtr M1 = random_quadratic_field(rng);
            FieldElement gamma1 = random_element(rng, M1, 6, 4);
            long m = 0;
            for (long cand : {2, 3, 5, 7, 11, 13}) {
                if (!has_sqrt(M1, cand)) {
                    m = cand;
                    break;
                }
            }
            auto ext = extend_with_sqrt(M1, m);
            std::vector<Rational> gcoords(ext.field->degree());
            // map gamma into the extension
            std::vector<Rational> row = mul_vec(gamma1.coords, ext.embed_old);
            FieldElement gamma{ext.field, row};
            ElementContext ctx = make_context(gamma);
            Subfield q = rationals_subfield(ext.field);
            Subfield l = subfield_from_generator(ext.sqrt_m);
            std::vector<FieldElement> samples{
                q.field->from_rational(make_rational(rng.range(1, 9),
                                                     rng.range(1, 9))),
                q.field->from_rational(Rational(rng.range(1, 20))),
            };
            auto rep = cross_field_check(ctx, q, l, samples);
            if (!rep.all_ok()) {
                ok = false;
                detail = "exact case gamma=" + element_text(gamma1);
            }
            if (rep.exact_case)
                ++exact_seen;
        } else {
            FieldPtr M = random_quadratic_field(rng);
            FieldElement gamma = random_element(rng, M, 8, 6);
            ElementContext ctx = make_context(gamma);
            Subfield q = rationals_subfield(M);
            Subfield l = whole_subfield(M);
            std::vector<FieldElement> samples{
                q.field->from_rational(make_rational(rng.range(-9, 9),
                                                     rng.range(1, 9))),
                q.field->from_rational(make_rational(1, rng.range(2, 12))),
            };
            auto rep = cross_field_check(ctx, q, l, samples);
            if (!rep.all_ok()) {
                ok = false;
                detail = "gamma=" + element_text(gamma) + " over "
                         + field_text(M);
            }
        }
    }
    out.add("containments-and-exactness", ok, detail);
    out.add("exact-case-exercised", exact_seen > 0);
    return out;
}

SuiteResult verify_same_denominator(std::uint64_t seed, int count)
{
    SuiteResult out{"same-denominator", {}};
    {
        FieldPtr Qi = parse_field("Q[x]/(x^2+1)");
        FieldElement g1 = parse_element(Qi, "1/(2+x)");
        FieldElement g2 = parse_element(Qi, "1/(2-x)");
        FieldElement g3 = parse_element(Qi, "1/(3+4*x)");
        out.add("pinned-conjugates-differ", !same_denominator(g1, g2));
        out.add("pinned-square-matches", same_denominator(g1, g3));
    }
    Rng rng(seed);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < count && ok; ++i) {
        FieldPtr M = random_quadratic_field(rng);
        FieldElement g1 = random_element(rng, M, 6, 5);
        FieldElement g2 = random_element(rng, M, 6, 5);
        try {
            // the call itself cross-checks the X and Y criteria and throws
            // on disagreement
            same_denominator(g1, g2, true);
        } catch (const std::exception& e) {
            ok = false;
            detail = element_text(g1) + " vs " + element_text(g2) + ": "
                     + e.what();
        }
    }
    out.add("x-y-criteria-agree", ok, detail);
    return out;
}

SuiteResult verify_membership(std::uint64_t seed, int count, int cap)
{
    SuiteResult out{"membership", {}};
    {
        FieldPtr Qi = parse_field("Q[x]/(x^2+1)");
        ElementContext ctx = make_context(parse_element(Qi, "1/(2+x)"));
        Subfield q = rationals_subfield(Qi);
        Subfield l = whole_subfield(Qi);
        FieldElement fifth = q.field->from_rational(make_rational(1, 5));
        bool not_member_q = !membership(ctx, q, fifth);
        auto oq = membership_oracle(ctx, q, fifth, 20);
        auto fl = from_ambient(l, Qi->from_rational(make_rational(1, 5)));
        bool not_member_l = !membership(ctx, l, *fl);
        auto ol = membership_oracle(ctx, l, *fl, 16);
        out.add("pinned-one-fifth-rational", not_member_q && !oq.witness);
        out.add("pinned-one-fifth-gaussian", not_member_l && !ol.witness);
    }
    Rng rng(seed);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < count && ok; ++i) {
        FieldPtr M = random_quadratic_field(rng);
        FieldElement gamma = random_element(rng, M, 6, 4);
        ElementContext ctx = make_context(gamma);
        Subfield K = (i % 2 == 0) ? rationals_subfield(M) : whole_subfield(M);
        FieldElement alpha = random_element(rng, K.field, 5, 6);
        bool member = membership(ctx, K, alpha);
        auto oracle = membership_oracle(ctx, K, alpha, cap);
        if (member != oracle.witness.has_value()) {
            ok = false;
            detail = "alpha=" + element_text(alpha) + " gamma="
                     + element_text(gamma) + " over " + field_text(M)
                     + (member ? " member-without-witness"
                               : " witness-without-membership");
        }
    }
    out.add("oracle-agreement", ok, detail);
    return out;
}

SuiteResult verify_genset(std::uint64_t seed, int count)
{
    SuiteResult out{"genset", {}};
    {
        FieldPtr Qi = parse_field("Q[x]/(x^2+1)");
        ElementContext ctx = make_context(parse_element(Qi, "1/(60+15*x)"));
        GenSetResult gs = generating_set(ctx);
        bool pinned = gs.set.size() == 2
                      && gs.set[0] == Qi->from_rational(Rational(15))
                      && equal_up_to_unit(gs.set[1],
                                          parse_element(Qi, "4+x"));
        out.add("pinned-worked-example", pinned);
    }
    Rng rng(seed);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < count && ok; ++i) {
        FieldPtr M = random_quadratic_field(rng);
        FieldElement gamma = random_element(rng, M, 6, 5);
        ElementContext ctx = make_context(gamma);
        GenSetResult gs = generating_set(ctx);
        if (gs.set.size() != gs.fields.size()) {
            ok = false;
            detail = "size mismatch";
            break;
        }
        for (const auto& f : gs.fields)
            if (min_poly_q(f.generator).degree() != f.field.degree()) {
                ok = false;
                detail = "generator field mismatch";
            }
        auto battery = standard_battery(ctx);
        if (!verify_generating_set(ctx, gs.set, battery).ok()) {
            ok = false;
            detail = "battery failed for gamma=" + element_text(gamma)
                     + " over " + field_text(M);
        }
        auto mr = minimality_check(ctx, gs.set);
        if (!mr.size_ok || !mr.equality_case || !mr.compositum_matches) {
            ok = false;
            detail = "minimality failed for gamma=" + element_text(gamma);
        }
    }
    out.add("sampled-invariants", ok, detail);
    return out;
}

} // namespace algden
