#include "algden/genset.hpp"

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

bool subfield_order(const Subfield& a, const Subfield& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    Integer da = abs(a.field->discriminant()), db = abs(b.field->discriminant());
    if (da != db)
        return da < db;
    if (a.field->discriminant() != b.field->discriminant())
        return a.field->discriminant() < b.field->discriminant();
    return a.field->defining_poly().c < b.field->defining_poly().c;
}

} // namespace

SubfieldLattice subfields(const Subfield& K)
{
    if (K.degree() > 4)
        throw std::invalid_argument(
            "subfield enumeration is supported up to degree 4");
    SubfieldLattice lat;
    lat.top = K;
    lat.fields.push_back(rationals_subfield(K.ambient));
    if (K.degree() >= 2 && K.degree() <= 4 && K.degree() != 1) {
        if (K.degree() == 4) {
            for (const auto& xi : quadratic_subfield_generators(K.field)) {
                FieldElement amb = to_ambient(K, xi);
                lat.fields.push_back(subfield_from_generator(amb));
            }
        }
        if (K.degree() > 1)
            lat.fields.push_back(K);
    }
    std::sort(lat.fields.begin(), lat.fields.end(), subfield_order);
    return lat;
}

std::vector<PrimeIdeal> fresh_primes(const ElementContext& ctx,
                                     const Subfield& K,
                                     const SubfieldLattice& lattice)
{
    XYReport xy = compute_xy(ctx, K);
    std::vector<PrimeIdeal> out;
    for (const auto& q : xy.x_set) {
        bool explained = false;
        for (const auto& K1 : lattice.fields) {
            if (K1.degree() >= K.degree())
                continue;
            if (!subfield_leq(K1, K))
                continue;
            PrimeIdeal below = prime_below(K1, K, q);
            XYReport xy1 = compute_xy(ctx, K1);
            if (prime_in(xy1.x_set, below)) {
                explained = true;
                break;
            }
        }
        if (!explained)
            out.push_back(q);
    }
    return out;
}

GenSetResult generating_set(const ElementContext& ctx, int effort)
{
    GenSetResult out;
    // the lattice lives under Q(gamma)
    Subfield qgamma = adjoin(ctx, rationals_subfield(ctx.ambient));
    SubfieldLattice lat = subfields(qgamma);
    for (const auto& F : lat.fields) {
        std::vector<PrimeIdeal> fresh = fresh_primes(ctx, F, lat);
        if (fresh.empty())
            continue;
        FieldGenData data;
        data.field = F;
        data.fresh = fresh;
        data.fresh_product = whole_ring(F.field);
        for (const auto& q : fresh)
            data.fresh_product = mul(data.fresh_product, to_ideal(q));
        ClassGroup cg = class_group(F.field, effort);
        data.class_number = cg.h;
        data.generator =
            ideal_power_generator(cg, data.fresh_product, cg.h.get_si(), effort);
        // the generator must generate exactly this field
        if (min_poly_q(data.generator).degree() != F.degree())
            throw std::logic_error("set generator spans the wrong field");
        out.set.push_back(to_ambient(F, data.generator));
        out.fields.push_back(std::move(data));
    }
    bool integral = is_integral(ctx.value);
    if (integral != out.set.empty())
        throw std::logic_error("empty set must coincide with integrality");
    return out;
}

GenSetVerification verify_generating_set(const ElementContext& ctx,
                                         const std::vector<FieldElement>& set,
                                         const std::vector<Subfield>& test_fields)
{
    GenSetVerification rep;
    for (const auto& L : test_fields) {
        GenSetVerification::PerField pf{true, true, true};
        XYReport xy = compute_xy(ctx, L);
        // primes meeting the set: support of the elements of S /\ L
        std::vector<PrimeIdeal> marked;
        std::vector<FieldElement> in_l;
        for (const auto& alpha : set) {
            auto el = from_ambient(L, alpha);
            if (!el)
                continue;
            in_l.push_back(*el);
            for (auto& [q, v] : factor_element(*el)) {
                assert(v > 0);
                if (!prime_in(marked, q))
                    marked.push_back(q);
            }
        }
        std::sort(marked.begin(), marked.end());
        pf.x_matches = marked == xy.x_set;

        for (const auto& el : in_l)
            if (!membership(xy, inverse(el)))
                pf.members_ok = false;
        // an element whose support leaves X must be rejected
        pf.non_members_ok = true;
        for (Integer p : {2, 3, 5, 7, 11}) {
            bool outside = false;
            for (const auto& P : factor_prime(L.field, p))
                if (!prime_in(xy.x_set, P))
                    outside = true;
            if (outside) {
                FieldElement bad =
                    L.field->from_rational(make_rational(1, p));
                if (membership(xy, bad))
                    pf.non_members_ok = false;
                break;
            }
        }
        rep.fields.push_back(pf);
    }
    return rep;
}

MinimalityReport minimality_check(const ElementContext& ctx,
                                  const std::vector<FieldElement>& candidate_set,
                                  int effort)
{
    MinimalityReport rep;
    GenSetResult gs = generating_set(ctx, effort);
    rep.fresh_field_count = gs.fields.size();
    rep.candidate_size = candidate_set.size();
    rep.size_ok = rep.fresh_field_count <= rep.candidate_size;
    rep.equality_case = rep.fresh_field_count == rep.candidate_size;
    rep.compositum_matches = true;
    if (rep.equality_case && !candidate_set.empty()) {
        // compositum of the fresh fields == Q(candidate set)
        FieldElement left = gs.fields[0].field.generator;
        for (size_t i = 1; i < gs.fields.size(); ++i)
            left = compositum_generator(left, gs.fields[i].field.generator);
        FieldElement right = candidate_set[0];
        for (size_t i = 1; i < candidate_set.size(); ++i)
            right = compositum_generator(right, candidate_set[i]);
        Subfield ls = left.is_zero() ? rationals_subfield(ctx.ambient)
                                     : subfield_from_generator(left);
        Subfield rs = right.is_zero() ? rationals_subfield(ctx.ambient)
                                      : subfield_from_generator(right);
        rep.compositum_matches = same_subfield(ls, rs);
    }
    return rep;
}

} // namespace algden
