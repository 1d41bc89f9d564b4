#include "algden/invariants.hpp"

#include <stdexcept>

namespace algden {

Invariants invariants(const MinimalPolynomial& f)
{
    const IntPoly& p = f.poly();
    const int n = p.degree();
    Invariants r;
    r.degree = n;
    r.lead = p.lead();
    r.tail_gcd = 0;
    for (int i = 1; i <= n; ++i)
        r.tail_gcd = gcd(r.tail_gcd, p.coeff(i));

    r.denom = 1;
    for (auto& [q, e] : factorize(r.lead).factors) {
        long best = 0;
        long vn = e;
        for (int j = 0; j < n; ++j) {
            if (p.coeff(j) == 0)
                continue;
            long vj = vp(p.coeff(j), q);
            long num = vn - vj;
            long den = n - j;
            long cd = num >= 0 ? (num + den - 1) / den : -((-num) / den);
            best = std::max(best, cd);
        }
        r.denom *= pow(q, static_cast<unsigned long>(best));
    }

    // divisibility facts about the invariants; failure means a bug
    auto check = [](const Integer& a, const Integer& b) {
        if (b % a != 0)
            throw std::logic_error("invariant divisibility violated");
    };
    check(r.denom, r.lead);
    check(r.lead, pow(r.denom, static_cast<unsigned long>(n)));
    check(r.tail_gcd, r.lead);
    check(r.lead, pow(r.denom, static_cast<unsigned long>(n - 1)) * r.tail_gcd);
    return r;
}

Integer smallest_denominator_bruteforce(const MinimalPolynomial& f)
{
    for (const Integer& k : divisors(factorize(f.lead()))) {
        IntPoly g = primitive_part(root_scale(f.poly(), k));
        if (g.lead() == 1 || g.lead() == -1)
            return k;
    }
    throw std::logic_error("denominator must divide the leading coefficient");
}

bool denom_equals_lead_criterion(const MinimalPolynomial& f)
{
    const IntPoly& p = f.poly();
    int n = p.degree();
    for (auto& [q, e] : factorize(p.lead()).factors) {
        if (e < 2)
            continue;
        if (n >= 1 && p.coeff(n - 1) % q == 0)
            return false;
    }
    return true;
}

} // namespace algden
