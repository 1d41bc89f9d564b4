#include "algden/irreducible.hpp"

#include "algden/polymod.hpp"
#include "algden/primes.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace algden {

namespace {

IrreducibilityResult reducible(IntPoly witness)
{
    return {false, std::move(witness)};
}

// verified rational root search; returns (qx - p) on success
std::optional<IntPoly> rational_root(const IntPoly& f)
{
    std::vector<Integer> nums = divisors(factorize(abs(f.c[0])));
    std::vector<Integer> dens = divisors(factorize(abs(f.lead())));
    for (const Integer& den : dens)
        for (const Integer& num : nums) {
            if (gcd(num, den) != 1)
                continue;
            for (int s : {1, -1}) {
                Rational r = make_rational(s * num, den);
                if (eval(f, r) == 0)
                    return IntPoly({-s * num, den});
            }
        }
    return std::nullopt;
}

// map a monic factor of monicize(f) back to a primitive factor of f:
// root lead*r of the transform corresponds to root r, so substitute lead*x
IntPoly unmonicize_factor(const IntPoly& g, const Integer& lead)
{
    std::vector<Integer> c(g.c.size());
    Integer kp = 1;
    for (size_t i = 0; i < g.c.size(); ++i) {
        c[i] = g.c[i] * kp;
        kp *= lead;
    }
    return primitive_part(IntPoly(std::move(c)));
}

IrreducibilityResult zassenhaus(const IntPoly& f)
{
    const int n = f.degree();
    IntPoly fm = monicize(f);

    // choose p with squarefree reduction; collect degree patterns as we go
    std::set<int> possible; // degrees of proper factors still possible
    for (int d = 1; d < n; ++d)
        possible.insert(d);

    Integer p = 2;
    std::vector<modp::Poly> chosen_factors;
    Integer chosen_p = 0;
    int best_count = n + 1;
    int tried = 0;
    while (tried < 5) {
        while (true) {
            modp::Poly fp = modp::reduce(fm, p);
            if (modp::degree(fp) == n
                && modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) == 0)
                break;
            p = next_prime(p + 1);
        }
        ++tried;
        modp::Poly fp = modp::reduce(fm, p);
        auto factors = modp::factor(fp, p);
        if (factors.size() == 1)
            return {true, std::nullopt};
        // subset sums of modular factor degrees
        std::vector<int> degs;
        for (auto& [g, e] : factors)
            degs.push_back(modp::degree(g));
        std::set<int> sums{0};
        for (int d : degs) {
            std::set<int> next = sums;
            for (int s : sums)
                next.insert(s + d);
            sums = next;
        }
        std::set<int> filtered;
        for (int d : possible)
            if (sums.count(d))
                filtered.insert(d);
        possible = filtered;
        if (possible.empty())
            return {true, std::nullopt};
        if (int(factors.size()) < best_count) {
            best_count = int(factors.size());
            chosen_factors.clear();
            for (auto& [g, e] : factors)
                chosen_factors.push_back(g);
            chosen_p = p;
        }
        p = next_prime(p + 1);
    }

    // Landau-Mignotte style bound for coefficients of monic factors,
    // inflated by 2 for the symmetric lift
    Integer norm2 = 0;
    for (const Integer& c : fm.c)
        norm2 += c * c;
    Integer bound = 2 * pow(Integer(2), static_cast<unsigned long>(n))
                    * (isqrt(norm2) + 1);

    Integer modulus;
    std::vector<modp::Poly> lifted =
        modp::hensel_lift(fm, chosen_factors, chosen_p, bound, modulus);

    const int r = int(lifted.size());
    // try subsets by increasing cardinality; any true factor of the monic
    // transform maps back to a factor of f
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i)
        idx[i] = i;
    for (int k = 1; 2 * k <= r; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i)
            comb[i] = i;
        while (true) {
            modp::Poly prod{1};
            int degsum = 0;
            for (int i : comb) {
                prod = modp::mul(prod, lifted[i], modulus);
                degsum += modp::degree(lifted[i]);
            }
            if (possible.count(degsum)) {
                IntPoly cand = modp::lift_symmetric(prod, modulus);
                if (divides(cand, fm)) {
                    IntPoly w = unmonicize_factor(cand, f.lead());
                    assert(divides(w, f));
                    return reducible(std::move(w));
                }
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && comb[i] == r - k + i)
                --i;
            if (i < 0)
                break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
        }
    }
    return {true, std::nullopt};
}

} // namespace

bool is_eisenstein_at(const IntPoly& f, const Integer& q)
{
    int n = f.degree();
    if (n < 1)
        return false;
    if (f.lead() % q == 0)
        return false;
    for (int i = 0; i < n; ++i)
        if (f.coeff(i) % q != 0)
            return false;
    return f.coeff(0) % (q * q) != 0;
}

IrreducibilityResult is_irreducible_over_q(const IntPoly& f)
{
    const int n = f.degree();
    if (n < 1)
        throw std::domain_error("irreducibility needs degree >= 1");
    if (n == 1)
        return {true, std::nullopt};
    IntPoly g = primitive_part(f);
    if (g.c[0] == 0)
        return reducible(IntPoly({Integer(0), Integer(1)}));

    // repeated factors
    RatPoly sq = gcd(to_rat(g), to_rat(derivative(g)));
    if (sq.degree() >= 1) {
        Integer den;
        IntPoly w = primitive_part(clear_denominators(sq, den));
        assert(divides(w, g));
        return reducible(std::move(w));
    }

    if (auto root = rational_root(g))
        return reducible(std::move(*root));
    if (n <= 3)
        return {true, std::nullopt};

    Integer low_gcd = 0;
    for (int i = 0; i < n; ++i)
        low_gcd = gcd(low_gcd, g.coeff(i));
    if (low_gcd > 1)
        for (auto& [q, e] : factorize(low_gcd).factors)
            if (is_eisenstein_at(g, q))
                return {true, std::nullopt};

    return zassenhaus(g);
}

MinimalPolynomial MinimalPolynomial::from_rational(const RatPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("zero polynomial");
    Integer den;
    IntPoly q = clear_denominators(p, den);
    q = primitive_part(q);
    if (q.lead() < 0)
        q = neg(q);
    if (q.degree() < 1)
        throw std::domain_error("constant polynomial");
    auto r = is_irreducible_over_q(q);
    if (!r.irreducible)
        throw NotIrreducibleError(std::move(*r.witness));
    return MinimalPolynomial(std::move(q));
}

MinimalPolynomial MinimalPolynomial::from_integer(const IntPoly& p)
{
    return from_rational(to_rat(p));
}

MinimalPolynomial MinimalPolynomial::trusted(IntPoly p, const char*)
{
    assert(!p.is_zero() && p.lead() > 0 && content(p) == 1);
    return MinimalPolynomial(std::move(p));
}

MinimalPolynomial normalize(const RatPoly& p)
{
    return MinimalPolynomial::from_rational(p);
}

} // namespace algden
