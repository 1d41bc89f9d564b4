#include "algden/ideal.hpp"

#include "algden/polymod.hpp"
#include "algden/primes.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace algden {

namespace {

Integer zmat_content(const ZMat& m)
{
    Integer g = 0;
    for (const auto& x : m.a)
        g = gcd(g, x);
    return g;
}

FractionalIdeal canonical(const FieldPtr& K, const ZMat& rows, Integer den)
{
    ZMat h = hnf_basis(rows);
    if (h.rows != K->degree())
        throw std::domain_error("zero ideal");
    Integer g = gcd(zmat_content(h), den);
    if (g > 1) {
        for (auto& x : h.a)
            x /= g;
        den /= g;
    }
    return {K, den, std::move(h)};
}

FractionalIdeal canonical_q(const FieldPtr& K, const QMat& rows)
{
    ZMat z;
    Integer den;
    clear_denominators(rows, z, den);
    return canonical(K, z, den);
}

// rows of the ideal lattice in power-basis coordinates, over a denominator
void power_lattice(const FractionalIdeal& a, ZMat& z, Integer& den)
{
    const QMat& w = a.field->integral_basis();
    QMat rows(a.basis.rows, w.cols);
    for (int i = 0; i < a.basis.rows; ++i) {
        std::vector<Rational> v(a.basis.cols);
        for (int j = 0; j < a.basis.cols; ++j)
            v[j] = Rational(a.basis.at(i, j));
        auto pc = mul_vec(v, w);
        for (int j = 0; j < w.cols; ++j)
            rows.at(i, j) = pc[j] / Rational(a.den);
    }
    clear_denominators(rows, z, den);
}

} // namespace

FractionalIdeal whole_ring(const FieldPtr& K)
{
    return {K, 1, ZMat::identity(K->degree())};
}

std::vector<FieldElement> ideal_basis_elements(const FractionalIdeal& a)
{
    std::vector<FieldElement> out;
    for (int i = 0; i < a.basis.rows; ++i) {
        std::vector<Rational> v(a.basis.cols);
        for (int j = 0; j < a.basis.cols; ++j)
            v[j] = make_rational(a.basis.at(i, j), a.den);
        out.push_back(a.field->from_integral_coords(v));
    }
    return out;
}

FractionalIdeal ideal_from_generators(const FieldPtr& K,
                                      const std::vector<FieldElement>& gens)
{
    int n = K->degree();
    std::vector<FieldElement> basis;
    for (int j = 0; j < n; ++j) {
        std::vector<Integer> e(n);
        e[j] = 1;
        basis.push_back(K->from_integral_coords(e));
    }
    QMat rows(int(gens.size()) * n, n);
    int r = 0;
    for (const auto& g : gens) {
        for (int j = 0; j < n; ++j) {
            auto coords = integral_coords(mul(g, basis[j]));
            for (int l = 0; l < n; ++l)
                rows.at(r, l) = coords[l];
            ++r;
        }
    }
    return canonical_q(K, rows);
}

FractionalIdeal principal_ideal(const FieldElement& a)
{
    if (a.is_zero())
        throw std::domain_error("zero ideal");
    return ideal_from_generators(a.field, {a});
}

FractionalIdeal mul(const FractionalIdeal& a, const FractionalIdeal& b)
{
    auto ea = ideal_basis_elements(a);
    auto eb = ideal_basis_elements(b);
    int n = a.field->degree();
    QMat rows(n * n, n);
    int r = 0;
    for (const auto& x : ea)
        for (const auto& y : eb) {
            auto coords = integral_coords(mul(x, y));
            for (int l = 0; l < n; ++l)
                rows.at(r, l) = coords[l];
            ++r;
        }
    return canonical_q(a.field, rows);
}

FractionalIdeal add(const FractionalIdeal& a, const FractionalIdeal& b)
{
    Integer d = lcm(a.den, b.den);
    ZMat rows(a.basis.rows + b.basis.rows, a.basis.cols);
    Integer fa = d / a.den, fb = d / b.den;
    for (int i = 0; i < a.basis.rows; ++i)
        for (int j = 0; j < a.basis.cols; ++j)
            rows.at(i, j) = a.basis.at(i, j) * fa;
    for (int i = 0; i < b.basis.rows; ++i)
        for (int j = 0; j < b.basis.cols; ++j)
            rows.at(a.basis.rows + i, j) = b.basis.at(i, j) * fb;
    return canonical(a.field, rows, d);
}

FractionalIdeal intersect(const FractionalIdeal& a, const FractionalIdeal& b)
{
    Integer d = lcm(a.den, b.den);
    ZMat za = a.basis, zb = b.basis;
    Integer fa = d / a.den, fb = d / b.den;
    for (auto& x : za.a)
        x *= fa;
    for (auto& x : zb.a)
        x *= fb;
    ZMat meet = lattice_intersect(za, zb);
    return canonical(a.field, meet, d);
}

FractionalIdeal quotient(const FractionalIdeal& a, const FractionalIdeal& b)
{
    const FieldPtr& K = a.field;
    int n = K->degree();
    ZMat pa;
    Integer pden;
    power_lattice(a, pa, pden);

    // intersect the lattices P_a * M_j^{-1} over the basis elements of b
    bool first = true;
    ZMat acc;
    Integer accden = 1;
    for (const auto& bj : ideal_basis_elements(b)) {
        QMat mj = mult_matrix(bj);
        QMat mjinv = inverse(mj);
        QMat lq(n, n);
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> row(n);
            for (int j = 0; j < n; ++j)
                row[j] = make_rational(pa.at(i, j), pden);
            auto t = mul_vec(row, mjinv);
            for (int j = 0; j < n; ++j)
                lq.at(i, j) = t[j];
        }
        ZMat lz;
        Integer lden;
        clear_denominators(lq, lz, lden);
        if (first) {
            acc = hnf_basis(lz);
            accden = lden;
            first = false;
        } else {
            Integer d = lcm(accden, lden);
            ZMat x = acc, y = lz;
            Integer fx = d / accden, fy = d / lden;
            for (auto& v : x.a)
                v *= fx;
            for (auto& v : y.a)
                v *= fy;
            acc = lattice_intersect(x, y);
            accden = d;
        }
    }
    // back to integral-basis coordinates
    const QMat& winv = K->basis_inverse();
    QMat rows(n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        for (int j = 0; j < n; ++j)
            row[j] = make_rational(acc.at(i, j), accden);
        auto t = mul_vec(row, winv);
        for (int j = 0; j < n; ++j)
            rows.at(i, j) = t[j];
    }
    return canonical_q(K, rows);
}

FractionalIdeal inverse(const FractionalIdeal& a)
{
    return quotient(whole_ring(a.field), a);
}

FractionalIdeal power(const FractionalIdeal& a, long e)
{
    if (e < 0)
        return power(inverse(a), -e);
    FractionalIdeal r = whole_ring(a.field);
    FractionalIdeal base = a;
    long k = e;
    while (k > 0) {
        if (k & 1)
            r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FractionalIdeal scale(const FractionalIdeal& a, const Rational& k)
{
    if (k == 0)
        throw std::domain_error("zero ideal");
    ZMat z = a.basis;
    for (auto& x : z.a)
        x *= numer(k);
    return canonical(a.field, z, a.den * denom(k));
}

Rational ideal_norm(const FractionalIdeal& a)
{
    Integer d = det(a.basis);
    return make_rational(abs(d),
                         pow(a.den, static_cast<unsigned long>(a.basis.rows)));
}

bool is_integral_ideal(const FractionalIdeal& a) { return a.den == 1; }

bool ideal_contains(const FractionalIdeal& a, const FieldElement& x)
{
    auto coords = integral_coords(x);
    std::vector<Integer> v(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
        Rational s = coords[i] * Rational(a.den);
        if (!is_integer(s))
            return false;
        v[i] = numer(s);
    }
    return lattice_contains(hnf(a.basis), v);
}

bool ideal_divides(const FractionalIdeal& a, const FractionalIdeal& b)
{
    for (const auto& x : ideal_basis_elements(b))
        if (!ideal_contains(a, x))
            return false;
    return true;
}

FractionalIdeal denominator_ideal(const FieldElement& x)
{
    const FieldPtr& K = x.field;
    int n = K->degree();
    if (x.is_zero())
        return whole_ring(K);
    // u in Z^n (integral coords) with u * T integral, T = W*M_x*Winv
    QMat t = mul(mul(K->integral_basis(), mult_matrix(x)), K->basis_inverse());
    ZMat tz;
    Integer d;
    clear_denominators(t, tz, d);
    if (d == 1)
        return whole_ring(K);
    // stack [tz ; -d*I] and take kernel; u-part spans the solution lattice
    ZMat stacked(2 * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            stacked.at(i, j) = tz.at(i, j);
    for (int i = 0; i < n; ++i)
        stacked.at(n + i, i) = -d;
    ZMat ker = kernel(stacked);
    ZMat rows(ker.rows, n);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < n; ++j)
            rows.at(i, j) = ker.at(i, j);
    return canonical(K, rows, 1);
}

bool PrimeIdeal::operator<(const PrimeIdeal& o) const
{
    if (p != o.p)
        return p < o.p;
    if (res_deg != o.res_deg)
        return res_deg < o.res_deg;
    if (ram != o.ram)
        return ram < o.ram;
    return hnf.a < o.hnf.a;
}

FractionalIdeal to_ideal(const PrimeIdeal& P) { return {P.field, 1, P.hnf}; }

namespace {

// integral-coordinate product table for the maximal order
struct OrderMul {
    FieldPtr K;
    int n;
    std::vector<FieldElement> basis;

    explicit OrderMul(const FieldPtr& k) : K(k), n(k->degree())
    {
        for (int j = 0; j < n; ++j) {
            std::vector<Integer> e(n);
            e[j] = 1;
            basis.push_back(K->from_integral_coords(e));
        }
    }

    std::vector<Integer> mul_coords(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b) const
    {
        std::vector<Rational> ar(n), br(n);
        for (int i = 0; i < n; ++i) {
            ar[i] = Rational(a[i]);
            br[i] = Rational(b[i]);
        }
        FieldElement x = K->from_integral_coords(ar);
        FieldElement y = K->from_integral_coords(br);
        auto c = integral_coords(mul(x, y));
        std::vector<Integer> out(n);
        for (int i = 0; i < n; ++i) {
            assert(is_integer(c[i]));
            out[i] = numer(c[i]);
        }
        return out;
    }
};

// reduce an integral-coordinate vector modulo an ideal lattice whose HNF has
// diagonal entries dividing p (ideal contains pO); also returns the residue
std::vector<Integer> reduce_mod_lattice(const ZMat& h, std::vector<Integer> v)
{
    int n = h.rows;
    for (int i = 0; i < n; ++i) {
        const Integer& piv = h.at(i, i);
        Integer q = floor_div(v[i], piv);
        if (q != 0)
            for (int j = 0; j < n; ++j)
                v[j] -= q * h.at(i, j);
    }
    return v;
}

struct QuotientAlgebra {
    int n;
    Integer p;
    ZMat h;                        // HNF of the ideal, diag entries 1 or p
    std::vector<int> free_pos;     // columns with diagonal p
    const OrderMul* om;

    int dim() const { return int(free_pos.size()); }

    std::vector<Integer> coset_coords(const std::vector<Integer>& v) const
    {
        auto r = reduce_mod_lattice(h, v);
        std::vector<Integer> c(free_pos.size());
        for (size_t i = 0; i < free_pos.size(); ++i)
            c[i] = mod_floor(r[free_pos[i]], p);
        return c;
    }

    std::vector<Integer> rep(const std::vector<Integer>& c) const
    {
        std::vector<Integer> v(n);
        for (size_t i = 0; i < free_pos.size(); ++i)
            v[free_pos[i]] = c[i];
        return v;
    }

    std::vector<Integer> mul(const std::vector<Integer>& a,
                             const std::vector<Integer>& b) const
    {
        return coset_coords(om->mul_coords(rep(a), rep(b)));
    }

    std::vector<Integer> pow(std::vector<Integer> base, Integer e,
                             const std::vector<Integer>& one) const
    {
        std::vector<Integer> acc = one;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                acc = mul(acc, base);
            e >>= 1;
            if (e > 0)
                base = mul(base, base);
        }
        return acc;
    }
};

QuotientAlgebra make_quotient(const FieldPtr& K, const OrderMul& om,
                              const ZMat& ideal_hnf, const Integer& p)
{
    QuotientAlgebra qa;
    qa.n = K->degree();
    qa.p = p;
    qa.h = ideal_hnf;
    qa.om = &om;
    for (int i = 0; i < qa.n; ++i) {
        assert(qa.h.at(i, i) == 1 || qa.h.at(i, i) == p);
        if (qa.h.at(i, i) == p)
            qa.free_pos.push_back(i);
    }
    return qa;
}

// GF(p) kernel of (rows act on the right): {v : v*m = 0 mod p}
ZMat gfp_kernel(const ZMat& m, const Integer& p)
{
    int rows = m.rows;
    ZMat aug(rows, m.cols + rows);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < m.cols; ++j)
            aug.at(i, j) = mod_floor(m.at(i, j), p);
        aug.at(i, m.cols + i) = 1;
    }
    int r = 0;
    for (int c = 0; c < m.cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (aug.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int j = 0; j < aug.cols; ++j)
            std::swap(aug.at(r, j), aug.at(piv, j));
        Integer inv;
        mpz_invert(inv.get_mpz_t(), aug.at(r, c).get_mpz_t(), p.get_mpz_t());
        for (int j = 0; j < aug.cols; ++j)
            aug.at(r, j) = mod_floor(aug.at(r, j) * inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || aug.at(i, c) == 0)
                continue;
            Integer f = aug.at(i, c);
            for (int j = 0; j < aug.cols; ++j)
                aug.at(i, j) = mod_floor(aug.at(i, j) - f * aug.at(r, j), p);
        }
        ++r;
    }
    ZMat ker(rows - r, rows);
    for (int i = r; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
            ker.at(i - r, j) = aug.at(i, m.cols + j);
    return ker;
}

// minimal polynomial over GF(p) of an algebra element
modp::Poly algebra_minpoly(const QuotientAlgebra& qa,
                           const std::vector<Integer>& w,
                           const std::vector<Integer>& one)
{
    int k = qa.dim();
    std::vector<std::vector<Integer>> pows{one};
    std::vector<Integer> cur = one;
    for (int d = 1;; ++d) {
        cur = qa.mul(cur, w);
        pows.push_back(cur);
        // solve: is cur in the span of earlier powers?
        ZMat m(d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j)
                m.at(i, j) = pows[i][j];
        // augmented system over GF(p): x*m = cur
        ZMat stacked(d + 1, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j)
                stacked.at(i, j) = pows[i][j];
        for (int j = 0; j < k; ++j)
            stacked.at(d, j) = cur[j];
        ZMat ker = gfp_kernel(stacked, qa.p);
        // a kernel row with nonzero last coordinate yields the dependency
        for (int i = 0; i < ker.rows; ++i) {
            if (ker.at(i, d) == 0)
                continue;
            Integer inv;
            mpz_invert(inv.get_mpz_t(), ker.at(i, d).get_mpz_t(),
                       qa.p.get_mpz_t());
            modp::Poly mp(d + 1);
            for (int j = 0; j < d; ++j)
                mp[j] = mod_floor(ker.at(i, j) * inv, qa.p);
            mp[d] = 1;
            return mp;
        }
    }
}

} // namespace

std::vector<PrimeIdeal> factor_prime(const FieldPtr& K, const Integer& p)
{
    if (!is_prime(p))
        throw std::invalid_argument("factor_prime requires a prime");
    const int n = K->degree();
    OrderMul om(K);

    // p-radical of O/pO via the iterated Frobenius kernel
    std::vector<Integer> onec(n);
    {
        auto c = integral_coords(K->one());
        for (int i = 0; i < n; ++i)
            onec[i] = numer(c[i]);
    }
    ZMat pO = ZMat::identity(n);
    for (auto& x : pO.a)
        x *= p;
    QuotientAlgebra mod_p = make_quotient(K, om, pO, p);
    std::vector<Integer> one_modp = mod_p.coset_coords(onec);
    ZMat frob(n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<Integer> e(n);
        e[i] = 1;
        auto fi = mod_p.pow(e, p, one_modp);
        for (int j = 0; j < n; ++j)
            frob.at(i, j) = fi[j];
    }
    ZMat fm = frob;
    {
        Integer pm = p;
        while (pm < n) {
            ZMat next(n, n);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (fm.at(i, k) == 0)
                        continue;
                    for (int j = 0; j < n; ++j)
                        next.at(i, j) = mod_floor(
                            next.at(i, j) + fm.at(i, k) * frob.at(k, j), p);
                }
            fm = next;
            pm *= p;
        }
    }
    ZMat rad = gfp_kernel(fm, p);

    // radical ideal lattice
    ZMat iv(n + rad.rows, n);
    for (int i = 0; i < n; ++i)
        iv.at(i, i) = p;
    for (int i = 0; i < rad.rows; ++i)
        for (int j = 0; j < n; ++j)
            iv.at(n + i, j) = rad.at(i, j);
    ZMat radical_hnf = hnf_basis(iv);

    // split the etale quotient into its field components
    std::vector<ZMat> work{radical_hnf}, maximal;
    while (!work.empty()) {
        ZMat ih = work.back();
        work.pop_back();
        QuotientAlgebra qa = make_quotient(K, om, ih, p);
        int k = qa.dim();
        assert(k >= 1);
        std::vector<Integer> one_q = qa.coset_coords(onec);
        // Frobenius fixed space
        ZMat fr(k, k);
        for (int i = 0; i < k; ++i) {
            std::vector<Integer> e(k);
            e[i] = 1;
            auto fi = qa.pow(e, p, one_q);
            for (int j = 0; j < k; ++j)
                fr.at(i, j) = mod_floor(fi[j] - (i == j ? Integer(1) : Integer(0)), p);
        }
        ZMat fixed = gfp_kernel(fr, p);
        if (fixed.rows <= 1) {
            maximal.push_back(ih);
            continue;
        }
        // a fixed element outside the scalars has a squarefree totally split
        // minimal polynomial; split along its roots
        std::vector<Integer> w;
        for (int i = 0; i < fixed.rows; ++i) {
            std::vector<Integer> cand(k);
            for (int j = 0; j < k; ++j)
                cand[j] = fixed.at(i, j);
            // discard scalar multiples of 1
            ZMat test(2, k);
            for (int j = 0; j < k; ++j) {
                test.at(0, j) = one_q[j];
                test.at(1, j) = cand[j];
            }
            if (gfp_kernel(test, p).rows == 0) {
                w = cand;
                break;
            }
        }
        assert(!w.empty());
        modp::Poly mp = algebra_minpoly(qa, w, one_q);
        auto roots = modp::factor(mp, p);
        assert(roots.size() >= 2);
        for (auto& [lin, e] : roots) {
            assert(modp::degree(lin) == 1 && e == 1);
            Integer c = mod_floor(-lin[0], p);
            // component ideal: ih + (w - c*1) * O
            std::vector<Integer> wc = qa.rep(w);
            for (int j = 0; j < n; ++j)
                wc[j] -= c * onec[j];
            ZMat gens(n + ih.rows, n);
            for (int i = 0; i < ih.rows; ++i)
                for (int j = 0; j < n; ++j)
                    gens.at(i, j) = ih.at(i, j);
            for (int b = 0; b < n; ++b) {
                std::vector<Integer> e2(n);
                e2[b] = 1;
                auto prod = om.mul_coords(wc, e2);
                for (int j = 0; j < n; ++j)
                    gens.at(ih.rows + b, j) = prod[j];
            }
            work.push_back(hnf_basis(gens));
        }
    }

    // assemble PrimeIdeal records
    std::vector<PrimeIdeal> out;
    FieldElement pelt = K->from_rational(Rational(p));
    FractionalIdeal pideal = principal_ideal(pelt);
    for (const ZMat& h : maximal) {
        PrimeIdeal P;
        P.field = K;
        P.p = p;
        P.hnf = h;
        Integer nrm = det(h);
        P.res_deg = 0;
        Integer t = nrm;
        while (t > 1) {
            assert(t % p == 0);
            t /= p;
            ++P.res_deg;
        }
        // anti-uniformizer: b/p for b in (pO : P) outside pO
        FractionalIdeal J = quotient(pideal, FractionalIdeal{K, 1, h});
        assert(J.den == 1);
        FieldElement tau = K->zero();
        for (const auto& b : ideal_basis_elements(J)) {
            auto c = integral_coords(b);
            bool in_pO = true;
            for (const auto& x : c)
                if (!is_integer(x / Rational(p))) {
                    in_pO = false;
                    break;
                }
            if (!in_pO) {
                tau = mul(b, make_rational(1, p));
                break;
            }
        }
        assert(!tau.is_zero());
        P.anti_uniformizer = tau;
        // ramification: v_P(p)
        int e = 0;
        FieldElement x = pelt;
        for (;;) {
            FieldElement y = mul(x, tau);
            if (!is_integral(y))
                break;
            x = y;
            ++e;
        }
        P.ram = e;
        out.push_back(std::move(P));
    }

    int total = 0;
    for (const auto& P : out)
        total += P.ram * P.res_deg;
    if (total != n)
        throw std::logic_error("prime splitting does not fill the degree");

    // second generators
    for (auto& P : out) {
        FractionalIdeal Pi = to_ideal(P);
        if (Pi == pideal) {
            P.second_gen = pelt;
            continue;
        }
        auto rows = ideal_basis_elements(Pi);
        auto val_ok = [&](const FieldElement& cand) {
            if (cand.is_zero())
                return false;
            if (valuation(P, cand) != 1)
                return false;
            for (const auto& Q : out) {
                if (Q.hnf == P.hnf)
                    continue;
                if (valuation(Q, cand) != 0)
                    return false;
            }
            return true;
        };
        bool found = false;
        // prefer small generators in quadratic fields (display quality)
        if (n == 2) {
            auto ordered = [](int m) {
                std::vector<long> v{0};
                for (long k = 1; k <= m; ++k) {
                    v.push_back(k);
                    v.push_back(-k);
                }
                std::rotate(v.begin(), v.begin() + (2 * m - 1), v.end());
                return v; // m, -m, 0, 1, -1, ..., with m first
            };
            for (int m = 1; m <= 6 && !found; ++m)
                for (long a : ordered(m)) {
                    if (found)
                        break;
                    for (long b : ordered(m)) {
                        if (std::max(labs(a), labs(b)) != m)
                            continue;
                        std::vector<Integer> c{Integer(a), Integer(b)};
                        FieldElement cand = K->from_integral_coords(c);
                        if (cand.is_zero() || !ideal_contains(Pi, cand))
                            continue;
                        if (val_ok(cand)) {
                            P.second_gen = cand;
                            found = true;
                            break;
                        }
                    }
                }
        }
        for (const auto& cand : rows) {
            if (found)
                break;
            if (val_ok(cand)) {
                P.second_gen = cand;
                found = true;
            }
        }
        // small deterministic combinations of two basis rows
        for (int s = 1; s <= 4 && !found; ++s)
            for (size_t i = 0; i < rows.size() && !found; ++i)
                for (size_t j = 0; j < rows.size() && !found; ++j) {
                    if (i == j)
                        continue;
                    FieldElement cand =
                        add(rows[i], mul(rows[j], Rational(s)));
                    if (val_ok(cand)) {
                        P.second_gen = cand;
                        found = true;
                    }
                }
        if (!found)
            throw std::logic_error("no two-element presentation found");
        // check (p, pi) generates P exactly
        assert(ideal_from_generators(K, {pelt, P.second_gen}) == Pi);
    }

    std::sort(out.begin(), out.end());
    return out;
}

int valuation(const PrimeIdeal& P, const FieldElement& a)
{
    if (a.is_zero())
        throw std::domain_error("valuation of zero");
    Integer t = integral_denominator(a);
    FieldElement x = mul(a, Rational(t));
    int v = 0;
    for (;;) {
        FieldElement y = mul(x, P.anti_uniformizer);
        if (!is_integral(y))
            break;
        x = y;
        ++v;
    }
    if (t > 1 && t % P.p == 0)
        v -= P.ram * vp(t, P.p);
    return v;
}

int valuation(const PrimeIdeal& P, const FractionalIdeal& a)
{
    int v = 0;
    bool first = true;
    for (const auto& b : ideal_basis_elements(a)) {
        int w = valuation(P, b);
        if (first || w < v) {
            v = w;
            first = false;
        }
    }
    return v;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const FractionalIdeal& a,
                                                     int effort)
{
    const FieldPtr& K = a.field;
    std::vector<std::pair<PrimeIdeal, int>> out;
    Integer dd = abs(det(a.basis));
    std::set<Integer> ps;
    for (auto& [q, e] : factorize(dd, effort).factors)
        ps.insert(q);
    for (auto& [q, e] : factorize(a.den, effort).factors)
        ps.insert(q);
    for (const Integer& q : ps)
        for (const auto& P : factor_prime(K, q)) {
            int v = valuation(P, a);
            if (v != 0)
                out.emplace_back(P, v);
        }
    // reconstruct to guard against missed support
    FractionalIdeal prod = whole_ring(K);
    for (auto& [P, v] : out)
        prod = mul(prod, power(to_ideal(P), v));
    if (!(prod == a))
        throw std::logic_error("ideal factorization failed to reconstruct");
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::vector<std::pair<PrimeIdeal, int>> factor_element(const FieldElement& a,
                                                       int effort)
{
    return factor_ideal(principal_ideal(a), effort);
}

FractionalIdeal radical(const FractionalIdeal& a, int effort)
{
    if (!is_integral_ideal(a))
        throw std::domain_error("radical of a non-integral ideal");
    FractionalIdeal r = whole_ring(a.field);
    for (auto& [P, v] : factor_ideal(a, effort)) {
        assert(v > 0);
        r = mul(r, to_ideal(P));
    }
    return r;
}

NewtonPolygon newton_polygon(const std::vector<FieldElement>& b,
                             const PrimeIdeal& P)
{
    if (b.empty() || b.back().is_zero())
        throw std::invalid_argument("leading coefficient must be nonzero");
    if (b.front().is_zero())
        throw std::domain_error("zero constant term: zero is a root");
    std::vector<std::pair<int, Integer>> pts; // (i, v_P(b_i))
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i].is_zero())
            continue;
        pts.emplace_back(int(i), Integer(valuation(P, b[i])));
    }
    // lower convex hull, left to right
    std::vector<std::pair<int, Integer>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a1 = hull[hull.size() - 2];
            auto& a2 = hull[hull.size() - 1];
            // keep a2 only if it is strictly below segment a1->pt
            Integer lhs = (a2.second - a1.second) * (pt.first - a1.first);
            Integer rhs = (pt.second - a1.second) * (a2.first - a1.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    for (size_t i = 1; i < hull.size(); ++i) {
        Rational slope = make_rational(hull[i].second - hull[i - 1].second,
                                       hull[i].first - hull[i - 1].first);
        np.segments.push_back({slope, hull[i].first - hull[i - 1].first});
    }
    for (size_t i = 1; i < np.segments.size(); ++i)
        assert(np.segments[i - 1].slope < np.segments[i].slope);
    return np;
}

std::vector<std::pair<Rational, int>> root_valuations(const NewtonPolygon& np)
{
    std::vector<std::pair<Rational, int>> out;
    for (const auto& s : np.segments)
        out.emplace_back(-s.slope, s.length);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace algden
