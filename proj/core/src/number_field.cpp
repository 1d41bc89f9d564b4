#include "algden/number_field.hpp"

#include "algden/polymod.hpp"
#include "algden/primes.hpp"

#include <cassert>
#include <stdexcept>

namespace algden {

namespace {

// ---- GF(p) dense linear algebra helpers (small sizes) ----

struct PMat {
    int rows = 0, cols = 0;
    std::vector<Integer> a;
    PMat() = default;
    PMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Integer& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Integer& at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

Integer p_inv(const Integer& x, const Integer& p)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("non-invertible residue");
    return r;
}

PMat p_mul(const PMat& x, const PMat& y, const Integer& p)
{
    PMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = mod_floor(r.at(i, j) + x.at(i, k) * y.at(k, j), p);
        }
    return r;
}

// basis of {v : v*m = 0} over GF(p)
PMat p_kernel(PMat m, const Integer& p)
{
    int rows = m.rows;
    // reduce m^T|I style: operate on rows of [m | I]
    PMat aug(rows, m.cols + rows);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < m.cols; ++j)
            aug.at(i, j) = m.at(i, j);
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
        Integer inv = p_inv(aug.at(r, c), p);
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
    PMat ker(rows - r, rows);
    for (int i = r; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
            ker.at(i - r, j) = aug.at(i, m.cols + j);
    return ker;
}

// ---- order arithmetic during maximal-order computation ----

// an order is a full-rank lattice (rows of W, power-basis coords) closed
// under multiplication and containing 1
struct Order {
    QMat w;     // basis rows
    QMat winv;  // power coords -> order coords
};

// 3-index structure constants: table[i] row l of the product omega_i*omega_j
struct MultTable {
    int n;
    std::vector<ZMat> t; // t[i].at(j, l): order-coords of omega_i*omega_j
};

// multiply two order elements given in power coords, reduce mod g
std::vector<Rational> field_mul_raw(const IntPoly& g,
                                    const std::vector<std::vector<Integer>>& tpows,
                                    const std::vector<Rational>& a,
                                    const std::vector<Rational>& b)
{
    int n = g.degree();
    std::vector<Rational> conv(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < n; ++j)
            if (b[j] != 0)
                conv[i + j] += a[i] * b[j];
    }
    std::vector<Rational> out(n);
    for (int k = 0; k < n; ++k)
        out[k] = conv[k];
    for (int k = n; k <= 2 * n - 2; ++k) {
        if (conv[k] == 0)
            continue;
        const auto& red = tpows[k];
        for (int l = 0; l < n; ++l)
            if (red[l] != 0)
                out[l] += conv[k] * Rational(red[l]);
    }
    return out;
}

MultTable mult_table(const IntPoly& g,
                     const std::vector<std::vector<Integer>>& tpows,
                     const Order& o)
{
    int n = g.degree();
    MultTable mt;
    mt.n = n;
    mt.t.assign(n, ZMat(n, n));
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> wi(o.w.a.begin() + size_t(i) * n,
                                 o.w.a.begin() + size_t(i + 1) * n);
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> wj(o.w.a.begin() + size_t(j) * n,
                                     o.w.a.begin() + size_t(j + 1) * n);
            auto prod = field_mul_raw(g, tpows, wi, wj);
            auto coords = mul_vec(prod, o.winv);
            for (int l = 0; l < n; ++l) {
                if (!is_integer(coords[l]))
                    throw std::logic_error("order not closed under product");
                mt.t[i].at(j, l) = numer(coords[l]);
            }
        }
    }
    return mt;
}

// order-coordinate product in the mod-p algebra
std::vector<Integer> algebra_mul(const MultTable& mt, const std::vector<Integer>& a,
                                 const std::vector<Integer>& b, const Integer& p)
{
    std::vector<Integer> out(mt.n);
    for (int i = 0; i < mt.n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < mt.n; ++j) {
            if (b[j] == 0)
                continue;
            Integer c = mod_floor(a[i] * b[j], p);
            if (c == 0)
                continue;
            for (int l = 0; l < mt.n; ++l)
                out[l] += c * mt.t[i].at(j, l);
        }
    }
    for (auto& x : out)
        x = mod_floor(x, p);
    return out;
}

// Frobenius matrix x -> x^p on O/pO in order coords; identity element given
PMat frobenius_matrix(const MultTable& mt, const std::vector<Integer>& one,
                      const Integer& p)
{
    int n = mt.n;
    PMat f(n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<Integer> base(n), acc = one;
        base[i] = 1;
        Integer e = p;
        std::vector<Integer> sq = base;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                acc = algebra_mul(mt, acc, sq, p);
            e >>= 1;
            if (e > 0)
                sq = algebra_mul(mt, sq, sq, p);
        }
        for (int j = 0; j < n; ++j)
            f.at(i, j) = acc[j];
    }
    return f;
}

// HNF of a rational-row lattice in the lower-triangular convention, so that
// an order's first basis element is 1 (the presentation used by the tables).
QMat lattice_hnf(const QMat& rows)
{
    ZMat zi;
    Integer den;
    clear_denominators(rows, zi, den);
    ZMat rev(zi.rows, zi.cols);
    for (int i = 0; i < zi.rows; ++i)
        for (int j = 0; j < zi.cols; ++j)
            rev.at(i, j) = zi.at(i, zi.cols - 1 - j);
    ZMat h = hnf_basis(rev);
    QMat out(h.rows, h.cols);
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < h.cols; ++j)
            out.at(h.rows - 1 - i, h.cols - 1 - j) =
                make_rational(h.at(i, j), den);
    return out;
}

// Dedekind's criterion: is Z[theta] p-maximal?
bool dedekind_p_maximal(const IntPoly& g, const Integer& p)
{
    modp::Poly gp = modp::reduce(g, p);
    auto factors = modp::squarefree_decomposition(gp, p);
    // g* = prod g_i (radical), h* = g/g*
    modp::Poly gstar{1};
    for (auto& [gi, e] : factors)
        gstar = modp::mul(gstar, gi, p);
    modp::Poly hstar, rem;
    modp::divmod(gp, gstar, p, hstar, rem);
    assert(modp::is_zero(rem));
    // T = (lift(g*)*lift(h*) - g)/p mod p
    IntPoly prod = mul(modp::lift(gstar), modp::lift(hstar));
    IntPoly diff = sub(prod, g);
    std::vector<Integer> tc(diff.c.size());
    for (size_t i = 0; i < diff.c.size(); ++i) {
        assert(diff.c[i] % p == 0);
        tc[i] = diff.c[i] / p;
    }
    modp::Poly t = modp::reduce(IntPoly(std::move(tc)), p);
    modp::Poly d = modp::gcd(modp::gcd(t, gstar, p), hstar, p);
    return modp::degree(d) == 0;
}

} // namespace

Rational FieldElement::rational_value() const
{
    assert(is_rational());
    return coords.empty() ? Rational(0) : coords[0];
}

bool FieldElement::operator==(const FieldElement& o) const
{
    return field->same_field(*o.field) && coords == o.coords;
}

FieldPtr NumberField::create(const MinimalPolynomial& g, int degree_cap)
{
    return create(g.poly(), degree_cap);
}

FieldPtr NumberField::create(const IntPoly& g, int degree_cap)
{
    int n = g.degree();
    if (n < 1)
        throw std::invalid_argument("defining polynomial must be nonconstant");
    if (n > degree_cap)
        throw std::invalid_argument("field degree exceeds the configured cap");
    if (g.lead() != 1)
        throw std::invalid_argument("defining polynomial must be monic");
    if (n > 1) {
        auto irr = is_irreducible_over_q(g);
        if (!irr.irreducible)
            throw NotIrreducibleError(std::move(*irr.witness));
    }

    auto K = std::shared_ptr<NumberField>(new NumberField());
    K->poly_ = g;
    K->degree_ = n;

    // theta^k reductions for k up to 2n-2
    K->theta_pows_.resize(std::max(2 * n - 1, 1));
    for (int k = 0; k < n; ++k) {
        std::vector<Integer> row(n);
        row[k] = 1;
        K->theta_pows_[k] = std::move(row);
    }
    for (int k = n; k <= 2 * n - 2; ++k) {
        // theta^k = theta * theta^(k-1) reduced via g
        const auto& prev = K->theta_pows_[k - 1];
        std::vector<Integer> row(n + 1);
        for (int i = 0; i < n; ++i)
            row[i + 1] = prev[i];
        Integer top = row[n];
        if (top != 0)
            for (int i = 0; i < n; ++i)
                row[i] -= top * g.c[i];
        row.resize(n);
        K->theta_pows_[k] = std::move(row);
    }

    K->poly_disc_ = n > 1 ? algden::discriminant(g) : Integer(1);
    if (K->poly_disc_ == 0)
        throw std::logic_error("irreducible polynomial with zero discriminant");

    Order order{QMat::identity(n), QMat::identity(n)};
    if (n > 1) {
        for (auto& [p, e] : factorize(abs(K->poly_disc_)).factors) {
            if (e < 2)
                continue;
            if (dedekind_p_maximal(g, p))
                continue;
            int m = 1;
            Integer pm = p;
            while (pm < n) {
                pm *= p;
                ++m;
            }
            for (;;) {
                MultTable mt = mult_table(g, K->theta_pows_, order);
                // identity in order coords
                std::vector<Rational> onev(n);
                onev[0] = 1;
                auto onec = mul_vec(onev, order.winv);
                std::vector<Integer> one(n);
                for (int i = 0; i < n; ++i) {
                    assert(is_integer(onec[i]));
                    one[i] = mod_floor(numer(onec[i]), p);
                }
                PMat frob = frobenius_matrix(mt, one, p);
                PMat fm = frob;
                for (int k = 1; k < m; ++k)
                    fm = p_mul(fm, frob, p);
                PMat rad = p_kernel(fm, p);
                // I_p = pO + lifts of radical (order coords)
                ZMat ivec(n + rad.rows, n);
                for (int i = 0; i < n; ++i)
                    ivec.at(i, i) = p;
                for (int i = 0; i < rad.rows; ++i)
                    for (int j = 0; j < n; ++j)
                        ivec.at(n + i, j) = rad.at(i, j);
                ZMat u = hnf_basis(ivec);
                assert(u.rows == n);
                QMat uq = to_qmat(u);
                QMat uinv = inverse(uq);
                // multiplier ring: u in O/pO with u * I_p inside p*I_p
                PMat big(n, n * n);
                for (int j = 0; j < n; ++j) {
                    // mult matrix of v_j = row j of u
                    QMat mj(n, n);
                    for (int i = 0; i < n; ++i)
                        for (int l = 0; l < n; ++l) {
                            Rational s = 0;
                            for (int k = 0; k < n; ++k)
                                if (u.at(j, k) != 0)
                                    s += Rational(u.at(j, k) * mt.t[i].at(k, l));
                            mj.at(i, l) = s;
                        }
                    QMat phi = mul(mj, uinv);
                    for (int i = 0; i < n; ++i)
                        for (int l = 0; l < n; ++l) {
                            if (!is_integer(phi.at(i, l)))
                                throw std::logic_error("radical is not an ideal");
                            big.at(i, j * n + l) =
                                mod_floor(numer(phi.at(i, l)), p);
                        }
                }
                PMat ker = p_kernel(big, p);
                if (ker.rows == 0)
                    break;
                // enlarge: adjoin (1/p) * (kernel lifts in power coords)
                QMat stacked(n + ker.rows, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        stacked.at(i, j) = order.w.at(i, j);
                for (int i = 0; i < ker.rows; ++i) {
                    std::vector<Rational> oc(n);
                    for (int j = 0; j < n; ++j)
                        oc[j] = Rational(ker.at(i, j));
                    auto pc = mul_vec(oc, order.w);
                    for (int j = 0; j < n; ++j)
                        stacked.at(n + i, j) = pc[j] / Rational(p);
                }
                order.w = lattice_hnf(stacked);
                order.winv = inverse(order.w);
            }
        }
    }

    K->basis_ = order.w;
    K->basis_inv_ = order.winv;
    // index^2 * disc = poly_disc; det(basis) = 1/index
    QMat w = K->basis_;
    ZMat wz;
    Integer wd;
    clear_denominators(w, wz, wd);
    Integer dz = det(wz);
    Integer dwn = pow(wd, static_cast<unsigned long>(n));
    // |det| = |dz| / wd^n = 1/index
    assert(dz != 0);
    if (dwn % abs(dz) != 0)
        throw std::logic_error("non-integral order index");
    K->index_ = dwn / abs(dz);
    K->disc_ = K->poly_disc_ / (K->index_ * K->index_);
    K->r1_ = n > 1 ? real_root_count(g) : 1;
    K->r2_ = (n - K->r1_) / 2;

    // closure sanity: products of basis elements have integral coordinates
    if (n > 1)
        mult_table(g, K->theta_pows_, order);
    return K;
}

FieldPtr NumberField::rationals()
{
    static const FieldPtr q = create(IntPoly({Integer(0), Integer(1)}), 64);
    return q;
}

FieldElement NumberField::zero() const
{
    return {shared_from_this(), std::vector<Rational>(degree_)};
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::gen() const
{
    std::vector<Rational> c(degree_);
    if (degree_ == 1) {
        // theta is the rational root of the degree-1 defining polynomial
        c[0] = -Rational(poly_.c[0]);
    } else {
        c[1] = 1;
    }
    return {shared_from_this(), std::move(c)};
}

FieldElement NumberField::from_rational(const Rational& q) const
{
    std::vector<Rational> c(degree_);
    c[0] = q;
    return {shared_from_this(), std::move(c)};
}

FieldElement NumberField::element(std::vector<Rational> coords) const
{
    if (int(coords.size()) != degree_)
        throw std::invalid_argument("coordinate length mismatch");
    return {shared_from_this(), std::move(coords)};
}

FieldElement NumberField::from_integral_coords(const std::vector<Integer>& v) const
{
    std::vector<Rational> q(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        q[i] = Rational(v[i]);
    return from_integral_coords(q);
}

FieldElement NumberField::from_integral_coords(const std::vector<Rational>& v) const
{
    if (int(v.size()) != degree_)
        throw std::invalid_argument("coordinate length mismatch");
    return {shared_from_this(), mul_vec(v, basis_)};
}

const std::vector<Integer>& NumberField::theta_power(int k) const
{
    return theta_pows_.at(k);
}

namespace {

void check_same(const FieldElement& a, const FieldElement& b)
{
    if (!a.field->same_field(*b.field))
        throw std::invalid_argument("elements of different fields");
}

} // namespace

FieldElement add(const FieldElement& a, const FieldElement& b)
{
    check_same(a, b);
    std::vector<Rational> c(a.coords.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coords[i] + b.coords[i];
    return {a.field, std::move(c)};
}

FieldElement sub(const FieldElement& a, const FieldElement& b)
{
    check_same(a, b);
    std::vector<Rational> c(a.coords.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coords[i] - b.coords[i];
    return {a.field, std::move(c)};
}

FieldElement neg(const FieldElement& a)
{
    std::vector<Rational> c(a.coords.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = -a.coords[i];
    return {a.field, std::move(c)};
}

FieldElement mul(const FieldElement& a, const Rational& k)
{
    std::vector<Rational> c(a.coords.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coords[i] * k;
    return {a.field, std::move(c)};
}

FieldElement mul(const FieldElement& a, const FieldElement& b)
{
    check_same(a, b);
    const NumberField& K = *a.field;
    int n = K.degree();
    if (n == 1)
        return {a.field, {a.coords[0] * b.coords[0]}};
    std::vector<Rational> conv(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (a.coords[i] == 0)
            continue;
        for (int j = 0; j < n; ++j)
            if (b.coords[j] != 0)
                conv[i + j] += a.coords[i] * b.coords[j];
    }
    std::vector<Rational> out(n);
    for (int k = 0; k < n; ++k)
        out[k] = conv[k];
    for (int k = n; k <= 2 * n - 2; ++k) {
        if (conv[k] == 0)
            continue;
        const auto& red = K.theta_power(k);
        for (int l = 0; l < n; ++l)
            if (red[l] != 0)
                out[l] += conv[k] * Rational(red[l]);
    }
    return {a.field, std::move(out)};
}

FieldElement inverse(const FieldElement& a)
{
    if (a.is_zero())
        throw std::domain_error("inverse of zero");
    const NumberField& K = *a.field;
    if (K.degree() == 1)
        return {a.field, {1 / a.coords[0]}};
    // extended euclid of a's polynomial with g over Q
    RatPoly r0 = to_rat(K.defining_poly());
    RatPoly r1(std::vector<Rational>(a.coords));
    RatPoly s0, s1{std::vector<Rational>{Rational(1)}};
    while (true) {
        RatPoly q, r;
        divmod(r0, r1, q, r);
        if (r.is_zero()) {
            assert(r1.degree() == 0);
            RatPoly inv = scale(s1, 1 / r1.c[0]);
            std::vector<Rational> c(K.degree());
            for (int i = 0; i <= inv.degree(); ++i)
                c[i] = inv.c[i];
            return {a.field, std::move(c)};
        }
        RatPoly s2 = sub(s0, mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
}

FieldElement div(const FieldElement& a, const FieldElement& b)
{
    return mul(a, inverse(b));
}

FieldElement power(const FieldElement& a, long e)
{
    if (e < 0)
        return power(inverse(a), -e);
    FieldElement r = a.field->one();
    FieldElement base = a;
    long k = e;
    while (k > 0) {
        if (k & 1)
            r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::vector<Rational> integral_coords(const FieldElement& a)
{
    return mul_vec(a.coords, a.field->basis_inverse());
}

bool is_integral(const FieldElement& a)
{
    for (const auto& c : integral_coords(a))
        if (!is_integer(c))
            return false;
    return true;
}

Integer integral_denominator(const FieldElement& a)
{
    Integer d = 1;
    for (const auto& c : integral_coords(a))
        d = lcm(d, denom(c));
    return d;
}

QMat mult_matrix(const FieldElement& a)
{
    const NumberField& K = *a.field;
    int n = K.degree();
    QMat m(n, n);
    FieldElement cur = a;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m.at(i, j) = cur.coords[j];
        if (i + 1 < n) {
            // multiply by theta
            std::vector<Rational> next(n + 1);
            for (int j = 0; j < n; ++j)
                next[j + 1] = cur.coords[j];
            Rational top = next[n];
            next.resize(n);
            if (top != 0) {
                const IntPoly& g = K.defining_poly();
                for (int j = 0; j < n; ++j)
                    next[j] -= top * Rational(g.c[j]);
            }
            cur = {a.field, std::move(next)};
        }
    }
    return m;
}

namespace {

Rational qdet(const QMat& m)
{
    ZMat z;
    Integer den;
    clear_denominators(m, z, den);
    Integer d = det(z);
    return make_rational(d, pow(den, static_cast<unsigned long>(m.rows)));
}

} // namespace

Rational norm(const FieldElement& a) { return qdet(mult_matrix(a)); }

Rational trace(const FieldElement& a)
{
    QMat m = mult_matrix(a);
    Rational t = 0;
    for (int i = 0; i < m.rows; ++i)
        t += m.at(i, i);
    return t;
}

RatPoly min_poly_q(const FieldElement& a)
{
    const int n = a.field->degree();
    // rows: coords of a^0, a^1, ..., stop at first linear dependency
    FieldElement cur = a.field->one();
    std::vector<FieldElement> pows;
    for (int k = 0;; ++k) {
        pows.push_back(cur);
        QMat m(k + 1, n);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = pows[i].coords[j];
        if (rank(m) < k + 1) {
            QMat ns = nullspace_left(m);
            assert(ns.rows >= 1);
            std::vector<Rational> c(k + 1);
            for (int i = 0; i <= k; ++i)
                c[i] = ns.at(0, i);
            RatPoly mp(std::move(c));
            return monic(mp);
        }
        cur = mul(cur, a);
    }
}

int degree_over_q(const FieldElement& a) { return min_poly_q(a).degree(); }

FieldElement eval_at(const RatPoly& f, const FieldElement& a)
{
    FieldElement r = a.field->zero();
    for (int i = f.degree(); i >= 0; --i) {
        r = mul(r, a);
        r = add(r, a.field->from_rational(f.c[i]));
    }
    return r;
}

} // namespace algden
