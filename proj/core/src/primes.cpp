#include "algden/primes.hpp"

#include <algorithm>
#include <numeric>

namespace algden {

Integer PrimeFactorization::product() const
{
    Integer r = 1;
    for (auto& [p, e] : factors)
        r *= pow(p, e);
    return r;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod64(u64 a, u64 e, u64 m)
{
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 w : kWitnesses) {
        if (n == w)
            return true;
        if (n % w == 0)
            return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 w : kWitnesses) {
        u64 x = powmod64(w, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool miller_rabin_mpz(const Integer& n)
{
    Integer d = n - 1;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (u64 w : kWitnesses) {
        Integer a(static_cast<unsigned long>(w));
        if (n == a)
            return true;
        if (mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t()))
            return false;
        Integer x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

const Integer kDeterministicBound("3317044064679887385961980"); // ~3.3e24

constexpr u64 kTrialBound = 1000000;

// returns a nontrivial factor of odd composite n, or 0 on effort exhaustion
u64 brent_rho64(u64 n, u64 budget)
{
    for (u64 c = 1;; ++c) {
        u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        u64 spent = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = (mulmod64(y, y, n) + c) % n;
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 lim = std::min<u64>(128, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod64(y, y, n) + c) % n;
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += lim;
                spent += lim;
                if (spent > budget)
                    return 0;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (mulmod64(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
        if (c > 64)
            return 0;
    }
}

Integer brent_rho_mpz(const Integer& n, u64 budget)
{
    for (u64 c = 1; c <= 64; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        u64 r = 1, spent = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = (y * y + c) % n;
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 lim = std::min<u64>(128, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += lim;
                spent += lim;
                if (spent > budget)
                    return 0;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
    return 0;
}

void factor_rec(const Integer& n, u64 budget, std::vector<Integer>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer f;
    if (n.fits_ulong_p()) {
        u64 g = brent_rho64(n.get_ui(), budget);
        f = Integer(static_cast<unsigned long>(g));
    } else {
        f = brent_rho_mpz(n, budget);
    }
    if (f == 0)
        throw FactorError(n);
    factor_rec(f, budget, out);
    factor_rec(n / f, budget, out);
}

} // namespace

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    if (n.fits_ulong_p())
        return miller_rabin64(n.get_ui());
    if (!miller_rabin_mpz(n))
        return false;
    if (n < kDeterministicBound)
        return true;
    // beyond the proven witness range, require a BPSW-style confirmation too
    return mpz_probab_prime_p(n.get_mpz_t(), 0) != 0;
}

PrimeFactorization factorize(const Integer& n, int effort)
{
    if (n < 1)
        throw std::domain_error("factorize requires n >= 1");
    PrimeFactorization result;
    if (n == 1)
        return result;

    Integer m = n;
    std::vector<Integer> primes;

    // trial division, u64 fast path
    if (m.fits_ulong_p()) {
        u64 v = m.get_ui();
        for (u64 d : {u64(2), u64(3), u64(5)}) {
            while (v % d == 0) {
                primes.emplace_back(static_cast<unsigned long>(d));
                v /= d;
            }
        }
        for (u64 d = 7; d <= kTrialBound && d * d <= v; d += 6) {
            for (u64 dd : {d, d + 4}) {
                while (v % dd == 0) {
                    primes.emplace_back(static_cast<unsigned long>(dd));
                    v /= dd;
                }
            }
        }
        m = Integer(static_cast<unsigned long>(v));
        if (v > 1 && v <= kTrialBound * kTrialBound) {
            // below the trial bound squared the cofactor is prime
            primes.push_back(m);
            m = 1;
        }
    } else {
        for (u64 d : {u64(2), u64(3), u64(5)}) {
            while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                primes.emplace_back(static_cast<unsigned long>(d));
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            }
        }
        for (u64 d = 7; d <= kTrialBound; d += 6) {
            for (u64 dd : {d, d + 4}) {
                while (mpz_divisible_ui_p(m.get_mpz_t(), dd)) {
                    primes.emplace_back(static_cast<unsigned long>(dd));
                    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), dd);
                }
            }
            if (m.fits_ulong_p())
                break;
        }
        if (m.fits_ulong_p() && m > 1) {
            u64 v = m.get_ui();
            for (u64 d = 7; d <= kTrialBound && d * d <= v; d += 6) {
                for (u64 dd : {d, d + 4}) {
                    while (v % dd == 0) {
                        primes.emplace_back(static_cast<unsigned long>(dd));
                        v /= dd;
                    }
                }
            }
            m = Integer(static_cast<unsigned long>(v));
            if (v > 1 && v <= kTrialBound * kTrialBound) {
                primes.push_back(m);
                m = 1;
            }
        }
    }

    if (m > 1) {
        u64 budget = u64(2000000) * std::max(effort, 1);
        factor_rec(m, budget, primes);
    }

    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i])
            ++j;
        result.factors.emplace_back(primes[i], int(j - i));
        i = j;
    }
    return result;
}

std::vector<Integer> divisors(const PrimeFactorization& f)
{
    std::vector<Integer> ds{1};
    for (auto& [p, e] : f.factors) {
        size_t base = ds.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i)
                ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Integer squarefree_part(const Integer& n, int effort)
{
    if (n == 0)
        return 0;
    PrimeFactorization f = factorize(abs(n), effort);
    Integer r = sign(n);
    for (auto& [p, e] : f.factors)
        if (e % 2 == 1)
            r *= p;
    return r;
}

int vp(const Integer& n, const Integer& p)
{
    if (n == 0)
        throw std::domain_error("valuation of zero");
    Integer q;
    unsigned long v = mpz_remove(q.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return static_cast<int>(v);
}

int vp(const Rational& r, const Integer& p)
{
    if (r == 0)
        throw std::domain_error("valuation of zero");
    int v = vp(numer(r), p);
    if (v > 0)
        return v;
    return -vp(denom(r), p);
}

Integer next_prime(const Integer& n)
{
    Integer c = n < 2 ? Integer(2) : n;
    while (!is_prime(c))
        ++c;
    return c;
}

} // namespace algden
