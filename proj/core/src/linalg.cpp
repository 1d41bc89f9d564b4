#include "algden/linalg.hpp"

#include <cassert>

namespace algden {

ZMat ZMat::identity(int n)
{
    ZMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMat QMat::identity(int n)
{
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

ZMat mul(const ZMat& x, const ZMat& y)
{
    assert(x.cols == y.rows);
    ZMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Integer& xik = x.at(i, k);
            if (xik == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

QMat mul(const QMat& x, const QMat& y)
{
    assert(x.cols == y.rows);
    QMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& xik = x.at(i, k);
            if (xik == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

std::vector<Rational> mul_vec(const std::vector<Rational>& v, const QMat& m)
{
    assert(int(v.size()) == m.rows);
    std::vector<Rational> r(m.cols);
    for (int k = 0; k < m.rows; ++k) {
        if (v[k] == 0)
            continue;
        for (int j = 0; j < m.cols; ++j)
            r[j] += v[k] * m.at(k, j);
    }
    return r;
}

std::vector<Integer> mul_vec(const std::vector<Integer>& v, const ZMat& m)
{
    assert(int(v.size()) == m.rows);
    std::vector<Integer> r(m.cols);
    for (int k = 0; k < m.rows; ++k) {
        if (v[k] == 0)
            continue;
        for (int j = 0; j < m.cols; ++j)
            r[j] += v[k] * m.at(k, j);
    }
    return r;
}

QMat to_qmat(const ZMat& m)
{
    QMat q(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i)
        q.a[i] = Rational(m.a[i]);
    return q;
}

void clear_denominators(const QMat& m, ZMat& out, Integer& den)
{
    den = 1;
    for (const Rational& q : m.a)
        den = lcm(den, denom(q));
    out = ZMat(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i)
        out.a[i] = numer(m.a[i]) * (den / denom(m.a[i]));
}

namespace {

void swap_rows(ZMat& m, int i, int j)
{
    if (i == j)
        return;
    for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(i, c), m.at(j, c));
}

void add_row_multiple(ZMat& m, int dst, int src, const Integer& f)
{
    if (f == 0)
        return;
    for (int c = 0; c < m.cols; ++c)
        m.at(dst, c) += f * m.at(src, c);
}

void negate_row(ZMat& m, int i)
{
    for (int c = 0; c < m.cols; ++c)
        m.at(i, c) = -m.at(i, c);
}

} // namespace

HnfResult hnf(const ZMat& a, bool with_transform)
{
    HnfResult r;
    r.h = a;
    ZMat& h = r.h;
    if (with_transform)
        r.t = ZMat::identity(a.rows);

    auto do_add = [&](int dst, int src, const Integer& f) {
        add_row_multiple(h, dst, src, f);
        if (with_transform)
            add_row_multiple(r.t, dst, src, f);
    };
    auto do_swap = [&](int i, int j) {
        swap_rows(h, i, j);
        if (with_transform)
            swap_rows(r.t, i, j);
    };
    auto do_neg = [&](int i) {
        negate_row(h, i);
        if (with_transform)
            negate_row(r.t, i);
    };

    int row = 0;
    for (int col = 0; col < h.cols && row < h.rows; ++col) {
        // eliminate below `row` in `col` by repeated remaindering
        for (;;) {
            int piv = -1;
            for (int i = row; i < h.rows; ++i) {
                if (h.at(i, col) == 0)
                    continue;
                if (piv < 0 || abs(h.at(i, col)) < abs(h.at(piv, col)))
                    piv = i;
            }
            if (piv < 0)
                break;
            do_swap(row, piv);
            bool clean = true;
            for (int i = row + 1; i < h.rows; ++i) {
                if (h.at(i, col) == 0)
                    continue;
                Integer q = floor_div(h.at(i, col), h.at(row, col));
                do_add(i, row, -q);
                if (h.at(i, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h.at(row, col) == 0)
            continue;
        if (h.at(row, col) < 0)
            do_neg(row);
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < row; ++i) {
            Integer q = floor_div(h.at(i, col), h.at(row, col));
            do_add(i, row, -q);
        }
        r.pivot_cols.push_back(col);
        ++row;
    }
    r.rank = row;
    return r;
}

ZMat hnf_basis(const ZMat& a)
{
    HnfResult r = hnf(a);
    ZMat b(r.rank, a.cols);
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < a.cols; ++j)
            b.at(i, j) = r.h.at(i, j);
    return b;
}

ZMat kernel(const ZMat& a)
{
    HnfResult r = hnf(a, true);
    ZMat k(a.rows - r.rank, a.rows);
    for (int i = r.rank; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j)
            k.at(i - r.rank, j) = r.t.at(i, j);
    return hnf_basis(k);
}

std::optional<std::vector<Integer>> hnf_solve(const HnfResult& hr,
                                              const std::vector<Integer>& v)
{
    std::vector<Integer> rem = v;
    std::vector<Integer> coeff(hr.rank);
    for (int i = 0; i < hr.rank; ++i) {
        int pc = hr.pivot_cols[i];
        const Integer& piv = hr.h.at(i, pc);
        if (rem[pc] % piv != 0)
            return std::nullopt;
        Integer q = rem[pc] / piv;
        coeff[i] = q;
        if (q != 0)
            for (int j = 0; j < hr.h.cols; ++j)
                rem[j] -= q * hr.h.at(i, j);
    }
    for (const Integer& x : rem)
        if (x != 0)
            return std::nullopt;
    return coeff;
}

bool lattice_contains(const HnfResult& hr, const std::vector<Integer>& v)
{
    return hnf_solve(hr, v).has_value();
}

ZMat lattice_intersect(const ZMat& a, const ZMat& b)
{
    assert(a.cols == b.cols);
    // rows (u | v) with u*a = v*b; the intersection is spanned by the u*a
    ZMat stacked(a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            stacked.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            stacked.at(a.rows + i, j) = -b.at(i, j);
    ZMat ker = kernel(stacked);
    ZMat gens(ker.rows, a.cols);
    for (int i = 0; i < ker.rows; ++i) {
        std::vector<Integer> u(a.rows);
        for (int j = 0; j < a.rows; ++j)
            u[j] = ker.at(i, j);
        std::vector<Integer> w = mul_vec(u, a);
        for (int j = 0; j < a.cols; ++j)
            gens.at(i, j) = w[j];
    }
    return hnf_basis(gens);
}

SnfResult snf(const ZMat& a)
{
    SnfResult r;
    r.s = a;
    r.u = ZMat::identity(a.rows);
    r.v = ZMat::identity(a.cols);
    ZMat& s = r.s;

    auto add_col_multiple = [&](ZMat& m, int dst, int src, const Integer& f) {
        if (f == 0)
            return;
        for (int i = 0; i < m.rows; ++i)
            m.at(i, dst) += f * m.at(i, src);
    };
    auto swap_cols = [&](ZMat& m, int i, int j) {
        if (i == j)
            return;
        for (int k = 0; k < m.rows; ++k)
            std::swap(m.at(k, i), m.at(k, j));
    };

    int t = 0;
    int n = std::min(a.rows, a.cols);
    while (t < n) {
        // locate the smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < s.rows; ++i)
            for (int j = t; j < s.cols; ++j)
                if (s.at(i, j) != 0
                    && (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        swap_rows(s, t, pi);
        swap_rows(r.u, t, pi);
        swap_cols(s, t, pj);
        swap_cols(r.v, t, pj);

        bool again = false;
        for (int i = t + 1; i < s.rows; ++i) {
            Integer q = floor_div(s.at(i, t), s.at(t, t));
            add_row_multiple(s, i, t, -q);
            add_row_multiple(r.u, i, t, -q);
            if (s.at(i, t) != 0)
                again = true;
        }
        for (int j = t + 1; j < s.cols; ++j) {
            Integer q = floor_div(s.at(t, j), s.at(t, t));
            add_col_multiple(s, j, t, -q);
            add_col_multiple(r.v, j, t, -q);
            if (s.at(t, j) != 0)
                again = true;
        }
        if (again)
            continue;
        // divisibility fixup: s[t][t] must divide every later entry
        bool fixed = true;
        for (int i = t + 1; i < s.rows && fixed; ++i)
            for (int j = t + 1; j < s.cols && fixed; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    add_row_multiple(s, t, i, 1);
                    add_row_multiple(r.u, t, i, 1);
                    fixed = false;
                }
        if (!fixed)
            continue;
        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(r.u, t);
        }
        ++t;
    }
    r.rank = t;
    return r;
}

std::optional<std::vector<Integer>> solve_integer(const ZMat& a,
                                                  const std::vector<Integer>& b)
{
    HnfResult hr = hnf(a, true);
    auto coeff = hnf_solve(hr, b);
    if (!coeff)
        return std::nullopt;
    std::vector<Integer> y(a.rows);
    for (int i = 0; i < hr.rank; ++i)
        for (int j = 0; j < a.rows; ++j)
            y[j] += (*coeff)[i] * hr.t.at(i, j);
    return y;
}

Integer det(const ZMat& m)
{
    assert(m.rows == m.cols);
    int n = m.rows;
    if (n == 0)
        return 1;
    ZMat w = m;
    Integer prev = 1;
    int sgn = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0)
                return 0;
            swap_rows(w, k, p);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sgn > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

// returns (echelon form, pivot columns); reduced fully (RREF)
std::pair<QMat, std::vector<int>> rref(QMat m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int c = 0; c < m.cols; ++c)
            std::swap(m.at(row, c), m.at(piv, c));
        Rational inv = 1 / m.at(row, col);
        for (int c = 0; c < m.cols; ++c)
            m.at(row, c) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            Rational f = m.at(i, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(i, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

} // namespace

int rank(const QMat& m) { return int(rref(m).second.size()); }

QMat inverse(const QMat& m)
{
    assert(m.rows == m.cols);
    int n = m.rows;
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [red, piv] = rref(aug);
    if (int(piv.size()) < n || piv[n - 1] != n - 1)
        throw std::domain_error("matrix is singular");
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = red.at(i, n + j);
    return inv;
}

std::optional<std::vector<Rational>> solve_left(const QMat& a,
                                                const std::vector<Rational>& b)
{
    // x*a = b  <=>  a^T y = b^T; eliminate on [a^T | b^T]
    QMat aug(a.cols, a.rows + 1);
    for (int i = 0; i < a.cols; ++i) {
        for (int j = 0; j < a.rows; ++j)
            aug.at(i, j) = a.at(j, i);
        aug.at(i, a.rows) = b[i];
    }
    auto [red, piv] = rref(aug);
    std::vector<Rational> x(a.rows);
    for (size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] == a.rows)
            return std::nullopt; // inconsistent
        x[piv[k]] = red.at(int(k), a.rows);
    }
    return x;
}

QMat nullspace_left(const QMat& a)
{
    // transpose, reduce, read free-variable solutions
    QMat t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            t.at(j, i) = a.at(i, j);
    auto [red, piv] = rref(t);
    std::vector<bool> is_pivot(a.rows, false);
    for (int p : piv)
        is_pivot[p] = true;
    QMat basis(a.rows - int(piv.size()), a.rows);
    int bi = 0;
    for (int free = 0; free < a.rows; ++free) {
        if (is_pivot[free])
            continue;
        basis.at(bi, free) = 1;
        for (size_t k = 0; k < piv.size(); ++k)
            basis.at(bi, piv[k]) = -red.at(int(k), free);
        ++bi;
    }
    return basis;
}

} // namespace algden
