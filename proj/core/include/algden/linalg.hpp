#pragma once

#include "algden/integer.hpp"

#include <optional>
#include <vector>

namespace algden {

// Dense matrices over Z and Q. Vectors are rows; lattices are integer row
// spans; x*M composes on the left.
struct ZMat {
    int rows = 0, cols = 0;
    std::vector<Integer> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    Integer& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Integer& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static ZMat identity(int n);
    bool operator==(const ZMat&) const = default;
};

struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    Rational& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static QMat identity(int n);
    bool operator==(const QMat&) const = default;
};

ZMat mul(const ZMat& x, const ZMat& y);
QMat mul(const QMat& x, const QMat& y);
std::vector<Rational> mul_vec(const std::vector<Rational>& v, const QMat& m);
std::vector<Integer> mul_vec(const std::vector<Integer>& v, const ZMat& m);

QMat to_qmat(const ZMat& m);
// Splits a rational matrix as (1/den) * integer matrix with den > 0 minimal.
void clear_denominators(const QMat& m, ZMat& out, Integer& den);

// Row Hermite normal form. h = t*a with t unimodular; the first `rank` rows
// of h are the echelon basis (positive pivots, entries above a pivot reduced
// into [0, pivot)), remaining rows are zero. Rows of t below `rank` form a
// basis of the left kernel lattice of a.
struct HnfResult {
    ZMat h;
    ZMat t;
    int rank = 0;
    std::vector<int> pivot_cols;
};

HnfResult hnf(const ZMat& a, bool with_transform = false);

// Echelon rows only (zero rows dropped); unique per row lattice.
ZMat hnf_basis(const ZMat& a);

ZMat kernel(const ZMat& a);

// Coordinates x (integer) with x * (echelon rows of hr) = v, if any.
std::optional<std::vector<Integer>> hnf_solve(const HnfResult& hr,
                                              const std::vector<Integer>& v);

bool lattice_contains(const HnfResult& hr, const std::vector<Integer>& v);

// Basis of rowspan(a) /\ rowspan(b), both in the same ambient dimension.
ZMat lattice_intersect(const ZMat& a, const ZMat& b);

// Smith normal form: s = u*a*v with u, v unimodular, s diagonal with
// s[i][i] | s[i+1][i+1].
struct SnfResult {
    ZMat s;
    ZMat u;
    ZMat v;
    int rank = 0;
};

SnfResult snf(const ZMat& a);

// Integer solutions of y*a = b; returns one solution if it exists.
std::optional<std::vector<Integer>> solve_integer(const ZMat& a,
                                                  const std::vector<Integer>& b);

Integer det(const ZMat& m); // Bareiss, exact

// Rational Gaussian elimination utilities.
int rank(const QMat& m);
QMat inverse(const QMat& m); // throws if singular
std::optional<std::vector<Rational>> solve_left(const QMat& a,
                                                const std::vector<Rational>& b);
// Basis of {x : x*a = 0} over Q.
QMat nullspace_left(const QMat& a);

} // namespace algden
