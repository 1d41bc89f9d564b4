#include "algden/tuples.hpp"

#include <cassert>
#include <stdexcept>

namespace algden {

std::string to_string(TupleViolation v)
{
    switch (v) {
    case TupleViolation::none: return "none";
    case TupleViolation::denom_divides_lead: return "d-ndiv-c";
    case TupleViolation::lead_divides_denom_pow: return "c-ndiv-d^n";
    case TupleViolation::tail_divides_lead: return "e-ndiv-c";
    case TupleViolation::lead_divides_mixed: return "c-ndiv-d^(n-1)e";
    case TupleViolation::prime_condition: return "prime-condition";
    }
    return "?";
}

TupleCertificate is_realizable(const TupleQuery& q)
{
    if (q.lead < 1 || q.denom < 1 || q.tail_gcd < 1 || q.degree < 1)
        throw std::invalid_argument("tuple entries must be positive");

    TupleCertificate cert;
    if (q.degree == 1) {
        cert.realizable = q.lead == q.denom && q.lead == q.tail_gcd;
        if (!cert.realizable)
            cert.violation = TupleViolation::denom_divides_lead;
        return cert;
    }

    auto fail = [&](TupleViolation v) {
        cert.realizable = false;
        cert.violation = v;
        return cert;
    };
    unsigned long n = static_cast<unsigned long>(q.degree);
    if (q.lead % q.denom != 0)
        return fail(TupleViolation::denom_divides_lead);
    if (pow(q.denom, n) % q.lead != 0)
        return fail(TupleViolation::lead_divides_denom_pow);
    if (q.lead % q.tail_gcd != 0)
        return fail(TupleViolation::tail_divides_lead);
    if (pow(q.denom, n - 1) * q.tail_gcd % q.lead != 0)
        return fail(TupleViolation::lead_divides_mixed);

    for (auto& [p, vc] : factorize(q.lead).factors) {
        int vd = vp(q.denom, p);
        int ve = vp(q.tail_gcd, p);
        bool slack = vd + ve <= vc;
        bool saturated = vc == q.degree * vd;
        // ceiling alternative: v_p(denom) is forced to ceil(v_p(lead)/n) by
        // the constant-term slot of the denominator formula; this is the
        // weakest condition under which the witness construction recomputes
        // v_p(denom) exactly (the equality variant rejects e.g. (2,2,2,2),
        // which 2x^2+2x+1 realizes)
        bool ceiling = vd == (vc + q.degree - 1) / q.degree;
        cert.diagnostics.push_back({p, slack, saturated, ceiling});
        if (!slack && !ceiling) {
            cert.realizable = false;
            cert.violation = TupleViolation::prime_condition;
            cert.violating_prime = p;
            return cert;
        }
    }
    cert.realizable = true;
    return cert;
}

MinimalPolynomial construct_witness(const TupleQuery& q)
{
    TupleCertificate cert = is_realizable(q);
    if (!cert.realizable)
        throw std::invalid_argument("tuple is not realizable: "
                                    + to_string(cert.violation));

    if (q.degree == 1) {
        // lead*x - 1 has denom = tail_gcd = lead
        return MinimalPolynomial::trusted(IntPoly({Integer(-1), q.lead}),
                                          "degree one");
    }

    // smallest prime not dividing lead
    Integer eis = 2;
    while (q.lead % eis == 0)
        eis = next_prime(eis + 1);

    const int n = q.degree;
    std::vector<Integer> c(n + 1);
    c[n] = q.lead;
    c[0] = eis;
    auto lead_factors = factorize(q.lead).factors;
    for (int i = 1; i < n; ++i) {
        Integer a = eis;
        for (auto& [p, vc] : lead_factors) {
            int vd = vp(q.denom, p);
            int ve = vp(q.tail_gcd, p);
            int v = std::max(vc - (n - i) * vd, ve);
            if (v > 0)
                a *= pow(p, static_cast<unsigned long>(v));
        }
        c[i] = a;
    }
    IntPoly w(std::move(c));
    assert(is_eisenstein_at(w, eis));
    MinimalPolynomial mp = MinimalPolynomial::trusted(std::move(w), "eisenstein");
    Invariants inv = invariants(mp);
    if (inv.lead != q.lead || inv.denom != q.denom || inv.tail_gcd != q.tail_gcd
        || inv.degree != q.degree)
        throw std::logic_error("witness invariants do not match the query");
    return mp;
}

TupleCertificate certify(const TupleQuery& q)
{
    TupleCertificate cert = is_realizable(q);
    if (cert.realizable) {
        MinimalPolynomial w = construct_witness(q);
        if (q.degree >= 2) {
            Integer eis = 2;
            while (q.lead % eis == 0)
                eis = next_prime(eis + 1);
            cert.eisenstein_prime = eis;
        }
        cert.witness = std::move(w);
    }
    return cert;
}

std::set<TupleQuery> bruteforce_realized_tuples(int degree, const Integer& height)
{
    if (degree < 2 || degree > 3)
        throw std::invalid_argument("brute-force sweep supports degree 2 or 3");
    std::set<TupleQuery> out;
    long h = height.get_si();

    std::vector<Integer> coeffs(degree + 1);
    // enumerate a_n in [1, h], others in [-h, h]
    std::function<void(int)> rec = [&](int pos) {
        if (pos < 0) {
            IntPoly f{std::vector<Integer>(coeffs)};
            if (f.degree() != degree || content(f) != 1)
                return;
            // cheap irreducibility at low degree: no rational roots, and for
            // degree 2 a non-square discriminant
            if (f.coeff(0) == 0)
                return;
            if (degree == 2) {
                Integer disc = f.c[1] * f.c[1] - 4 * f.c[2] * f.c[0];
                if (is_square(disc))
                    return;
            } else {
                auto r = is_irreducible_over_q(f);
                if (!r.irreducible)
                    return;
            }
            Invariants inv =
                invariants(MinimalPolynomial::trusted(std::move(f), "sweep"));
            out.insert({inv.lead, inv.denom, inv.tail_gcd, degree});
            return;
        }
        long lo = pos == degree ? 1 : -h;
        for (long v = lo; v <= h; ++v) {
            coeffs[pos] = v;
            rec(pos - 1);
        }
    };
    rec(degree);
    return out;
}

void atlas(const AtlasBounds& bounds,
           const std::function<void(const TupleQuery&, const TupleCertificate&)>& sink)
{
    Integer max_d = bounds.max_denom > 0 ? bounds.max_denom : bounds.max_lead;
    Integer max_e = bounds.max_tail > 0 ? bounds.max_tail : bounds.max_lead;
    for (int n = bounds.degree_min; n <= bounds.degree_max; ++n)
        for (Integer c = 1; c <= bounds.max_lead; ++c)
            for (Integer d = 1; d <= max_d; ++d)
                for (Integer e = 1; e <= max_e; ++e) {
                    TupleQuery q{c, d, e, n};
                    sink(q, certify(q));
                }
}

} // namespace algden
