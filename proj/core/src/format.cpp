#include "algden/format.hpp"

#include <cctype>
#include <sstream>

namespace algden {

namespace {

// recursive-descent expression parser over a value type V
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := integer | 'x' | '(' expr ')' | '-' factor
template <typename V, typename Ops> struct Parser {
    const std::string& s;
    size_t pos = 0;
    Ops ops;

    explicit Parser(const std::string& text, Ops o) : s(text), ops(o) {}

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool peek(char c)
    {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c)
    {
        if (!peek(c))
            return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        std::string tok = pos < s.size() ? std::string(1, s[pos]) : "end of input";
        throw ParseError("unexpected '" + tok + "', " + what, pos);
    }

    Integer integer()
    {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            fail("expected a number");
        return Integer(s.substr(start, pos - start));
    }

    V base()
    {
        skip();
        if (eat('(')) {
            V v = expr();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (eat('-'))
            return ops.neg(factor());
        if (peek('x')) {
            ++pos;
            return ops.var();
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return ops.constant(integer());
        fail("expected a term");
    }

    V factor()
    {
        V v = base();
        skip();
        if (eat('^')) {
            Integer e = integer();
            if (e < 0 || e > 64)
                throw ParseError("exponent out of range", pos);
            return ops.pow(v, e.get_si());
        }
        return v;
    }

    V term()
    {
        V v = factor();
        for (;;) {
            if (eat('*'))
                v = ops.mul(v, factor());
            else if (eat('/'))
                v = ops.div(v, factor());
            else
                return v;
        }
    }

    V expr()
    {
        skip();
        bool negate = eat('-');
        V v = term();
        if (negate)
            v = ops.neg(v);
        for (;;) {
            if (eat('+'))
                v = ops.add(v, term());
            else if (eat('-'))
                v = ops.sub(v, term());
            else
                return v;
        }
    }

    V parse()
    {
        V v = expr();
        skip();
        if (pos != s.size())
            fail("trailing input");
        return v;
    }
};

struct PolyOps {
    RatPoly var() const
    {
        return RatPoly(std::vector<Rational>{Rational(0), Rational(1)});
    }
    RatPoly constant(const Integer& n) const
    {
        return RatPoly(std::vector<Rational>{Rational(n)});
    }
    RatPoly add(const RatPoly& a, const RatPoly& b) const { return algden::add(a, b); }
    RatPoly sub(const RatPoly& a, const RatPoly& b) const { return algden::sub(a, b); }
    RatPoly mul(const RatPoly& a, const RatPoly& b) const { return algden::mul(a, b); }
    RatPoly div(const RatPoly& a, const RatPoly& b) const
    {
        if (b.degree() != 0)
            throw ParseError("polynomial division is restricted to constants", 0);
        return scale(a, 1 / b.c[0]);
    }
    RatPoly neg(const RatPoly& a) const { return scale(a, Rational(-1)); }
    RatPoly pow(const RatPoly& a, long e) const
    {
        RatPoly r = constant(1);
        for (long i = 0; i < e; ++i)
            r = mul(r, a);
        return r;
    }
};

struct ElementOps {
    FieldPtr K;
    FieldElement var() const { return K->gen(); }
    FieldElement constant(const Integer& n) const
    {
        return K->from_rational(Rational(n));
    }
    FieldElement add(const FieldElement& a, const FieldElement& b) const
    {
        return algden::add(a, b);
    }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const
    {
        return algden::sub(a, b);
    }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const
    {
        return algden::mul(a, b);
    }
    FieldElement div(const FieldElement& a, const FieldElement& b) const
    {
        if (b.is_zero())
            throw ParseError("division by zero", 0);
        return algden::div(a, b);
    }
    FieldElement neg(const FieldElement& a) const { return algden::neg(a); }
    FieldElement pow(const FieldElement& a, long e) const
    {
        return power(a, e);
    }
};

RatPoly parse_coeff_list(const std::string& text)
{
    std::vector<Rational> coeffs;
    size_t pos = 1;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    for (;;) {
        skip();
        if (pos < text.size() && text[pos] == ']')
            break;
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size()
               && (std::isdigit(static_cast<unsigned char>(text[pos]))
                   || text[pos] == '/'))
            ++pos;
        if (start == pos)
            throw ParseError("expected a coefficient", start);
        Rational q(text.substr(start, pos - start));
        q.canonicalize();
        coeffs.push_back(q);
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos >= text.size() || text[pos] != ']')
        throw ParseError("expected ']'", pos);
    return RatPoly(std::move(coeffs));
}

} // namespace

RatPoly parse_poly(const std::string& text)
{
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i < text.size() && text[i] == '[')
        return parse_coeff_list(text.substr(i));
    Parser<RatPoly, PolyOps> p(text, PolyOps{});
    return p.parse();
}

FieldPtr parse_field(const std::string& text, int degree_cap)
{
    // expected shape: Q[x]/(poly)
    size_t i = 0;
    auto expect = [&](const std::string& lit) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (text.compare(i, lit.size(), lit) != 0)
            throw ParseError("expected '" + lit + "'", i);
        i += lit.size();
    };
    expect("Q[x]/(");
    size_t close = text.rfind(')');
    if (close == std::string::npos || close < i)
        throw ParseError("expected ')'", text.size());
    RatPoly g = parse_poly(text.substr(i, close - i));
    Integer den;
    IntPoly gi = clear_denominators(g, den);
    if (den != 1)
        throw ParseError("defining polynomial must have integer coefficients", i);
    return NumberField::create(gi, degree_cap);
}

FieldElement parse_element(const FieldPtr& K, const std::string& text)
{
    Parser<FieldElement, ElementOps> p(text, ElementOps{K});
    return p.parse();
}

std::string to_text(const Integer& n) { return n.get_str(); }

std::string to_text(const Rational& q)
{
    if (denom(q) == 1)
        return numer(q).get_str();
    return numer(q).get_str() + "/" + denom(q).get_str();
}

std::string poly_text(const RatPoly& f)
{
    // print with leading '-' handled uniformly
    std::ostringstream out;
    bool first = true;
    for (size_t k = f.c.size(); k-- > 0;) {
        const Rational& q = f.c[k];
        if (q == 0)
            continue;
        Rational a = q;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0)
                a = -a;
        }
        if (k == 0) {
            out << to_text(a);
            continue;
        }
        if (a != 1)
            out << to_text(a) << "*";
        out << "x";
        if (k > 1)
            out << "^" << k;
    }
    if (first)
        return "0";
    return out.str();
}

std::string poly_text(const IntPoly& f) { return poly_text(to_rat(f)); }

std::string element_text(const FieldElement& a)
{
    return poly_text(RatPoly(std::vector<Rational>(a.coords)));
}

std::string field_text(const FieldPtr& K)
{
    return "Q[x]/(" + poly_text(K->defining_poly()) + ")";
}

std::string prime_text(const PrimeIdeal& P)
{
    FieldElement p_elt = P.field->from_rational(Rational(P.p));
    if (to_ideal(P) == principal_ideal(p_elt))
        return "(" + P.p.get_str() + ")";
    return "(" + P.p.get_str() + "," + element_text(P.second_gen) + ")";
}

std::string prime_list_text(const std::vector<PrimeIdeal>& ps)
{
    std::string out = "{";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i)
            out += ",";
        out += prime_text(ps[i]);
    }
    return out + "}";
}

std::string ideal_text(const FractionalIdeal& I)
{
    std::ostringstream out;
    out << "[";
    if (I.den != 1)
        out << "1/" << I.den.get_str() << "*";
    out << "rows";
    for (int i = 0; i < I.basis.rows; ++i) {
        out << (i ? ";" : ":");
        for (int j = 0; j < I.basis.cols; ++j) {
            if (j)
                out << ",";
            out << I.basis.at(i, j).get_str();
        }
    }
    out << "]";
    return out.str();
}

} // namespace algden
