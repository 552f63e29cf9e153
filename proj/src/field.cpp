#include "macq/field.hpp"

#include <cctype>

namespace macq {

// --------------------------------------------------------- construction ----

FieldElement FieldElement::sym_monomial(int qe, int te, const Int& coeff) {
    return make(QtPoly::monomial(qe, te, coeff), QtPoly(Int(1)));
}

namespace {

// Constants always live in the rational representation, keeping the
// printed form canonical per value.
bool sym_is_constant(const QtPoly& p) {
    return p.is_zero() || (p.degree_q() == 0 && p.c[0].degree() <= 0);
}

} // namespace

FieldElement FieldElement::finish(Sym s) {
    if (sym_is_constant(s.num) && sym_is_constant(s.den)) {
        Rat num = s.num.is_zero() ? Rat(0) : Rat(s.num.c[0].c[0]);
        Rat den(s.den.c[0].c[0]);
        return FieldElement(Rat(num / den));
    }
    FieldElement r;
    r.rep_ = std::move(s);
    return r;
}

FieldElement FieldElement::from_sym(QtPoly num, QtPoly den) {
    if (den.is_zero()) throw division_by_zero("(" + num.to_string() + ")/(0)");
    QtPoly g = gcd(num, den);
    if (!g.is_one() && !num.is_zero()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    } else if (num.is_zero()) {
        den = QtPoly(Int(1));
    }
    if (den.trailing_coeff() < 0) {
        num = -num;
        den = -den;
    }
    return finish(Sym{std::move(num), std::move(den)});
}

FieldElement FieldElement::make(QtPoly num, QtPoly den) { return from_sym(std::move(num), std::move(den)); }

FieldElement::Sym FieldElement::promote(const Rat& r) {
    QtPoly num(Int(r.get_num()));
    QtPoly den(Int(r.get_den()));
    if (num.is_zero()) den = QtPoly(Int(1));
    return Sym{std::move(num), std::move(den)};
}

bool FieldElement::is_zero() const {
    if (is_specialized()) return rat() == 0;
    return sym().num.is_zero();
}

bool FieldElement::is_one() const {
    if (is_specialized()) return rat() == 1;
    return sym().num.is_one() && sym().den.is_one();
}

// ------------------------------------------------------------ arithmetic ----

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (is_specialized() && o.is_specialized()) return FieldElement(Rat(rat() + o.rat()));
    Sym a = is_specialized() ? promote(rat()) : sym();
    Sym b = o.is_specialized() ? promote(o.rat()) : o.sym();
    if (a.num.is_zero()) {
        FieldElement r;
        r.rep_ = b;
        return r;
    }
    if (b.num.is_zero()) {
        FieldElement r;
        r.rep_ = a;
        return r;
    }
    // Henrici: split off the common denominator factor before reducing.
    QtPoly g = gcd(a.den, b.den);
    if (g.is_one()) {
        QtPoly num = a.num * b.den + b.num * a.den;
        QtPoly den = a.den * b.den;
        if (num.is_zero()) return FieldElement(0L);
        if (den.trailing_coeff() < 0) {
            num = -num;
            den = -den;
        }
        return finish(Sym{std::move(num), std::move(den)});
    }
    QtPoly ad = exact_div(a.den, g);
    QtPoly bd = exact_div(b.den, g);
    QtPoly num = a.num * bd + b.num * ad;
    if (num.is_zero()) return FieldElement(0L);
    QtPoly h = gcd(num, g);
    QtPoly den;
    if (h.is_one()) {
        den = a.den * bd;
    } else {
        num = exact_div(num, h);
        den = exact_div(g, h) * ad * bd;
    }
    if (den.trailing_coeff() < 0) {
        num = -num;
        den = -den;
    }
    return finish(Sym{std::move(num), std::move(den)});
}

FieldElement FieldElement::operator-() const {
    if (is_specialized()) return FieldElement(Rat(-rat()));
    FieldElement r;
    r.rep_ = Sym{-sym().num, sym().den};
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (is_specialized() && o.is_specialized()) return FieldElement(Rat(rat() * o.rat()));
    Sym a = is_specialized() ? promote(rat()) : sym();
    Sym b = o.is_specialized() ? promote(o.rat()) : o.sym();
    if (a.num.is_zero() || b.num.is_zero()) return FieldElement(0L);
    // cross-cancellation keeps the gcd inputs small and the result reduced
    QtPoly g1 = gcd(a.num, b.den);
    QtPoly g2 = gcd(b.num, a.den);
    QtPoly num = (g1.is_one() ? a.num : exact_div(a.num, g1)) *
                 (g2.is_one() ? b.num : exact_div(b.num, g2));
    QtPoly den = (g2.is_one() ? a.den : exact_div(a.den, g2)) *
                 (g1.is_one() ? b.den : exact_div(b.den, g1));
    if (den.trailing_coeff() < 0) {
        num = -num;
        den = -den;
    }
    return finish(Sym{std::move(num), std::move(den)});
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of " + to_string());
    if (is_specialized()) return FieldElement(Rat(1 / rat()));
    QtPoly num = sym().den;
    QtPoly den = sym().num;
    if (den.trailing_coeff() < 0) {
        num = -num;
        den = -den;
    }
    return finish(Sym{std::move(num), std::move(den)});
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero())
        throw division_by_zero("(" + to_string() + ") / (" + o.to_string() + ")");
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long k) const {
    if (k == 0) return FieldElement(1L);
    FieldElement base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    FieldElement acc(1L);
    while (e) {
        if (e & 1) acc *= base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (is_specialized() && o.is_specialized()) return rat() == o.rat();
    Sym a = is_specialized() ? promote(rat()) : sym();
    Sym b = o.is_specialized() ? promote(o.rat()) : o.sym();
    return a == b;
}

FieldElement FieldElement::specialize(const Rat& qv, const Rat& tv) const {
    if (is_specialized()) return *this;
    Rat den = sym().den.evaluate(qv, tv);
    if (den == 0) throw division_by_zero("specializing " + to_string());
    return FieldElement(Rat(sym().num.evaluate(qv, tv) / den));
}

FieldElement operator*(long k, const FieldElement& x) { return FieldElement(k) * x; }

std::string FieldElement::to_string() const {
    if (is_specialized()) return rat().get_str();
    return "(" + sym().num.to_string() + ")/(" + sym().den.to_string() + ")";
}

// ------------------------------------------------------------------ ctx ----

std::string QtCtx::fingerprint() const {
    if (q_ == FieldElement::sym_monomial(1, 0) && t_ == FieldElement::sym_monomial(0, 1))
        return "symbolic";
    if (is_specialized()) return q_.rat().get_str() + "," + t_.rat().get_str();
    return q_.to_string() + ";" + t_.to_string();
}

// ---------------------------------------------------------------- parser ----

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const QtCtx& ctx;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    FieldElement expr() {
        FieldElement v = eat('-') ? -term() : term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    FieldElement term() {
        FieldElement v = factor();
        while (true) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }

    FieldElement factor() {
        FieldElement b = base();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            return b.pow(neg ? -e : e);
        }
        return b;
    }

    FieldElement base() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of input in '" + s + "'");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElement v = expr();
            if (!eat(')')) throw parse_error("missing ')' in '" + s + "'");
            return v;
        }
        if (c == 'q') {
            ++pos;
            return ctx.q();
        }
        if (c == 't') {
            ++pos;
            return ctx.t();
        }
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FieldElement(Rat(integer()));
        throw parse_error(std::string("unexpected character '") + c + "' in '" + s + "'");
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected integer in '" + s + "'");
        return std::stol(s.substr(start, pos - start));
    }
};

} // namespace

FieldElement parse_field_element(const std::string& text, const QtCtx& ctx) {
    Parser p{text, 0, ctx};
    FieldElement v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input in '" + text + "'");
    return v;
}

} // namespace macq
