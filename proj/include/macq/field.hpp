#ifndef MACQ_FIELD_HPP
#define MACQ_FIELD_HPP

#include <string>
#include <variant>

#include "macq/qt_poly.hpp"

namespace macq {

/// An exact coefficient: either a rational function in (q,t) over Z
/// (reduced, denominator trailing coefficient positive) or a plain
/// rational (used when (q,t) are specialized to rational values).
/// Mixed arithmetic promotes the rational to a constant in Q(q,t).
class FieldElement {
public:
    struct Sym {
        QtPoly num;
        QtPoly den; // never zero; trailing coefficient > 0
        bool operator==(const Sym& o) const { return num == o.num && den == o.den; }
    };

    FieldElement() : rep_(Rat(0)) {}
    FieldElement(long v) : rep_(Rat(v)) {}
    explicit FieldElement(const Rat& v) : rep_(v) { std::get<Rat>(rep_).canonicalize(); }
    explicit FieldElement(const Int& v) : rep_(Rat(v)) {}

    static FieldElement sym_monomial(int qe, int te, const Int& coeff = Int(1));
    static FieldElement from_sym(QtPoly num, QtPoly den);

    bool is_specialized() const { return std::holds_alternative<Rat>(rep_); }
    bool is_zero() const;
    bool is_one() const;
    const Rat& rat() const { return std::get<Rat>(rep_); }
    const Sym& sym() const { return std::get<Sym>(rep_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(long k) const;

    /// Substitute rational values for q and t.
    FieldElement specialize(const Rat& qv, const Rat& tv) const;

    std::string to_string() const;

private:
    std::variant<Rat, Sym> rep_;

    static Sym promote(const Rat& r);
    static FieldElement make(QtPoly num, QtPoly den);
    static FieldElement finish(Sym s);
};

FieldElement operator*(long k, const FieldElement& x);

/// The coefficient pair (q,t). Symbolic mode carries the indeterminates
/// themselves; an engine working at (1/q,1/t) carries their inverses;
/// specialized mode carries rational values.
class QtCtx {
public:
    QtCtx() : q_(FieldElement::sym_monomial(1, 0)), t_(FieldElement::sym_monomial(0, 1)) {}
    QtCtx(FieldElement q, FieldElement t) : q_(std::move(q)), t_(std::move(t)) {}

    static QtCtx symbolic() { return QtCtx(); }
    static QtCtx specialized(const Rat& qv, const Rat& tv) {
        return QtCtx(FieldElement(qv), FieldElement(tv));
    }

    const FieldElement& q() const { return q_; }
    const FieldElement& t() const { return t_; }
    bool is_specialized() const { return q_.is_specialized() && t_.is_specialized(); }

    FieldElement qpow(long k) const { return q_.pow(k); }
    FieldElement tpow(long k) const { return t_.pow(k); }
    FieldElement mono(long qe, long te) const { return q_.pow(qe) * t_.pow(te); }

    QtCtx inverted() const { return QtCtx(q_.inverse(), t_.inverse()); }

    /// "symbolic", "2/11,3/13", or the printed pair for derived contexts.
    std::string fingerprint() const;

private:
    FieldElement q_, t_;
};

/// Parse the textual coefficient form, e.g. "(1 - q*t)/(1 - q)" or "143/137".
/// q and t evaluate to ctx.q() and ctx.t().
FieldElement parse_field_element(const std::string& text, const QtCtx& ctx);

} // namespace macq

#endif
