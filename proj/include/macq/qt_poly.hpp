#ifndef MACQ_QT_POLY_HPP
#define MACQ_QT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "macq/errors.hpp"

namespace macq {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial over Z, coefficient of t^i at c[i].
class TPoly {
public:
    std::vector<Int> c;

    TPoly() = default;
    explicit TPoly(const Int& v) {
        if (v != 0) c.push_back(v);
    }

    static TPoly t_power(int k, const Int& coeff = Int(1));

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Int& lc() const;
    void trim();

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    bool operator==(const TPoly& o) const { return c == o.c; }

    TPoly mul_int(const Int& k) const;
};

Int content(const TPoly& p);
TPoly exact_div(const TPoly& p, const Int& k);
TPoly exact_div(const TPoly& p, const TPoly& d);
TPoly gcd(const TPoly& a, const TPoly& b);

/// Bivariate polynomial over Z: coefficient of q^i is the Z[t] polynomial c[i].
class QtPoly {
public:
    std::vector<TPoly> c;

    QtPoly() = default;
    explicit QtPoly(const Int& v) {
        if (v != 0) c.push_back(TPoly(v));
    }

    static QtPoly monomial(int qe, int te, const Int& coeff = Int(1));

    bool is_zero() const { return c.empty(); }
    int degree_q() const { return static_cast<int>(c.size()) - 1; }
    int degree_t() const;
    int total_degree() const;
    const TPoly& lc_q() const;
    void trim();

    QtPoly operator-() const;
    QtPoly operator+(const QtPoly& o) const;
    QtPoly operator-(const QtPoly& o) const;
    QtPoly operator*(const QtPoly& o) const;
    bool operator==(const QtPoly& o) const { return c == o.c; }

    bool is_one() const;

    /// Integer coefficient of the graded-lex (q > t) minimal monomial.
    Int trailing_coeff() const;

    Rat evaluate(const Rat& qv, const Rat& tv) const;

    /// Sums of monomials, graded-lex q > t ascending, e.g. "1 - q*t + q^2".
    std::string to_string() const;
};

TPoly content_q(const QtPoly& p);
QtPoly exact_div(const QtPoly& p, const TPoly& k);
QtPoly exact_div(const QtPoly& p, const QtPoly& d);
QtPoly gcd(const QtPoly& a, const QtPoly& b);

} // namespace macq

#endif
