#include "macq/hecke.hpp"

#include <map>

namespace macq {

LaurentPoly divided_difference_quotient(const LaurentPoly& f, int i) {
    // i is 1-based; the pair of slots is (i-1, i) 0-based.
    int a = i - 1, b = i;
    if (f.is_zero()) return f;

    int m = 0;
    for (const auto& [e, c] : f.terms())
        m = std::min({m, e[static_cast<size_t>(a)], e[static_cast<size_t>(b)]});
    LaurentPoly g = f;
    if (m < 0) g = g.shift_exp(a, -m).shift_exp(b, -m);

    // Synthetic division by (x_b - x_a), viewing g as a polynomial in x_b.
    int d = 0;
    for (const auto& [e, c] : g.terms()) d = std::max(d, e[static_cast<size_t>(b)]);
    int n = f.n();
    std::vector<LaurentPoly> coeff(static_cast<size_t>(d) + 1, LaurentPoly(n));
    for (const auto& [e, c] : g.terms()) {
        LaurentPoly::Exp e2 = e;
        int k = e2[static_cast<size_t>(b)];
        e2[static_cast<size_t>(b)] = 0;
        coeff[static_cast<size_t>(k)] = coeff[static_cast<size_t>(k)] + LaurentPoly::monomial(e2, c);
    }
    LaurentPoly xa = LaurentPoly::variable(n, a);
    LaurentPoly quot(n);
    LaurentPoly qk(n);
    for (int k = d; k >= 1; --k) {
        qk = coeff[static_cast<size_t>(k)] + xa * qk;
        quot = quot + qk.shift_exp(b, k - 1);
    }
    LaurentPoly rem = coeff[0] + xa * qk;
    if (!rem.is_zero())
        throw internal_error("divided difference quotient not exact at i=" + std::to_string(i));
    if (m < 0) quot = quot.shift_exp(a, m).shift_exp(b, m);
    return quot;
}

LaurentPoly HeckeOps::Ti(const LaurentPoly& f, int i) const {
    int a = i - 1, b = i;
    LaurentPoly swapped = f.swap_vars(a, b);
    LaurentPoly quot = divided_difference_quotient(swapped - f, i);
    FieldElement t = t_eff();
    LaurentPoly mult = LaurentPoly::variable(f.n(), b).scale(t) - LaurentPoly::variable(f.n(), a);
    return f.scale(t) + mult * quot;
}

LaurentPoly HeckeOps::TiInv(const LaurentPoly& f, int i) const {
    FieldElement t = t_eff();
    return (Ti(f, i) - f.scale(t - FieldElement(1L))).scale(t.inverse());
}

LaurentPoly HeckeOps::shift(const LaurentPoly& f) const {
    int n = f.n();
    LaurentPoly r(n);
    for (const auto& [e, c] : f.terms()) {
        LaurentPoly::Exp e2(static_cast<size_t>(n), 0);
        e2[static_cast<size_t>(n) - 1] = e[0];
        for (int k = 1; k < n; ++k) e2[static_cast<size_t>(k) - 1] = e[static_cast<size_t>(k)];
        r.set(e2, r.coefficient(e2) + c * ctx_.qpow(-e[0]));
    }
    return r;
}

LaurentPoly HeckeOps::phi(const LaurentPoly& f) const {
    int n = f.n();
    LaurentPoly xn_minus_1 =
        LaurentPoly::variable(n, n - 1) - LaurentPoly::constant(n, FieldElement(1L));
    return shift(f) * xn_minus_1;
}

LaurentPoly HeckeOps::Xi(const LaurentPoly& f, int i) const {
    int n = f.n();
    LaurentPoly g = f;
    for (int j = i - 1; j >= 1; --j) g = Ti(g, j);
    g = shift(g);
    g = g * (LaurentPoly::variable(n, n - 1) - LaurentPoly::constant(n, FieldElement(1L)));
    for (int j = n - 1; j >= i; --j) g = Ti(g, j);
    g = g.shift_exp(i - 1, -1).scale(ctx_.tpow(1 - n));
    return g + f.shift_exp(i - 1, -1);
}

LaurentPoly HeckeOps::Xi_alt(const LaurentPoly& f, int i) const {
    int n = f.n();
    LaurentPoly g = f;
    for (int j = i - 1; j >= 1; --j) g = Ti(g, j);
    g = shift(g);
    g = g - g.shift_exp(n - 1, -1);
    for (int j = n - 1; j >= i; --j) g = TiInv(g, j);
    g = g.scale(ctx_.tpow(1 - i));
    return g + f.shift_exp(i - 1, -1);
}

LaurentPoly HeckeOps::YiInv(const LaurentPoly& f, int i) const {
    int n = f.n();
    LaurentPoly g = f;
    for (int j = i - 1; j >= 1; --j) g = Ti(g, j);
    g = shift(g);
    for (int j = n - 1; j >= i; --j) g = TiInv(g, j);
    return g.scale(ctx_.tpow(1 - i));
}

} // namespace macq
