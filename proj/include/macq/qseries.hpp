#ifndef MACQ_QSERIES_HPP
#define MACQ_QSERIES_HPP

#include <vector>

#include "macq/field.hpp"
#include "macq/laurent.hpp"

namespace macq {

inline FieldElement ring_scale(const FieldElement& x, const FieldElement& f) { return x * f; }
inline LaurentPoly ring_scale(const LaurentPoly& x, const FieldElement& f) { return x.scale(f); }

/// (b;q)_k as a finite product, q taken from the context.
FieldElement poch1(const QtCtx& ctx, const FieldElement& b, int k);

/// Truncated power series in one bookkeeping variable z over a ring R.
/// All arithmetic ignores coefficients beyond the fixed order.
template <class R>
struct TSeries {
    std::vector<R> c; // c[k] = coefficient of z^k

    int order() const { return static_cast<int>(c.size()) - 1; }

    TSeries operator+(const TSeries& o) const {
        TSeries r = *this;
        for (size_t k = 0; k < c.size(); ++k) r.c[k] = r.c[k] + o.c[k];
        return r;
    }
    TSeries operator*(const TSeries& o) const {
        TSeries r;
        r.c.assign(c.size(), ring_scale(c[0], FieldElement(0L)));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; i + j < c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        return r;
    }
};

template <class R>
TSeries<R> ts_const(int order, const R& one, const FieldElement& v) {
    TSeries<R> s;
    R zero = ring_scale(one, FieldElement(0L));
    s.c.assign(static_cast<size_t>(order) + 1, zero);
    s.c[0] = ring_scale(one, v);
    return s;
}

/// (1 - z*letter)
template <class R>
TSeries<R> ts_linear(int order, const R& letter, const R& one) {
    TSeries<R> s = ts_const(order, one, FieldElement(1L));
    if (order >= 1) s.c[1] = ring_scale(letter, FieldElement(-1L));
    return s;
}

/// 1/(1 - z*letter) = sum_k (z*letter)^k
template <class R>
TSeries<R> ts_geometric(int order, const R& letter, const R& one) {
    TSeries<R> s = ts_const(order, one, FieldElement(1L));
    R p = one;
    for (int k = 1; k <= order; ++k) {
        p = p * letter;
        s.c[static_cast<size_t>(k)] = p;
    }
    return s;
}

/// (z*letter)_inf = sum_m (-z*letter)^m q^{C(m,2)} / (q)_m, truncated.
template <class R>
TSeries<R> ts_euler_poch(const QtCtx& ctx, int order, const R& letter, const R& one) {
    TSeries<R> s = ts_const(order, one, FieldElement(1L));
    R p = one;
    for (int m = 1; m <= order; ++m) {
        p = p * letter;
        FieldElement coeff = ctx.qpow(static_cast<long>(m) * (m - 1) / 2) /
                             poch1(ctx, ctx.q(), m);
        if (m % 2) coeff = -coeff;
        s.c[static_cast<size_t>(m)] = ring_scale(p, coeff);
    }
    return s;
}

/// 1/(z*letter)_inf = sum_m (z*letter)^m / (q)_m, truncated.
template <class R>
TSeries<R> ts_euler_poch_inv(const QtCtx& ctx, int order, const R& letter, const R& one) {
    TSeries<R> s = ts_const(order, one, FieldElement(1L));
    R p = one;
    for (int m = 1; m <= order; ++m) {
        p = p * letter;
        s.c[static_cast<size_t>(m)] = ring_scale(p, poch1(ctx, ctx.q(), m).inverse());
    }
    return s;
}

/// sigma_z[A - B] = prod_{b in B} (1 - z b) / prod_{a in A} (1 - z a).
template <class R>
TSeries<R> sigma_series(const std::vector<R>& A, const std::vector<R>& B, int order,
                        const R& one) {
    TSeries<R> s = ts_const(order, one, FieldElement(1L));
    for (const R& b : B) s = s * ts_linear(order, b, one);
    for (const R& a : A) s = s * ts_geometric(order, a, one);
    return s;
}

/// sigma_z[(A - B)/(1-q)] = prod_{b in B} (z b)_inf / prod_{a in A} (z a)_inf.
template <class R>
TSeries<R> sigma_q_series(const QtCtx& ctx, const std::vector<R>& A, const std::vector<R>& B,
                          int order, const R& one) {
    TSeries<R> s = ts_const(order, one, FieldElement(1L));
    for (const R& b : B) s = s * ts_euler_poch(ctx, order, b, one);
    for (const R& a : A) s = s * ts_euler_poch_inv(ctx, order, a, one);
    return s;
}

/// Exact partial product of (b)_inf with a certified bound on the omitted
/// tail: value * T with |log T| <= log_bound, so |T - 1| <= 2*log_bound
/// whenever log_bound <= 1/2.
struct BoundedProduct {
    Rat value;
    Rat log_bound;

    Rat rel_bound() const { return 2 * log_bound; }
};

/// Partial product through i = terms-1 of (1 - b q^i). Requires |q| < 1
/// and |b| <= 1; the reported tail log-magnitude is
/// sum_{i >= terms} |b| |q|^i / (1-|q|).
BoundedProduct poch_inf_bounded(const Rat& q, const Rat& b, int terms);

/// terms chosen so the certified relative bound is below `target`.
BoundedProduct poch_inf_to_tolerance(const Rat& q, const Rat& b, const Rat& target);

} // namespace macq

#endif
