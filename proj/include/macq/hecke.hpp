#ifndef MACQ_HECKE_HPP
#define MACQ_HECKE_HPP

#include "macq/laurent.hpp"

namespace macq {

/// Demazure-Lusztig operators T_i and friends, acting on the left as in
/// f -> f T_i. The t used inside T_i can be shifted for mutation testing
/// of the verification harness; everything else is untouched.
class HeckeOps {
public:
    explicit HeckeOps(QtCtx ctx, FieldElement ti_shift = FieldElement(0L))
        : ctx_(std::move(ctx)), ti_shift_(std::move(ti_shift)) {}

    const QtCtx& ctx() const { return ctx_; }

    /// f T_i = t f + (t x_{i+1} - x_i) (f^{s_i} - f) / (x_{i+1} - x_i).
    /// All operator indices here are 1-based, matching the usual notation:
    /// 1 <= i <= n-1 for Ti/TiInv, 1 <= i <= n for Xi/YiInv.
    LaurentPoly Ti(const LaurentPoly& f, int i) const;

    /// T_i^{-1} = (T_i - t + 1)/t.
    LaurentPoly TiInv(const LaurentPoly& f, int i) const;

    /// f(x) tau = f(x_n/q, x_1, ..., x_{n-1}).
    LaurentPoly shift(const LaurentPoly& f) const;

    /// f(x) phi = (f tau)(x_n - 1).
    LaurentPoly phi(const LaurentPoly& f) const;

    /// Knop's operator, first displayed form.
    LaurentPoly Xi(const LaurentPoly& f, int i) const;

    /// Knop's operator, second displayed form (for cross-checks).
    LaurentPoly Xi_alt(const LaurentPoly& f, int i) const;

    /// Y_i^{-1} = t^{1-i} T_{i-1}...T_1 tau T_{n-1}^{-1}...T_i^{-1}.
    LaurentPoly YiInv(const LaurentPoly& f, int i) const;

private:
    QtCtx ctx_;
    FieldElement ti_shift_;

    FieldElement t_eff() const { return ctx_.t() + ti_shift_; }
};

/// Exact division of an antisymmetric-in-(x_i,x_{i+1}) Laurent polynomial
/// by (x_{i+1} - x_i); i is 1-based. Throws if the division is not exact.
LaurentPoly divided_difference_quotient(const LaurentPoly& f, int i);

} // namespace macq

#endif
