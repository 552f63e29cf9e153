#include "macq/qhyper1.hpp"

namespace macq {

FieldElement rphis_term(const QtCtx& ctx, const std::vector<FieldElement>& upper,
                        const std::vector<FieldElement>& lower, const FieldElement& x, int k) {
    FieldElement num(1L);
    for (const auto& a : upper) num *= poch1(ctx, a, k);
    FieldElement den = poch1(ctx, ctx.q(), k);
    for (const auto& b : lower) den *= poch1(ctx, b, k);
    if (den.is_zero()) throw division_by_zero("rphis term denominator at k=" + std::to_string(k));
    int excess = static_cast<int>(lower.size()) - static_cast<int>(upper.size()) + 1;
    FieldElement extra(1L);
    if (excess != 0) {
        FieldElement base = ctx.qpow(static_cast<long>(k) * (k - 1) / 2);
        if (k % 2) base = -base;
        extra = base.pow(excess);
    }
    return num / den * extra * x.pow(k);
}

FieldElement rphis_partial(const QtCtx& ctx, const std::vector<FieldElement>& upper,
                           const std::vector<FieldElement>& lower, const FieldElement& x,
                           int count) {
    FieldElement acc(0L);
    for (int k = 0; k < count; ++k) acc += rphis_term(ctx, upper, lower, x, k);
    return acc;
}

} // namespace macq
