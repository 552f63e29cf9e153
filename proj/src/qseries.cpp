#include "macq/qseries.hpp"

namespace macq {

FieldElement poch1(const QtCtx& ctx, const FieldElement& b, int k) {
    FieldElement prod(1L);
    FieldElement p = b;
    for (int i = 0; i < k; ++i) {
        prod *= FieldElement(1L) - p;
        p *= ctx.q();
    }
    return prod;
}

BoundedProduct poch_inf_bounded(const Rat& q, const Rat& b, int terms) {
    if (abs(q) >= 1) throw error("poch_inf_bounded requires |q| < 1");
    if (abs(b) > 1) throw error("poch_inf_bounded requires |b| <= 1");
    Rat value(1);
    Rat p = b;
    for (int i = 0; i < terms; ++i) {
        value *= 1 - p;
        p *= q;
    }
    Rat aq = abs(q);
    // sum_{i >= terms} |b| |q|^i / (1-|q|) = |b| |q|^terms / (1-|q|)^2
    Rat tail_abs = abs(b);
    for (int i = 0; i < terms; ++i) tail_abs *= aq;
    Rat log_bound = tail_abs / ((1 - aq) * (1 - aq));
    return BoundedProduct{value, log_bound};
}

BoundedProduct poch_inf_to_tolerance(const Rat& q, const Rat& b, const Rat& target) {
    int terms = 16;
    for (int iter = 0; iter < 12; ++iter) {
        BoundedProduct r = poch_inf_bounded(q, b, terms);
        if (r.rel_bound() <= target) return r;
        terms *= 2;
    }
    throw error("poch_inf_to_tolerance: did not converge");
}

} // namespace macq
