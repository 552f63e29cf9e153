#ifndef MACQ_QHYPER1_HPP
#define MACQ_QHYPER1_HPP

#include <vector>

#include "macq/qseries.hpp"

namespace macq {

/// One-variable basic hypergeometric machinery, implemented straight from
/// the classical series definition. Kept independent of the polynomial
/// engine so it can serve as a regression oracle for the n=1 reductions.

/// k-th term of r+1_phi_r-style series with upper parameters `upper`
/// (including any terminating q^{-m}) and lower parameters `lower`
/// (excluding the implicit q): term_k = prod (a_i)_k / ((q)_k prod (b_j)_k)
/// * ((-1)^k q^{C(k,2)})^{#lower - #upper + 1} * x^k.
FieldElement rphis_term(const QtCtx& ctx, const std::vector<FieldElement>& upper,
                        const std::vector<FieldElement>& lower, const FieldElement& x, int k);

/// Sum of the first `count` terms.
FieldElement rphis_partial(const QtCtx& ctx, const std::vector<FieldElement>& upper,
                           const std::vector<FieldElement>& lower, const FieldElement& x,
                           int count);

} // namespace macq

#endif
