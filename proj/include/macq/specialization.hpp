#ifndef MACQ_SPECIALIZATION_HPP
#define MACQ_SPECIALIZATION_HPP

#include <cstdint>
#include <random>

#include "macq/field.hpp"

namespace macq {

/// A guarded rational point (q,t): nonzero, |q| < 1, |t| < 1, and
/// q^i t^j != 1 across the guard box |i| <= 2*Dmax, |j| <= 2*n.
/// Keeps spectral vectors collision-free at desk scale.
struct Specialization {
    Rat q;
    Rat t;
    std::int64_t seed;
    int n;
    int dmax;

    QtCtx ctx() const { return QtCtx::specialized(q, t); }
};

bool guard_ok(const Rat& q, const Rat& t, int n, int dmax);

/// Deterministic in seed; retries internally until the guard passes.
Specialization draw_specialization(std::int64_t seed, int n, int dmax);

/// Nonzero rational with |value| < 1; numerator in [1, max_num] and
/// denominator in [numerator+1, max_den], random sign.
Rat draw_rational(std::mt19937_64& rng, int max_num, int max_den);

/// Small rational for numeric mode: +/- 1/d, d in [den_lo, den_hi].
Rat draw_small_rational(std::mt19937_64& rng, int den_lo, int den_hi);

} // namespace macq

#endif
