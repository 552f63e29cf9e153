#include "macq/specialization.hpp"

#include "macq/errors.hpp"

namespace macq {

namespace {

// rng() % k is stable across platforms, unlike uniform_int_distribution
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

Rat rat_pow(const Rat& x, int e) {
    Rat r(1);
    Rat base = e < 0 ? Rat(1 / x) : x;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return r;
}

} // namespace

bool guard_ok(const Rat& q, const Rat& t, int n, int dmax) {
    if (q == 0 || t == 0) return false;
    if (abs(q) >= 1 || abs(t) >= 1) return false;
    for (int i = 0; i <= 2 * dmax; ++i) {
        Rat qi = rat_pow(q, i);
        for (int j = -2 * n; j <= 2 * n; ++j) {
            if (i == 0 && j <= 0) continue;
            if (qi * rat_pow(t, j) == 1) return false;
        }
    }
    return true;
}

Rat draw_rational(std::mt19937_64& rng, int max_num, int max_den) {
    while (true) {
        int num = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_num)));
        if (num + 1 > max_den) continue;
        int den = num + 1 +
                  static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_den - num)));
        Rat r(num, den);
        r.canonicalize();
        if (pick(rng, 2)) r = -r;
        return r;
    }
}

Rat draw_small_rational(std::mt19937_64& rng, int den_lo, int den_hi) {
    int den = den_lo + static_cast<int>(pick(rng, static_cast<std::uint64_t>(den_hi - den_lo + 1)));
    Rat r(1, den);
    if (pick(rng, 2)) r = -r;
    return r;
}

Specialization draw_specialization(std::int64_t seed, int n, int dmax) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 0x9E3779B97F4A7C15ull + 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rat q = draw_rational(rng, 2, 13);
        Rat t = draw_rational(rng, 2, 13);
        if (guard_ok(q, t, n, dmax)) return Specialization{q, t, seed, n, dmax};
    }
    // The excluded set is finite, so this cannot trigger with the draw
    // ranges above; it guards refactoring mistakes.
    throw degenerate_specialization("no guarded (q,t) found for seed " + std::to_string(seed));
}

} // namespace macq
