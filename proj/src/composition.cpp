#include "macq/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace macq {

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_dominant() const {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) return false;
    return true;
}

Composition Composition::sorted() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Composition(p);
}

Composition Composition::swapped(int i) const {
    std::vector<int> p = parts_;
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(i) + 1]);
    return Composition(p);
}

std::string Composition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw parse_error("empty part in composition '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw parse_error("empty composition '" + text + "'");
    return Composition(parts);
}

int leg_colength(const std::vector<int>& u, int i) {
    int n = static_cast<int>(u.size());
    int lp = 0;
    for (int k = i + 1; k < n; ++k)
        if (u[static_cast<size_t>(k)] > u[static_cast<size_t>(i)]) ++lp;
    for (int k = 0; k < i; ++k)
        if (u[static_cast<size_t>(k)] >= u[static_cast<size_t>(i)]) ++lp;
    return lp;
}

std::vector<SpecExp> spectral_exponents(const std::vector<int>& u) {
    int n = static_cast<int>(u.size());
    std::vector<SpecExp> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        e[static_cast<size_t>(i)] = {u[static_cast<size_t>(i)], n - 1 - leg_colength(u, i)};
    return e;
}

std::vector<FieldElement> spectral_vector(const QtCtx& ctx, const std::vector<int>& u) {
    std::vector<FieldElement> v;
    v.reserve(u.size());
    for (const auto& e : spectral_exponents(u)) v.push_back(ctx.mono(e.qe, e.te));
    return v;
}

std::vector<CellStats> cell_stats(const Composition& u) {
    std::vector<CellStats> cells;
    int n = u.n();
    for (int i = 1; i <= n; ++i) {
        int ui = u[i - 1];
        int lp = leg_colength(u.parts(), i - 1);
        for (int j = 1; j <= ui; ++j) {
            int leg = 0;
            for (int k = i + 1; k <= n; ++k) {
                int uk = u[k - 1];
                if (j <= uk && uk <= ui) ++leg;
            }
            for (int k = 1; k < i; ++k) {
                int uk = u[k - 1];
                if (j <= uk + 1 && uk + 1 <= ui) ++leg;
            }
            cells.push_back({i, j, ui - j, j - 1, leg, lp});
        }
    }
    return cells;
}

int stat_n(const Composition& u) {
    int s = 0;
    for (const auto& cell : cell_stats(u)) s += cell.leg;
    return s;
}

int stat_nprime(const Composition& u) {
    int s = 0;
    for (int p : u.parts()) s += p * (p - 1) / 2;
    return s;
}

FieldElement tau(const QtCtx& ctx, const Composition& u) {
    FieldElement v = ctx.qpow(stat_nprime(u)) * ctx.tpow(-stat_n(u.sorted()));
    return (u.size() % 2) ? -v : v;
}

FieldElement poch_composition(const QtCtx& ctx, const FieldElement& b, const Composition& u) {
    FieldElement prod(1L);
    for (const auto& cell : cell_stats(u))
        prod *= FieldElement(1L) - b * ctx.mono(cell.arm_co, -cell.leg_co);
    return prod;
}

FieldElement poch_reversed(const QtCtx& ctx, const FieldElement& b, const Composition& u) {
    FieldElement prod(1L);
    for (const auto& cell : cell_stats(u))
        prod *= b - ctx.mono(cell.arm_co, -cell.leg_co);
    return prod;
}

CFactors c_factors(const QtCtx& ctx, const Composition& u) {
    FieldElement cprime(1L), c(1L);
    for (const auto& cell : cell_stats(u)) {
        cprime *= FieldElement(1L) - ctx.mono(cell.arm + 1, cell.leg);
        c *= FieldElement(1L) - ctx.mono(cell.arm, cell.leg + 1);
    }
    return {cprime, c, c / cprime};
}

std::vector<Composition> enumerate_compositions(int n, int degree) {
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    // lexicographic recursion, leftmost part outermost
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<Composition> enumerate_up_to(int n, int degree) {
    std::vector<Composition> out;
    for (int d = 0; d <= degree; ++d) {
        auto shell = enumerate_compositions(n, d);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

std::vector<Composition> orbit(const Composition& lambda) {
    std::vector<int> p = lambda.parts();
    std::sort(p.begin(), p.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool sorted_contains(const Composition& outer, const Composition& inner) {
    Composition a = outer.sorted(), b = inner.sorted();
    for (int i = 0; i < a.n(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

} // namespace macq
