#include "macq/binomial.hpp"

#include <algorithm>

#include "macq/linsolve.hpp"

namespace macq {

const ParamPoly& ConnectionLayer::entry(const Composition& u, const Composition& v) {
    auto key = std::make_pair(u, v);
    auto it = entry_memo_.find(key);
    if (it != entry_memo_.end()) return it->second;

    ParamPoly result;
    int n = u.n();
    if (v.size() <= u.size()) {
        MacdonaldEngine& inv = eng_.inverted();
        for (int d = v.size(); d <= u.size(); ++d) {
            for (const auto& w : enumerate_compositions(n, d)) {
                FieldElement bi = inv.qbinom(u, w);
                if (bi.is_zero()) continue;
                FieldElement b = eng_.qbinom(w, v);
                if (b.is_zero()) continue;
                FieldElement coeff = eng_.tau_u(u) / eng_.tau_u(w) * bi * b;
                ParamPoly::Exp e{};
                e[0] = w.size() - v.size();  // power of a
                e[1] = u.size() - w.size();  // power of b
                result.set(e, result.coefficient(e) + coeff);
            }
        }
    }
    return entry_memo_.emplace(key, std::move(result)).first->second;
}

FieldElement ConnectionLayer::entry_at(const Composition& u, const Composition& v,
                                       const FieldElement& a, const FieldElement& b) {
    std::array<FieldElement, ParamPoly::kVars> vals{};
    vals[0] = a;
    vals[1] = b;
    return entry(u, v).evaluate(vals);
}

std::map<std::pair<Composition, Composition>, FieldElement>
ConnectionLayer::connection_by_basis(int n, int D, const FieldElement& a, const FieldElement& b) {
    auto comps = enumerate_up_to(n, D);
    auto monos = monomials_up_to(n, D);
    size_t m = comps.size();

    Matrix A(m, Vector(m, FieldElement(0L)));
    for (size_t col = 0; col < m; ++col) {
        LaurentPoly p = eng_.Mhat(n, comps[col]).scale_all_vars(b);
        for (size_t row = 0; row < m; ++row) A[row][col] = p.coefficient(monos[row]);
    }
    std::vector<Vector> rhs;
    rhs.reserve(m);
    for (size_t col = 0; col < m; ++col) {
        LaurentPoly p = eng_.Mhat(n, comps[col]).scale_all_vars(a);
        Vector column(m, FieldElement(0L));
        for (size_t row = 0; row < m; ++row) column[row] = p.coefficient(monos[row]);
        rhs.push_back(std::move(column));
    }
    auto sols = solve_exact_multi(A, rhs);
    std::map<std::pair<Composition, Composition>, FieldElement> out;
    for (size_t ui = 0; ui < m; ++ui)
        for (size_t vi = 0; vi < m; ++vi)
            out[{comps[ui], comps[vi]}] = sols[ui][vi];
    return out;
}

std::map<std::pair<Composition, Composition>, FieldElement>
ConnectionLayer::skew_by_basis(int n, int D, const FieldElement& a, const FieldElement& b) {
    auto raw = connection_by_basis(n, D, a, b);
    std::map<std::pair<Composition, Composition>, FieldElement> out;
    for (const auto& [uv, c] : raw) {
        const auto& [u, v] = uv;
        // Ehat_v(<0>/a) / Ehat_u(<0>/b) by homogeneity
        FieldElement pref =
            a.pow(-v.size()) * b.pow(u.size()) * eng_.Ehat0(v) / eng_.Ehat0(u);
        out[uv] = pref * c;
    }
    return out;
}

const std::map<Composition, FieldElement>& ConnectionLayer::structure(const Composition& v,
                                                                      const Composition& w) {
    auto key = std::make_pair(v, w);
    auto it = g_memo_.find(key);
    if (it != g_memo_.end()) return it->second;

    int n = v.n();
    int d = v.size() + w.size();
    auto shell = enumerate_compositions(n, d);
    size_t m = shell.size();
    Matrix A(m, Vector(m, FieldElement(0L)));
    for (size_t col = 0; col < m; ++col) {
        LaurentPoly p = eng_.Ehat(n, shell[col]);
        for (size_t row = 0; row < m; ++row) A[row][col] = p.coefficient(shell[row].parts());
    }
    LaurentPoly prod = eng_.Ehat(n, v) * eng_.Ehat(n, w);
    Vector rhs(m, FieldElement(0L));
    for (size_t row = 0; row < m; ++row) rhs[row] = prod.coefficient(shell[row].parts());
    Vector sol = solve_exact(A, rhs);
    std::map<Composition, FieldElement> out;
    for (size_t i = 0; i < m; ++i)
        if (!sol[i].is_zero()) out[shell[i]] = sol[i];
    return g_memo_.emplace(key, std::move(out)).first->second;
}

const std::map<Composition, FieldElement>& ConnectionLayer::structure_sym(const Composition& mu,
                                                                          const Composition& nu) {
    auto key = std::make_pair(mu, nu);
    auto it = f_memo_.find(key);
    if (it != f_memo_.end()) return it->second;

    int n = mu.n();
    int d = mu.size() + nu.size();
    std::vector<Composition> partitions;
    for (const auto& c : enumerate_compositions(n, d))
        if (c.is_dominant()) partitions.push_back(c);
    size_t m = partitions.size();
    // symmetric polynomials are pinned down by their dominant-monomial coefficients
    Matrix A(m, Vector(m, FieldElement(0L)));
    for (size_t col = 0; col < m; ++col) {
        LaurentPoly p = eng_.Phat(n, partitions[col]);
        for (size_t row = 0; row < m; ++row)
            A[row][col] = p.coefficient(partitions[row].parts());
    }
    LaurentPoly prod = eng_.Phat(n, mu) * eng_.Phat(n, nu);
    Vector rhs(m, FieldElement(0L));
    for (size_t row = 0; row < m; ++row) rhs[row] = prod.coefficient(partitions[row].parts());
    Vector sol = solve_exact(A, rhs);
    // verify the expansion on the full polynomial, not only the pinned rows
    LaurentPoly recon(n);
    for (size_t i = 0; i < m; ++i) recon = recon + eng_.Phat(n, partitions[i]).scale(sol[i]);
    if (!(recon == prod)) throw internal_error("symmetric structure expansion failed");
    std::map<Composition, FieldElement> out;
    for (size_t i = 0; i < m; ++i)
        if (!sol[i].is_zero()) out[partitions[i]] = sol[i];
    return f_memo_.emplace(key, std::move(out)).first->second;
}

} // namespace macq
