#include "macq/macdonald.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "macq/linsolve.hpp"

namespace fs = std::filesystem;

namespace macq {

std::string kind_name(MacKind k) {
    switch (k) {
        case MacKind::M: return "M";
        case MacKind::E: return "E";
        case MacKind::Mprime: return "Mprime";
        case MacKind::MS: return "MS";
        case MacKind::P: return "P";
        case MacKind::MSprime: return "MSprime";
    }
    throw internal_error("bad kind");
}

MacKind kind_from_name(const std::string& s) {
    if (s == "M") return MacKind::M;
    if (s == "E") return MacKind::E;
    if (s == "Mprime") return MacKind::Mprime;
    if (s == "MS") return MacKind::MS;
    if (s == "P") return MacKind::P;
    if (s == "MSprime") return MacKind::MSprime;
    throw parse_error("unknown kind '" + s + "'");
}

// -------------------------------------------------------------- PolyCache ----

std::string PolyCache::path_for(MacKind kind, int n, const Composition& label) const {
    std::string name = kind_name(kind) + "_n" + std::to_string(n) + "_" + label.to_string();
    for (auto& ch : name)
        if (ch == ',') ch = '.';
    return dir_ + "/" + name + ".json";
}

void PolyCache::store(const MacdonaldRecord& rec, const std::string& fingerprint) const {
    fs::create_directories(dir_);
    nlohmann::json j;
    j["kind"] = kind_name(rec.kind);
    j["label"] = rec.label.to_string();
    j["n"] = rec.n;
    j["qt"] = fingerprint;
    j["hatted"] = rec.hatted;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : rec.poly.terms()) {
        nlohmann::json t;
        t["exp"] = e;
        t["coeff"] = c.to_string();
        terms.push_back(t);
    }
    j["terms"] = terms;
    std::string path = path_for(rec.kind, rec.n, rec.label);
    std::ofstream out(path + ".tmp");
    out << j.dump(1);
    out.close();
    fs::rename(path + ".tmp", path);
}

bool PolyCache::contains(MacKind kind, int n, const Composition& label) const {
    return fs::exists(path_for(kind, n, label));
}

MacdonaldRecord PolyCache::load(MacKind kind, int n, const Composition& label, const QtCtx& ctx,
                                const std::string& expected_fingerprint) const {
    std::string path = path_for(kind, n, label);
    std::ifstream in(path);
    if (!in) throw cache_missing(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw cache_corrupt(path + ": " + e.what());
    }
    if (!j.contains("qt") || !j.contains("terms") || !j.contains("n"))
        throw cache_corrupt(path + ": missing fields");
    std::string fp = j["qt"].get<std::string>();
    if (fp != expected_fingerprint)
        throw cache_fingerprint_mismatch(path + ": have '" + fp + "', expected '" +
                                         expected_fingerprint + "'");
    MacdonaldRecord rec;
    rec.kind = kind;
    rec.label = label;
    rec.n = j["n"].get<int>();
    rec.hatted = j.value("hatted", false);
    LaurentPoly p(rec.n);
    for (const auto& t : j["terms"]) {
        LaurentPoly::Exp e = t["exp"].get<LaurentPoly::Exp>();
        if (static_cast<int>(e.size()) != rec.n) throw cache_corrupt(path + ": bad exponent");
        p.set(e, parse_field_element(t["coeff"].get<std::string>(), ctx));
    }
    rec.poly = p;
    return rec;
}

int PolyCache::file_count() const {
    if (!fs::exists(dir_)) return 0;
    int k = 0;
    for (const auto& entry : fs::directory_iterator(dir_))
        if (entry.path().extension() == ".json") ++k;
    return k;
}

void PolyCache::clear() const {
    if (!fs::exists(dir_)) return;
    for (const auto& entry : fs::directory_iterator(dir_))
        if (entry.path().extension() == ".json") fs::remove(entry.path());
}

// -------------------------------------------------------- MacdonaldEngine ----

MacdonaldEngine::MacdonaldEngine(QtCtx ctx, FieldElement ti_shift)
    : ctx_(std::move(ctx)), ti_shift_(std::move(ti_shift)), ops_(ctx_, ti_shift_) {}

void MacdonaldEngine::attach_cache(std::string dir) { cache_.emplace(std::move(dir)); }

MacdonaldEngine& MacdonaldEngine::inverted() {
    if (!inverted_)
        inverted_ = std::make_unique<MacdonaldEngine>(ctx_.inverted(), ti_shift_);
    return *inverted_;
}

LaurentPoly MacdonaldEngine::build_M(int n, const Composition& u) {
    if (u.size() == 0) return LaurentPoly::constant(n, FieldElement(1L));

    int descent = -1; // first i (1-based) with u_i > u_{i+1}
    for (int i = 1; i < n; ++i)
        if (u[i - 1] > u[i]) {
            descent = i;
            break;
        }

    if (descent > 0) {
        Composition prev = u.swapped(descent - 1); // prev s_i = u, prev_i < prev_{i+1}
        const LaurentPoly& mp = M(n, prev);
        auto se = spectral_exponents(prev.parts());
        FieldElement ratio = ctx_.mono(se[static_cast<size_t>(descent)].qe,
                                       se[static_cast<size_t>(descent)].te) /
                             ctx_.mono(se[static_cast<size_t>(descent) - 1].qe,
                                       se[static_cast<size_t>(descent) - 1].te);
        FieldElement denom = ratio - FieldElement(1L);
        if (denom.is_zero())
            throw degenerate_specialization("spectral collision in sorting step at " +
                                            u.to_string());
        return ops_.Ti(mp, descent) + mp.scale((ctx_.t() - FieldElement(1L)) / denom);
    }

    // weakly increasing and nonzero: strip the raising step
    std::vector<int> prev_parts(static_cast<size_t>(n));
    prev_parts[0] = u[n - 1] - 1;
    for (int i = 1; i < n; ++i) prev_parts[static_cast<size_t>(i)] = u[i - 1];
    return ops_.phi(M(n, Composition(prev_parts)));
}

const LaurentPoly& MacdonaldEngine::M(int n, const Composition& u) {
    auto key = std::make_pair(n, u);
    auto it = m_memo_.find(key);
    if (it != m_memo_.end()) return it->second;
    if (cache_ && cache_->contains(MacKind::M, n, u)) {
        auto rec = cache_->load(MacKind::M, n, u, ctx_, ctx_.fingerprint());
        return m_memo_.emplace(key, rec.poly).first->second;
    }
    LaurentPoly p = build_M(n, u);
    if (cache_) cache_->store(MacdonaldRecord{MacKind::M, u, n, p, false}, ctx_.fingerprint());
    return m_memo_.emplace(key, std::move(p)).first->second;
}

const LaurentPoly& MacdonaldEngine::E(int n, const Composition& u) {
    auto key = std::make_pair(n, u);
    auto it = e_memo_.find(key);
    if (it != e_memo_.end()) return it->second;
    LaurentPoly top = M(n, u).top_homogeneous().scale(ctx_.qpow(stat_nprime(u)));
    return e_memo_.emplace(key, std::move(top)).first->second;
}

FieldElement MacdonaldEngine::hat_norm_M(const Composition& u) {
    CFactors cf = c_factors(ctx_, u);
    if (cf.cprime.is_zero())
        throw degenerate_specialization("c'_u vanishes at " + u.to_string());
    return ctx_.qpow(stat_nprime(u)) * ctx_.tpow(stat_n(u)) / cf.cprime;
}

FieldElement MacdonaldEngine::hat_norm_E(const Composition& u) {
    CFactors cf = c_factors(ctx_, u);
    if (cf.cprime.is_zero())
        throw degenerate_specialization("c'_u vanishes at " + u.to_string());
    return ctx_.tpow(stat_n(u)) / cf.cprime;
}

LaurentPoly MacdonaldEngine::Mhat(int n, const Composition& u) {
    return M(n, u).scale(hat_norm_M(u));
}

LaurentPoly MacdonaldEngine::Ehat(int n, const Composition& u) {
    return E(n, u).scale(hat_norm_E(u));
}

const LaurentPoly& MacdonaldEngine::Mprime_hat(int n, const Composition& u) {
    auto key = std::make_pair(n, u);
    auto it = mprime_memo_.find(key);
    if (it != mprime_memo_.end()) return it->second;
    if (cache_ && cache_->contains(MacKind::Mprime, n, u)) {
        auto rec = cache_->load(MacKind::Mprime, n, u, ctx_, ctx_.fingerprint());
        return mprime_memo_.emplace(key, rec.poly).first->second;
    }

    // Mhat'_u = Ehat_u + correction of degree < |u|, the correction fixed by
    // vanishing at <-v> for all |v| < |u|.
    LaurentPoly top = Ehat(n, u);
    int d = u.size();
    auto lower = enumerate_up_to(n, d - 1); // compositions <-> monomials of degree < |u|
    size_t m = lower.size();
    Matrix A(m, Vector(m, FieldElement(0L)));
    Vector b(m, FieldElement(0L));
    for (size_t row = 0; row < m; ++row) {
        std::vector<int> neg = lower[row].parts();
        for (auto& x : neg) x = -x;
        auto point = spectral_vector(ctx_, neg);
        for (size_t col = 0; col < m; ++col) {
            FieldElement mono(1L);
            for (int i = 0; i < n; ++i)
                mono *= point[static_cast<size_t>(i)].pow(lower[col][i]);
            A[row][col] = mono;
        }
        b[row] = -top.evaluate(point);
    }
    Vector sol = m ? solve_exact(A, b) : Vector{};
    LaurentPoly p = top;
    for (size_t col = 0; col < m; ++col)
        p = p + LaurentPoly::monomial(lower[col].parts(), sol[col]);
    if (cache_)
        cache_->store(MacdonaldRecord{MacKind::Mprime, u, n, p, true}, ctx_.fingerprint());
    return mprime_memo_.emplace(key, std::move(p)).first->second;
}

LaurentPoly MacdonaldEngine::M_oracle(int n, const Composition& u) {
    int d = u.size();
    auto comps = enumerate_up_to(n, d);
    size_t m = comps.size();
    Matrix A(m, Vector(m, FieldElement(0L)));
    Vector b(m, FieldElement(0L));
    size_t row = 0;
    for (const auto& v : comps) {
        if (v == u) continue;
        auto point = spectral_vector(ctx_, v.parts());
        for (size_t col = 0; col < m; ++col) {
            FieldElement mono(1L);
            for (int i = 0; i < n; ++i)
                mono *= point[static_cast<size_t>(i)].pow(comps[col][i]);
            A[row][col] = mono;
        }
        b[row] = FieldElement(0L);
        ++row;
    }
    // leading-coefficient normalization: coeff of x^u is q^{-n'(u)}
    for (size_t col = 0; col < m; ++col)
        A[row][col] = FieldElement(comps[col] == u ? 1L : 0L);
    b[row] = ctx_.qpow(-stat_nprime(u));

    Vector sol = solve_exact(A, b);
    LaurentPoly p(n);
    for (size_t col = 0; col < m; ++col)
        p = p + LaurentPoly::monomial(comps[col].parts(), sol[col]);
    return p;
}

LaurentPoly MacdonaldEngine::MShat(int n, const Composition& lambda) {
    LaurentPoly acc(n);
    for (const auto& u : orbit(lambda)) acc = acc + Mhat(n, u);
    return acc;
}

LaurentPoly MacdonaldEngine::Phat(int n, const Composition& lambda) {
    LaurentPoly acc(n);
    for (const auto& u : orbit(lambda)) acc = acc + Ehat(n, u);
    return acc;
}

LaurentPoly MacdonaldEngine::MSprime(int n, const Composition& lambda) {
    LaurentPoly base = inverted().MShat(n, lambda).scale_all_vars(ctx_.tpow(1 - n));
    FieldElement pref =
        tau_u(lambda).inverse() * (ctx_.qpow(-1) * ctx_.tpow(n - 1)).pow(lambda.size());
    return base.scale(pref);
}

FieldElement MacdonaldEngine::tau_u(const Composition& u) { return tau(ctx_, u); }

std::vector<FieldElement> MacdonaldEngine::spectral(const std::vector<int>& u) {
    return spectral_vector(ctx_, u);
}

FieldElement MacdonaldEngine::qbinom(const Composition& u, const Composition& v) {
    auto key = std::make_pair(u, v);
    auto it = qbinom_memo_.find(key);
    if (it != qbinom_memo_.end()) return it->second;
    int n = u.n();
    // Mhat_v(<v>) = tau_v t^{(n-1)|v|}
    FieldElement denom = tau_u(v) * ctx_.tpow(static_cast<long>(n - 1) * v.size());
    FieldElement val = Mhat(n, v).evaluate(spectral(u.parts())) / denom;
    qbinom_memo_.emplace(key, val);
    return val;
}

FieldElement MacdonaldEngine::sym_qbinom(const Composition& lambda, const Composition& mu) {
    FieldElement acc(0L);
    for (const auto& v : orbit(mu)) acc += qbinom(lambda, v);
    return acc;
}

FieldElement MacdonaldEngine::Ehat0(const Composition& u) {
    auto it = ehat0_memo_.find(u);
    if (it != ehat0_memo_.end()) return it->second;
    int n = u.n();
    FieldElement val = Ehat(n, u).evaluate(spectral(std::vector<int>(static_cast<size_t>(n), 0)));
    if (val.is_zero())
        throw degenerate_specialization("Ehat_u(<0>) vanishes at " + u.to_string());
    ehat0_memo_.emplace(u, val);
    return val;
}

std::vector<LaurentPoly::Exp> monomials_up_to(int n, int D) {
    std::vector<LaurentPoly::Exp> out;
    for (const auto& c : enumerate_up_to(n, D)) out.push_back(c.parts());
    return out;
}

} // namespace macq
