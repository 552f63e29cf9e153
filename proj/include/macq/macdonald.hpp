#ifndef MACQ_MACDONALD_HPP
#define MACQ_MACDONALD_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "macq/composition.hpp"
#include "macq/hecke.hpp"
#include "macq/laurent.hpp"

namespace macq {

enum class MacKind { M, E, Mprime, MS, P, MSprime };

std::string kind_name(MacKind k);
MacKind kind_from_name(const std::string& s);

struct MacdonaldRecord {
    MacKind kind;
    Composition label;
    int n;
    LaurentPoly poly;
    bool hatted;
};

/// One JSON file per record, named <kind>_n<n>_<label>.json, carrying the
/// (q,t) fingerprint of the specialization it was computed under. A load
/// under a different fingerprint is an error, never a silent reuse.
class PolyCache {
public:
    explicit PolyCache(std::string dir) : dir_(std::move(dir)) {}

    const std::string& dir() const { return dir_; }
    std::string path_for(MacKind kind, int n, const Composition& label) const;

    void store(const MacdonaldRecord& rec, const std::string& fingerprint) const;
    bool contains(MacKind kind, int n, const Composition& label) const;
    MacdonaldRecord load(MacKind kind, int n, const Composition& label, const QtCtx& ctx,
                         const std::string& expected_fingerprint) const;

    int file_count() const;
    void clear() const;

private:
    std::string dir_;
};

/// Builds and memoizes the interpolation polynomials M_u (recursively and
/// by the vanishing-condition oracle), their top-homogeneous parts E_u,
/// the dual family, normalizations and symmetrizations, plus the scalar
/// quantities derived from them.
class MacdonaldEngine {
public:
    explicit MacdonaldEngine(QtCtx ctx, FieldElement ti_shift = FieldElement(0L));

    const QtCtx& ctx() const { return ctx_; }
    const HeckeOps& ops() const { return ops_; }

    void attach_cache(std::string dir);

    const LaurentPoly& M(int n, const Composition& u);
    const LaurentPoly& E(int n, const Composition& u);
    LaurentPoly Mhat(int n, const Composition& u);
    LaurentPoly Ehat(int n, const Composition& u);
    const LaurentPoly& Mprime_hat(int n, const Composition& u);

    /// Independent construction of M_u from the defining conditions.
    LaurentPoly M_oracle(int n, const Composition& u);

    LaurentPoly MShat(int n, const Composition& lambda);
    LaurentPoly Phat(int n, const Composition& lambda);
    LaurentPoly MSprime(int n, const Composition& lambda);

    /// q^{n'(u)} t^{n(u)} / c'_u.
    FieldElement hat_norm_M(const Composition& u);
    /// t^{n(u)} / c'_u.
    FieldElement hat_norm_E(const Composition& u);

    FieldElement tau_u(const Composition& u);
    std::vector<FieldElement> spectral(const std::vector<int>& u);

    /// Generalized q-binomial [u v] = Mhat_v(<u>) / Mhat_v(<v>).
    FieldElement qbinom(const Composition& u, const Composition& v);

    /// Symmetric binomial: sum of [lambda v] over the orbit of mu.
    FieldElement sym_qbinom(const Composition& lambda, const Composition& mu);

    /// Ehat_u evaluated at <0>; nonzero under guarded specializations.
    FieldElement Ehat0(const Composition& u);

    /// Engine at (1/q,1/t) with the same corruption settings.
    MacdonaldEngine& inverted();

private:
    QtCtx ctx_;
    FieldElement ti_shift_;
    HeckeOps ops_;
    std::optional<PolyCache> cache_;
    std::unique_ptr<MacdonaldEngine> inverted_;

    std::map<std::pair<int, Composition>, LaurentPoly> m_memo_;
    std::map<std::pair<int, Composition>, LaurentPoly> e_memo_;
    std::map<std::pair<int, Composition>, LaurentPoly> mprime_memo_;
    std::map<std::pair<Composition, Composition>, FieldElement> qbinom_memo_;
    std::map<Composition, FieldElement> ehat0_memo_;

    LaurentPoly build_M(int n, const Composition& u);
};

/// Exponent vectors of all monomials in n variables of total degree <= D,
/// aligned with enumerate_up_to ordering.
std::vector<LaurentPoly::Exp> monomials_up_to(int n, int D);

} // namespace macq

#endif
