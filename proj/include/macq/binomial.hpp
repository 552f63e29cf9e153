#ifndef MACQ_BINOMIAL_HPP
#define MACQ_BINOMIAL_HPP

#include <map>

#include "macq/macdonald.hpp"
#include "macq/param_poly.hpp"

namespace macq {

/// Connection coefficients between {Mhat_u(ax)} and {Mhat_v(bx)} and the
/// scalars derived from them. Entries are stored as bivariate polynomials
/// in (a,b) (variables 0 and 1 of ParamPoly); the change-of-basis route at
/// concrete (a,b) is kept separate so the two can cross-validate.
class ConnectionLayer {
public:
    explicit ConnectionLayer(MacdonaldEngine& eng) : eng_(eng) {}

    MacdonaldEngine& engine() { return eng_; }

    /// E_{uv}(a,b) as a polynomial in (a,b); homogeneous of degree |u|-|v|.
    const ParamPoly& entry(const Composition& u, const Composition& v);

    FieldElement entry_at(const Composition& u, const Composition& v, const FieldElement& a,
                          const FieldElement& b);

    /// Raw connection coefficients c_{uv}(a,b) for all |u|,|v| <= D by exact
    /// change of basis at concrete scalars.
    std::map<std::pair<Composition, Composition>, FieldElement>
    connection_by_basis(int n, int D, const FieldElement& a, const FieldElement& b);

    /// Normalized connection coefficients over the same basis route.
    std::map<std::pair<Composition, Composition>, FieldElement>
    skew_by_basis(int n, int D, const FieldElement& a, const FieldElement& b);

    /// Structure constants u -> g^u_{vw} of the Ehat basis.
    const std::map<Composition, FieldElement>& structure(const Composition& v,
                                                         const Composition& w);

    /// Symmetric structure constants lambda -> fhat^lambda_{mu nu} of Phat.
    const std::map<Composition, FieldElement>& structure_sym(const Composition& mu,
                                                             const Composition& nu);

private:
    MacdonaldEngine& eng_;
    std::map<std::pair<Composition, Composition>, ParamPoly> entry_memo_;
    std::map<std::pair<Composition, Composition>, std::map<Composition, FieldElement>> g_memo_;
    std::map<std::pair<Composition, Composition>, std::map<Composition, FieldElement>> f_memo_;
};

} // namespace macq

#endif
