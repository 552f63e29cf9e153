#ifndef MACQ_COMPOSITION_HPP
#define MACQ_COMPOSITION_HPP

#include <string>
#include <vector>

#include "macq/field.hpp"

namespace macq {

/// A composition u in N^n. Most statistics also accept arbitrary integer
/// vectors where the theory extends (spectral vectors of -v in particular).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}

    int n() const { return static_cast<int>(parts_.size()); }
    int size() const; // |u|
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    bool is_dominant() const;
    Composition sorted() const; // u+
    Composition swapped(int i) const; // u s_i (positions i, i+1; 0-based i)

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string to_string() const; // "2,4,0"
    static Composition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

/// q- and t-exponents of one spectral vector entry.
struct SpecExp {
    int qe;
    int te;
};

/// Leg-colength of row i (for arbitrary integer vectors).
int leg_colength(const std::vector<int>& u, int i);

/// Spectral vector exponents: entry i is q^{u_i} t^{n-1-l'(i)}.
std::vector<SpecExp> spectral_exponents(const std::vector<int>& u);

std::vector<FieldElement> spectral_vector(const QtCtx& ctx, const std::vector<int>& u);

/// Per-cell diagram statistics of a composition.
struct CellStats {
    int row, col;  // 1-based (i,j)
    int arm, arm_co, leg, leg_co;
};

std::vector<CellStats> cell_stats(const Composition& u);

int stat_n(const Composition& u);      // sum of legs
int stat_nprime(const Composition& u); // sum of arms = sum C(u_i,2)

FieldElement tau(const QtCtx& ctx, const Composition& u);

/// (b)_u = prod over cells (1 - b q^{a'(s)} t^{-l'(s)}).
FieldElement poch_composition(const QtCtx& ctx, const FieldElement& b, const Composition& u);

/// prod over cells (b - q^{a'(s)} t^{-l'(s)}); equals b^{|u|} (1/b)_u.
FieldElement poch_reversed(const QtCtx& ctx, const FieldElement& b, const Composition& u);

struct CFactors {
    FieldElement cprime; // prod (1 - q^{a+1} t^{l})
    FieldElement c;      // prod (1 - q^{a} t^{l+1})
    FieldElement b;      // c / cprime
};

CFactors c_factors(const QtCtx& ctx, const Composition& u);

/// All u in N^n with |u| = degree, lexicographic.
std::vector<Composition> enumerate_compositions(int n, int degree);

/// All u in N^n with |u| <= degree, graded then lexicographic.
std::vector<Composition> enumerate_up_to(int n, int degree);

/// Distinct S_n-orbit members of a partition (all rearrangements).
std::vector<Composition> orbit(const Composition& lambda);

/// Containment of diagrams after sorting: u+ subset of v+.
bool sorted_contains(const Composition& outer, const Composition& inner);

} // namespace macq

#endif
