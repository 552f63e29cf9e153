#ifndef MACQ_LAURENT_HPP
#define MACQ_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "macq/field.hpp"

namespace macq {

/// Sparse Laurent polynomial in x_1..x_n over FieldElement.
/// Invariant: no stored zero coefficients, all exponent vectors length n.
class LaurentPoly {
public:
    using Exp = std::vector<int>;

    explicit LaurentPoly(int n = 0) : n_(n) {}

    static LaurentPoly constant(int n, const FieldElement& c);
    static LaurentPoly variable(int n, int i); // x_{i+1}, 0-based i
    static LaurentPoly monomial(Exp e, const FieldElement& c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, FieldElement>& terms() const { return terms_; }

    FieldElement coefficient(const Exp& e) const;
    void set(const Exp& e, const FieldElement& c); // drops zeros

    int degree() const;       // max total degree, -1 for zero
    int min_exponent() const; // most negative single exponent (0 if none)
    bool is_polynomial() const { return min_exponent() >= 0; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scale(const FieldElement& c) const;
    bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    LaurentPoly top_homogeneous() const;
    LaurentPoly homogeneous_part(int d) const;

    /// Multiply by x_i^k (k may be negative).
    LaurentPoly shift_exp(int i, int k) const;
    LaurentPoly swap_vars(int i, int j) const;

    /// x_i -> c * x_i for all i (coefficient picks up c^degree per term).
    LaurentPoly scale_all_vars(const FieldElement& c) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    /// Evaluation into any commutative ring R with FieldElement acting by
    /// scale(). Requires a genuine polynomial (no negative exponents).
    template <class R>
    R evaluate_ring(const std::vector<R>& point, const R& one) const {
        if (!is_polynomial())
            throw error("evaluate_ring requires a polynomial (negative exponent present)");
        R acc = one.scale(FieldElement(0L));
        for (const auto& [e, c] : terms_) {
            R term = one.scale(c);
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
                    term = term * point[static_cast<size_t>(i)];
            acc = acc + term;
        }
        return acc;
    }

    std::string to_text() const; // graded-lex rendering, e.g. "x2 - 1"
    std::string to_json(const std::string& qt_fingerprint) const;
    static LaurentPoly from_json(const std::string& text, const QtCtx& ctx,
                                 std::string* fingerprint_out = nullptr);

private:
    int n_;
    std::map<Exp, FieldElement> terms_;
};

} // namespace macq

#endif
