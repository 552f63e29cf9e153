#ifndef MACQ_PARAM_POLY_HPP
#define MACQ_PARAM_POLY_HPP

#include <array>
#include <map>
#include <string>

#include "macq/field.hpp"

namespace macq {

/// Polynomials in the scalar parameters a,b,c,d,e,z over FieldElement.
/// Used wherever an identity carries free scalars symbolically.
class ParamPoly {
public:
    static constexpr int kVars = 6;
    using Exp = std::array<int, kVars>;
    static constexpr const char* kNames = "abcdez";

    ParamPoly() = default;

    static ParamPoly constant(const FieldElement& c);
    static ParamPoly variable(int idx);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, FieldElement>& terms() const { return terms_; }
    FieldElement coefficient(const Exp& e) const;
    void set(const Exp& e, const FieldElement& c);

    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator-() const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly scale(const FieldElement& c) const;
    ParamPoly pow(int k) const;
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    int total_degree() const;
    bool is_constant() const;
    FieldElement constant_value() const; // requires is_constant()

    /// True when every term has the same total degree d (vacuously for 0).
    bool is_homogeneous(int d) const;

    FieldElement evaluate(const std::array<FieldElement, kVars>& vals) const;

    /// Substitute each variable by a polynomial.
    ParamPoly substitute(const std::array<ParamPoly, kVars>& vals) const;

    std::string to_string() const;

private:
    std::map<Exp, FieldElement> terms_;
};

/// Formal quotient of ParamPolys. No reduction: equality is decided by
/// cross-multiplication, which is all the identity checks need.
class ParamRat {
public:
    ParamRat() : num_(), den_(ParamPoly::constant(FieldElement(1L))) {}
    explicit ParamRat(const FieldElement& c)
        : num_(ParamPoly::constant(c)), den_(ParamPoly::constant(FieldElement(1L))) {}
    explicit ParamRat(ParamPoly p)
        : num_(std::move(p)), den_(ParamPoly::constant(FieldElement(1L))) {}
    ParamRat(ParamPoly num, ParamPoly den);

    static ParamRat variable(int idx) { return ParamRat(ParamPoly::variable(idx)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    ParamRat operator+(const ParamRat& o) const;
    ParamRat operator-(const ParamRat& o) const;
    ParamRat operator-() const;
    ParamRat operator*(const ParamRat& o) const;
    ParamRat operator/(const ParamRat& o) const;
    ParamRat& operator+=(const ParamRat& o) { return *this = *this + o; }
    ParamRat& operator-=(const ParamRat& o) { return *this = *this - o; }
    ParamRat& operator*=(const ParamRat& o) { return *this = *this * o; }
    ParamRat& operator/=(const ParamRat& o) { return *this = *this / o; }

    ParamRat scale(const FieldElement& c) const { return ParamRat(num_.scale(c), den_); }
    ParamRat pow(int k) const;
    ParamRat inverse() const;

    /// Mathematical equality (cross-multiplied).
    bool operator==(const ParamRat& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const ParamRat& o) const { return !(*this == o); }

    std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

private:
    ParamPoly num_, den_;
};

} // namespace macq

#endif
