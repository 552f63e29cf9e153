#include "macq/param_poly.hpp"

#include <sstream>

namespace macq {

ParamPoly ParamPoly::constant(const FieldElement& c) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_[Exp{}] = c;
    return p;
}

ParamPoly ParamPoly::variable(int idx) {
    ParamPoly p;
    Exp e{};
    e[static_cast<size_t>(idx)] = 1;
    p.terms_[e] = FieldElement(1L);
    return p;
}

FieldElement ParamPoly::coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement(0L) : it->second;
}

void ParamPoly::set(const Exp& e, const FieldElement& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exp e;
            for (size_t i = 0; i < kVars; ++i) e[i] = e1[i] + e2[i];
            FieldElement c = c1 * c2;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_.emplace(e, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

ParamPoly ParamPoly::scale(const FieldElement& c) const {
    ParamPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

ParamPoly ParamPoly::pow(int k) const {
    ParamPoly acc = constant(FieldElement(1L));
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

int ParamPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{});
}

FieldElement ParamPoly::constant_value() const {
    if (terms_.empty()) return FieldElement(0L);
    return terms_.begin()->second;
}

bool ParamPoly::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v : e) s += v;
        if (s != d) return false;
    }
    return true;
}

FieldElement ParamPoly::evaluate(const std::array<FieldElement, kVars>& vals) const {
    FieldElement acc(0L);
    for (const auto& [e, c] : terms_) {
        FieldElement term = c;
        for (size_t i = 0; i < kVars; ++i)
            if (e[i] != 0) term *= vals[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

ParamPoly ParamPoly::substitute(const std::array<ParamPoly, kVars>& vals) const {
    ParamPoly acc;
    for (const auto& [e, c] : terms_) {
        ParamPoly term = constant(c);
        for (size_t i = 0; i < kVars; ++i)
            if (e[i] != 0) term = term * vals[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (size_t i = 0; i < kVars; ++i) {
            if (e[i] == 0) continue;
            os << "*" << kNames[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// --------------------------------------------------------------- ParamRat ----

ParamRat::ParamRat(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("ParamRat with zero denominator");
    if (num_.is_zero()) den_ = ParamPoly::constant(FieldElement(1L));
}

ParamRat ParamRat::operator+(const ParamRat& o) const {
    if (num_.is_zero()) return o;
    if (o.num_.is_zero()) return *this;
    if (den_ == o.den_) return ParamRat(num_ + o.num_, den_);
    return ParamRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamRat ParamRat::operator-() const { return ParamRat(-num_, den_); }

ParamRat ParamRat::operator-(const ParamRat& o) const { return *this + (-o); }

ParamRat ParamRat::operator*(const ParamRat& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return ParamRat();
    return ParamRat(num_ * o.num_, den_ * o.den_);
}

ParamRat ParamRat::inverse() const {
    if (num_.is_zero()) throw division_by_zero("inverse of zero ParamRat");
    return ParamRat(den_, num_);
}

ParamRat ParamRat::operator/(const ParamRat& o) const { return *this * o.inverse(); }

ParamRat ParamRat::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    ParamRat acc(FieldElement(1L));
    for (int i = 0; i < k; ++i) acc *= *this;
    return acc;
}

} // namespace macq
