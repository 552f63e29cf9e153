#include "macq/laurent.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace macq {

LaurentPoly LaurentPoly::constant(int n, const FieldElement& c) {
    LaurentPoly p(n);
    if (!c.is_zero()) p.terms_[Exp(static_cast<size_t>(n), 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(int n, int i) {
    LaurentPoly p(n);
    Exp e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    p.terms_[e] = FieldElement(1L);
    return p;
}

LaurentPoly LaurentPoly::monomial(Exp e, const FieldElement& c) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (!c.is_zero()) p.terms_[std::move(e)] = c;
    return p;
}

FieldElement LaurentPoly::coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement(0L) : it->second;
}

void LaurentPoly::set(const Exp& e, const FieldElement& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

int LaurentPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

int LaurentPoly::min_exponent() const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        for (int v : e) m = std::min(m, v);
    return m;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (n_ != o.n_) throw error("LaurentPoly arity mismatch");
    LaurentPoly r = *this;
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

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (n_ != o.n_) throw error("LaurentPoly arity mismatch");
    LaurentPoly r(n_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exp e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            FieldElement c = c1 * c2;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scale(const FieldElement& c) const {
    LaurentPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::top_homogeneous() const {
    return homogeneous_part(degree());
}

LaurentPoly LaurentPoly::homogeneous_part(int d) const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v : e) s += v;
        if (s == d) r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::shift_exp(int i, int k) const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exp e2 = e;
        e2[static_cast<size_t>(i)] += k;
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

LaurentPoly LaurentPoly::swap_vars(int i, int j) const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exp e2 = e;
        std::swap(e2[static_cast<size_t>(i)], e2[static_cast<size_t>(j)]);
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

LaurentPoly LaurentPoly::scale_all_vars(const FieldElement& c) const {
    LaurentPoly r(n_);
    for (const auto& [e, v] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        FieldElement nc = v * c.pow(s);
        if (!nc.is_zero()) r.terms_.emplace(e, std::move(nc));
    }
    return r;
}

FieldElement LaurentPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != n_) throw error("evaluate: point arity mismatch");
    FieldElement acc(0L);
    for (const auto& [e, c] : terms_) {
        FieldElement term = c;
        for (int i = 0; i < n_; ++i) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            const FieldElement& xi = point[static_cast<size_t>(i)];
            if (k < 0 && xi.is_zero())
                throw division_by_zero("negative exponent at zero coordinate " +
                                       std::to_string(i + 1));
            term *= xi.pow(k);
        }
        acc += term;
    }
    return acc;
}

namespace {

// graded-lex on exponents, highest first; ties broken lexicographically
bool term_order(const LaurentPoly::Exp& a, const LaurentPoly::Exp& b) {
    int da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da > db;
    return a > b;
}

} // namespace

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exp, FieldElement>*> items;
    for (const auto& kv : terms_) items.push_back(&kv);
    std::sort(items.begin(), items.end(),
              [](auto* a, auto* b) { return term_order(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* kv : items) {
        const Exp& e = kv->first;
        FieldElement c = kv->second;
        bool is_const_term = true;
        for (int v : e)
            if (v != 0) is_const_term = false;

        std::string sign = " + ";
        if (!is_const_term && c == FieldElement(-1L)) {
            sign = " - ";
            c = FieldElement(1L);
        } else if (c.is_specialized() && c.rat() < 0) {
            sign = " - ";
            c = -c;
        }
        if (first) {
            os << (sign == " - " ? "-" : "");
            first = false;
        } else {
            os << sign;
        }
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < n_; ++i) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            if (any) mono << "*";
            mono << "x" << (i + 1);
            if (k != 1) mono << "^" << k;
            any = true;
        }
        if (!any) {
            os << c.to_string();
        } else if (c.is_one()) {
            os << mono.str();
        } else {
            std::string cs = c.to_string();
            bool atomic = c.is_specialized()
                              ? (c.rat().get_den() == 1 && c.rat() >= 0)
                              : false;
            if (atomic)
                os << cs << "*" << mono.str();
            else
                os << "(" << cs << ")*" << mono.str();
        }
    }
    return os.str();
}

std::string LaurentPoly::to_json(const std::string& qt_fingerprint) const {
    nlohmann::json j;
    j["n"] = n_;
    j["qt"] = qt_fingerprint;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json t;
        t["exp"] = e;
        t["coeff"] = c.to_string();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& text, const QtCtx& ctx,
                                   std::string* fingerprint_out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw cache_corrupt(e.what());
    }
    if (!j.contains("n") || !j.contains("terms")) throw cache_corrupt("missing fields");
    LaurentPoly p(j["n"].get<int>());
    if (fingerprint_out && j.contains("qt")) *fingerprint_out = j["qt"].get<std::string>();
    for (const auto& t : j["terms"]) {
        Exp e = t["exp"].get<Exp>();
        if (static_cast<int>(e.size()) != p.n_) throw cache_corrupt("exponent arity mismatch");
        p.set(e, parse_field_element(t["coeff"].get<std::string>(), ctx));
    }
    return p;
}

} // namespace macq
