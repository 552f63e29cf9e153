#include "macq/qt_poly.hpp"

#include <algorithm>
#include <sstream>

namespace macq {

// ---------------------------------------------------------------- TPoly ----

TPoly TPoly::t_power(int k, const Int& coeff) {
    TPoly p;
    if (coeff == 0) return p;
    p.c.assign(static_cast<size_t>(k) + 1, Int(0));
    p.c.back() = coeff;
    return p;
}

const Int& TPoly::lc() const {
    static const Int zero(0);
    return c.empty() ? zero : c.back();
}

void TPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

TPoly TPoly::operator-() const {
    TPoly r;
    r.c.reserve(c.size());
    for (const auto& x : c) r.c.push_back(-x);
    return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
    TPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
    TPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            mpz_addmul(r.c[i + j].get_mpz_t(), c[i].get_mpz_t(), o.c[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

TPoly TPoly::mul_int(const Int& k) const {
    TPoly r;
    if (k == 0) return r;
    r.c.reserve(c.size());
    for (const auto& x : c) r.c.push_back(x * k);
    return r;
}

Int content(const TPoly& p) {
    Int g(0);
    for (const auto& x : p.c) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g; // 0 for the zero polynomial
}

TPoly exact_div(const TPoly& p, const Int& k) {
    if (k == 0) throw internal_error("TPoly division by integer 0");
    TPoly r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c) {
        Int q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
        r.c.push_back(q);
    }
    r.trim();
    return r;
}

TPoly exact_div(const TPoly& p, const TPoly& d) {
    if (d.is_zero()) throw internal_error("TPoly division by zero polynomial");
    if (p.is_zero()) return TPoly();
    if (d.degree() == 0) return exact_div(p, d.c[0]);
    TPoly rem = p;
    TPoly quot;
    quot.c.assign(p.c.size(), Int(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Int qc;
        if (mpz_divisible_p(rem.lc().get_mpz_t(), d.lc().get_mpz_t()) == 0)
            throw internal_error("TPoly exact_div: not divisible");
        mpz_divexact(qc.get_mpz_t(), rem.lc().get_mpz_t(), d.lc().get_mpz_t());
        quot.c[static_cast<size_t>(k)] += qc;
        TPoly sub = d.mul_int(qc);
        TPoly shifted;
        shifted.c.assign(static_cast<size_t>(k), Int(0));
        shifted.c.insert(shifted.c.end(), sub.c.begin(), sub.c.end());
        rem = rem - shifted;
    }
    if (!rem.is_zero()) throw internal_error("TPoly exact_div: nonzero remainder");
    quot.trim();
    return quot;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions.
TPoly pseudo_rem(TPoly a, const TPoly& b) {
    int k = a.degree() - b.degree();
    for (int step = 0; step <= k; ++step) {
        if (a.degree() < b.degree()) {
            a = a.mul_int(b.lc());
            continue;
        }
        Int top = a.lc();
        int sh = a.degree() - b.degree();
        a = a.mul_int(b.lc());
        TPoly sub;
        sub.c.assign(static_cast<size_t>(sh), Int(0));
        for (const auto& x : b.c) sub.c.push_back(x * top);
        a = a - sub;
    }
    return a;
}

} // namespace

TPoly gcd(const TPoly& a_in, const TPoly& b_in) {
    if (a_in.is_zero()) {
        TPoly r = b_in;
        if (!r.is_zero() && r.lc() < 0) r = -r;
        return r;
    }
    if (b_in.is_zero()) {
        TPoly r = a_in;
        if (!r.is_zero() && r.lc() < 0) r = -r;
        return r;
    }
    Int ca = content(a_in), cb = content(b_in);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    TPoly a = exact_div(a_in, ca);
    TPoly b = exact_div(b_in, cb);
    if (a.degree() < b.degree()) std::swap(a, b);
    // primitive PRS; degrees at desk scale stay small enough
    while (true) {
        if (b.is_zero()) break;
        if (b.degree() == 0) {
            b = TPoly(Int(1));
            break;
        }
        TPoly r = pseudo_rem(a, b);
        a = b;
        Int cr = content(r);
        b = cr == 0 ? TPoly() : exact_div(r, cr);
    }
    TPoly g = b.is_zero() ? a : b;
    if (!g.is_zero() && g.lc() < 0) g = -g;
    return g.mul_int(cg);
}

// --------------------------------------------------------------- QtPoly ----

QtPoly QtPoly::monomial(int qe, int te, const Int& coeff) {
    QtPoly p;
    if (coeff == 0) return p;
    p.c.assign(static_cast<size_t>(qe) + 1, TPoly());
    p.c.back() = TPoly::t_power(te, coeff);
    return p;
}

int QtPoly::degree_t() const {
    int d = -1;
    for (const auto& tp : c) d = std::max(d, tp.degree());
    return d;
}

int QtPoly::total_degree() const {
    int d = -1;
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) d = std::max(d, static_cast<int>(i) + c[i].degree());
    return d;
}

const TPoly& QtPoly::lc_q() const {
    static const TPoly zero;
    return c.empty() ? zero : c.back();
}

void QtPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

QtPoly QtPoly::operator-() const {
    QtPoly r;
    r.c.reserve(c.size());
    for (const auto& x : c) r.c.push_back(-x);
    return r;
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
    QtPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
    r.trim();
    return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const {
    QtPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
    r.trim();
    return r;
}

QtPoly QtPoly::operator*(const QtPoly& o) const {
    QtPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, TPoly());
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j].is_zero()) continue;
            r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
    }
    r.trim();
    return r;
}

bool QtPoly::is_one() const {
    return c.size() == 1 && c[0].c.size() == 1 && c[0].c[0] == 1;
}

Int QtPoly::trailing_coeff() const {
    // minimal monomial under graded lex with q > t
    int best_deg = -1, best_q = -1;
    Int coeff(0);
    for (size_t i = 0; i < c.size(); ++i) {
        for (size_t j = 0; j < c[i].c.size(); ++j) {
            if (c[i].c[j] == 0) continue;
            int deg = static_cast<int>(i + j);
            int qe = static_cast<int>(i);
            if (best_deg < 0 || deg < best_deg || (deg == best_deg && qe < best_q)) {
                best_deg = deg;
                best_q = qe;
                coeff = c[i].c[j];
            }
        }
    }
    return coeff;
}

Rat QtPoly::evaluate(const Rat& qv, const Rat& tv) const {
    Rat acc(0);
    // Horner in q, inner Horner in t
    for (size_t i = c.size(); i-- > 0;) {
        Rat inner(0);
        for (size_t j = c[i].c.size(); j-- > 0;) {
            inner = inner * tv + Rat(c[i].c[j]);
        }
        acc = acc * qv + inner;
    }
    return acc;
}

std::string QtPoly::to_string() const {
    if (is_zero()) return "0";
    struct Mono {
        int deg, qe, te;
        const Int* coeff;
    };
    std::vector<Mono> monos;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].c.size(); ++j)
            if (c[i].c[j] != 0)
                monos.push_back({static_cast<int>(i + j), static_cast<int>(i),
                                 static_cast<int>(j), &c[i].c[j]});
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.qe < b.qe;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& m : monos) {
        Int a = *m.coeff;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (a == 1);
        bool has_vars = (m.qe > 0 || m.te > 0);
        if (!unit || !has_vars) os << a.get_str();
        bool need_star = !unit || !has_vars;
        if (m.qe > 0) {
            if (need_star) os << "*";
            os << "q";
            if (m.qe > 1) os << "^" << m.qe;
            need_star = true;
        }
        if (m.te > 0) {
            if (need_star) os << "*";
            os << "t";
            if (m.te > 1) os << "^" << m.te;
        }
    }
    return os.str();
}

TPoly content_q(const QtPoly& p) {
    TPoly g;
    for (const auto& tp : p.c) {
        if (tp.is_zero()) continue;
        g = gcd(g, tp);
        if (g.degree() == 0 && g.lc() == 1) break;
    }
    return g; // zero for the zero polynomial
}

QtPoly exact_div(const QtPoly& p, const TPoly& k) {
    QtPoly r;
    r.c.reserve(p.c.size());
    for (const auto& tp : p.c) r.c.push_back(exact_div(tp, k));
    r.trim();
    return r;
}

QtPoly exact_div(const QtPoly& p, const QtPoly& d) {
    if (d.is_zero()) throw internal_error("QtPoly division by zero polynomial");
    if (p.is_zero()) return QtPoly();
    if (d.degree_q() == 0) return exact_div(p, d.c[0]);
    QtPoly rem = p;
    QtPoly quot;
    quot.c.assign(p.c.size(), TPoly());
    while (!rem.is_zero() && rem.degree_q() >= d.degree_q()) {
        int k = rem.degree_q() - d.degree_q();
        TPoly qc = exact_div(rem.lc_q(), d.lc_q());
        quot.c[static_cast<size_t>(k)] = quot.c[static_cast<size_t>(k)] + qc;
        QtPoly sub;
        sub.c.assign(static_cast<size_t>(k), TPoly());
        for (const auto& x : d.c) sub.c.push_back(x * qc);
        sub.trim();
        rem = rem - sub;
    }
    if (!rem.is_zero()) throw internal_error("QtPoly exact_div: nonzero remainder");
    quot.trim();
    return quot;
}

namespace {

QtPoly pseudo_rem_q(QtPoly a, const QtPoly& b) {
    int k = a.degree_q() - b.degree_q();
    auto scale_by = [](const QtPoly& p, const TPoly& m) {
        QtPoly r;
        r.c.reserve(p.c.size());
        for (const auto& x : p.c) r.c.push_back(x * m);
        r.trim();
        return r;
    };
    for (int step = 0; step <= k; ++step) {
        if (a.degree_q() < b.degree_q()) {
            a = scale_by(a, b.lc_q());
            continue;
        }
        TPoly top = a.lc_q();
        int sh = a.degree_q() - b.degree_q();
        a = scale_by(a, b.lc_q());
        QtPoly sub;
        sub.c.assign(static_cast<size_t>(sh), TPoly());
        for (const auto& x : b.c) sub.c.push_back(x * top);
        sub.trim();
        a = a - sub;
    }
    return a;
}

void normalize_sign(TPoly& p) {
    if (!p.is_zero() && p.lc() < 0) p = -p;
}

} // namespace

QtPoly gcd(const QtPoly& a_in, const QtPoly& b_in) {
    if (a_in.is_zero()) {
        QtPoly r = b_in;
        if (!r.is_zero() && r.trailing_coeff() < 0) r = -r;
        return r;
    }
    if (b_in.is_zero()) {
        QtPoly r = a_in;
        if (!r.is_zero() && r.trailing_coeff() < 0) r = -r;
        return r;
    }
    TPoly ca = content_q(a_in), cb = content_q(b_in);
    TPoly cg = gcd(ca, cb);
    QtPoly a = exact_div(a_in, ca);
    QtPoly b = exact_div(b_in, cb);
    if (a.degree_q() < b.degree_q()) std::swap(a, b);
    while (true) {
        if (b.is_zero()) break;
        if (b.degree_q() == 0) {
            b = QtPoly(Int(1));
            break;
        }
        QtPoly r = pseudo_rem_q(a, b);
        a = b;
        if (r.is_zero()) {
            b = QtPoly();
        } else {
            b = exact_div(r, content_q(r));
        }
    }
    QtPoly g = b.is_zero() ? a : b;
    normalize_sign(cg);
    QtPoly result;
    result.c.reserve(g.c.size());
    for (const auto& x : g.c) result.c.push_back(x * cg);
    result.trim();
    if (!result.is_zero() && result.trailing_coeff() < 0) result = -result;
    return result;
}

} // namespace macq
