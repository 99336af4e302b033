#include "tfw/polyexpr.hpp"

#include <algorithm>
#include <sstream>

namespace tfw {

PolyExpr PolyExpr::constant(const Rational& q) {
    PolyExpr p;
    p.add_term({}, q);
    return p;
}

PolyExpr PolyExpr::from_valuation(const Valuation& v) {
    PolyExpr p;
    for (const auto& [id, c] : v.coeffs()) {
        if (id == 0)
            p.add_term({}, c);
        else
            p.add_term({id}, c);
    }
    return p;
}

PolyExpr& PolyExpr::add_term(std::vector<int> mono, const Rational& c) {
    if (sgn(c) == 0) return *this;
    std::sort(mono.begin(), mono.end());
    auto [it, inserted] = terms_.emplace(std::move(mono), c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
    return *this;
}

PolyExpr PolyExpr::operator+(const PolyExpr& o) const {
    PolyExpr r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PolyExpr PolyExpr::operator-(const PolyExpr& o) const {
    PolyExpr r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

PolyExpr PolyExpr::operator-() const {
    PolyExpr r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolyExpr PolyExpr::operator*(const PolyExpr& o) const {
    PolyExpr r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            std::vector<int> m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            r.add_term(std::move(m), c1 * c2);
        }
    return r;
}

PolyExpr PolyExpr::scale(const Rational& c) const {
    PolyExpr r;
    if (sgn(c) == 0) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

Rational PolyExpr::coeff(const std::vector<int>& mono) const {
    std::vector<int> m = mono;
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

double PolyExpr::approx(const SymbolTable& tab) const {
    double s = 0;
    for (const auto& [m, c] : terms_) {
        double t = rat_d(c);
        for (int id : m) t *= tab.approx(id);
        s += t;
    }
    return s;
}

std::string PolyExpr::str(const SymbolTable& tab) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
        Rational a = (!first && sgn(c) < 0) ? Rational(-c) : c;
        first = false;
        os << rat_str(a);
        for (int id : m) os << "*" << tab.name(id);
    }
    return os.str();
}

PolyExpr PolyExpr::mod_4pi2(int pi_id) const {
    PolyExpr r = *this;
    std::vector<int> pi2 = {pi_id, pi_id};
    auto it = r.terms_.find(pi2);
    if (it == r.terms_.end()) return r;
    Rational m = rat_mod(it->second, Rational(4));
    if (sgn(m) == 0)
        r.terms_.erase(it);
    else
        it->second = m;
    return r;
}

} // namespace tfw
