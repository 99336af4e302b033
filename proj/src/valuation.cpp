#include "tfw/valuation.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "tfw/errors.hpp"

namespace tfw {

Valuation Valuation::constant(const Rational& q) { return symbol(0, q); }

Valuation Valuation::symbol(int id, const Rational& coeff) {
    Valuation v;
    v.add(id, coeff);
    return v;
}

bool Valuation::is_constant() const {
    for (const auto& [id, c] : coeffs_)
        if (id != 0) return false;
    return true;
}

Rational Valuation::coeff(int id) const {
    auto it = coeffs_.find(id);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Valuation& Valuation::add(int id, const Rational& c) {
    if (sgn(c) == 0) return *this;
    auto [it, inserted] = coeffs_.emplace(id, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) coeffs_.erase(it);
    }
    return *this;
}

Valuation Valuation::operator+(const Valuation& o) const {
    Valuation r = *this;
    for (const auto& [id, c] : o.coeffs_) r.add(id, c);
    return r;
}

Valuation Valuation::operator-(const Valuation& o) const {
    Valuation r = *this;
    for (const auto& [id, c] : o.coeffs_) r.add(id, -c);
    return r;
}

Valuation Valuation::operator-() const {
    Valuation r;
    for (const auto& [id, c] : coeffs_) r.coeffs_.emplace(id, -c);
    return r;
}

Valuation Valuation::operator*(const Rational& c) const {
    Valuation r;
    if (sgn(c) == 0) return r;
    for (const auto& [id, q] : coeffs_) r.coeffs_.emplace(id, q * c);
    return r;
}

QInterval Valuation::enclosure(const SymbolTable& tab, long prec_bits) const {
    QInterval acc = QInterval::point(Rational(0));
    for (const auto& [id, c] : coeffs_) acc = acc + scale(c, tab.enclosure(id, prec_bits));
    return acc;
}

double Valuation::approx(const SymbolTable& tab) const {
    double s = 0;
    for (const auto& [id, c] : coeffs_) s += rat_d(c) * tab.approx(id);
    return s;
}

std::string Valuation::str(const SymbolTable& tab) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : coeffs_) {
        if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
        Rational a = (!first && sgn(c) < 0) ? Rational(-c) : c;
        first = false;
        if (id == 0) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << tab.name(id);
        }
    }
    return os.str();
}

CompareOptions default_compare_options() {
    CompareOptions opt;
    if (const char* env = std::getenv("TFW_PRECISION")) {
        int d = std::atoi(env);
        if (d > 0) opt.max_refinements = d;
    }
    return opt;
}

Ordering compare(const Valuation& a, const Valuation& b, const SymbolTable& tab,
                 const CompareOptions& opt) {
    Valuation d = a - b;
    if (d.is_zero()) return Ordering::Equal;
    if (d.is_constant()) {
        int s = sgn(d.constant_part());
        return s < 0 ? Ordering::Less : Ordering::Greater;
    }
    // certified float filter: decide by doubles when the value clears a crude
    // rounding bound, fall back to interval refinement otherwise
    {
        double acc = 0, mag = 0;
        bool usable = true;
        for (const auto& [id, c] : d.coeffs()) {
            double cv = rat_d(c);
            double gv = tab.approx(id);
            if (!std::isfinite(cv) || !std::isfinite(gv)) {
                usable = false;
                break;
            }
            acc += cv * gv;
            mag += std::abs(cv * gv);
        }
        if (usable) {
            double bound = mag * 1e-12 + 1e-280;
            if (acc > bound) return Ordering::Greater;
            if (acc < -bound) return Ordering::Less;
        }
    }
    long prec = 64;
    Rational prev_width(-1);
    for (int round = 0; round < opt.max_refinements; ++round) {
        QInterval iv = d.enclosure(tab, prec);
        if (sgn(iv.lo) > 0) return Ordering::Greater;
        if (sgn(iv.hi) < 0) return Ordering::Less;
        Rational w = iv.width();
        if (round > 0 && w >= prev_width) break; // providers cannot narrow further
        prev_width = w;
        if (prec >= opt.max_bits) break;
        prec *= 2;
    }
    throw numeric_error("AmbiguousOrdering",
                        "cannot certify sign of " + d.str(tab) + " at refinement limit");
}

} // namespace tfw
