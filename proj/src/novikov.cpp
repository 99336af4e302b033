#include "tfw/novikov.hpp"

#include <algorithm>
#include <sstream>

#include "tfw/errors.hpp"

namespace tfw {

Novikov::Novikov(SymbolsPtr tab, Valuation cutoff)
    : tab_(std::move(tab)), cutoff_(std::move(cutoff)) {}

Novikov Novikov::zero(SymbolsPtr tab, Valuation cutoff) {
    return Novikov(std::move(tab), std::move(cutoff));
}

Novikov Novikov::from_unit(SymbolsPtr tab, Valuation cutoff, const Unit& u) {
    return monomial(std::move(tab), std::move(cutoff), Valuation(), u);
}

Novikov Novikov::one(SymbolsPtr tab, Valuation cutoff) {
    return from_unit(std::move(tab), std::move(cutoff), Unit::one());
}

Novikov Novikov::monomial(SymbolsPtr tab, Valuation cutoff, const Valuation& v, const Unit& u) {
    return make(std::move(tab), std::move(cutoff), {{v, u}});
}

Novikov Novikov::make(SymbolsPtr tab, Valuation cutoff, std::vector<Term> terms) {
    Novikov r(tab, cutoff);
    const SymbolTable& T = *tab;
    std::erase_if(terms, [](const Term& t) { return t.c.is_zero(); });
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        if (a.val.identical(b.val)) return false;
        return compare(a.val, b.val, T) == Ordering::Less;
    });
    for (auto& t : terms) {
        if (compare(t.val, cutoff, T) != Ordering::Less) continue;
        if (!r.terms_.empty() && r.terms_.back().val.identical(t.val)) {
            r.terms_.back().c = r.terms_.back().c + t.c;
            if (r.terms_.back().c.is_zero()) r.terms_.pop_back();
        } else if (!r.terms_.empty() &&
                   compare(r.terms_.back().val, t.val, T) == Ordering::Equal) {
            // numerically equal but symbolically distinct valuations cannot be
            // canonically merged
            throw numeric_error("AmbiguousOrdering",
                                "distinct valuation expressions with equal value: " +
                                    r.terms_.back().val.str(T) + " vs " + t.val.str(T));
        } else {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

void Novikov::check_compatible(const Novikov& o) const {
    if (tab_.get() != o.tab_.get())
        throw domain_error("BasisMismatch", "operands use different symbol tables");
    if (!cutoff_.identical(o.cutoff_))
        throw domain_error("CutoffMismatch", "operands carry different cutoffs");
}

const Valuation& Novikov::val() const {
    if (terms_.empty()) throw domain_error("ZeroHasNoValuation", "valuation of zero");
    return terms_.front().val;
}

const Unit& Novikov::leading_unit() const {
    if (terms_.empty()) throw domain_error("ZeroHasNoValuation", "leading unit of zero");
    return terms_.front().c;
}

Novikov Novikov::operator+(const Novikov& o) const {
    check_compatible(o);
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return make(tab_, cutoff_, std::move(all));
}

Novikov Novikov::operator-() const {
    Novikov r(tab_, cutoff_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Novikov Novikov::operator*(const Novikov& o) const {
    check_compatible(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.val + b.val, a.c * b.c});
    return make(tab_, cutoff_, std::move(prod));
}

Novikov Novikov::scale(const Unit& u) const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.c = x.c * u;
    return make(tab_, cutoff_, std::move(t));
}

Novikov Novikov::shift(const Valuation& dv) const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.val = x.val + dv;
    return make(tab_, cutoff_, std::move(t));
}

Novikov Novikov::invert() const {
    if (terms_.empty()) throw domain_error("ZeroDivision", "inverse of zero");
    const Valuation v0 = terms_.front().val;
    const Unit c0 = terms_.front().c;
    // x = c0 T^{v0} (1 + y), val(y) > 0
    Novikov y(tab_, cutoff_);
    {
        std::vector<Term> t(terms_.begin() + 1, terms_.end());
        Unit c0inv = c0.inverse();
        for (auto& x : t) {
            x.val = x.val - v0;
            x.c = x.c * c0inv;
        }
        y = make(tab_, cutoff_, std::move(t));
    }
    Novikov acc = one(tab_, cutoff_);
    Novikov term = one(tab_, cutoff_);
    const long kMaxIters = 20000;
    for (long i = 0; i < kMaxIters; ++i) {
        if (y.is_zero()) break;
        term = -(term * y);
        if (term.is_zero()) break;
        acc = acc + term;
    }
    if (!y.is_zero()) {
        // convergence is by valuation growth; non-termination means the
        // cutoff cannot be reached in a sane number of steps
        Novikov t2 = term * y;
        if (!t2.is_zero())
            throw numeric_error("CutoffExhausted", "geometric inversion did not terminate");
    }
    return acc.shift(-v0).scale(c0.inverse());
}

Novikov Novikov::pow(long e) const {
    if (e == 0) return one(tab_, cutoff_);
    Novikov base = e > 0 ? *this : invert();
    long n = e > 0 ? e : -e;
    Novikov acc = one(tab_, cutoff_);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Novikov Novikov::truncated(const Valuation& new_cutoff) const {
    std::vector<Term> t(terms_.begin(), terms_.end());
    return make(tab_, new_cutoff, std::move(t));
}

bool Novikov::equals(const Novikov& o) const {
    check_compatible(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!terms_[i].val.identical(o.terms_[i].val)) {
            if (compare(terms_[i].val, o.terms_[i].val, *tab_) != Ordering::Equal) return false;
        }
        if (!terms_[i].c.equals(o.terms_[i].c)) return false;
    }
    return true;
}

std::string Novikov::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.c.str() << ")";
        if (!t.val.is_zero()) os << "*T^(" << t.val.str(*tab_) << ")";
    }
    return os.str();
}

} // namespace tfw
