#include "tfw/symbols.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tfw/errors.hpp"

namespace tfw {

QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
}
QInterval operator-(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo - b.hi, a.hi - b.lo);
}
QInterval scale(const Rational& c, const QInterval& a) {
    if (sgn(c) >= 0) return QInterval(c * a.lo, c * a.hi);
    return QInterval(c * a.hi, c * a.lo);
}
QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return QInterval(lo, hi);
}

namespace {

Rational mpfr_to_rational(const mpfr_t x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rational r(q);
    mpq_clear(q);
    return r;
}

} // namespace

IntervalProvider constant_provider(const Rational& q) {
    return [q](long) { return QInterval::point(q); };
}

QInterval pi_enclosure(long prec) {
    if (prec < 16) prec = 16;
    thread_local std::map<long, QInterval> cache;
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    QInterval pi_iv(mpfr_to_rational(lo), mpfr_to_rational(hi));
    mpfr_clear(lo);
    mpfr_clear(hi);
    cache.emplace(prec, pi_iv);
    return pi_iv;
}

IntervalProvider pi_multiple_provider(const Rational& m) {
    return [m](long prec) { return scale(m, pi_enclosure(prec)); };
}

IntervalProvider fixed_interval_provider(const QInterval& iv) {
    return [iv](long) { return iv; };
}

SymbolTable::SymbolTable() { add("1", constant_provider(Rational(1))); }

int SymbolTable::add(const std::string& name, IntervalProvider provider) {
    auto it = index_.find(name);
    if (it != index_.end())
        throw domain_error("DuplicateSymbol", "generator already declared: " + name);
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    providers_.push_back(std::move(provider));
    index_[name] = id;
    return id;
}

int SymbolTable::add_or_get(const std::string& name, IntervalProvider provider) {
    int id = find(name);
    if (id >= 0) return id;
    return add(name, std::move(provider));
}

int SymbolTable::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int SymbolTable::id_or_throw(const std::string& name) const {
    int id = find(name);
    if (id < 0) throw domain_error("UnknownSymbol", "undeclared generator: " + name);
    return id;
}

QInterval SymbolTable::enclosure(int id, long prec_bits) const {
    return providers_.at(id)(prec_bits);
}

double SymbolTable::approx(int id) const {
    if (static_cast<size_t>(id) < approx_cache_.size()) return approx_cache_[id];
    approx_cache_.resize(names_.size(), std::numeric_limits<double>::quiet_NaN());
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!std::isnan(approx_cache_[i])) continue;
        QInterval iv = enclosure(static_cast<int>(i), 64);
        approx_cache_[i] = (rat_d(iv.lo) + rat_d(iv.hi)) / 2.0;
    }
    return approx_cache_[id];
}

} // namespace tfw
