#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tfw/rational.hpp"

namespace tfw {

// Closed interval with exact rational endpoints.
struct QInterval {
    Rational lo, hi;
    QInterval() : lo(0), hi(0) {}
    QInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {}
    static QInterval point(const Rational& q) { return QInterval(q, q); }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rational width() const { return hi - lo; }
};

QInterval operator+(const QInterval& a, const QInterval& b);
QInterval operator-(const QInterval& a, const QInterval& b);
QInterval scale(const Rational& c, const QInterval& a);
QInterval operator*(const QInterval& a, const QInterval& b);

// A certified value provider: returns an enclosure of the value at the
// requested precision (in bits). Wider requests must never widen the result.
using IntervalProvider = std::function<QInterval(long prec_bits)>;

IntervalProvider constant_provider(const Rational& q);
// Certified enclosure of pi at the requested precision (MPFR, cached).
QInterval pi_enclosure(long prec_bits);
// value = m * pi, enclosed via MPFR at the requested precision.
IntervalProvider pi_multiple_provider(const Rational& m);
// A fixed interval that cannot be narrowed (user-supplied parameter ranges).
IntervalProvider fixed_interval_provider(const QInterval& iv);

// The ordered table of real generators valuations are written over.
// Generator 0 is always the implicit constant "1".
class SymbolTable {
  public:
    SymbolTable();

    int add(const std::string& name, IntervalProvider provider);
    // Reuses the existing id when the name is already declared.
    int add_or_get(const std::string& name, IntervalProvider provider);
    // Returns the id if present, -1 otherwise.
    int find(const std::string& name) const;
    int id_or_throw(const std::string& name) const;
    bool has(const std::string& name) const { return find(name) >= 0; }

    const std::string& name(int id) const { return names_.at(id); }
    int size() const { return static_cast<int>(names_.size()); }

    QInterval enclosure(int id, long prec_bits) const;
    double approx(int id) const;

  private:
    std::vector<std::string> names_;
    std::vector<IntervalProvider> providers_;
    std::map<std::string, int> index_;
    mutable std::vector<double> approx_cache_;
};

using SymbolsPtr = std::shared_ptr<SymbolTable>;

} // namespace tfw
