#pragma once

#include <map>

#include "tfw/novikov.hpp"

namespace tfw {

// Laurent polynomial in one variable over the truncated Novikov field.
class NPoly {
  public:
    NPoly() = default;
    NPoly(SymbolsPtr tab, Valuation cutoff) : tab_(std::move(tab)), cutoff_(std::move(cutoff)) {}

    static NPoly constant(const Novikov& c);
    static NPoly variable(SymbolsPtr tab, Valuation cutoff); // z
    static NPoly monomial(long e, const Novikov& c);

    const std::map<long, Novikov>& coeffs() const { return coeffs_; }
    const SymbolsPtr& symbols() const { return tab_; }
    const Valuation& cutoff() const { return cutoff_; }
    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const;
    long max_exp() const;
    Novikov coeff(long e) const;

    NPoly& set(long e, const Novikov& c);
    NPoly operator+(const NPoly& o) const;
    NPoly operator-(const NPoly& o) const;
    NPoly operator-() const;
    NPoly operator*(const NPoly& o) const;
    NPoly scale(const Novikov& c) const;
    NPoly shift(long d) const; // multiply by z^d
    NPoly pow(long e) const;   // e >= 0

    Novikov eval(const Novikov& x) const;
    // substitute z -> z + a (binomial shift); requires min_exp >= 0
    NPoly taylor_shift(const Novikov& a) const;

    std::string str() const;

  private:
    SymbolsPtr tab_;
    Valuation cutoff_;
    std::map<long, Novikov> coeffs_;
};

// Finitely supported Laurent polynomial in two variables (input to reduce).
struct BiLaurent {
    SymbolsPtr tab;
    Valuation cutoff;
    std::map<std::pair<long, long>, Novikov> terms; // (e1, e2) -> coeff

    BiLaurent() = default;
    BiLaurent(SymbolsPtr t, Valuation c) : tab(std::move(t)), cutoff(std::move(c)) {}
    BiLaurent& set(long e1, long e2, const Novikov& c);
    static BiLaurent monomial(SymbolsPtr t, const Valuation& cutoff, long e1, long e2);
    BiLaurent operator*(const BiLaurent& o) const;
    BiLaurent operator+(const BiLaurent& o) const;
};

} // namespace tfw
