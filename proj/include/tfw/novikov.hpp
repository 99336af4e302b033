#pragma once

#include <vector>

#include "tfw/unitc.hpp"
#include "tfw/valuation.hpp"

namespace tfw {

/*
 * Truncated formal series sum a_i T^{v_i} with exact symbolic valuations v_i,
 * strictly increasing, all below a per-value cutoff valuation. Canonical form:
 * no zero coefficients, no duplicate valuations, nothing at or above cutoff.
 *
 * All arithmetic requires operands over the same symbol table and with
 * identical cutoffs.
 */
class Novikov {
  public:
    struct Term {
        Valuation val;
        Unit c;
    };

    Novikov() = default;
    Novikov(SymbolsPtr tab, Valuation cutoff);

    static Novikov zero(SymbolsPtr tab, Valuation cutoff);
    static Novikov from_unit(SymbolsPtr tab, Valuation cutoff, const Unit& u);
    static Novikov one(SymbolsPtr tab, Valuation cutoff);
    static Novikov monomial(SymbolsPtr tab, Valuation cutoff, const Valuation& v, const Unit& u);

    const std::vector<Term>& terms() const { return terms_; }
    const Valuation& cutoff() const { return cutoff_; }
    const SymbolsPtr& symbols() const { return tab_; }
    bool is_zero() const { return terms_.empty(); }

    // Valuation of the leading term. Throws ZeroHasNoValuation on zero.
    const Valuation& val() const;
    const Unit& leading_unit() const;

    Novikov operator+(const Novikov& o) const;
    Novikov operator-() const;
    Novikov operator-(const Novikov& o) const { return *this + (-o); }
    Novikov operator*(const Novikov& o) const;
    Novikov scale(const Unit& u) const;
    Novikov shift(const Valuation& dv) const; // multiply by T^{dv}
    // Geometric-series inversion: x * invert(x) = 1 + O(T^{cutoff - val x}).
    Novikov invert() const;
    Novikov pow(long e) const;

    bool equals(const Novikov& o) const;

    // Same value re-expressed with another cutoff (terms >= it are dropped;
    // raising the cutoff cannot recover what an earlier truncation removed).
    Novikov truncated(const Valuation& new_cutoff) const;

    // Re-sorts, merges equal valuations, drops zeros and terms >= cutoff.
    static Novikov make(SymbolsPtr tab, Valuation cutoff, std::vector<Term> terms);

    std::string str() const;

  private:
    SymbolsPtr tab_;
    Valuation cutoff_;
    std::vector<Term> terms_; // canonical
    void check_compatible(const Novikov& o) const;
};

} // namespace tfw
