#pragma once

#include <map>
#include <string>

#include "tfw/symbols.hpp"

namespace tfw {

enum class Ordering { Less, Equal, Greater };

// A finitely supported rational linear combination of the declared real
// generators. Serves both as a Novikov valuation and as the exact linear
// expressions the tropical module computes with. Canonical form: no zero
// coefficients stored.
class Valuation {
  public:
    Valuation() = default;

    static Valuation constant(const Rational& q);
    static Valuation symbol(int id, const Rational& coeff = Rational(1));

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    // The coefficient of generator `id` (0 if absent).
    Rational coeff(int id) const;
    Rational constant_part() const { return coeff(0); }

    Valuation& add(int id, const Rational& coeff);

    Valuation operator+(const Valuation& o) const;
    Valuation operator-(const Valuation& o) const;
    Valuation operator-() const;
    Valuation operator*(const Rational& c) const;
    bool identical(const Valuation& o) const { return coeffs_ == o.coeffs_; }

    QInterval enclosure(const SymbolTable& tab, long prec_bits) const;
    double approx(const SymbolTable& tab) const;

    std::string str(const SymbolTable& tab) const;

  private:
    std::map<int, Rational> coeffs_;
};

struct CompareOptions {
    // Successive refinement doubles precision starting from 64 bits.
    int max_refinements = 64;
    // Practical guard: beyond this many bits refinement cannot help.
    long max_bits = (1L << 22);
};

// Reads TFW_PRECISION from the environment if set.
CompareOptions default_compare_options();

// Exact when the coefficient vectors coincide; otherwise decided by interval
// evaluation with on-demand refinement. Throws AmbiguousOrdering when the
// enclosures still straddle zero at the refinement limit.
Ordering compare(const Valuation& a, const Valuation& b, const SymbolTable& tab,
                 const CompareOptions& opt = default_compare_options());

inline bool val_less(const Valuation& a, const Valuation& b, const SymbolTable& tab) {
    return compare(a, b, tab) == Ordering::Less;
}

} // namespace tfw
