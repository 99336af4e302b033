#pragma once

#include <map>
#include <vector>

#include "tfw/valuation.hpp"

namespace tfw {

// Exact polynomial expression in the declared real generators (rational
// coefficients, low degree in practice: path integrals of linear forms are
// quadratic). Monomials are sorted id-vectors; the empty monomial is the
// constant term.
class PolyExpr {
  public:
    PolyExpr() = default;
    static PolyExpr constant(const Rational& q);
    static PolyExpr from_valuation(const Valuation& v);

    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PolyExpr operator+(const PolyExpr& o) const;
    PolyExpr operator-(const PolyExpr& o) const;
    PolyExpr operator-() const;
    PolyExpr operator*(const PolyExpr& o) const;
    PolyExpr scale(const Rational& c) const;

    // coefficient of a monomial
    Rational coeff(const std::vector<int>& mono) const;
    PolyExpr& add_term(std::vector<int> mono, const Rational& c);

    double approx(const SymbolTable& tab) const;
    std::string str(const SymbolTable& tab) const;

    // Reduces the coefficient of pi^2 modulo 4 into [0, 4); other terms are
    // untouched. Canonical representative modulo 4 pi^2 when the expression is
    // a rational multiple of pi^2 plus non-pi^2 terms.
    PolyExpr mod_4pi2(int pi_id) const;

  private:
    std::map<std::vector<int>, Rational> terms_;
};

} // namespace tfw
