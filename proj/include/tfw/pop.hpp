#pragma once

#include <map>

#include "tfw/rational.hpp"
#include "tfw/tropical.hpp"

namespace tfw {

// Sheet label (j0, j1) of a diagonal-end intersection point of type e/f.
struct SheetLabel {
    long j0 = 0, j1 = 0;
    char type = 'e';
};

// Signed monomial from the diagonal module-structure table.
struct TableMonomial {
    long e1 = 0, e2 = 0; // z1^{e1} z2^{e2}
    int sign = 1;
};

// k = j1 - j0: k = 2l -> z1^l z2^l (either parity); k = 2l+1 -> z1^{l+1} z2^l
// for even j0, -z1^l z2^{l+1} for odd j0. Throws NegativeGap.
TableMonomial pop_module_table(long j0, long j1);

// Coefficient solve for the module eigenvector: finds (a1, c) with
// c (-c z2 + a1) = -z2 + rhs_const on the curve, under the ansatz
// c = 1 + sum_{v >= 2} c_v u^{-v} in u = xi_2 t. Returns a1 and the c-series.
struct PopSolve {
    Rational a1;
    std::map<long, Rational> c_series; // power of u -> coefficient
    bool c_is_one = false;
};
PopSolve solve_pop_coefficients(const Rational& rhs_const = Rational(1), long order = 12);

} // namespace tfw
