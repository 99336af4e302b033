#include "tfw/pop.hpp"

#include "tfw/errors.hpp"

namespace tfw {

TableMonomial pop_module_table(long j0, long j1) {
    if (j1 < j0) throw domain_error("NegativeGap", "table requires j1 >= j0");
    long k = j1 - j0;
    long l = k / 2;
    if (k % 2 == 0) return {l, l, 1};
    bool odd_start = ((j0 % 2 + 2) % 2) == 1;
    if (odd_start) return {l, l + 1, -1};
    return {l + 1, l, 1};
}

namespace {

// truncated Laurent series in u, exponents in [lo, hi]
using Series = std::map<long, Rational>;

Series mul(const Series& a, const Series& b, long lo) {
    Series r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            long e = ea + eb;
            if (e < lo) continue;
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = sgn(it->second) == 0 ? r.erase(it) : std::next(it);
    return r;
}

Series add(const Series& a, const Series& b) {
    Series r = a;
    for (const auto& [e, c] : b) {
        r[e] += c;
        if (sgn(r[e]) == 0) r.erase(e);
    }
    return r;
}

Series neg(const Series& a) {
    Series r;
    for (const auto& [e, c] : a) r.emplace(e, -c);
    return r;
}

// inverse of a series with unit constant term, to exponents >= lo
Series invert(const Series& a, long lo) {
    Series r{{0, Rational(1) / a.at(0)}};
    // Newton-free iteration: r_{n+1} ordersdown; simple fixed-point on
    // coefficients from the top down
    Series rest = a;
    rest.erase(0);
    Series acc{{0, Rational(1)}};
    Series term{{0, Rational(1)}};
    Series scaled_rest = mul(rest, Series{{0, Rational(1) / a.at(0)}}, lo);
    for (int i = 0; i < 64; ++i) {
        term = mul(term, neg(scaled_rest), lo);
        if (term.empty()) break;
        acc = add(acc, term);
    }
    return mul(acc, Series{{0, Rational(1) / a.at(0)}}, lo);
}

} // namespace

PopSolve solve_pop_coefficients(const Rational& rhs_const, long order) {
    // Unknowns: a1 constant, c = 1 + sum_{v>=2} c_v u^{-v}. The eigen relation
    // forces a1 c = rhs - z2 + c^2 z2 with z2 = u, i.e.
    //   a1 = rhs * c^{-1} + (c - c^{-1}) u ,
    // and a1 must have no u-power other than u^0. Solve for c_v from the top
    // order down, then read a1.
    long lo = -order;
    Series c{{0, Rational(1)}};
    // iterate: the condition at order u^{-v+?} pins c_{v}; two passes of
    // fixed-point are enough since corrections are triangular, but loop until
    // stable for safety
    for (int pass = 0; pass < 3; ++pass) {
        Series cinv = invert(c, lo);
        Series rhs_part = mul(Series{{0, rhs_const}}, cinv, lo);
        Series u_part = mul(add(c, neg(cinv)), Series{{1, Rational(1)}}, lo);
        Series a1 = add(rhs_part, u_part);
        bool changed = false;
        for (const auto& [e, coeff] : a1) {
            if (e == 0 || sgn(coeff) == 0) continue;
            // a nonzero u^{e} term with e != 0 must be cancelled by adjusting
            // c at order e - 1 (the u-part contributes 2 c_{v} u^{1-v})
            long v = 1 - e;
            if (v < 2) continue; // handled by the ansatz (no such freedom)
            c[-v] -= coeff / 2;
            if (sgn(c[-v]) == 0) c.erase(-v);
            changed = true;
        }
        if (!changed) break;
    }
    Series cinv = invert(c, lo);
    Series a1 = add(mul(Series{{0, rhs_const}}, cinv, lo),
                    mul(add(c, neg(cinv)), Series{{1, Rational(1)}}, lo));
    for (const auto& [e, coeff] : a1)
        if (e != 0 && sgn(coeff) != 0)
            throw numeric_error("NoSolution", "pop coefficient solve did not stabilize");
    PopSolve out;
    out.a1 = a1.count(0) ? a1.at(0) : Rational(0);
    for (const auto& [e, coeff] : c) out.c_series.emplace(e, coeff);
    out.c_is_one = (c.size() == 1 && c.count(0) && c.at(0) == 1);
    return out;
}

} // namespace tfw
