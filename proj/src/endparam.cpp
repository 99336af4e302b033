#include "tfw/endparam.hpp"

#include <sstream>

#include "tfw/errors.hpp"

namespace tfw {

namespace {

Novikov retruncate(const Novikov& x, const Valuation& cutoff) {
    std::vector<Novikov::Term> t(x.terms().begin(), x.terms().end());
    return Novikov::make(x.symbols(), cutoff, std::move(t));
}

QElem retruncate(const QElem& g, const Valuation& cutoff) {
    QElem out = g;
    out.cutoff = cutoff;
    for (auto& [e, c] : out.laurent) c = retruncate(c, cutoff);
    for (auto& tail : out.pole_tails)
        for (auto& [j, c] : tail) c = retruncate(c, cutoff);
    return out;
}

} // namespace

EndParam end_param(const Curve& cv, const TropInput& f, int end_index, long max_order) {
    auto ends = cylindrical_ends(f);
    if (end_index < 0 || end_index >= static_cast<int>(ends.size()))
        throw domain_error("UnknownEnd", "end index out of range");
    const EndSpec& end = ends[end_index];
    SymbolsPtr tab = cv.tab;

    std::ostringstream name;
    name << "two_pi_p[end" << end_index << "]";
    // large, end-specific certified value for the outward coordinate
    Rational pval(997 + end_index);
    int pid = tab->add_or_get(name.str(), pi_multiple_provider(2 * pval));

    EndParam ep;
    ep.end_index = end_index;
    ep.pend_id = pid;
    ep.cutoff = cv.cutoff + Valuation::symbol(pid, Rational(max_order + 2));

    // A, B over the relaxed cutoff
    auto lift = [&](const NPoly& p) {
        NPoly out(tab, ep.cutoff);
        for (const auto& [e, c] : p.coeffs()) out.set(e, retruncate(c, ep.cutoff));
        return out;
    };
    NPoly A = lift(cv.A), B = lift(cv.B);

    long a1 = end.alpha_internal.x, a2 = end.alpha_internal.y;
    if (a2 != 0) {
        // z1 escapes along this end: val z1 = -alpha2 G
        ep.z1 = Novikov::monomial(tab, ep.cutoff, Valuation::symbol(pid, Rational(-a2)),
                                  Unit::one());
        Novikov bz = B.eval(ep.z1);
        if (bz.is_zero())
            throw numeric_error("CutoffExhausted", "B vanishes along the end parametrization");
        ep.z2 = -(A.eval(ep.z1) * bz.invert());
    } else {
        // z1 stays finite: drive z2 = T^{alpha1 G} and solve the z1-linear
        // relation (A0 + A1 z1) + (B0 + B1 z1) z2 = 0
        ep.z2 = Novikov::monomial(tab, ep.cutoff, Valuation::symbol(pid, Rational(a1)),
                                  Unit::one());
        if (!A.is_zero() && (A.min_exp() < 0 || A.max_exp() > 1))
            throw domain_error("RootsNotResolvable", "end parametrization needs z1-degree <= 1");
        if (!B.is_zero() && (B.min_exp() < 0 || B.max_exp() > 1))
            throw domain_error("RootsNotResolvable", "end parametrization needs z1-degree <= 1");
        Novikov A0 = A.coeff(0), A1 = A.coeff(1);
        Novikov B0 = B.coeff(0), B1 = B.coeff(1);
        Novikov den = A1 + B1 * ep.z2;
        if (den.is_zero())
            throw numeric_error("CutoffExhausted", "degenerate linear solve along the end");
        ep.z1 = -((A0 + B0 * ep.z2) * den.invert());
    }
    if (ep.z1.is_zero())
        throw numeric_error("CutoffExhausted", "end parametrization collapsed to z1 = 0");
    return ep;
}

PoleProfile pole_profile(const QElem& g, const Curve& cv, const EndParam& ep) {
    if (g.is_zero()) throw domain_error("ZeroFunction", "pole profile of the zero function");
    // evaluate with the relaxed cutoff; the on-curve check is part of the
    // parametrization construction, so evaluate coordinates directly
    QElem gg = retruncate(g, ep.cutoff);
    SymbolsPtr tab = cv.tab;
    Novikov acc = Novikov::zero(tab, ep.cutoff);
    Novikov z1inv = ep.z1.invert();
    for (const auto& [e, c] : gg.laurent)
        acc = acc + c * (e >= 0 ? ep.z1.pow(e) : z1inv.pow(-e));
    auto roots = cv.punctures();
    for (size_t i = 0; i < roots.size(); ++i) {
        if (gg.pole_tails[i].empty()) continue;
        Novikov diff = ep.z1 - retruncate(roots[i], ep.cutoff);
        if (diff.is_zero())
            throw domain_error("AtPuncture", "end parametrization sits at a puncture");
        Novikov dinv = diff.invert();
        for (const auto& [j, c] : gg.pole_tails[i]) acc = acc + c * dinv.pow(j);
    }
    if (acc.is_zero())
        throw domain_error("ZeroFunction", "function vanishes along the end to cutoff");
    PoleProfile out;
    Rational cg = acc.val().coeff(ep.pend_id);
    if (cg.get_den() != 1)
        throw numeric_error("AmbiguousOrdering", "non-integer slope in the pole profile");
    out.slope = static_cast<long>(-cg.get_num().get_si());
    out.leading = acc.leading_unit();
    return out;
}

} // namespace tfw
