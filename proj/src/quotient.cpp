#include "tfw/quotient.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "tfw/errors.hpp"

namespace tfw {

// ---------------------------------------------------------------- NPoly ----

NPoly NPoly::constant(const Novikov& c) {
    NPoly p(c.symbols(), c.cutoff());
    p.set(0, c);
    return p;
}

NPoly NPoly::variable(SymbolsPtr tab, Valuation cutoff) {
    NPoly p(tab, cutoff);
    p.set(1, Novikov::one(tab, cutoff));
    return p;
}

NPoly NPoly::monomial(long e, const Novikov& c) {
    NPoly p(c.symbols(), c.cutoff());
    p.set(e, c);
    return p;
}

long NPoly::min_exp() const {
    if (coeffs_.empty()) throw domain_error("ZeroPolynomial", "min_exp of zero");
    return coeffs_.begin()->first;
}

long NPoly::max_exp() const {
    if (coeffs_.empty()) throw domain_error("ZeroPolynomial", "max_exp of zero");
    return coeffs_.rbegin()->first;
}

Novikov NPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Novikov::zero(tab_, cutoff_) : it->second;
}

NPoly& NPoly::set(long e, const Novikov& c) {
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
    return *this;
}

NPoly NPoly::operator+(const NPoly& o) const {
    NPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
    return r;
}

NPoly NPoly::operator-(const NPoly& o) const { return *this + (-o); }

NPoly NPoly::operator-() const {
    NPoly r(tab_, cutoff_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

NPoly NPoly::operator*(const NPoly& o) const {
    NPoly r(tab_, cutoff_);
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

NPoly NPoly::scale(const Novikov& c) const {
    NPoly r(tab_, cutoff_);
    for (const auto& [e, a] : coeffs_) r.set(e, a * c);
    return r;
}

NPoly NPoly::shift(long d) const {
    NPoly r(tab_, cutoff_);
    for (const auto& [e, a] : coeffs_) r.coeffs_.emplace(e + d, a);
    return r;
}

NPoly NPoly::pow(long e) const {
    if (e < 0) throw domain_error("BadExponent", "negative polynomial power");
    NPoly acc = constant(Novikov::one(tab_, cutoff_));
    NPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Novikov NPoly::eval(const Novikov& x) const {
    Novikov acc = Novikov::zero(tab_, cutoff_);
    for (const auto& [e, c] : coeffs_) acc = acc + c * x.pow(e);
    return acc;
}

NPoly NPoly::taylor_shift(const Novikov& a) const {
    if (!coeffs_.empty() && min_exp() < 0)
        throw domain_error("BadExponent", "taylor shift of a Laurent polynomial");
    // Horner: p(z+a) built from the top coefficient down
    NPoly acc(tab_, cutoff_);
    if (coeffs_.empty()) return acc;
    NPoly za = variable(tab_, cutoff_) + constant(a);
    for (long e = max_exp(); e >= 0; --e) acc = acc * za + constant(coeff(e));
    return acc;
}

std::string NPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) os << "*z^" << e;
    }
    return os.str();
}

BiLaurent& BiLaurent::set(long e1, long e2, const Novikov& c) {
    auto key = std::make_pair(e1, e2);
    if (c.is_zero())
        terms.erase(key);
    else
        terms[key] = c;
    return *this;
}

BiLaurent BiLaurent::monomial(SymbolsPtr t, const Valuation& cutoff, long e1, long e2) {
    BiLaurent b(t, cutoff);
    b.set(e1, e2, Novikov::one(t, cutoff));
    return b;
}

BiLaurent BiLaurent::operator*(const BiLaurent& o) const {
    BiLaurent r(tab, cutoff);
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            auto key = std::make_pair(m1.first + m2.first, m1.second + m2.second);
            auto it = r.terms.find(key);
            Novikov v = (it == r.terms.end()) ? c1 * c2 : it->second + c1 * c2;
            if (v.is_zero())
                r.terms.erase(key);
            else
                r.terms[key] = v;
        }
    return r;
}

BiLaurent BiLaurent::operator+(const BiLaurent& o) const {
    BiLaurent r = *this;
    for (const auto& [m, c] : o.terms) {
        auto it = r.terms.find(m);
        Novikov v = (it == r.terms.end()) ? c : it->second + c;
        if (v.is_zero())
            r.terms.erase(m);
        else
            r.terms[m] = v;
    }
    return r;
}

// ---------------------------------------------------------------- Curve ----

std::vector<Novikov> Curve::punctures() const {
    std::vector<Novikov> out = roots_a;
    out.insert(out.end(), roots_b.begin(), roots_b.end());
    return out;
}

namespace {

// 2*pi*L as a valuation: constants go onto "pi", parameter parts onto
// dedicated product generators pi*<param>.
Valuation val_2pi(const SymbolsPtr& tab, const Valuation& lognorm) {
    Valuation out;
    for (const auto& [id, c] : lognorm.coeffs()) {
        if (id == 0) {
            out.add(tab->id_or_throw("pi"), 2 * c);
        } else {
            std::string pname = "pi*" + tab->name(id);
            int raw = id;
            int pid = tab->add_or_get(pname, [tab, raw](long prec) {
                return pi_enclosure(prec) * tab->enclosure(raw, prec);
            });
            out.add(pid, 2 * c);
        }
    }
    return out;
}

Unit unit_of_phase(const Phase& ph) {
    if (ph.exact) return Unit::exact(Rational(1), ph.pi_part);
    return Unit(std::complex<double>(std::cos(ph.num), std::sin(ph.num)));
}

// roots of a Laurent polynomial in Lambda^*, resolvable only for unit or
// linear polynomial parts
std::vector<Novikov> resolve_roots(const NPoly& p) {
    if (p.is_zero()) return {};
    long lo = p.min_exp(), hi = p.max_exp();
    if (hi == lo) return {};
    if (hi - lo == 1) {
        Novikov a0 = p.coeff(lo), a1 = p.coeff(hi);
        Novikov root = -(a0 * a1.invert());
        if (root.is_zero())
            throw domain_error("RootsNotResolvable", "vanishing root of a linear factor");
        return {root};
    }
    throw domain_error("RootsNotResolvable",
                       "polynomial part of degree > 1; puncture roots not resolvable");
}

} // namespace

Curve present_curve(const TropInput& f, const Valuation& cutoff) {
    f.validate();
    SymbolsPtr tab = f.symbols;
    long d2min = 0, d2max = 0;
    bool first = true;
    for (const auto& [a, c] : f.terms) {
        if (first) {
            d2min = d2max = a.y;
            first = false;
        }
        d2min = std::min(d2min, a.y);
        d2max = std::max(d2max, a.y);
    }
    if (d2max - d2min != 1)
        throw domain_error("NotLinearInZ2", "curve must have z2-degree exactly 1");
    Curve cv;
    cv.tab = tab;
    cv.cutoff = cutoff;
    cv.z2_shift = d2min;
    cv.A = NPoly(tab, cutoff);
    cv.B = NPoly(tab, cutoff);
    for (const auto& [a, c] : f.terms) {
        Novikov coeff =
            Novikov::monomial(tab, cutoff, val_2pi(tab, c.log_norm), unit_of_phase(c.phase));
        if (a.y == d2min)
            cv.A.set(a.x, cv.A.coeff(a.x) + coeff);
        else
            cv.B.set(a.x, cv.B.coeff(a.x) + coeff);
    }
    cv.roots_a = resolve_roots(cv.A);
    cv.roots_b = resolve_roots(cv.B);
    auto all = cv.punctures();
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if ((all[i] - all[j]).is_zero())
                throw domain_error("RootsNotResolvable", "coincident puncture roots");
    return cv;
}

// ---------------------------------------------------------------- QElem ----

bool QElem::is_zero() const {
    if (!laurent.empty()) return false;
    for (const auto& t : pole_tails)
        if (!t.empty()) return false;
    return true;
}

QElem qzero(const Curve& c) {
    QElem q;
    q.tab = c.tab;
    q.cutoff = c.cutoff;
    q.pole_tails.resize(c.punctures().size());
    return q;
}

QElem QElem::operator+(const QElem& o) const {
    QElem r = *this;
    for (const auto& [e, c] : o.laurent) {
        auto it = r.laurent.find(e);
        Novikov v = it == r.laurent.end() ? c : it->second + c;
        if (v.is_zero())
            r.laurent.erase(e);
        else
            r.laurent[e] = v;
    }
    for (size_t i = 0; i < o.pole_tails.size(); ++i)
        for (const auto& [j, c] : o.pole_tails[i]) {
            auto it = r.pole_tails[i].find(j);
            Novikov v = it == r.pole_tails[i].end() ? c : it->second + c;
            if (v.is_zero())
                r.pole_tails[i].erase(j);
            else
                r.pole_tails[i][j] = v;
        }
    return r;
}

QElem QElem::operator-(const QElem& o) const { return *this + o.scale(-Novikov::one(o.tab, o.cutoff)); }

QElem QElem::scale(const Novikov& c) const {
    QElem r = *this;
    for (auto it = r.laurent.begin(); it != r.laurent.end();) {
        it->second = it->second * c;
        it = it->second.is_zero() ? r.laurent.erase(it) : std::next(it);
    }
    for (auto& tail : r.pole_tails)
        for (auto it = tail.begin(); it != tail.end();) {
            it->second = it->second * c;
            it = it->second.is_zero() ? tail.erase(it) : std::next(it);
        }
    return r;
}

bool QElem::equals(const QElem& o) const { return (*this - o).is_zero(); }

namespace {

// A fraction num / (z^{pow0} * prod_i (z - rho_i)^{mult_i}) over Lambda,
// with num a (nonnegative-power) polynomial.
struct Fraction {
    NPoly num;
    long pow0 = 0;
    std::vector<long> mults; // aligned with curve punctures
};

// division of p by (z - rho)^k; the remainder must vanish below the certified
// precision `cert` (residue above it is truncation junk from earlier steps)
NPoly divide_linear_power(const NPoly& p, const Novikov& rho, long k, const Valuation& cert) {
    NPoly cur = p;
    for (long round = 0; round < k; ++round) {
        if (cur.is_zero()) return cur;
        // synthetic division by (z - rho), top down
        NPoly q(cur.symbols(), cur.cutoff());
        Novikov carry = Novikov::zero(cur.symbols(), cur.cutoff());
        for (long e = cur.max_exp(); e >= 1; --e) {
            carry = cur.coeff(e) + carry * rho;
            q.set(e - 1, carry);
        }
        Novikov rem = cur.coeff(0) + carry * rho;
        if (!rem.truncated(cert).is_zero()) {
            if (std::getenv("TFW_DEBUG_PF"))
                std::fprintf(stderr, "[pf] remainder %s\n  cert %s cutoff %s\n",
                             rem.str().c_str(), cert.str(*p.symbols()).c_str(),
                             p.cutoff().str(*p.symbols()).c_str());
            throw numeric_error("CutoffExhausted",
                                "inexact division while splitting partial fractions");
        }
        cur = q;
    }
    return cur;
}

// first `count` Taylor coefficients of num/den around rho; den(rho) invertible
std::vector<Novikov> series_at(const NPoly& num, const NPoly& den, const Novikov& rho,
                               long count) {
    SymbolsPtr tab = num.symbols();
    const Valuation& cutoff = num.cutoff();
    NPoly n_sh = num.taylor_shift(rho);
    NPoly d_sh = den.taylor_shift(rho);
    Novikov d0 = d_sh.coeff(0);
    if (d0.is_zero())
        throw numeric_error("CutoffExhausted", "denominator vanishes at a puncture root");
    Novikov d0i = d0.invert();
    std::vector<Novikov> s(count, Novikov::zero(tab, cutoff));
    for (long l = 0; l < count; ++l) {
        Novikov acc = n_sh.coeff(l);
        for (long m = 0; m < l; ++m) acc = acc - d_sh.coeff(l - m) * s[m];
        s[l] = acc * d0i;
    }
    return s;
}

NPoly retruncate_poly(const NPoly& p, const Valuation& cutoff) {
    NPoly out(p.symbols(), cutoff);
    for (const auto& [e, c] : p.coeffs()) out.set(e, c.truncated(cutoff));
    return out;
}

Valuation neg_part(const Valuation& v, const SymbolTable& tab) {
    if (!v.is_zero() && compare(v, Valuation(), tab) == Ordering::Less) return v;
    return Valuation();
}

Valuation pos_part(const Valuation& v, const SymbolTable& tab) {
    if (!v.is_zero() && compare(v, Valuation(), tab) == Ordering::Greater) return v;
    return Valuation();
}

// Precision headroom needed to split a fraction with the given denominator
// shape. Two effects spend precision: series division at a root where the
// reduced denominator is small (val > 0), charged (k+3) times per order, and
// products of the truncated inverse series with negative-valuation data,
// charged once via the floor estimate. The canary in divide_linear_power
// still guards the result.
Valuation pf_budget(const Curve& cv, const std::vector<long>& mults, long pow0,
                    const Valuation& floor_est) {
    const SymbolTable& tab = *cv.tab;
    auto roots = cv.punctures();
    Valuation budget;
    bool peel = false;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (mults[i] <= 0) continue;
        peel = true;
        Valuation v0 = roots[i].val() * Rational(pow0);
        for (size_t j = 0; j < roots.size(); ++j) {
            if (j == i || mults[j] <= 0) continue;
            v0 = v0 + (roots[i] - roots[j]).val() * Rational(mults[j]);
        }
        budget = budget + pos_part(v0, tab) * Rational(mults[i] + 3);
        budget = budget + pos_part(-roots[i].val(), tab) * Rational(mults[i] + 3);
    }
    if (peel) budget = budget - neg_part(floor_est, tab);
    return budget;
}

// lowest coefficient valuation of a polynomial (0 when empty/nonnegative)
Valuation coeff_floor(const NPoly& p, const SymbolTable& tab) {
    Valuation f;
    for (const auto& [e, c] : p.coeffs())
        if (!c.is_zero() && compare(c.val(), f, tab) == Ordering::Less) f = c.val();
    return f;
}

// Lifts the curve data to a raised working cutoff (sound: the presentation
// data are exact representatives).
Curve lift_curve_by(const Curve& c, const Valuation& extra) {
    Curve out = c;
    out.cutoff = c.cutoff + extra;
    NPoly A(out.tab, out.cutoff), B(out.tab, out.cutoff);
    for (const auto& [e, cc] : c.A.coeffs()) A.set(e, cc.truncated(out.cutoff));
    for (const auto& [e, cc] : c.B.coeffs()) B.set(e, cc.truncated(out.cutoff));
    out.A = A;
    out.B = B;
    for (auto& r : out.roots_a) r = r.truncated(out.cutoff);
    for (auto& r : out.roots_b) r = r.truncated(out.cutoff);
    return out;
}

// Splits num / (z^{pow0} prod (z - rho_i)^{mult_i}) into the normal form. The
// fraction must live at cv's (possibly raised) cutoff; results are certified
// down to `cert` and emitted truncated at `cert`.
QElem partial_fractions(Fraction fr, const Curve& cv, const Curve& report,
                        const Valuation& cert) {
    QElem out = qzero(report);
    auto roots = cv.punctures();
    SymbolsPtr tab = cv.tab;
    const Valuation& cutoff = cv.cutoff;

    for (size_t i = 0; i < roots.size(); ++i) {
        long k = fr.mults[i];
        if (k <= 0 || fr.num.is_zero()) continue;
        // denominator with (z - rho_i)^k removed, the z^{pow0} factor kept
        NPoly d_other(tab, cutoff);
        d_other.set(fr.pow0, Novikov::one(tab, cutoff));
        for (size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            NPoly lin(tab, cutoff);
            lin.set(1, Novikov::one(tab, cutoff));
            lin.set(0, -roots[j]);
            d_other = d_other * lin.pow(fr.mults[j]);
        }
        auto s = series_at(fr.num, d_other, roots[i], k);
        for (long j = 1; j <= k; ++j) {
            Novikov c = s[k - j].truncated(cert);
            if (c.is_zero()) continue;
            out.pole_tails[i][j] = c;
        }
        // subtract the tail: num -= (sum_l s_l w^l) * d_other, then divide by w^k
        NPoly tail_poly(tab, cutoff);
        {
            NPoly w(tab, cutoff); // z - rho
            w.set(1, Novikov::one(tab, cutoff));
            w.set(0, -roots[i]);
            NPoly wl = NPoly::constant(Novikov::one(tab, cutoff));
            for (long l = 0; l < k; ++l) {
                tail_poly = tail_poly + wl.scale(s[l]);
                wl = wl * w;
            }
        }
        fr.num = divide_linear_power(fr.num - tail_poly * d_other, roots[i], k, cert);
        fr.mults[i] = 0;
    }

    // remaining: num / z^{pow0} -> laurent part
    for (const auto& [e, c] : fr.num.coeffs()) {
        long n = e - fr.pow0;
        Novikov cc = c.truncated(cert);
        if (cc.is_zero()) continue;
        auto it = out.laurent.find(n);
        Novikov v = it == out.laurent.end() ? cc : it->second + cc;
        if (v.is_zero())
            out.laurent.erase(n);
        else
            out.laurent[n] = v;
    }
    return out;
}

// canonical fraction form of a QElem (common denominator)
Fraction to_fraction(const QElem& g, const Curve& cv) {
    SymbolsPtr tab = cv.tab;
    const Valuation& cutoff = cv.cutoff;
    auto roots = cv.punctures();
    Fraction fr;
    fr.mults.assign(roots.size(), 0);
    long neg = 0; // z^{-neg} needed by the laurent part
    for (const auto& [e, c] : g.laurent) neg = std::max(neg, -e);
    fr.pow0 = neg;
    for (size_t i = 0; i < roots.size(); ++i) {
        long k = 0;
        for (const auto& [j, c] : g.pole_tails[i]) k = std::max(k, j);
        fr.mults[i] = k;
    }
    // assemble numerator: g * z^{pow0} * prod (z - rho_i)^{mult_i}
    NPoly denom_all(tab, cutoff);
    denom_all.set(fr.pow0, Novikov::one(tab, cutoff));
    std::vector<NPoly> lin_pows;
    for (size_t i = 0; i < roots.size(); ++i) {
        NPoly lin(tab, cutoff);
        lin.set(1, Novikov::one(tab, cutoff));
        lin.set(0, -roots[i]);
        lin_pows.push_back(lin.pow(fr.mults[i]));
        denom_all = denom_all * lin_pows.back();
    }
    NPoly num(tab, cutoff);
    for (const auto& [e, c] : g.laurent) num = num + denom_all.shift(e).scale(c);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (fr.mults[i] == 0) continue;
        // denominator with (z - rho_i)^j removed
        for (const auto& [j, c] : g.pole_tails[i]) {
            NPoly lin(tab, cutoff);
            lin.set(1, Novikov::one(tab, cutoff));
            lin.set(0, -roots[i]);
            NPoly d = NPoly(tab, cutoff);
            d.set(fr.pow0, Novikov::one(tab, cutoff));
            for (size_t m = 0; m < roots.size(); ++m) {
                if (m == i) continue;
                d = d * lin_pows[m];
            }
            d = d * lin.pow(fr.mults[i] - j);
            num = num + d.scale(c);
        }
    }
    // numerator may be Laurent if pow0 > 0 shifted... it is polynomial by
    // construction (denominators absorbed); normalize anyway
    if (!num.is_zero() && num.min_exp() < 0)
        throw numeric_error("CutoffExhausted", "fraction normalization went negative");
    fr.num = num;
    return fr;
}

} // namespace

QElem reduce(const BiLaurent& g, const Curve& cv) {
    auto roots = cv.punctures();
    if (g.terms.empty()) return qzero(cv);

    long jmin = 0, jmax = 0;
    bool first = true;
    for (const auto& [m, c] : g.terms) {
        long j = m.second;
        if (first) {
            jmin = jmax = j;
            first = false;
        }
        jmin = std::min(jmin, j);
        jmax = std::max(jmax, j);
    }
    long jneg = std::max(0L, -jmin), jpos = std::max(0L, jmax);

    // denominator shape first, to size the precision budget
    Fraction fr;
    fr.mults.assign(roots.size(), 0);
    long a_low = cv.A.is_zero() ? 0 : cv.A.min_exp();
    long b_low = cv.B.is_zero() ? 0 : cv.B.min_exp();
    long e1min = 0;
    for (const auto& [m, c] : g.terms) e1min = std::min(e1min, m.first);
    fr.pow0 = -e1min + jneg * a_low + jpos * b_low;
    for (size_t i = 0; i < cv.roots_a.size(); ++i) fr.mults[i] = jneg;
    for (size_t i = 0; i < cv.roots_b.size(); ++i) fr.mults[cv.roots_a.size() + i] = jpos;

    // the whole pipeline runs at a raised cutoff sized by the budget, so the
    // certified window still covers the reporting cutoff at the end
    Valuation floor_est;
    {
        const SymbolTable& tab0 = *cv.tab;
        for (const auto& [m, c] : g.terms)
            if (!c.is_zero() && compare(c.val(), floor_est, tab0) == Ordering::Less)
                floor_est = c.val();
        floor_est = floor_est + coeff_floor(cv.A, tab0) * Rational(jneg + jpos) +
                    coeff_floor(cv.B, tab0) * Rational(jneg + jpos);
    }
    Valuation budget = pf_budget(cv, fr.mults, std::max(fr.pow0, 0L), floor_est);
    Curve cw = lift_curve_by(cv, budget);
    SymbolsPtr tab = cw.tab;
    const Valuation& cutoff = cw.cutoff;

    // z2^j = (-A)^j / B^j; common denominator A^{jneg} B^{jpos}
    NPoly num(tab, cutoff);
    for (const auto& [m, c] : g.terms) {
        long j = m.second;
        NPoly t = NPoly::monomial(m.first - e1min, c.truncated(cutoff));
        NPoly apow = cw.A.pow(j + jneg);
        NPoly bpow = cw.B.pow(jpos - j);
        if ((j % 2 + 2) % 2 == 1) t = -t;
        num = num + t * apow * bpow;
    }

    // A = u_a z^{a_low} prod (z - rho_a) etc.: take the root/z-power part as
    // the denominator and divide the numerator by the leading units
    Novikov unit_a = Novikov::one(tab, cutoff), unit_b = Novikov::one(tab, cutoff);
    if (!cw.A.is_zero()) {
        long deg = cw.A.max_exp() - a_low;
        unit_a = (deg == 1) ? cw.A.coeff(cw.A.max_exp()) : cw.A.coeff(a_low);
    }
    if (!cw.B.is_zero()) {
        long deg = cw.B.max_exp() - b_low;
        unit_b = (deg == 1) ? cw.B.coeff(cw.B.max_exp()) : cw.B.coeff(b_low);
    }
    Novikov scale = (unit_a.pow(jneg) * unit_b.pow(jpos)).invert();
    fr.num = num.scale(scale);

    // normalize: numerator a true polynomial, pow0 >= 0
    if (!fr.num.is_zero() && fr.num.min_exp() < 0) {
        long m = fr.num.min_exp();
        fr.num = fr.num.shift(-m);
        fr.pow0 += -m;
    }
    if (fr.pow0 < 0) {
        fr.num = fr.num.shift(-fr.pow0);
        fr.pow0 = 0;
    }
    return partial_fractions(std::move(fr), cw, cv, cv.cutoff);
}

QElem qmul(const QElem& a, const QElem& b, const Curve& cv) {
    // shape of the product denominator, to size the budget before lifting
    std::vector<long> mults(cv.punctures().size(), 0);
    long pow0 = 0;
    for (const QElem* g : {&a, &b}) {
        long neg = 0;
        for (const auto& [e, c] : g->laurent) neg = std::max(neg, -e);
        pow0 += neg;
        for (size_t i = 0; i < g->pole_tails.size(); ++i) {
            long k = 0;
            for (const auto& [j, c] : g->pole_tails[i]) k = std::max(k, j);
            mults[i] += k;
        }
    }
    Valuation floor_est;
    {
        const SymbolTable& tab0 = *cv.tab;
        auto feed = [&](const QElem& g) {
            Valuation f;
            for (const auto& [e, c] : g.laurent)
                if (!c.is_zero() && compare(c.val(), f, tab0) == Ordering::Less) f = c.val();
            for (const auto& tail : g.pole_tails)
                for (const auto& [j, c] : tail)
                    if (!c.is_zero() && compare(c.val(), f, tab0) == Ordering::Less) f = c.val();
            floor_est = floor_est + f;
        };
        feed(a);
        feed(b);
    }
    Valuation budget = pf_budget(cv, mults, pow0, floor_est);
    Curve cw = lift_curve_by(cv, budget);
    auto lift_q = [&](const QElem& g) {
        QElem out = qzero(cw);
        for (const auto& [e, c] : g.laurent) out.laurent[e] = c.truncated(cw.cutoff);
        for (size_t i = 0; i < g.pole_tails.size(); ++i)
            for (const auto& [j, c] : g.pole_tails[i])
                out.pole_tails[i][j] = c.truncated(cw.cutoff);
        return out;
    };
    Fraction fa = to_fraction(lift_q(a), cw);
    Fraction fb = to_fraction(lift_q(b), cw);
    Fraction fr;
    fr.num = fa.num * fb.num;
    fr.pow0 = fa.pow0 + fb.pow0;
    fr.mults.resize(fa.mults.size());
    for (size_t i = 0; i < fr.mults.size(); ++i) fr.mults[i] = fa.mults[i] + fb.mults[i];
    return partial_fractions(std::move(fr), cw, cv, cv.cutoff);
}

Novikov evaluate_at(const QElem& g, const Curve& cv, const Novikov& z1, const Novikov& z2) {
    SymbolsPtr tab = cv.tab;
    const Valuation& cutoff = cv.cutoff;
    // on-curve check to cutoff; negative valuations of A, B at the point
    // shrink the certified window, so the residual threshold tracks them
    Novikov va = cv.A.eval(z1), vb = cv.B.eval(z1);
    Novikov residual = va + vb * z2;
    if (!residual.is_zero()) {
        Valuation thresh = cutoff;
        if (!va.is_zero() && compare(va.val(), Valuation(), *tab) == Ordering::Less)
            thresh = thresh + va.val();
        if (!vb.is_zero() && compare(vb.val(), Valuation(), *tab) == Ordering::Less)
            thresh = thresh + vb.val();
        if (!z2.is_zero() && compare(z2.val(), Valuation(), *tab) == Ordering::Less)
            thresh = thresh + z2.val();
        if (compare(residual.val(), thresh, *tab) == Ordering::Less)
            throw domain_error("NotOnCurve",
                               "point does not satisfy the curve relation to cutoff");
    }
    auto roots = cv.punctures();
    Novikov acc = Novikov::zero(tab, cutoff);
    bool need_z1_inverse = false;
    for (const auto& [e, c] : g.laurent)
        if (e < 0) need_z1_inverse = true;
    if ((need_z1_inverse && z1.is_zero()) || z1.is_zero())
        throw domain_error("AtPuncture", "evaluation at z1 = 0");
    Novikov z1inv = z1.invert();
    for (const auto& [e, c] : g.laurent)
        acc = acc + c * (e >= 0 ? z1.pow(e) : z1inv.pow(-e));
    for (size_t i = 0; i < roots.size(); ++i) {
        if (g.pole_tails[i].empty()) continue;
        Novikov diff = z1 - roots[i];
        if (diff.is_zero()) throw domain_error("AtPuncture", "evaluation at a puncture root");
        Novikov dinv = diff.invert();
        for (const auto& [j, c] : g.pole_tails[i]) acc = acc + c * dinv.pow(j);
    }
    return acc;
}

std::string qstr(const QElem& g) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : g.laurent) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*z1^" << e;
    }
    for (size_t i = 0; i < g.pole_tails.size(); ++i)
        for (const auto& [j, c] : g.pole_tails[i]) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*(z1-rho" << i << ")^-" << j;
        }
    if (first) os << "0";
    return os.str();
}

Curve present_pants(const TropInput& pants, const Valuation& cutoff) {
    return present_curve(pants, cutoff);
}

Curve present_lq(const TropInput& lq, const Valuation& cutoff) { return present_curve(lq, cutoff); }

} // namespace tfw
