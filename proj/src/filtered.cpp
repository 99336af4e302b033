#include "tfw/filtered.hpp"

#include <algorithm>

#include "tfw/errors.hpp"

namespace tfw {

CoordVec to_coords(const QElem& g) {
    CoordVec v;
    for (const auto& [e, c] : g.laurent) v.emplace(CoordKey{-1, e}, c);
    for (size_t i = 0; i < g.pole_tails.size(); ++i)
        for (const auto& [j, c] : g.pole_tails[i]) v.emplace(CoordKey{static_cast<int>(i), j}, c);
    return v;
}

QElem from_coords(const Curve& c, const CoordVec& v) {
    QElem g = qzero(c);
    for (const auto& [key, val] : v) {
        if (val.is_zero()) continue;
        if (key.first < 0)
            g.laurent[key.second] = val;
        else
            g.pole_tails[key.first][key.second] = val;
    }
    return g;
}

std::vector<Vec2> lq_monomials(long k) {
    std::vector<Vec2> out;
    out.push_back({0, 0});
    for (long i = -k + 1; i <= k; ++i) {
        if (i == 0) continue;
        out.push_back({i, 0});
        out.push_back({0, i});
    }
    return out;
}

std::vector<Vec2> pants_monomials(long k) {
    std::vector<Vec2> out;
    for (long m1 = -k; m1 <= 2 * k; ++m1)
        for (long m2 = -k; m2 <= 2 * k; ++m2)
            if (m1 + m2 <= k) out.push_back({m1, m2});
    return out;
}

std::vector<Vec2> constrained_monomials(long k, const std::function<bool(long, long)>& pred,
                                        long box) {
    std::vector<Vec2> out;
    for (long m1 = -box; m1 <= box; ++m1)
        for (long m2 = -box; m2 <= box; ++m2)
            if (pred(m1, m2)) out.push_back({m1, m2});
    (void)k;
    return out;
}

namespace {

// Working headroom above the reporting cutoff: pivot inversions spend
// precision, and since all inputs are exact, computing higher is sound.
const long kLiftHeadroom = 60;

Curve lift_curve(const Curve& c) {
    Curve out = c;
    out.cutoff = c.cutoff + Valuation::constant(Rational(kLiftHeadroom));
    NPoly A(out.tab, out.cutoff), B(out.tab, out.cutoff);
    for (const auto& [e, cc] : c.A.coeffs()) A.set(e, cc.truncated(out.cutoff));
    for (const auto& [e, cc] : c.B.coeffs()) B.set(e, cc.truncated(out.cutoff));
    out.A = A;
    out.B = B;
    for (auto& r : out.roots_a) r = r.truncated(out.cutoff);
    for (auto& r : out.roots_b) r = r.truncated(out.cutoff);
    return out;
}

QElem requantize(const QElem& g, const SymbolsPtr& tab, const Valuation& cutoff, size_t npunct) {
    QElem out;
    out.tab = tab;
    out.cutoff = cutoff;
    out.pole_tails.resize(npunct);
    for (const auto& [e, c] : g.laurent) {
        Novikov v = c.truncated(cutoff);
        if (!v.is_zero()) out.laurent[e] = v;
    }
    for (size_t i = 0; i < g.pole_tails.size() && i < npunct; ++i)
        for (const auto& [j, c] : g.pole_tails[i]) {
            Novikov v = c.truncated(cutoff);
            if (!v.is_zero()) out.pole_tails[i][j] = v;
        }
    return out;
}

// smallest-valuation nonzero entry makes the most truncation-robust pivot
std::optional<CoordKey> best_pivot(const CoordVec& row, const SymbolTable& tab) {
    std::optional<CoordKey> best;
    std::optional<Valuation> bestval;
    for (const auto& [key, c] : row) {
        if (c.is_zero()) continue;
        const Valuation& v = c.val();
        if (!bestval || compare(v, *bestval, tab) == Ordering::Less) {
            bestval = v;
            best = key;
        }
    }
    return best;
}

void axpy(CoordVec& row, const Novikov& coeff, const CoordVec& other) {
    for (const auto& [key, c] : other) {
        Novikov add = coeff * c;
        auto it = row.find(key);
        Novikov v = it == row.end() ? add : it->second + add;
        if (v.is_zero())
            row.erase(key);
        else
            row[key] = v;
    }
}

struct Echelon {
    std::vector<CoordVec> rows;
    std::vector<CoordKey> pivots;
};

// Reduces `row` against the echelon rows in place; returns the coefficients
// used (aligned with rows).
std::vector<Novikov> eliminate(CoordVec& row, const Echelon& ech, const SymbolTable& tab,
                               SymbolsPtr tabp, const Valuation& cutoff) {
    std::vector<Novikov> used(ech.rows.size(), Novikov::zero(tabp, cutoff));
    for (size_t r = 0; r < ech.rows.size(); ++r) {
        auto it = row.find(ech.pivots[r]);
        if (it == row.end() || it->second.is_zero()) continue;
        Novikov factor = it->second * ech.rows[r].at(ech.pivots[r]).invert();
        used[r] = factor;
        axpy(row, -factor, ech.rows[r]);
        row.erase(ech.pivots[r]);
    }
    return used;
}

struct LiftedSpan {
    Curve cl;
    Echelon ech;
    std::vector<std::vector<Novikov>> combo; // row -> coefficients over inputs
    size_t n_inputs = 0;

    // returns true if the vector extended the span
    bool feed(const QElem& v) {
        CoordVec row = to_coords(requantize(v, cl.tab, cl.cutoff, cl.punctures().size()));
        std::vector<Novikov> used = eliminate(row, ech, *cl.tab, cl.tab, cl.cutoff);
        size_t idx = n_inputs++;
        auto piv = best_pivot(row, *cl.tab);
        if (!piv) return false;
        std::vector<Novikov> mine(n_inputs, Novikov::zero(cl.tab, cl.cutoff));
        mine[idx] = Novikov::one(cl.tab, cl.cutoff);
        for (size_t r = 0; r < used.size(); ++r)
            if (!used[r].is_zero())
                for (size_t m = 0; m < combo[r].size(); ++m)
                    mine[m] = mine[m] - used[r] * combo[r][m];
        for (auto& cmb : combo) cmb.resize(n_inputs, Novikov::zero(cl.tab, cl.cutoff));
        ech.rows.push_back(std::move(row));
        ech.pivots.push_back(*piv);
        combo.push_back(std::move(mine));
        return true;
    }

    // coefficients of target over the INPUT vectors; nullopt if not in span
    std::optional<std::vector<Novikov>> solve(const QElem& target) const {
        CoordVec row = to_coords(requantize(target, cl.tab, cl.cutoff, cl.punctures().size()));
        Echelon tmp = ech;
        std::vector<Novikov> used = eliminate(row, tmp, *cl.tab, cl.tab, cl.cutoff);
        if (!row.empty()) return std::nullopt;
        std::vector<Novikov> out(n_inputs, Novikov::zero(cl.tab, cl.cutoff));
        for (size_t r = 0; r < used.size(); ++r)
            if (!used[r].is_zero())
                for (size_t m = 0; m < combo[r].size(); ++m)
                    out[m] = out[m] + used[r] * combo[r][m];
        return out;
    }
};

LiftedSpan monomial_span(const Curve& c, const std::vector<Vec2>& monomials) {
    LiftedSpan sp;
    sp.cl = lift_curve(c);
    for (const Vec2& m : monomials)
        sp.feed(reduce(BiLaurent::monomial(sp.cl.tab, sp.cl.cutoff, m.x, m.y), sp.cl));
    return sp;
}

} // namespace

FilteredBasis filtered_dim(const Curve& c, const std::vector<Vec2>& monomials) {
    LiftedSpan sp = monomial_span(c, monomials);
    FilteredBasis out;
    out.monomials = monomials;
    out.dim = static_cast<long>(sp.ech.rows.size());
    for (size_t r = 0; r < sp.ech.rows.size(); ++r) {
        out.echelon.push_back(
            requantize(from_coords(sp.cl, sp.ech.rows[r]), c.tab, c.cutoff, c.punctures().size()));
        out.pivots.push_back(sp.ech.pivots[r]);
    }
    return out;
}

std::optional<std::vector<Novikov>> express_in(const FilteredBasis& basis, const QElem& v) {
    if (basis.echelon.empty())
        return v.is_zero() ? std::make_optional(std::vector<Novikov>{}) : std::nullopt;
    SymbolsPtr tabp = v.tab;
    const SymbolTable& tab = *tabp;
    Echelon ech;
    for (size_t r = 0; r < basis.echelon.size(); ++r) {
        ech.rows.push_back(to_coords(basis.echelon[r]));
        ech.pivots.push_back(basis.pivots[r]);
    }
    CoordVec row = to_coords(v);
    std::vector<Novikov> used = eliminate(row, ech, tab, tabp, v.cutoff);
    if (!row.empty()) return std::nullopt;
    return used;
}

BasisCheck verify_basis(const Curve& c, const std::vector<QElem>& candidates,
                        const std::vector<Vec2>& monomials) {
    BasisCheck out;
    LiftedSpan mono = monomial_span(c, monomials);
    long dim = static_cast<long>(mono.ech.rows.size());
    if (static_cast<long>(candidates.size()) != dim)
        throw domain_error("DimensionMismatch",
                           "candidate count " + std::to_string(candidates.size()) +
                               " != filtered dimension " + std::to_string(dim));
    // containment of every candidate, independence of the candidate family;
    // equal spans then follow from the dimension count
    LiftedSpan cand;
    cand.cl = mono.cl;
    for (const QElem& v : candidates) {
        // containment, with coefficients over the monomial echelon rows
        Echelon tmp = mono.ech;
        CoordVec row =
            to_coords(requantize(v, mono.cl.tab, mono.cl.cutoff, mono.cl.punctures().size()));
        std::vector<Novikov> used = eliminate(row, tmp, *mono.cl.tab, mono.cl.tab, mono.cl.cutoff);
        if (!row.empty()) {
            out.ok = false;
            out.reason = "candidate leaves the filtered subspace";
            return out;
        }
        for (auto& u : used) u = u.truncated(c.cutoff);
        out.transition.push_back(std::move(used));
        if (!cand.feed(v)) {
            out.ok = false;
            out.reason = "candidates are linearly dependent";
            return out;
        }
    }
    out.ok = true;
    return out;
}

std::optional<std::vector<Novikov>> express_in_vectors(const Curve& c,
                                                       const std::vector<QElem>& span,
                                                       const QElem& target) {
    LiftedSpan sp;
    sp.cl = lift_curve(c);
    for (const QElem& v : span) sp.feed(v);
    auto sol = sp.solve(target);
    if (!sol) return std::nullopt;
    for (auto& x : *sol) x = x.truncated(c.cutoff);
    return sol;
}

Expansion structure_constants(const Curve& c, Vec2 m1, Vec2 m2,
                              const std::function<std::vector<Vec2>(long)>& family, long k0) {
    for (long k = k0; k <= k0 + 64; ++k) {
        LiftedSpan sp = monomial_span(c, family(k));
        QElem prod = reduce(BiLaurent::monomial(sp.cl.tab, sp.cl.cutoff, m1.x + m2.x, m1.y + m2.y),
                            sp.cl);
        Echelon tmp = sp.ech;
        CoordVec row = to_coords(prod);
        std::vector<Novikov> used = eliminate(row, tmp, *sp.cl.tab, sp.cl.tab, sp.cl.cutoff);
        if (!row.empty()) continue;
        for (auto& u : used) u = u.truncated(c.cutoff);
        return {k, std::move(used)};
    }
    throw domain_error("ConstraintTooSmall",
                       "product not contained in the constraint family up to the bound");
}

} // namespace tfw
