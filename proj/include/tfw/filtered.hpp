#pragma once

#include <functional>
#include <optional>

#include "tfw/quotient.hpp"

namespace tfw {

// Coordinate key of the partial-fraction normal form: (-1, n) is the Laurent
// power z1^n; (i, j) with i >= 0 is the order-j tail at puncture i.
using CoordKey = std::pair<int, long>;
using CoordVec = std::map<CoordKey, Novikov>;

CoordVec to_coords(const QElem& g);
QElem from_coords(const Curve& c, const CoordVec& v);

// Monomial sets for the standard filtered subspaces.
std::vector<Vec2> lq_monomials(long k);    // z1^i, z2^i for -k < i <= k
std::vector<Vec2> pants_monomials(long k); // m1, m2 >= -k, m1 + m2 <= k
// Generic constraint: all monomials in the box satisfying pred.
std::vector<Vec2> constrained_monomials(long k, const std::function<bool(long, long)>& pred,
                                        long box);

struct FilteredBasis {
    long dim = 0;
    std::vector<Vec2> monomials;          // the generating monomial set
    std::vector<QElem> echelon;           // triangular basis certificate
    std::vector<CoordKey> pivots;         // pivot coordinate per echelon row
};

FilteredBasis filtered_dim(const Curve& c, const std::vector<Vec2>& monomials);

struct BasisCheck {
    bool ok = false;
    std::string reason;
    // candidate[i] = sum_j transition[i][j] * echelon[j] over Lambda
    std::vector<std::vector<Novikov>> transition;
};

BasisCheck verify_basis(const Curve& c, const std::vector<QElem>& candidates,
                        const std::vector<Vec2>& monomials);

// Coefficients of reduce(z1^{i1} z2^{j1} * z1^{i2} z2^{j2}) in the echelon
// basis of the monomial span, the span auto-enlarged until it contains the
// product (per the supplied family of monomial sets indexed by k).
struct Expansion {
    long used_k = 0;
    std::vector<Novikov> coeffs; // against filtered_dim(curve, family(used_k)).echelon
};
Expansion structure_constants(const Curve& c, Vec2 m1, Vec2 m2,
                              const std::function<std::vector<Vec2>(long)>& family, long k0);

// Expresses v in the echelon span; nullopt if not contained.
std::optional<std::vector<Novikov>> express_in(const FilteredBasis& basis, const QElem& v);

// Solves target = sum_i x_i span_i over Lambda; nullopt if not solvable or the
// span vectors are dependent in a way that blocks back-substitution.
std::optional<std::vector<Novikov>> express_in_vectors(const Curve& c,
                                                       const std::vector<QElem>& span,
                                                       const QElem& target);

} // namespace tfw
