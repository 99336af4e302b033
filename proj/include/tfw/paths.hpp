#pragma once

#include <vector>

#include "tfw/polyexpr.hpp"
#include "tfw/tropical.hpp"

namespace tfw {

// A piecewise-linear path in universal-cover coordinates. Coordinates are
// exact linear expressions so the 1-form integrals stay closed-form. Angles
// that are rational multiples of pi are written over the "pi" generator.
struct PathVertex {
    Valuation p1, th1, p2, th2;
};

struct LiftedPath {
    std::vector<PathVertex> pts; // >= 2, consecutive segments
    EndSpec base_end;            // fixes the frame (internal alpha) and lifts
    // lift of arg r and log|r| for the internal alpha, as expressions
    Valuation argr_lift;
    Valuation logr;
};

// Frame coordinates of a vertex with respect to the internal alpha of an end.
struct FrameCoords {
    Valuation p_alpha, theta_alpha, p_perp, theta_perp;
};
FrameCoords to_frame(const EndSpec& end, const PathVertex& v);

// Delta theta_alpha / 2 pi of a loop. Errors: NotALoop, NonIntegralWrap.
long wrapping_number(const LiftedPath& path, const SymbolTable& tab);

// int lambda_alpha over the lifted loop minus 2 pi w p_{alpha,0}.
PolyExpr integral_lambda(const LiftedPath& path, const SymbolTable& tab);

// int eta_alpha minus 2 pi w theta^perp_{alpha,0}, canonical modulo 4 pi^2.
// Requires |alpha| = 1; diagonal ends must use the adjusted mode below.
PolyExpr integral_eta(const LiftedPath& path, const SymbolTable& tab);

// |alpha| > 1 convention: endpoints share theta_alpha, theta^perp differs by
// 2 pi w, and the base offset is measured against a fixed point X on the
// cylinder with theta^perp-coordinate x_theta_perp.
PolyExpr integral_eta_adjusted(const LiftedPath& path, const SymbolTable& tab,
                               const Valuation& x_theta_perp);

struct ObstructionResult {
    PolyExpr value;       // canonical mod 4 pi^2
    Rational pi2_coeff;   // value = pi2_coeff * pi^2 when phases are exact
    bool exact = true;
    bool no_disk = false; // value nonzero mod 4 pi^2
    std::vector<std::string> warnings;
};

// Class functional of the angular 1-form on sum_j n_j [S^1_j] (circles at the
// ends, oriented by increasing theta_alpha^perp). Errors NotNullhomotopic when
// sum n_j alpha_int_j != 0 or the class is a multiple of the end-sum relation.
ObstructionResult obstruction_check(const TropInput& f, const std::vector<long>& coeffs);

} // namespace tfw
