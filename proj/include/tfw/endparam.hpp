#pragma once

#include "tfw/quotient.hpp"

namespace tfw {

// On-curve parametrization of a cylindrical end by its outward coordinate p:
// valuations of (z1(p), z2(p)) are linear in the dedicated generator
// G = 2*pi*p (declared with a large certified value so leading terms order the
// p -> infinity asymptotics).
struct EndParam {
    int end_index = 0;
    int pend_id = 0; // generator id of G
    Novikov z1, z2;
    Valuation cutoff; // relaxed cutoff used for profile arithmetic
};

// max_order bounds the z-power the caller will evaluate (sets the cutoff).
EndParam end_param(const Curve& c, const TropInput& f, int end_index, long max_order);

struct PoleProfile {
    long slope = 0; // w: val(g(rho(p))) = -2 pi w p + O(1)
    Unit leading;
};

// Throws ZeroFunction when g vanishes along the end to cutoff.
PoleProfile pole_profile(const QElem& g, const Curve& c, const EndParam& ep);

} // namespace tfw
