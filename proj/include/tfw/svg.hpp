#pragma once

#include <string>

#include "tfw/hamiltonian.hpp"

namespace tfw {

struct SvgOptions {
    double box = 6.0;   // clip rays to [-box, box]^2
    double scale = 48;  // pixels per unit
};

// Deterministic skeleton figure: vertices, bounded edges, labeled rays clipped
// to the bounding box.
std::string skeleton_svg(const TropInput& f, const TropicalSkeleton& sk,
                         const SvgOptions& opt = {});

// Per-end (p_alpha, theta_alpha) generator ladder.
std::string ladder_svg(const TropInput& f, const GeneratorSet& gens, const PerturbConfig& cfg,
                       const SvgOptions& opt = {});

} // namespace tfw
