#pragma once

#include <vector>

#include "tfw/hamiltonian.hpp"
#include "tfw/novikov.hpp"

namespace tfw {

// Boundary data of a disk with d+1 vertices on one cylindrical end. Arc s runs
// from vertex s to vertex s+1 (the last one closes the cycle) on the Lagrangian
// wrapped wrap_k[s] times; lambda_class[s] is the class integral of the
// canonical 1-form over that arc.
struct DiskArc {
    double lambda_class = 0;
    long wrap_k = 0;
};

struct DiskVertex {
    double p_alpha = 0;
    double theta_perp = 0;
    long j = 0; // theta_alpha-separation exponent at this vertex
};

struct DiskBoundaryData {
    int end_index = 0;
    std::vector<DiskArc> arcs;      // size d+1
    std::vector<DiskVertex> verts;  // size d+1
    double phi_alpha = 0;
};

// Energy of the disk: sum of arc class integrals, graph-function differences
// and the 2 pi sum j_s p_s term. Throws InconsistentCycle.
double disk_energy(const TropInput& f, const PerturbConfig& cfg, const DiskBoundaryData& data);

// The multiplicative rescaling factor T^{g1(z(x)) - g0(z(x)) + 2 pi j(x) p(x)}
// of a cylindrical generator, as a Novikov scalar whose valuation carries the
// symbolic 2*pi*p_alpha generator. Throws InteriorGeneratorHasNoRescale.
Novikov rescale_weight(const TropInput& f, const PerturbConfig& cfg, const Generator& gen,
                       const Valuation& cutoff);

} // namespace tfw
