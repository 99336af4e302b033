#include "tfw/diskenergy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tfw/errors.hpp"

namespace tfw {

double disk_energy(const TropInput& f, const PerturbConfig& cfg, const DiskBoundaryData& data) {
    auto ends = cylindrical_ends(f);
    if (data.end_index < 0 || data.end_index >= static_cast<int>(ends.size()))
        throw domain_error("InconsistentCycle", "end index out of range");
    const EndSpec& end = ends[data.end_index];
    size_t d1 = data.arcs.size();
    if (d1 == 0 || data.verts.size() != d1)
        throw domain_error("InconsistentCycle", "need d+1 arcs and d+1 vertices");
    for (const auto& v : data.verts)
        if (!std::isfinite(v.p_alpha) || !std::isfinite(v.theta_perp))
            throw domain_error("InconsistentCycle", "non-finite vertex data");

    auto g = [&](size_t arc, const DiskVertex& x) {
        return graph_function(cfg, end, data.arcs[arc].wrap_k, x.p_alpha, x.theta_perp,
                              data.phi_alpha);
    };

    double e = 0;
    for (size_t s = 0; s < d1; ++s) e += data.arcs[s].lambda_class;
    // sum_{j=0}^{d-1} (g_j(x_{j+1}) - g_j(x_j)) + g_d(x_0) - g_d(x_d)
    for (size_t s = 0; s + 1 < d1; ++s) e += g(s, data.verts[s + 1]) - g(s, data.verts[s]);
    e += g(d1 - 1, data.verts[0]) - g(d1 - 1, data.verts[d1 - 1]);
    for (size_t s = 0; s < d1; ++s)
        e += 2 * std::numbers::pi * static_cast<double>(data.verts[s].j) * data.verts[s].p_alpha;
    return e;
}

Novikov rescale_weight(const TropInput& f, const PerturbConfig& cfg, const Generator& gen,
                       const Valuation& cutoff) {
    if (gen.kind != Generator::Kind::Cylindrical || !gen.has_coords)
        throw domain_error("InteriorGeneratorHasNoRescale",
                           "only cylindrical generators carry a rescaling factor");
    auto ends = cylindrical_ends(f);
    const EndSpec& end = ends.at(gen.end_index);
    double phi = cfg.phi.at(gen.end_index);
    // the p-linear parts of g_{k1} - g_{k0} are absorbed by the lift through
    // the generator; what survives is the Morse-term difference plus the
    // wrapping exponent 2 pi j p_alpha, carried symbolically below
    double n2 = static_cast<double>(end.alpha_norm2());
    double ap = a_alpha_perp(cfg, end);
    double diff = std::pow(cfg.R, -3.0) *
                  (morse_mu(phi + cfg.k1 * ap / cfg.R, n2 * gen.theta_perp) -
                   morse_mu(phi + cfg.k0 * ap / cfg.R, n2 * gen.theta_perp));
    SymbolsPtr tab = f.symbols;
    Rational p_exact;
    {
        mpq_t q;
        mpq_init(q);
        mpq_set_d(q, gen.p_alpha);
        p_exact = Rational(q);
        mpq_clear(q);
    }
    // one generator symbol per distinct level; the name carries the exact
    // value so reuse is always consistent
    std::ostringstream name;
    name << "two_pi_p[" << rat_str(p_exact) << "]";
    int pid = tab->add_or_get(name.str(), pi_multiple_provider(2 * p_exact));
    Valuation v = Valuation::symbol(pid, Rational(gen.j));
    {
        mpq_t q;
        mpq_init(q);
        mpq_set_d(q, diff);
        v = v + Valuation::constant(Rational(q));
        mpq_clear(q);
    }
    return Novikov::monomial(tab, cutoff, v, Unit::one());
}

} // namespace tfw
