#include "tfw/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "tfw/errors.hpp"

namespace tfw {

namespace {
constexpr double kPi = std::numbers::pi;

double sigma(double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; }
double sigma_prime(double u) { return u > 0 ? std::exp(-1.0 / u) / (u * u) : 0.0; }
} // namespace

double chi(double u) {
    if (u <= 0) return 0;
    if (u >= 1) return 1;
    double s = sigma(u), t = sigma(1 - u);
    return s / (s + t);
}

double chi_prime(double u) {
    if (u <= 0 || u >= 1) return 0;
    double s = sigma(u), t = sigma(1 - u);
    double sp = sigma_prime(u), tp = sigma_prime(1 - u);
    double denom = (s + t) * (s + t);
    return (sp * t + s * tp) / denom;
}

double bump(double r1, double r2, double p) {
    if (!(r1 < r2)) throw domain_error("BadInterval", "bump requires R1 < R2");
    return chi((p - r1) / (r2 - r1));
}

double morse_mu(double phi, double theta) { return -std::cos(theta - phi); }

std::vector<double> auto_phi(size_t n_ends) {
    // golden-angle offsets: pairwise independent over small denominators
    std::vector<double> out;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (size_t j = 0; j < n_ends; ++j) {
        double frac = std::fmod((static_cast<double>(j) + 1.0) * g, 1.0);
        out.push_back(2 * kPi * frac + 0.1);
    }
    return out;
}

double a_alpha(const PerturbConfig& cfg, const EndSpec& end) {
    const Vec2& al = end.alpha_internal;
    return cfg.a1 * static_cast<double>(al.y) - cfg.a2 * static_cast<double>(al.x);
}

double a_alpha_perp(const PerturbConfig& cfg, const EndSpec& end) {
    const Vec2& al = end.alpha_internal;
    double n2 = static_cast<double>(dot(al, al));
    return (cfg.a1 * static_cast<double>(al.x) + cfg.a2 * static_cast<double>(al.y)) / n2;
}

void validate_config(const TropInput& f, const std::vector<EndSpec>& ends,
                     const PerturbConfig& cfg) {
    double norm = std::hypot(cfg.a1, cfg.a2);
    if (std::abs(norm - 1.0) > 1e-9)
        throw domain_error("ConfigInvalid", "translation vector a must be a unit vector");
    if (cfg.k() < 0) throw domain_error("ConfigInvalid", "k1 must be >= k0");
    for (const auto& e : ends) {
        double aa = a_alpha(cfg, e);
        double ap = a_alpha_perp(cfg, e);
        if (std::abs(aa) < 1e-9 || std::abs(ap) < 1e-9)
            throw domain_error("ConfigInvalid",
                               "a is parallel or orthogonal to an end direction");
    }
    if (cfg.phi.size() != ends.size())
        throw domain_error("ConfigInvalid", "phi must provide one offset per end");
    // independence of the phi offsets up to the denominator bound
    long D = cfg.independence_denominator;
    auto near_grid = [&](double x) {
        for (long d = 1; d <= D; ++d) {
            double scaled = x * static_cast<double>(d) / (2 * kPi);
            if (std::abs(scaled - std::round(scaled)) < 1e-6 * d) return true;
        }
        return false;
    };
    for (size_t i = 0; i < cfg.phi.size(); ++i) {
        if (near_grid(cfg.phi[i]))
            throw domain_error("ConfigInvalid", "phi offset lies on the rational grid");
        for (size_t j = i + 1; j < cfg.phi.size(); ++j)
            if (near_grid(cfg.phi[i] - cfg.phi[j]))
                throw domain_error("ConfigInvalid",
                                   "phi offsets are rationally dependent at the bound");
    }
    double m = coefficient_gap(f).approx(*f.symbols);
    double kc = static_cast<double>(std::max<long>(cfg.k(), 1));
    if (!(cfg.R > cfg.r_multiple * kc * m) || !(cfg.R >= 4.0 * (kc + 1.0)))
        throw domain_error("ConfigInvalid", "R is too small for this k and coefficient gap");
    double kr = static_cast<double>(cfg.k()) / cfg.R;
    for (const auto& e : ends)
        if (kr * std::abs(a_alpha(cfg, e)) >= kPi)
            throw domain_error("ConfigInvalid", "k R^{-1} |a_alpha| must stay below pi");
}

double ham_slope(const PerturbConfig& cfg, const EndSpec& end, double p_alpha) {
    double k = static_cast<double>(cfg.k());
    double aa = a_alpha(cfg, end);
    double w0 = cfg.R * cfg.R + 3 * cfg.R, w1 = cfg.R * cfg.R + 4 * cfg.R;
    return k * (2 * kPi + 2 * std::abs(aa) / cfg.R) * bump(w0, w1, p_alpha) + k * aa / cfg.R;
}

std::pair<long, long> wrap_index_range(const PerturbConfig& cfg, const EndSpec& end) {
    double aa = a_alpha(cfg, end);
    long k = cfg.k();
    if (aa > 0) return {1, k};
    return {0, k - 1};
}

double solve_wrap_levels(const PerturbConfig& cfg, const EndSpec& end, long j) {
    long k = cfg.k();
    if (k <= 0) throw domain_error("OutOfRange", "no wrap levels for k = 0");
    auto [jlo, jhi] = wrap_index_range(cfg, end);
    if (j < jlo || j > jhi)
        throw domain_error("OutOfRange", "wrap exponent " + std::to_string(j) +
                                             " outside the admissible range [" +
                                             std::to_string(jlo) + ", " + std::to_string(jhi) +
                                             "]");
    double w0 = cfg.R * cfg.R + 3 * cfg.R, w1 = cfg.R * cfg.R + 4 * cfg.R;
    double target = 2 * kPi * static_cast<double>(j);

    // sampled monotonicity pre-check; uniqueness of the crossing follows
    const int samples = 4096;
    double prev = ham_slope(cfg, end, w0);
    for (int i = 1; i <= samples; ++i) {
        double p = w0 + (w1 - w0) * static_cast<double>(i) / samples;
        double h = ham_slope(cfg, end, p);
        if (h < prev - 1e-12)
            throw numeric_error("NonMonotone", "wrapping slope decreased across the window");
        prev = h;
    }
    if (!(ham_slope(cfg, end, w0) < target && target < ham_slope(cfg, end, w1)))
        throw domain_error("OutOfRange", "level 2j*pi not attained inside the window");

    double lo = w0, hi = w1;
    double flo = ham_slope(cfg, end, lo) - target;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = ham_slope(cfg, end, mid) - target;
        if (std::abs(fm) < 1e-12 * 2 * kPi) return mid;
        if ((flo < 0) == (fm < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double mid = 0.5 * (lo + hi);
    if (std::abs(ham_slope(cfg, end, mid) - target) < 1e-12 * 2 * kPi) return mid;
    throw numeric_error("NonMonotone", "bisection failed to reach tolerance");
}

long GeneratorSet::degree0_count() const {
    long n = 0;
    for (const auto& g : gens)
        if (g.degree == 0) ++n;
    return n;
}

long GeneratorSet::degree1_count() const {
    long n = 0;
    for (const auto& g : gens)
        if (g.degree == 1) ++n;
    return n;
}

GeneratorSet enumerate_generators(const TropInput& f, const PerturbConfig& cfg) {
    auto ends = cylindrical_ends(f);
    validate_config(f, ends, cfg);
    GeneratorSet out;
    out.warnings.push_back(
        "wrap index ranges follow the self-intersection convention ({1..k} / {0..k-1}); "
        "the alternative {0..k} reading is rejected as inconsistent with the 4k count");
    long k = cfg.k();
    for (size_t ei = 0; ei < ends.size(); ++ei) {
        const EndSpec& end = ends[ei];
        if (k == 0) continue;
        auto [jlo, jhi] = wrap_index_range(cfg, end);
        long n2 = end.alpha_norm2();
        double ap = a_alpha_perp(cfg, end);
        double phi = cfg.phi[ei];
        double argr = end.arg_r_int.radians();
        double logr = end.log_r_int.approx(*f.symbols);
        for (long j = jlo; j <= jhi; ++j) {
            double p = solve_wrap_levels(cfg, end, j);
            for (long sheet = 0; sheet < n2; ++sheet) {
                for (char type : {'e', 'f'}) {
                    double off = (type == 'f') ? kPi : 0.0;
                    double angle = phi + 0.5 * static_cast<double>(k) * ap / cfg.R + off;
                    Generator g;
                    g.kind = Generator::Kind::Cylindrical;
                    g.end_index = static_cast<int>(ei);
                    g.gen_type = type;
                    g.j = j;
                    g.sheet = sheet;
                    g.degree = (type == 'e') ? 0 : 1;
                    g.has_coords = true;
                    g.p_alpha = p;
                    g.theta_alpha = argr;
                    g.theta_perp =
                        (angle + 2 * kPi * static_cast<double>(sheet)) / static_cast<double>(n2);
                    g.p_perp = logr + std::pow(cfg.R, -3.0) * static_cast<double>(n2) *
                                          std::sin(angle - phi);
                    out.gens.push_back(g);
                }
            }
        }
    }
    auto ge = genus_and_ends(f);
    out.interior_count = ge.euler_count();
    for (long i = 0; i < out.interior_count; ++i) {
        Generator g;
        g.kind = Generator::Kind::Interior;
        g.gen_type = 'v';
        g.j = i;
        g.degree = 1;
        g.has_coords = false; // counted, not located
        out.gens.push_back(g);
    }
    return out;
}

CylPoint flow_point(const PerturbConfig& cfg, const EndSpec& end, const CylPoint& pt, double t) {
    CylPoint out = pt;
    out.theta_alpha += t * ham_slope(cfg, end, pt.p_alpha);
    out.theta_perp += t * static_cast<double>(cfg.k()) * a_alpha_perp(cfg, end) / cfg.R;
    return out;
}

double graph_function(const PerturbConfig& cfg, const EndSpec& end, long k, double p_alpha,
                      double theta_perp, double phi_alpha) {
    double w0 = cfg.R * cfg.R + 3 * cfg.R, w1 = cfg.R * cfg.R + 4 * cfg.R;
    double kk = static_cast<double>(k);
    double aa = a_alpha(cfg, end);
    double ap = a_alpha_perp(cfg, end);
    double n2 = static_cast<double>(end.alpha_norm2());
    return 2 * kk * kPi * bump(w0, w1, p_alpha) * p_alpha + kk * aa / cfg.R * p_alpha +
           std::pow(cfg.R, -3.0) *
               morse_mu(phi_alpha + kk * ap / cfg.R, n2 * theta_perp);
}

} // namespace tfw
