#pragma once

#include <string>
#include <vector>

#include "tfw/tropical.hpp"

namespace tfw {

// Smooth cutoff profile: 0 below 0, 1 above 1, strictly increasing between,
// 0 < chi' <= 2. The standard exponential partition sigma(u)/(sigma(u)+sigma(1-u)).
double chi(double u);
double chi_prime(double u);

// chi((p - r1) / (r2 - r1)). Throws BadInterval unless r1 < r2.
double bump(double r1, double r2, double p);

// The angular Morse function -cos(theta - phi).
double morse_mu(double phi, double theta);

struct PerturbConfig {
    double R = 0;
    long k0 = 0, k1 = 0; // wrapping pair; k = k1 - k0 drives the formulas
    double a1 = 0, a2 = 0;            // unit translation vector
    std::vector<double> phi;          // per end index
    std::string chi_profile = "exp-partition";
    double r_multiple = 8.0;          // required R > r_multiple * k * M
    long independence_denominator = 16;

    long k() const { return k1 - k0; }
};

// phi policy "auto": deterministic irrational offsets per end.
std::vector<double> auto_phi(size_t n_ends);

// Validates the config against the curve's ends (unit a, non-parallel /
// non-orthogonal to every end, R large enough, phi independence up to the
// denominator bound). Throws ConfigInvalid.
void validate_config(const TropInput& f, const std::vector<EndSpec>& ends,
                     const PerturbConfig& cfg);

// a_alpha and a_alpha_perp of the decomposition a1 p1 + a2 p2 =
// a_alpha p_alpha + a_perp p_alpha^perp, in the internal frame of the end.
double a_alpha(const PerturbConfig& cfg, const EndSpec& end);
double a_alpha_perp(const PerturbConfig& cfg, const EndSpec& end);

// h(p) = d(k H)/dp_alpha on the cylindrical region: k R^{-1} a_alpha below the
// transition window [R^2+3R, R^2+4R], k (2 pi + 2 R^{-1}|a_alpha|) + k R^{-1} a_alpha
// above it, strictly increasing across it.
double ham_slope(const PerturbConfig& cfg, const EndSpec& end, double p_alpha);

// The p_alpha level with h(p) = 2 j pi, for admissible j. Throws OutOfRange /
// NonMonotone.
double solve_wrap_levels(const PerturbConfig& cfg, const EndSpec& end, long j);

// Admissible wrap exponents for an end: {1..k} when a_alpha > 0, {0..k-1}
// when a_alpha < 0.
std::pair<long, long> wrap_index_range(const PerturbConfig& cfg, const EndSpec& end);

struct Generator {
    enum class Kind { Cylindrical, Interior };
    Kind kind = Kind::Interior;
    int end_index = -1;
    char gen_type = 'v'; // 'e' (degree 0), 'f' (degree 1), 'v' interior
    long j = 0;          // wrap exponent
    long sheet = 0;      // sheet index mod |alpha|^2 on diagonal ends
    int degree = 1;
    bool has_coords = false;
    double p_alpha = 0, theta_alpha = 0, p_perp = 0, theta_perp = 0;
};

struct GeneratorSet {
    std::vector<Generator> gens;
    std::vector<std::string> warnings;
    long interior_count = 0;
    long degree0_count() const;
    long degree1_count() const;
};

GeneratorSet enumerate_generators(const TropInput& f, const PerturbConfig& cfg);

struct CylPoint {
    double p_alpha = 0, theta_alpha = 0, p_perp = 0, theta_perp = 0;
};

// Time-t flow of k H_{f,R} in the cylindrical regime; p-coordinates unchanged.
CylPoint flow_point(const PerturbConfig& cfg, const EndSpec& end, const CylPoint& pt, double t);

// g_k(p_alpha, theta_perp): the explicit graph function of the k-wrapped
// perturbation on an end, used by the energy formulas.
double graph_function(const PerturbConfig& cfg, const EndSpec& end, long k, double p_alpha,
                      double theta_perp, double phi_alpha);

} // namespace tfw
