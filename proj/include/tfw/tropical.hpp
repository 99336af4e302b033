#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tfw/valuation.hpp"

namespace tfw {

struct Vec2 {
    long x = 0, y = 0;
    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
};

inline long cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline long dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
long gcd_abs(long a, long b);
inline long lattice_length(const Vec2& v) { return gcd_abs(v.x, v.y); }

// An angle, kept exact when it is a rational multiple of pi.
struct Phase {
    bool exact = true;
    Rational pi_part; // value = pi_part * pi
    double num = 0;   // radians, when !exact

    static Phase of_pi(const Rational& q) { return Phase{true, q, 0}; }
    static Phase of_radians(double r) { return Phase{false, Rational(0), r}; }
    double radians() const;
    Phase operator+(const Phase& o) const;
    Phase operator-(const Phase& o) const;
    Phase operator-() const;
    // normalized to [0, 2*pi)
    Phase normalized() const;
    bool is_zero() const;
    std::string str() const;
};

struct CoeffData {
    Valuation log_norm; // exact linear expression in declared parameters
    Phase phase;
};

// A Laurent polynomial given by exact coefficient data on a finite support.
struct TropInput {
    SymbolsPtr symbols;
    std::map<Vec2, CoeffData> terms;

    void add_term(const Vec2& exp, const CoeffData& c);
    void validate() const;
};

struct NewtonPolygon {
    std::vector<Vec2> vertices; // extreme points, counterclockwise
    long boundary_lattice_points = 0;
    long interior_lattice_points = 0;
    Rational area;
};

struct SkeletonVertex {
    Valuation x, y;
    std::vector<Vec2> cell; // dual subdivision cell (tied exponents), ccw hull
};

struct SkeletonEdge {
    int v0 = 0, v1 = 0;
    Vec2 dir;              // primitive direction from v0 to v1
    Vec2 dual_a, dual_b;   // exponents of the regions this edge separates
};

struct SkeletonRay {
    int v = 0;
    Vec2 dir;              // primitive outward direction
    Vec2 comp_a, comp_b;   // unbounded components C_a, C_b (ccw order a before b)
};

struct TropicalSkeleton {
    std::vector<SkeletonVertex> vertices;
    std::vector<SkeletonEdge> edges;
    std::vector<SkeletonRay> rays; // in ccw order of direction
};

// One cylindrical end per boundary edge of hull(A). `alpha` and `r` follow the
// asymptote convention z^alpha -> r along the end; `alpha_internal` is the
// opposite label, for which p_alpha = (a2 p1 - a1 p2)/|a|^2 is positive
// outward and all perturbation formulas apply verbatim.
struct EndSpec {
    Vec2 alpha;          // = beta_from - beta_to
    Vec2 alpha_internal; // = beta_to - beta_from
    Vec2 beta_from, beta_to;
    Valuation log_r;     // log|r| for the reported alpha
    Phase arg_r;
    Valuation log_r_int; // for alpha_internal
    Phase arg_r_int;
    long alpha_norm2() const { return dot(alpha, alpha); }
};

NewtonPolygon newton_polygon(const TropInput& f);
bool check_smoothness(const TropInput& f);

struct TropEval {
    Valuation value;
    std::vector<Vec2> argmax;
};
TropEval tropical_eval(const TropInput& f, const Valuation& x1, const Valuation& x2);

TropicalSkeleton skeleton(const TropInput& f);
std::vector<EndSpec> cylindrical_ends(const TropInput& f);

struct GenusEnds {
    long genus = 0;
    long ends = 0;
    long euler_count() const { return 2 * genus + ends - 2; }
};
GenusEnds genus_and_ends(const TropInput& f);

// M = max over pairs of log|c/c'| = (max log-norm) - (min log-norm).
Valuation coefficient_gap(const TropInput& f);

struct ScaledPolygonBound {
    NewtonPolygon hull;
    Valuation gap_m;
    Rational d_squared; // exact squared distance from alpha to the boundary
    std::vector<std::pair<double, double>> scaled_vertices; // (M/d) * hull
};
ScaledPolygonBound bounded_component_bound(const TropInput& f, const Vec2& alpha);

// Built-in curves. logq/argq enter through the declared parameters of the
// returned input's symbol table ("s" = log|q| as an exact rational,
// arg q = argq_pi * pi).
TropInput make_pants();
TropInput make_lq(const Rational& log_q, const Rational& argq_pi);

} // namespace tfw
