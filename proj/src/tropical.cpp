#include "tfw/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "tfw/errors.hpp"

namespace tfw {

long gcd_abs(long a, long b) {
    a = std::labs(a);
    b = std::labs(b);
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

double Phase::radians() const {
    return exact ? rat_d(pi_part) * std::numbers::pi : num;
}

Phase Phase::operator+(const Phase& o) const {
    if (exact && o.exact) return of_pi(pi_part + o.pi_part);
    return of_radians(radians() + o.radians());
}

Phase Phase::operator-(const Phase& o) const { return *this + (-o); }

Phase Phase::operator-() const {
    if (exact) return of_pi(-pi_part);
    return of_radians(-num);
}

Phase Phase::normalized() const {
    if (exact) return of_pi(rat_mod(pi_part, Rational(2)));
    double tau = 2 * std::numbers::pi;
    double r = std::fmod(num, tau);
    if (r < 0) r += tau;
    return of_radians(r);
}

bool Phase::is_zero() const {
    if (exact) return sgn(pi_part) == 0;
    return num == 0;
}

std::string Phase::str() const {
    if (exact) return rat_str(pi_part) + "*pi";
    std::ostringstream os;
    os << num;
    return os.str();
}

void TropInput::add_term(const Vec2& exp, const CoeffData& c) {
    if (terms.count(exp)) throw domain_error("DuplicateExponent", "repeated exponent in support");
    terms.emplace(exp, c);
}

void TropInput::validate() const {
    if (!symbols) throw domain_error("ParseError", "input has no symbol table");
    if (terms.empty()) throw domain_error("DegenerateSupport", "empty support");
}

namespace {

// Counterclockwise convex hull (extreme points only), Andrew monotone chain.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vec2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) { // upper
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool hull_is_2d(const std::vector<Vec2>& hull) { return hull.size() >= 3; }

std::vector<Vec2> support_of(const TropInput& f) {
    std::vector<Vec2> pts;
    pts.reserve(f.terms.size());
    for (const auto& [a, c] : f.terms) pts.push_back(a);
    return pts;
}

const CoeffData& coeff_of(const TropInput& f, const Vec2& a) { return f.terms.at(a); }

} // namespace

NewtonPolygon newton_polygon(const TropInput& f) {
    f.validate();
    auto hull = convex_hull(support_of(f));
    if (!hull_is_2d(hull))
        throw domain_error("DegenerateSupport", "hull of the support is a point or segment");
    NewtonPolygon np;
    np.vertices = hull;
    long twice_area = 0;
    long boundary = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
        const Vec2& a = hull[i];
        const Vec2& b = hull[(i + 1) % hull.size()];
        twice_area += cross(a, b);
        boundary += lattice_length(b - a);
    }
    np.area = Rational(twice_area, 2);
    np.area.canonicalize();
    np.boundary_lattice_points = boundary;
    // Pick: A = I + B/2 - 1
    Rational I = np.area - Rational(boundary, 2) + 1;
    I.canonicalize();
    np.interior_lattice_points = I.get_num().get_si();
    return np;
}

bool check_smoothness(const TropInput& f) {
    auto np = newton_polygon(f);
    size_t n = np.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 e = np.vertices[(i + 1) % n] - np.vertices[i];
        if (lattice_length(e) != 1) return false;
    }
    return true;
}

TropEval tropical_eval(const TropInput& f, const Valuation& x1, const Valuation& x2) {
    f.validate();
    const SymbolTable& tab = *f.symbols;
    std::optional<Valuation> best;
    std::vector<Vec2> argmax;
    for (const auto& [a, c] : f.terms) {
        Valuation v = c.log_norm + x1 * Rational(a.x) + x2 * Rational(a.y);
        if (!best) {
            best = v;
            argmax = {a};
            continue;
        }
        if (v.identical(*best)) {
            argmax.push_back(a);
            continue;
        }
        switch (compare(v, *best, tab)) {
            case Ordering::Greater:
                best = v;
                argmax = {a};
                break;
            case Ordering::Equal:
                argmax.push_back(a);
                break;
            case Ordering::Less:
                break;
        }
    }
    return {*best, argmax};
}

namespace {

struct Cell {
    std::vector<Vec2> members; // all tied exponents, sorted
    std::vector<Vec2> poly;    // ccw hull of members
    Valuation vx, vy;          // dual skeleton vertex position
};

// Solve the tie position of a cell: (a-b).x = h_b - h_a for two independent
// pairs taken from the cell.
std::pair<Valuation, Valuation> tie_position(const TropInput& f, const std::vector<Vec2>& poly) {
    const Vec2 &p = poly[0], &q = poly[1], &r = poly[2];
    Vec2 u = q - p, v = r - p;
    long det = cross(u, v);
    if (det == 0) throw domain_error("DegenerateCell", "collinear cell generators");
    Valuation rhs1 = coeff_of(f, p).log_norm - coeff_of(f, q).log_norm;
    Valuation rhs2 = coeff_of(f, p).log_norm - coeff_of(f, r).log_norm;
    // [u; v] * (x, y)^T = (rhs1, rhs2)
    Rational d(det);
    Valuation x = (rhs1 * Rational(v.y) - rhs2 * Rational(u.y)) * (Rational(1) / d);
    Valuation y = (rhs2 * Rational(u.x) - rhs1 * Rational(v.x)) * (Rational(1) / d);
    return {x, y};
}

// The regular subdivision of the support induced by the log-norm lifting
// (upper faces, max-plus convention), as maximal tied cells.
std::vector<Cell> regular_subdivision(const TropInput& f) {
    const SymbolTable& tab = *f.symbols;
    auto pts = support_of(f);
    size_t n = pts.size();
    std::set<std::vector<Vec2>> seen;
    std::vector<Cell> cells;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec2 u = pts[j] - pts[i], v = pts[k] - pts[i];
                long det = cross(u, v);
                if (det == 0) continue;
                // plane through the three lifted points: w.a + c with
                // w = (wx, wy), all Valuation-valued
                Valuation hi = coeff_of(f, pts[i]).log_norm;
                Valuation hj = coeff_of(f, pts[j]).log_norm;
                Valuation hk = coeff_of(f, pts[k]).log_norm;
                Rational d(det);
                Valuation wx = ((hj - hi) * Rational(v.y) - (hk - hi) * Rational(u.y)) *
                               (Rational(1) / d);
                Valuation wy = ((hk - hi) * Rational(u.x) - (hj - hi) * Rational(v.x)) *
                               (Rational(1) / d);
                bool upper = true;
                std::vector<Vec2> members;
                for (size_t m = 0; m < n && upper; ++m) {
                    Valuation lift = wx * Rational(pts[m].x) + wy * Rational(pts[m].y) + hi -
                                     wx * Rational(pts[i].x) - wy * Rational(pts[i].y);
                    Valuation hm = coeff_of(f, pts[m]).log_norm;
                    if (hm.identical(lift)) {
                        members.push_back(pts[m]);
                        continue;
                    }
                    switch (compare(hm, lift, tab)) {
                        case Ordering::Greater:
                            upper = false;
                            break;
                        case Ordering::Equal:
                            members.push_back(pts[m]);
                            break;
                        case Ordering::Less:
                            break;
                    }
                }
                if (!upper) continue;
                std::sort(members.begin(), members.end());
                if (!seen.insert(members).second) continue;
                Cell c;
                c.members = members;
                c.poly = convex_hull(members);
                auto [x, y] = tie_position(f, c.poly);
                c.vx = x;
                c.vy = y;
                cells.push_back(std::move(c));
            }
    return cells;
}

int angle_quadrant(const Vec2& d) {
    if (d.x > 0 && d.y >= 0) return 0;
    if (d.x <= 0 && d.y > 0) return 1;
    if (d.x < 0 && d.y <= 0) return 2;
    return 3;
}

bool angle_less(const Vec2& a, const Vec2& b) {
    int qa = angle_quadrant(a), qb = angle_quadrant(b);
    if (qa != qb) return qa < qb;
    return cross(a, b) > 0;
}

} // namespace

TropicalSkeleton skeleton(const TropInput& f) {
    if (!check_smoothness(f))
        throw domain_error("NotSmooth", "hull boundary has non-vertex lattice points");
    const SymbolTable& tab = *f.symbols;
    auto cells = regular_subdivision(f);

    TropicalSkeleton sk;
    for (const auto& c : cells) sk.vertices.push_back({c.vx, c.vy, c.poly});

    // bounded edges: dual to interior subdivision edges shared by two cells
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j) {
            std::vector<Vec2> shared;
            std::set_intersection(cells[i].members.begin(), cells[i].members.end(),
                                  cells[j].members.begin(), cells[j].members.end(),
                                  std::back_inserter(shared));
            if (shared.size() < 2) continue;
            // extremes along the shared line
            auto [mn, mx] = std::minmax_element(shared.begin(), shared.end());
            Vec2 e = *mx - *mn;
            if (lattice_length(e) != 1)
                throw domain_error("MultiplicityUnsupported",
                                   "subdivision edge of lattice length > 1 (weight > 1)");
            SkeletonEdge se;
            se.v0 = static_cast<int>(i);
            se.v1 = static_cast<int>(j);
            se.dual_a = *mn;
            se.dual_b = *mx;
            Vec2 dir{-e.y, e.x}; // perpendicular to the dual edge
            // orient from v0 to v1: the displacement of the dual vertices is
            // parallel to dir, so its dot product with dir fixes the sign
            Valuation dx = cells[j].vx - cells[i].vx;
            Valuation dy = cells[j].vy - cells[i].vy;
            Valuation along = dx * Rational(dir.x) + dy * Rational(dir.y);
            switch (compare(along, Valuation(), tab)) {
                case Ordering::Less:
                    dir = -dir;
                    break;
                case Ordering::Equal:
                    throw domain_error("DegenerateCell", "dual vertices coincide");
                case Ordering::Greater:
                    break;
            }
            se.dir = dir;
            sk.edges.push_back(se);
        }

    // rays: dual to hull boundary edges
    auto np = newton_polygon(f);
    size_t nh = np.vertices.size();
    for (size_t i = 0; i < nh; ++i) {
        Vec2 b0 = np.vertices[i];
        Vec2 b1 = np.vertices[(i + 1) % nh];
        int owner = -1;
        for (size_t c = 0; c < cells.size(); ++c) {
            const auto& m = cells[c].members;
            if (std::binary_search(m.begin(), m.end(), b0) &&
                std::binary_search(m.begin(), m.end(), b1)) {
                owner = static_cast<int>(c);
                break;
            }
        }
        if (owner < 0)
            throw domain_error("DegenerateCell", "hull edge not covered by the subdivision");
        Vec2 e = b1 - b0;
        SkeletonRay ray;
        ray.v = owner;
        ray.dir = {e.y, -e.x}; // outward normal for a ccw polygon
        ray.comp_a = b0;
        ray.comp_b = b1;
        sk.rays.push_back(ray);
    }
    std::sort(sk.rays.begin(), sk.rays.end(),
              [](const SkeletonRay& a, const SkeletonRay& b) { return angle_less(a.dir, b.dir); });
    return sk;
}

std::vector<EndSpec> cylindrical_ends(const TropInput& f) {
    if (!check_smoothness(f))
        throw domain_error("NotSmooth", "hull boundary has non-vertex lattice points");
    auto np = newton_polygon(f);
    std::vector<EndSpec> ends;
    size_t n = np.vertices.size();
    for (size_t j = 0; j < n; ++j) {
        const Vec2& bj = np.vertices[j];
        const Vec2& bj1 = np.vertices[(j + 1) % n];
        const CoeffData& cj = coeff_of(f, bj);
        const CoeffData& cj1 = coeff_of(f, bj1);
        EndSpec e;
        e.beta_from = bj;
        e.beta_to = bj1;
        e.alpha_internal = bj1 - bj;
        e.alpha = bj - bj1;
        // asymptote along the end: c_j z^{b_j} + c_{j+1} z^{b_{j+1}} = 0,
        // so z^{alpha_int} = -c_j / c_{j+1} and z^{alpha} is its reciprocal
        e.log_r_int = cj.log_norm - cj1.log_norm;
        e.arg_r_int = (cj.phase - cj1.phase + Phase::of_pi(Rational(1))).normalized();
        e.log_r = cj1.log_norm - cj.log_norm;
        e.arg_r = (-e.arg_r_int).normalized();
        ends.push_back(std::move(e));
    }
    return ends;
}

GenusEnds genus_and_ends(const TropInput& f) {
    if (!check_smoothness(f))
        throw domain_error("NotSmooth", "hull boundary has non-vertex lattice points");
    auto np = newton_polygon(f);
    return {np.interior_lattice_points, static_cast<long>(np.vertices.size())};
}

Valuation coefficient_gap(const TropInput& f) {
    f.validate();
    const SymbolTable& tab = *f.symbols;
    std::optional<Valuation> lo, hi;
    for (const auto& [a, c] : f.terms) {
        if (!lo) {
            lo = hi = c.log_norm;
            continue;
        }
        if (compare(c.log_norm, *lo, tab) == Ordering::Less) lo = c.log_norm;
        if (compare(c.log_norm, *hi, tab) == Ordering::Greater) hi = c.log_norm;
    }
    return *hi - *lo;
}

namespace {

// Squared euclidean distance from p to segment [a, b], exact.
Rational dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 e = b - a, w = p - a;
    long ee = dot(e, e);
    long t_num = dot(w, e);
    if (t_num <= 0) return Rational(dot(w, w));
    if (t_num >= ee) {
        Vec2 w2 = p - b;
        return Rational(dot(w2, w2));
    }
    long c = cross(e, w);
    Rational d2(c * c, ee);
    d2.canonicalize();
    return d2;
}

} // namespace

ScaledPolygonBound bounded_component_bound(const TropInput& f, const Vec2& alpha) {
    auto np = newton_polygon(f);
    size_t n = np.vertices.size();
    // strict interiority: strictly left of every ccw edge
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = np.vertices[i], b = np.vertices[(i + 1) % n];
        if (cross(b - a, alpha - a) <= 0)
            throw domain_error("NotInterior", "exponent is not interior to the hull");
    }
    ScaledPolygonBound out;
    out.hull = np;
    out.gap_m = coefficient_gap(f);
    Rational best = dist2_point_segment(alpha, np.vertices[0], np.vertices[1]);
    for (size_t i = 1; i < n; ++i) {
        Rational d2 =
            dist2_point_segment(alpha, np.vertices[i], np.vertices[(i + 1) % n]);
        if (d2 < best) best = d2;
    }
    out.d_squared = best;
    double m = out.gap_m.approx(*f.symbols);
    double d = std::sqrt(rat_d(best));
    double scale = d == 0 ? 0 : m / d;
    for (const auto& v : np.vertices)
        out.scaled_vertices.emplace_back(scale * v.x, scale * v.y);
    return out;
}

TropInput make_pants() {
    TropInput f;
    f.symbols = std::make_shared<SymbolTable>();
    f.symbols->add("pi", pi_multiple_provider(Rational(1)));
    CoeffData one{Valuation(), Phase::of_pi(Rational(0))};
    CoeffData minus{Valuation(), Phase::of_pi(Rational(1))};
    f.add_term({0, 0}, one);
    f.add_term({1, 0}, minus);
    f.add_term({0, 1}, minus);
    return f;
}

TropInput make_lq(const Rational& log_q, const Rational& argq_pi) {
    TropInput f;
    f.symbols = std::make_shared<SymbolTable>();
    f.symbols->add("pi", pi_multiple_provider(Rational(1)));
    CoeffData one{Valuation(), Phase::of_pi(Rational(0))};
    CoeffData minus{Valuation(), Phase::of_pi(Rational(1))};
    // q^{-1} z1 z2: log-norm -log|q|, phase -arg q
    CoeffData qinv{Valuation::constant(-log_q), Phase::of_pi(-argq_pi)};
    f.add_term({0, 0}, one);
    f.add_term({1, 0}, minus);
    f.add_term({0, 1}, minus);
    f.add_term({1, 1}, qinv);
    return f;
}

} // namespace tfw
