#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tfw/diskenergy.hpp"
#include "tfw/errors.hpp"
#include "tfw/paths.hpp"

using namespace tfw;

namespace {
constexpr double kPi = std::numbers::pi;

struct Fixture {
    TropInput f;
    std::vector<EndSpec> ends;
    int pi_id;

    explicit Fixture(TropInput in) : f(std::move(in)) {
        ends = cylindrical_ends(f);
        pi_id = f.symbols->id_or_throw("pi");
    }
    Valuation pi(const Rational& q) const { return Valuation::symbol(pi_id, q); }
    Valuation c(const Rational& q) const { return Valuation::constant(q); }

    // path skeleton on the end's cylinder (internal frame): base vertex with
    // theta_alpha = arg r lift and p_perp = log r
    LiftedPath path_on(int end_idx) const {
        LiftedPath p;
        p.base_end = ends[end_idx];
        const Phase& ar = ends[end_idx].arg_r_int;
        REQUIRE(ar.exact);
        p.argr_lift = pi(ar.pi_part);
        p.logr = ends[end_idx].log_r_int;
        return p;
    }

    // universal-cover vertex from internal frame coordinates
    PathVertex vertex(const EndSpec& e, const Valuation& p_alpha, const Valuation& th_alpha,
                      const Valuation& p_perp, const Valuation& th_perp) const {
        const Vec2& al = e.alpha_internal;
        Rational n2(dot(al, al));
        PathVertex v;
        // p1 = alpha1 p_perp / |a|^2 + alpha2 p_alpha ; p2 = alpha2 p_perp / |a|^2 - alpha1 p_alpha
        v.p1 = p_perp * (Rational(al.x) / n2) + p_alpha * Rational(al.y);
        v.p2 = p_perp * (Rational(al.y) / n2) - p_alpha * Rational(al.x);
        // th1 = -alpha2 th_alpha / |a|^2 + alpha1 th_perp ; th2 = alpha1 th_alpha / |a|^2 + alpha2 th_perp
        v.th1 = th_alpha * (Rational(-al.y) / n2) + th_perp * Rational(al.x);
        v.th2 = th_alpha * (Rational(al.x) / n2) + th_perp * Rational(al.y);
        return v;
    }
};

double mod4pi2(double x) {
    double m = std::fmod(x, 4 * kPi * kPi);
    if (m < 0) m += 4 * kPi * kPi;
    return m;
}

} // namespace

TEST_CASE("frame coordinates invert the parametrization") {
    Fixture fx(make_pants());
    for (const auto& e : fx.ends) {
        Valuation pa = fx.c(rat(7, 3)), ta = fx.pi(rat(1, 5));
        Valuation pp = fx.c(rat(-2, 7)), tp = fx.pi(rat(3, 11));
        PathVertex v = fx.vertex(e, pa, ta, pp, tp);
        FrameCoords fc = to_frame(e, v);
        CHECK(fc.p_alpha.identical(pa));
        CHECK(fc.theta_alpha.identical(ta));
        CHECK(fc.p_perp.identical(pp));
        CHECK(fc.theta_perp.identical(tp));
    }
}

TEST_CASE("wrapping number: constant loop, full circle, opposite-ends class") {
    Fixture fx(make_lq(Rational(1), rat(1, 2)));
    const SymbolTable& tab = *fx.f.symbols;

    // constant path
    LiftedPath p0 = fx.path_on(0);
    PathVertex v = fx.vertex(fx.ends[0], fx.c(Rational(5)), p0.argr_lift, p0.logr, fx.c(0));
    p0.pts = {v, v};
    CHECK(wrapping_number(p0, tab) == 0);

    // one full theta_alpha circle: th_alpha += 2 pi at fixed everything else
    LiftedPath p1 = fx.path_on(0);
    PathVertex w0 = fx.vertex(fx.ends[0], fx.c(Rational(5)), p1.argr_lift, p1.logr, fx.c(0));
    PathVertex w1 = fx.vertex(fx.ends[0], fx.c(Rational(5)), p1.argr_lift + fx.pi(Rational(2)),
                              p1.logr, fx.c(0));
    p1.pts = {w0, w1};
    CHECK(wrapping_number(p1, tab) == 1);

    // the opposite-ends cylinder class measured at the end between (0,0),(1,0)
    // (internal alpha (1,0)): the circle of the east end winds once
    int east = -1;
    for (size_t i = 0; i < fx.ends.size(); ++i)
        if (fx.ends[i].alpha_internal == Vec2{0, 1}) east = static_cast<int>(i);
    REQUIRE(east >= 0);
    LiftedPath p2 = fx.path_on(0); // frame of the south end, alpha_int = (1,0)
    const EndSpec& e_east = fx.ends[east];
    // east circle: theta moves by 2 pi alpha_int(east) = 2 pi (0,1)
    Valuation ar_e = fx.pi(e_east.arg_r_int.pi_part);
    PathVertex c0 = fx.vertex(e_east, fx.c(Rational(9)), ar_e, e_east.log_r_int, fx.c(0));
    PathVertex c1 = fx.vertex(e_east, fx.c(Rational(9)), ar_e, e_east.log_r_int, fx.pi(Rational(2)));
    p2.pts = {c0, c1};
    long w = wrapping_number(p2, tab);
    CHECK((w == 1 || w == -1));

    // non-integral wrap errors loudly
    LiftedPath bad = fx.path_on(0);
    PathVertex b1 = fx.vertex(fx.ends[0], fx.c(Rational(5)), p1.argr_lift + fx.pi(Rational(1)),
                              p1.logr, fx.c(0));
    bad.pts = {w0, b1};
    CHECK_THROWS_AS(wrapping_number(bad, tab), DomainError); // not even a loop
}

TEST_CASE("integral_lambda: constant, on-cylinder circle, rectangle area") {
    Fixture fx(make_pants());
    const SymbolTable& tab = *fx.f.symbols;
    int end = 0;

    LiftedPath p0 = fx.path_on(end);
    PathVertex v = fx.vertex(fx.ends[end], fx.c(Rational(3)), p0.argr_lift, p0.logr, fx.c(0));
    p0.pts = {v, v};
    CHECK(integral_lambda(p0, tab).is_zero());

    // theta_perp circle on the cylinder: integrand vanishes identically
    LiftedPath p1 = fx.path_on(end);
    PathVertex a0 = fx.vertex(fx.ends[end], fx.c(Rational(3)), p1.argr_lift, p1.logr, fx.c(0));
    PathVertex a1 =
        fx.vertex(fx.ends[end], fx.c(Rational(3)), p1.argr_lift, p1.logr, fx.pi(Rational(2)));
    p1.pts = {a0, a1};
    CHECK(integral_lambda(p1, tab).is_zero());

    // ccw rectangle of height dp and width dth in the (p_alpha, theta_alpha)
    // plane at p_perp = log|r|: signed area -dp*dth (omega = -dp^dth + ...)
    Rational dp(2), dth_pi(1, 3); // dth = pi/3
    LiftedPath p2 = fx.path_on(end);
    auto corner = [&](const Rational& s, const Rational& t) {
        return fx.vertex(fx.ends[end], fx.c(Rational(3) + s), p2.argr_lift + fx.pi(t), p2.logr,
                         fx.c(0));
    };
    p2.pts = {corner(0, 0), corner(dp, 0), corner(dp, dth_pi), corner(0, dth_pi), corner(0, 0)};
    PolyExpr area = integral_lambda(p2, tab);
    double expect = -rat_d(dp) * rat_d(dth_pi) * kPi;
    CHECK(area.approx(tab) == doctest::Approx(expect).epsilon(1e-12));
    // exact coefficient: -2/3 on the pi monomial
    CHECK(area.coeff({fx.pi_id}) == -dp * dth_pi);
}

TEST_CASE("property: Stokes check on randomized coordinate rectangles") {
    Fixture fx(make_lq(Rational(1), rat(1, 2)));
    const SymbolTable& tab = *fx.f.symbols;
    std::mt19937_64 rng(20240915);
    std::uniform_int_distribution<int> endd(0, 3);
    std::uniform_int_distribution<int> pl(0, 5);
    std::uniform_int_distribution<long> num(-12, 12);
    for (int it = 0; it < 500; ++it) {
        int ei = endd(rng);
        LiftedPath p = fx.path_on(ei);
        // base point
        Valuation base[4] = {fx.c(rat(num(rng), 5) + 6), p.argr_lift + fx.pi(rat(num(rng), 12)),
                             p.logr + fx.c(rat(num(rng), 7)), fx.pi(rat(num(rng), 12))};
        int plane = pl(rng);
        static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        int i = pairs[plane][0], j = pairs[plane][1];
        Valuation du = (i == 1 || i == 3) ? fx.pi(rat(num(rng), 6)) : fx.c(rat(num(rng), 6));
        Valuation dv = (j == 1 || j == 3) ? fx.pi(rat(num(rng), 6)) : fx.c(rat(num(rng), 6));
        auto at = [&](int steps_u, int steps_v) {
            Valuation coord[4] = {base[0], base[1], base[2], base[3]};
            if (steps_u) coord[i] = coord[i] + du * Rational(steps_u);
            if (steps_v) coord[j] = coord[j] + dv * Rational(steps_v);
            return fx.vertex(fx.ends[ei], coord[0], coord[1], coord[2], coord[3]);
        };
        p.pts = {at(0, 0), at(1, 0), at(1, 1), at(0, 1), at(0, 0)};
        // a rectangle in the (theta_alpha) direction may fail the loop check
        // downstairs unless dth is a multiple of 2 pi; restrict those to loops
        bool theta_dirs_close = true;
        for (int d : {i, j}) {
            if (d == 1) {
                const Valuation& dd = (d == i) ? du : dv;
                Rational c = dd.coeff(fx.pi_id);
                if (sgn(rat_mod(c, Rational(2))) != 0) theta_dirs_close = false;
            }
        }
        if (!theta_dirs_close) continue;
        PolyExpr got = integral_lambda(p, tab);
        // omega-area oracle: -du dv for (p_alpha, theta_alpha), +du dv for
        // (p_perp, theta_perp), 0 for mixed planes
        double area = 0;
        double duv = du.approx(tab) * dv.approx(tab);
        if (i == 0 && j == 1) area = -duv;
        if (i == 2 && j == 3) area = duv;
        CHECK(got.approx(tab) == doctest::Approx(area).epsilon(1e-9));
    }
}

TEST_CASE("integral_eta: constant and on-cylinder circle vanish; diagonal needs mode") {
    Fixture fx(make_lq(Rational(1), rat(1, 2)));
    const SymbolTable& tab = *fx.f.symbols;
    LiftedPath p0 = fx.path_on(0);
    PathVertex v = fx.vertex(fx.ends[0], fx.c(Rational(4)), p0.argr_lift, p0.logr, fx.c(0));
    p0.pts = {v, v};
    CHECK(integral_eta(p0, tab).is_zero());

    LiftedPath p1 = fx.path_on(0);
    PathVertex a0 = fx.vertex(fx.ends[0], fx.c(Rational(4)), p1.argr_lift, p1.logr, fx.c(0));
    PathVertex a1 =
        fx.vertex(fx.ends[0], fx.c(Rational(4)), p1.argr_lift, p1.logr, fx.pi(Rational(2)));
    p1.pts = {a0, a1};
    CHECK(integral_eta(p1, tab).is_zero());

    Fixture pants(make_pants());
    int diag = -1;
    for (size_t i = 0; i < pants.ends.size(); ++i)
        if (pants.ends[i].alpha_norm2() == 2) diag = static_cast<int>(i);
    REQUIRE(diag >= 0);
    LiftedPath pd = pants.path_on(diag);
    PathVertex d0 =
        pants.vertex(pants.ends[diag], pants.c(Rational(4)), pd.argr_lift, pd.logr, pants.c(0));
    pd.pts = {d0, d0};
    CHECK_THROWS_WITH_AS(integral_eta(pd, *pants.f.symbols),
                         doctest::Contains("DiagonalNeedsAdjustedMode"), DomainError);
    // the adjusted mode accepts the diagonal-end convention
    PathVertex d1 = pants.vertex(pants.ends[diag], pants.c(Rational(4)), pd.argr_lift, pd.logr,
                                 pants.pi(Rational(2)));
    LiftedPath pda = pd;
    pda.pts = {d0, d1};
    PolyExpr adj = integral_eta_adjusted(pda, *pants.f.symbols, pants.c(0));
    CHECK(std::abs(adj.approx(*pants.f.symbols)) < 1e-9);
}

TEST_CASE("property: eta integral is homotopy invariant to 1e-9 mod 4 pi^2") {
    Fixture fx(make_lq(Rational(2), rat(1, 3)));
    const SymbolTable& tab = *fx.f.symbols;
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<int> nmid(1, 4);
    int done = 0;
    while (done < 500) {
        LiftedPath p = fx.path_on(1);
        // random loop: random interior vertices, closing with integer 2 pi
        // angle shifts (wrapping allowed)
        std::vector<PathVertex> pts;
        Valuation pa0 = fx.c(rat(num(rng), 3) + 9), ta0 = p.argr_lift + fx.pi(rat(num(rng), 6));
        Valuation pp0 = p.logr + fx.c(rat(num(rng), 5)), tp0 = fx.pi(rat(num(rng), 6));
        pts.push_back(fx.vertex(fx.ends[1], pa0, ta0, pp0, tp0));
        int mids = nmid(rng);
        for (int m = 0; m < mids; ++m)
            pts.push_back(fx.vertex(fx.ends[1], fx.c(rat(num(rng), 3) + 9),
                                    ta0 + fx.pi(rat(num(rng), 6)), pp0 + fx.c(rat(num(rng), 5)),
                                    tp0 + fx.pi(rat(num(rng), 6))));
        long wa = num(rng) % 2;
        pts.push_back(fx.vertex(fx.ends[1], pa0, ta0 + fx.pi(Rational(2 * wa)), pp0, tp0));
        p.pts = pts;
        PolyExpr v1 = integral_eta(p, tab);

        // homotoped representative: subdivide segments and insert a
        // back-and-forth detour (degenerate triangle)
        LiftedPath q = p;
        std::vector<PathVertex> qp;
        for (size_t s = 0; s + 1 < pts.size(); ++s) {
            qp.push_back(pts[s]);
            PathVertex mid;
            mid.p1 = (pts[s].p1 + pts[s + 1].p1) * rat(1, 2);
            mid.p2 = (pts[s].p2 + pts[s + 1].p2) * rat(1, 2);
            mid.th1 = (pts[s].th1 + pts[s + 1].th1) * rat(1, 2);
            mid.th2 = (pts[s].th2 + pts[s + 1].th2) * rat(1, 2);
            qp.push_back(mid);
            PathVertex detour = fx.vertex(fx.ends[1], fx.c(rat(num(rng), 4) + 9),
                                          fx.pi(rat(num(rng), 6)), fx.c(rat(num(rng), 5)),
                                          fx.pi(rat(num(rng), 6)));
            qp.push_back(detour);
            qp.push_back(mid);
        }
        qp.push_back(pts.back());
        q.pts = qp;
        PolyExpr v2 = integral_eta(q, tab);
        double d = mod4pi2(v1.approx(tab)) - mod4pi2(v2.approx(tab));
        d = std::min(std::abs(d), std::abs(std::abs(d) - 4 * kPi * kPi));
        CHECK(d < 1e-9);
        ++done;
    }
}

TEST_CASE("obstruction: L_q opposite ends give 2 pi arg q; linearity") {
    Rational argq = rat(1, 2);
    TropInput f = make_lq(Rational(1), argq);
    // end order is ccw from (0,0): south, east, north, west
    auto r1 = obstruction_check(f, {0, 1, 0, 1});
    CHECK(r1.exact);
    CHECK(r1.pi2_coeff == 2 * argq); // value 2 pi arg q = (2 argq_pi) pi^2
    CHECK(r1.no_disk);

    auto r2 = obstruction_check(f, {1, 0, 1, 0});
    CHECK(r2.pi2_coeff == rat_mod(-2 * argq, Rational(4)));

    // Z-linearity mod 4 pi^2
    auto r3 = obstruction_check(f, {0, 2, 0, 2});
    CHECK(r3.pi2_coeff == rat_mod(2 * r1.pi2_coeff, Rational(4)));
    auto r5 = obstruction_check(f, {-1, 1, -1, 1});
    CHECK(r5.pi2_coeff == rat_mod(r1.pi2_coeff - r2.pi2_coeff, Rational(4)));

    CHECK_THROWS_WITH_AS(obstruction_check(f, {1, 1, 0, 0}),
                         doctest::Contains("NotNullhomotopic"), DomainError);
}

TEST_CASE("obstruction: zero class inconclusive, relation class trivial") {
    TropInput f = make_lq(Rational(1), rat(1, 2));
    auto r0 = obstruction_check(f, {0, 0, 0, 0});
    CHECK_FALSE(r0.no_disk);
    CHECK(r0.pi2_coeff == 0);
    CHECK_THROWS_WITH_AS(obstruction_check(f, {1, 1, 1, 1}),
                         doctest::Contains("NotNullhomotopic"), DomainError);
}

TEST_CASE("obstruction: pants kernel is trivial") {
    TropInput pants = make_pants();
    CHECK_THROWS_WITH_AS(obstruction_check(pants, {1, 1, 1}),
                         doctest::Contains("NotNullhomotopic"), DomainError);
    CHECK_THROWS_WITH_AS(obstruction_check(pants, {1, 0, 0}),
                         doctest::Contains("NotNullhomotopic"), DomainError);
    CHECK_THROWS_WITH_AS(obstruction_check(pants, {2, -1, 0}),
                         doctest::Contains("NotNullhomotopic"), DomainError);
}

namespace {

PerturbConfig lq_cfg(long k, double R) {
    PerturbConfig c;
    c.R = R;
    c.k0 = 0;
    c.k1 = k;
    c.a1 = -0.6;
    c.a2 = 0.8;
    c.phi = auto_phi(4);
    return c;
}

} // namespace

TEST_CASE("disk_energy: constant disk, strip against the quadrature oracle") {
    TropInput f = make_lq(Rational(1), rat(1, 2));
    long k = 2;
    PerturbConfig cfg = lq_cfg(k, 64);
    auto gens = enumerate_generators(f, cfg);
    auto ends = cylindrical_ends(f);

    // constant disk: all arcs trivial, all vertices at one point, j = 0
    DiskBoundaryData cons;
    cons.end_index = 0;
    cons.phi_alpha = cfg.phi[0];
    cons.arcs = {{0.0, 0}, {0.0, k}};
    DiskVertex x{cfg.R * cfg.R + 3.5 * cfg.R, cfg.phi[0], 0};
    cons.verts = {x, x};
    CHECK(disk_energy(f, cfg, cons) == doctest::Approx(0.0));

    // strip from x^j x^e to x^j x^f at fixed p_alpha: the energy is the
    // difference of Morse terms, cross-checked by quadrature between the two
    // perturbation graphs
    const Generator *ge = nullptr, *gf = nullptr;
    for (const auto& g : gens.gens) {
        if (g.kind != Generator::Kind::Cylindrical || g.end_index != 0 || g.j != 1) continue;
        if (g.gen_type == 'e') ge = &g;
        if (g.gen_type == 'f') gf = &g;
    }
    REQUIRE(ge != nullptr);
    REQUIRE(gf != nullptr);
    DiskBoundaryData strip;
    strip.end_index = 0;
    strip.phi_alpha = cfg.phi[0];
    strip.arcs = {{0.0, 0}, {0.0, k}};
    strip.verts = {{ge->p_alpha, ge->theta_perp, -ge->j}, {gf->p_alpha, gf->theta_perp, gf->j}};
    double e_have = disk_energy(f, cfg, strip);
    CHECK(std::abs(e_have) <= 4.0 * std::pow(cfg.R, -3.0));
    // quadrature oracle: area between the two graphs in the
    // (p_perp, theta_perp)-plane from theta_e to theta_f
    const EndSpec& end = ends[0];
    double ap = a_alpha_perp(cfg, end);
    double n2 = static_cast<double>(end.alpha_norm2());
    auto upper = [&](double th) {
        return std::pow(cfg.R, -3.0) * n2 *
               std::sin(n2 * th - cfg.phi[0] - static_cast<double>(k) * ap / cfg.R);
    };
    auto lower = [&](double th) {
        return std::pow(cfg.R, -3.0) * n2 * std::sin(n2 * th - cfg.phi[0]);
    };
    double a = ge->theta_perp, b = gf->theta_perp;
    int steps = 20000;
    double acc = 0;
    for (int i = 0; i < steps; ++i) {
        double t0 = a + (b - a) * i / steps, t1 = a + (b - a) * (i + 1) / steps;
        acc += 0.5 * ((upper(t0) - lower(t0)) + (upper(t1) - lower(t1))) * (t1 - t0);
    }
    CHECK(e_have == doctest::Approx(std::abs(acc)).epsilon(1e-3));
}

TEST_CASE("disk_energy: inconsistent cycles are rejected") {
    TropInput f = make_lq(Rational(1), rat(1, 2));
    PerturbConfig cfg = lq_cfg(1, 64);
    DiskBoundaryData bad;
    bad.end_index = 0;
    bad.arcs = {{0.0, 0}, {0.0, 1}};
    bad.verts = {{100.0, 0.0, 0}};
    CHECK_THROWS_WITH_AS(disk_energy(f, cfg, bad), doctest::Contains("InconsistentCycle"),
                         DomainError);
}

TEST_CASE("property: disk_energy is additive under boundary splits") {
    TropInput f = make_lq(Rational(1), rat(1, 2));
    PerturbConfig cfg = lq_cfg(3, 64);
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> L(-2.0, 2.0);
    std::uniform_real_distribution<double> TH(-0.5, 0.5);
    std::uniform_int_distribution<long> J(-2, 2);
    double base = cfg.R * cfg.R + 3.2 * cfg.R;
    for (int it = 0; it < 200; ++it) {
        // whole disk: arcs k = 0,1,2,3 and vertices v0..v3; v0, v2 carry j=0
        std::vector<DiskVertex> v(4);
        for (int i = 0; i < 4; ++i) v[i] = {base + 10.0 * i, cfg.phi[0] + TH(rng), J(rng)};
        v[0].j = 0;
        v[2].j = 0;
        DiskBoundaryData whole;
        whole.end_index = 0;
        whole.phi_alpha = cfg.phi[0];
        whole.arcs = {{L(rng), 0}, {L(rng), 1}, {L(rng), 2}, {L(rng), 3}};
        whole.verts = v;

        double chord = L(rng);
        DiskBoundaryData left, right;
        left.end_index = right.end_index = 0;
        left.phi_alpha = right.phi_alpha = cfg.phi[0];
        // left: arcs 0,1 then the chord (on the k=2 Lagrangian) from v2 to v0
        left.arcs = {whole.arcs[0], whole.arcs[1], {chord, 2}};
        left.verts = {v[0], v[1], v[2]};
        // right: chord traversed backwards (on the same Lagrangian), then 2,3
        right.arcs = {{-chord, 2}, whole.arcs[2], whole.arcs[3]};
        right.verts = {v[0], v[2], v[3]};
        double ew = disk_energy(f, cfg, whole);
        double el = disk_energy(f, cfg, left);
        double er = disk_energy(f, cfg, right);
        CHECK(ew == doctest::Approx(el + er).epsilon(1e-10));
    }
}

TEST_CASE("rescale_weight: trivial, innermost, and leading-valuation laws") {
    TropInput f = make_lq(Rational(1), rat(1, 2));
    long k = 2;
    PerturbConfig cfg = lq_cfg(k, 64);
    auto gens = enumerate_generators(f, cfg);
    Valuation cutoff = Valuation::constant(Rational(100000));

    for (const auto& g : gens.gens) {
        if (g.kind != Generator::Kind::Cylindrical) continue;
        Novikov w = rescale_weight(f, cfg, g, cutoff);
        REQUIRE(!w.is_zero());
        const Valuation& v = w.val();
        // the non-constant part of the valuation is j * <2 pi p_alpha>
        Rational pcoeff(0);
        for (const auto& [id, c] : v.coeffs())
            if (id != 0) pcoeff = c;
        CHECK(pcoeff == Rational(g.j));
        // the residual part is the Morse difference, bounded by 2 R^-3
        double resid = rat_d(v.constant_part());
        CHECK(std::abs(resid) <= 2.0 * std::pow(cfg.R, -3.0));
        if (g.j == 2) {
            // leading valuation 4 pi P: numeric check
            double num = v.approx(*f.symbols);
            CHECK(num == doctest::Approx(2.0 * 2.0 * kPi * g.p_alpha).epsilon(1e-9));
        }
    }
    // interior generators carry no rescale factor
    for (const auto& g : gens.gens)
        if (g.kind == Generator::Kind::Interior)
            CHECK_THROWS_WITH_AS(rescale_weight(f, cfg, g, cutoff),
                                 doctest::Contains("InteriorGeneratorHasNoRescale"), DomainError);
}

TEST_CASE("property: weight law, rescale + disk energy give exponent 2 j pi p") {
    TropInput f = make_lq(Rational(1), rat(1, 2));
    long k = 3;
    PerturbConfig cfg = lq_cfg(k, 64);
    auto gens = enumerate_generators(f, cfg);
    Valuation cutoff = Valuation::constant(Rational(100000));
    double P = cfg.R * cfg.R + 4.5 * cfg.R; // fiber torus level, beyond the window
    for (const auto& g : gens.gens) {
        if (g.kind != Generator::Kind::Cylindrical || g.gen_type != 'e') continue;
        // cylinder-contained triangle at fixed p = P: two torus vertices and
        // the wrapped input; all theta_perp equal so the Morse terms cancel
        DiskBoundaryData tri;
        tri.end_index = g.end_index;
        tri.phi_alpha = cfg.phi[g.end_index];
        tri.arcs = {{0.0, cfg.k0}, {0.0, cfg.k1}, {0.0, cfg.k0}};
        tri.verts = {{P, g.theta_perp, g.j}, {P, g.theta_perp, -g.j}, {P, g.theta_perp, 0}};
        double e = disk_energy(f, cfg, tri);
        // generator placed at the same angular position, rescaled
        Generator at_p = g;
        at_p.p_alpha = P;
        Novikov w = rescale_weight(f, cfg, at_p, cutoff);
        double total = e + w.val().approx(*f.symbols);
        CHECK(total == doctest::Approx(2.0 * kPi * static_cast<double>(g.j) * P).epsilon(1e-10));
    }
}
