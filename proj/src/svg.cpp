#include "tfw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tfw {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(4);
    os << std::fixed << x;
    return os.str();
}

} // namespace

std::string skeleton_svg(const TropInput& f, const TropicalSkeleton& sk, const SvgOptions& opt) {
    const SymbolTable& tab = *f.symbols;
    double b = opt.box, s = opt.scale;
    auto X = [&](double x) { return (x + b) * s; };
    auto Y = [&](double y) { return (b - y) * s; };
    std::ostringstream svg;
    double w = 2 * b * s;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
        << fmt(w) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(w) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg << "<line x1=\"" << fmt(X(-b)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(b))
        << "\" y2=\"" << fmt(Y(0)) << "\" stroke=\"#ddd\"/>\n";
    svg << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(-b)) << "\" x2=\"" << fmt(X(0))
        << "\" y2=\"" << fmt(Y(b)) << "\" stroke=\"#ddd\"/>\n";
    for (const auto& e : sk.edges) {
        double x0 = sk.vertices[e.v0].x.approx(tab), y0 = sk.vertices[e.v0].y.approx(tab);
        double x1 = sk.vertices[e.v1].x.approx(tab), y1 = sk.vertices[e.v1].y.approx(tab);
        svg << "<line x1=\"" << fmt(X(x0)) << "\" y1=\"" << fmt(Y(y0)) << "\" x2=\"" << fmt(X(x1))
            << "\" y2=\"" << fmt(Y(y1)) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const auto& r : sk.rays) {
        double x0 = sk.vertices[r.v].x.approx(tab), y0 = sk.vertices[r.v].y.approx(tab);
        double dx = r.dir.x, dy = r.dir.y;
        double n = std::hypot(dx, dy);
        // clip: march to the box boundary
        double tmax = 4 * b;
        double x1 = x0 + dx / n * tmax, y1 = y0 + dy / n * tmax;
        x1 = std::clamp(x1, -b, b);
        y1 = std::clamp(y1, -b, b);
        svg << "<line x1=\"" << fmt(X(x0)) << "\" y1=\"" << fmt(Y(y0)) << "\" x2=\"" << fmt(X(x1))
            << "\" y2=\"" << fmt(Y(y1)) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        double lx = x0 + dx / n * std::min(tmax, b * 0.8), ly = y0 + dy / n * std::min(tmax, b * 0.8);
        svg << "<text x=\"" << fmt(X(lx)) << "\" y=\"" << fmt(Y(ly))
            << "\" font-size=\"12\" fill=\"#333\">(" << r.dir.x << "," << r.dir.y << ")</text>\n";
    }
    for (const auto& v : sk.vertices) {
        svg << "<circle cx=\"" << fmt(X(v.x.approx(tab))) << "\" cy=\"" << fmt(Y(v.y.approx(tab)))
            << "\" r=\"3\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string ladder_svg(const TropInput& f, const GeneratorSet& gens, const PerturbConfig& cfg,
                       const SvgOptions& opt) {
    auto ends = cylindrical_ends(f);
    std::ostringstream svg;
    double w0 = cfg.R * cfg.R + 3 * cfg.R, w1 = cfg.R * cfg.R + 4 * cfg.R;
    double width = 360.0, rowh = 80.0;
    bool any = false;
    for (const auto& g : gens.gens)
        if (g.kind == Generator::Kind::Cylindrical) any = true;
    double h = any ? rowh * static_cast<double>(ends.size()) : 40.0;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(h) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(h) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!any) {
        svg << "<text x=\"10\" y=\"24\" font-size=\"12\">no cylindrical generators (k = 0)"
            << "</text>\n</svg>\n";
        return svg.str();
    }
    auto px = [&](double p) { return 40 + (p - w0) / (w1 - w0) * (width - 80); };
    for (size_t ei = 0; ei < ends.size(); ++ei) {
        double y = rowh * static_cast<double>(ei) + rowh / 2;
        svg << "<line x1=\"40\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(width - 40) << "\" y2=\""
            << fmt(y) << "\" stroke=\"#999\"/>\n";
        svg << "<text x=\"4\" y=\"" << fmt(y + 4) << "\" font-size=\"11\">e" << ei << " ("
            << ends[ei].alpha.x << "," << ends[ei].alpha.y << ")</text>\n";
        for (const auto& g : gens.gens) {
            if (g.kind != Generator::Kind::Cylindrical || g.end_index != static_cast<int>(ei))
                continue;
            double x = px(g.p_alpha);
            double dy = g.gen_type == 'e' ? -8.0 : 8.0;
            dy += 2.0 * static_cast<double>(g.sheet);
            svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y + dy) << "\" r=\"3\" fill=\""
                << (g.gen_type == 'e' ? "black" : "none") << "\" stroke=\"black\"/>\n";
            if (g.sheet == 0 && g.gen_type == 'e')
                svg << "<text x=\"" << fmt(x - 4) << "\" y=\"" << fmt(y - 16)
                    << "\" font-size=\"10\">j=" << g.j << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tfw
