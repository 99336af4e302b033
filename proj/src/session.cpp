#include "tfw/session.hpp"

#include <cctype>
#include <fstream>

#include "tfw/errors.hpp"

namespace tfw {

namespace {

struct Tok {
    char op; // '+', '-'
    std::string body;
};

} // namespace

Valuation parse_linexpr(const std::string& text, const SymbolTable& tab) {
    // split on top-level + and -
    std::vector<Tok> toks;
    std::string cur;
    char pending = '+';
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '+' || ch == '-') {
            if (cur.empty() && toks.empty() && ch == '-') {
                pending = '-';
                continue;
            }
            if (cur.empty()) {
                // consecutive sign: fold
                pending = (pending == ch) ? '+' : '-';
                continue;
            }
            toks.push_back({pending, cur});
            cur.clear();
            pending = ch;
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) toks.push_back({pending, cur});
    Valuation out;
    for (const auto& t : toks) {
        // forms: <rat>, <sym>, <rat>*<sym>
        std::string body = t.body;
        Rational coeff(1);
        std::string sym;
        auto star = body.find('*');
        if (star != std::string::npos) {
            coeff = parse_rational(body.substr(0, star));
            sym = body.substr(star + 1);
        } else if (!body.empty() &&
                   (std::isdigit(static_cast<unsigned char>(body[0])) || body[0] == '.')) {
            coeff = parse_rational(body);
        } else {
            sym = body;
        }
        if (t.op == '-') coeff = -coeff;
        if (sym.empty())
            out.add(0, coeff);
        else
            out.add(tab.id_or_throw(sym), coeff);
    }
    return out;
}

TropInput parse_trop_input(const Json& j) {
    TropInput f;
    f.symbols = std::make_shared<SymbolTable>();
    f.symbols->add("pi", pi_multiple_provider(Rational(1)));
    if (j.contains("parameters"))
        for (auto it = j["parameters"].begin(); it != j["parameters"].end(); ++it) {
            const Json& v = it.value();
            if (v.is_array()) {
                QInterval iv(parse_rational(v.at(0).get<std::string>()),
                             parse_rational(v.at(1).get<std::string>()));
                f.symbols->add(it.key(), fixed_interval_provider(iv));
            } else {
                Rational q = parse_rational(v.is_string() ? v.get<std::string>()
                                                          : std::to_string(v.get<double>()));
                f.symbols->add(it.key(), constant_provider(q));
            }
        }
    if (!j.contains("terms")) throw domain_error("ParseError", "input lacks \"terms\"");
    for (const Json& t : j["terms"]) {
        Vec2 e{t.at("exp").at(0).get<long>(), t.at("exp").at(1).get<long>()};
        CoeffData c;
        const Json& ln = t.at("log_norm");
        c.log_norm = parse_linexpr(
            ln.is_string() ? ln.get<std::string>() : std::to_string(ln.get<double>()),
            *f.symbols);
        if (t.contains("phase_pi")) {
            const Json& ph = t["phase_pi"];
            c.phase = Phase::of_pi(parse_rational(
                ph.is_string() ? ph.get<std::string>() : std::to_string(ph.get<double>())));
        } else if (t.contains("phase")) {
            c.phase = Phase::of_radians(t["phase"].get<double>());
        } else {
            c.phase = Phase::of_pi(Rational(0));
        }
        f.add_term(e, c);
    }
    f.validate();
    return f;
}

TropInput load_trop_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("ParseError", "cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw domain_error("ParseError", std::string("bad JSON: ") + e.what());
    }
    return parse_trop_input(j);
}

Json valuation_json(const Valuation& v, const SymbolTable& tab) {
    Json out = Json::object();
    for (const auto& [id, c] : v.coeffs()) out[tab.name(id)] = rat_str(c);
    return out;
}

Json novikov_json(const Novikov& x) {
    Json arr = Json::array();
    for (const auto& t : x.terms()) {
        Json term;
        term["val"] = valuation_json(t.val, *x.symbols());
        term["re"] = t.c.approx().real();
        term["im"] = t.c.approx().imag();
        if (t.c.has_exact()) {
            term["exact"] = {{"mag", rat_str(t.c.mag())}, {"phase_pi", rat_str(t.c.phase_pi())}};
        }
        arr.push_back(term);
    }
    return arr;
}

Json qelem_json(const QElem& g) {
    Json out;
    Json laur = Json::object();
    for (const auto& [e, c] : g.laurent) laur[std::to_string(e)] = novikov_json(c);
    out["laurent"] = laur;
    Json tails = Json::array();
    for (const auto& tail : g.pole_tails) {
        Json tj = Json::object();
        for (const auto& [j, c] : tail) tj[std::to_string(j)] = novikov_json(c);
        tails.push_back(tj);
    }
    out["pole_tails"] = tails;
    return out;
}

Json end_json(const EndSpec& e, const SymbolTable& tab) {
    Json out;
    out["alpha"] = {e.alpha.x, e.alpha.y};
    out["log_r"] = e.log_r.str(tab);
    out["arg_r"] = e.arg_r.str();
    out["between"] = {{e.beta_from.x, e.beta_from.y}, {e.beta_to.x, e.beta_to.y}};
    out["alpha_internal"] = {e.alpha_internal.x, e.alpha_internal.y};
    return out;
}

Json generator_json(const Generator& g) {
    Json out;
    out["kind"] = g.kind == Generator::Kind::Cylindrical ? "cylindrical" : "interior";
    out["degree"] = g.degree;
    if (g.kind == Generator::Kind::Cylindrical) {
        out["end"] = g.end_index;
        out["type"] = std::string(1, g.gen_type);
        out["j"] = g.j;
        out["sheet"] = g.sheet;
        out["coords"] = {g.p_alpha, g.theta_alpha, g.p_perp, g.theta_perp};
    } else {
        out["index"] = g.j;
        out["coords"] = nullptr; // counted, not located
    }
    return out;
}

Json polygon_json(const NewtonPolygon& np) {
    Json out;
    Json verts = Json::array();
    for (const auto& v : np.vertices) verts.push_back({v.x, v.y});
    out["vertices"] = verts;
    out["boundary_lattice_points"] = np.boundary_lattice_points;
    out["interior_lattice_points"] = np.interior_lattice_points;
    out["area"] = rat_str(np.area);
    return out;
}

Json skeleton_json(const TropicalSkeleton& sk, const SymbolTable& tab) {
    Json out;
    Json vs = Json::array();
    for (const auto& v : sk.vertices) {
        Json vj;
        vj["x"] = v.x.str(tab);
        vj["y"] = v.y.str(tab);
        Json cell = Json::array();
        for (const auto& m : v.cell) cell.push_back({m.x, m.y});
        vj["cell"] = cell;
        vs.push_back(vj);
    }
    out["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : sk.edges)
        es.push_back({{"v", {e.v0, e.v1}},
                      {"dir", {e.dir.x, e.dir.y}},
                      {"dual", {{e.dual_a.x, e.dual_a.y}, {e.dual_b.x, e.dual_b.y}}}});
    out["edges"] = es;
    Json rs = Json::array();
    for (const auto& r : sk.rays)
        rs.push_back({{"v", r.v},
                      {"dir", {r.dir.x, r.dir.y}},
                      {"components", {{r.comp_a.x, r.comp_a.y}, {r.comp_b.x, r.comp_b.y}}}});
    out["rays"] = rs;
    return out;
}

TropInput session_curve(const SessionConfig& cfg) {
    if (cfg.curve == "pants") return make_pants();
    if (cfg.curve == "lq") return make_lq(cfg.log_q, cfg.argq_pi);
    return load_trop_input(cfg.input_path);
}

PerturbConfig perturb_config(const SessionConfig& cfg, const TropInput& f) {
    PerturbConfig pc;
    pc.R = cfg.R;
    pc.k0 = 0;
    pc.k1 = cfg.k;
    pc.a1 = cfg.a1;
    pc.a2 = cfg.a2;
    auto ends = cylindrical_ends(f);
    if (cfg.phi_policy == "auto")
        pc.phi = auto_phi(ends.size());
    else
        pc.phi = cfg.phi_values;
    return pc;
}

Valuation session_cutoff(const SessionConfig& cfg, const TropInput& f) {
    (void)f;
    return Valuation::constant(cfg.cutoff);
}

Json Report::to_json(bool with_timing) const {
    Json out;
    out["command"] = command;
    out["config"] = config;
    out["results"] = results;
    out["warnings"] = warnings;
    if (with_timing) out["timing_ms"] = elapsed_ms;
    return out;
}

} // namespace tfw
