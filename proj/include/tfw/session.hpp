#pragma once

#include <json.hpp>

#include "tfw/filtered.hpp"
#include "tfw/hamiltonian.hpp"
#include "tfw/paths.hpp"

namespace tfw {

using Json = nlohmann::ordered_json;

// Parses "3/2*s + 1 - u" style exact linear expressions over declared symbols.
Valuation parse_linexpr(const std::string& text, const SymbolTable& tab);

// Input file schema:
// {"terms":[{"exp":[m1,m2],"log_norm":"<rational or linexpr>","phase_pi":"<rational>"}...],
//  "parameters":{"<symbol>":"<rational or [lo,hi]>"}}
TropInput parse_trop_input(const Json& j);
TropInput load_trop_input(const std::string& path);

Json valuation_json(const Valuation& v, const SymbolTable& tab);
Json novikov_json(const Novikov& x);
Json qelem_json(const QElem& g);
Json end_json(const EndSpec& e, const SymbolTable& tab);
Json generator_json(const Generator& g);
Json polygon_json(const NewtonPolygon& np);
Json skeleton_json(const TropicalSkeleton& sk, const SymbolTable& tab);

// Session-wide configuration shared by the CLI commands.
struct SessionConfig {
    std::string curve = "file"; // lq | pants | file
    std::string input_path;
    Rational log_q = Rational(1);
    Rational argq_pi = Rational(1, 2);
    Rational cutoff = Rational(50);
    double R = 64;
    long k = 1;
    double a1 = -0.6, a2 = 0.8;
    std::string phi_policy = "auto";
    std::vector<double> phi_values;
    std::string format = "json"; // json | text | svg
    unsigned long seed = 20240915;
    bool timing = false;
};

TropInput session_curve(const SessionConfig& cfg);
PerturbConfig perturb_config(const SessionConfig& cfg, const TropInput& f);
Valuation session_cutoff(const SessionConfig& cfg, const TropInput& f);

struct Report {
    std::string command;
    Json config;
    Json results;
    std::vector<std::string> warnings;
    double elapsed_ms = 0;
    Json to_json(bool with_timing) const;
};

} // namespace tfw
