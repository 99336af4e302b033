#include "tfw/rational.hpp"

#include <cctype>

namespace tfw {

Rational parse_rational(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw domain_error("ParseError", "empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal: sign, integer part, fractional part
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        for (char c : tail)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw domain_error("ParseError", "bad decimal literal: " + in);
        Rational base(head);
        Rational frac = 0;
        if (!tail.empty()) {
            mpz_class num(tail);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
            frac = Rational(num) / Rational(den);
        }
        bool neg = !head.empty() && head[0] == '-';
        Rational r = base;
        if (neg)
            r -= frac;
        else
            r += frac;
        r.canonicalize();
        return r;
    }
    try {
        Rational q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw domain_error("ParseError", "zero denominator: " + in);
        return q;
    } catch (const std::invalid_argument&) {
        throw domain_error("ParseError", "bad rational literal: " + in);
    }
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_d(const Rational& q) { return q.get_d(); }

Rational rat_floor(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(f);
}

Rational rat_mod(const Rational& q, const Rational& m) {
    Rational r = q - m * rat_floor(q / m);
    r.canonicalize();
    return r;
}

} // namespace tfw
