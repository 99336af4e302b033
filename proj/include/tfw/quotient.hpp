#pragma once

#include <vector>

#include "tfw/laurent.hpp"
#include "tfw/tropical.hpp"

namespace tfw {

// Presentation of a genus-zero curve f = A(z1) + B(z1) z2 over the Novikov
// field, with the finite nonzero punctures resolved as roots of A and B.
struct Curve {
    SymbolsPtr tab;
    Valuation cutoff;
    NPoly A, B;
    std::vector<Novikov> roots_a, roots_b;
    std::vector<Novikov> punctures() const; // roots_a then roots_b
    long z2_shift = 0;                      // factored-out power of z2
};

// Maps the exact coefficient data into Lambda: c with log-norm L and phase s
// becomes T^{2 pi L} e^{i s}. Non-constant parameters in L get dedicated
// pi*<param> generators. Throws NotLinearInZ2 / RootsNotResolvable.
Curve present_curve(const TropInput& f, const Valuation& cutoff);

// Partial-fraction normal form of an element of K[z1^pm, z2^pm]/(f):
// a Laurent part in z1 plus, per finite puncture, a tail in (z1 - rho)^{-j}.
struct QElem {
    SymbolsPtr tab;
    Valuation cutoff;
    std::map<long, Novikov> laurent;                 // z1^n
    std::vector<std::map<long, Novikov>> pole_tails; // per puncture, order -> coeff

    bool is_zero() const;
    QElem operator+(const QElem& o) const;
    QElem operator-(const QElem& o) const;
    QElem scale(const Novikov& c) const;
    bool equals(const QElem& o) const;
};

QElem qzero(const Curve& c);
QElem reduce(const BiLaurent& g, const Curve& c);
QElem qmul(const QElem& a, const QElem& b, const Curve& c);

// Evaluation at an on-curve point (checked to cutoff). Throws AtPuncture.
Novikov evaluate_at(const QElem& g, const Curve& c, const Novikov& z1, const Novikov& z2);

std::string qstr(const QElem& g);

// Built-in presentations. The returned symbol table is the input's.
Curve present_pants(const TropInput& pants, const Valuation& cutoff);
Curve present_lq(const TropInput& lq, const Valuation& cutoff);

} // namespace tfw
