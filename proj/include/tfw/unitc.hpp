#pragma once

#include <complex>
#include <optional>
#include <string>

#include "tfw/rational.hpp"

namespace tfw {

// Default comparison tolerance for numeric coefficients.
inline constexpr double kCoeffEps = 1e-9;

// A complex coefficient. Carries a high-precision numeric value and, when the
// value is a rational magnitude times a rational-in-pi phase, an exact tag
// mag * exp(i*pi*phase_pi) used for sign and holonomy bookkeeping. Sums that
// leave the tagged family drop to the numeric representation.
class Unit {
  public:
    Unit() : num_(0.0, 0.0) {}
    explicit Unit(std::complex<double> z) : num_(z) {}

    // mag * e^{i pi phase_pi}, mag >= 0 after normalization.
    static Unit exact(Rational mag, Rational phase_pi);
    static Unit one() { return exact(Rational(1), Rational(0)); }
    static Unit zero() { return exact(Rational(0), Rational(0)); }
    static Unit real(const Rational& q);

    bool has_exact() const { return exact_.has_value(); }
    const Rational& mag() const { return exact_->first; }
    const Rational& phase_pi() const { return exact_->second; }
    std::complex<double> approx() const { return num_; }

    bool is_zero(double eps = kCoeffEps) const;
    // Exact when both are tagged; numeric with tolerance eps otherwise.
    bool equals(const Unit& o, double eps = kCoeffEps) const;

    Unit operator+(const Unit& o) const;
    Unit operator-() const;
    Unit operator-(const Unit& o) const { return *this + (-o); }
    Unit operator*(const Unit& o) const;
    Unit inverse() const;
    Unit conj() const;
    Unit pow(long e) const;

    std::string str() const;

  private:
    std::complex<double> num_;
    std::optional<std::pair<Rational, Rational>> exact_; // (mag, phase/pi)
    void normalize();
};

} // namespace tfw
