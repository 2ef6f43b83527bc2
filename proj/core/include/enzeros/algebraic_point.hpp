#pragma once

/*
 * Symbolic candidate points and the exact arithmetic that supports them.
 *
 * Every point this library certifies has the form tau = zeta or
 * tau = -1/(zeta + k) with zeta in {i, rho}, rho = e^(2*pi*i/3).  Such
 * numbers, and every multiplier derived from them, live in Q(i) or
 * Q(rho): they can be written a + b*sqrt(d)*i with a, b rational and
 * d = 1 (zeta = i) or d = 3 (zeta = rho).  QuadComplex implements that
 * field exactly, so point coordinates and relocation multipliers carry
 * no rounding at all; enclosures are produced on demand, exactly for
 * d = 1 and via the sqrt(3) enclosure for d = 3.
 */

#include "enzeros/constants.hpp"
#include "enzeros/enclosure.hpp"

#include <string>

namespace enz {

enum class Zeta { I, Rho };
enum class PointForm { Base, Inverted };

// tau = zeta (Base) or tau = -1/(zeta + shift) (Inverted).
struct AlgebraicPoint {
    Zeta base = Zeta::I;
    long shift = 0;
    PointForm form = PointForm::Base;

    static AlgebraicPoint at_base(Zeta z) { return {z, 0, PointForm::Base}; }
    static AlgebraicPoint inverted(Zeta z, long k) { return {z, k, PointForm::Inverted}; }

    bool operator==(const AlgebraicPoint&) const = default;
};

// a + b*sqrt(d)*i with d in {1, 3}; closed under ring operations and
// division, which is what makes relocation multipliers exact.
class QuadComplex {
public:
    QuadComplex(Rational a, Rational b, int d);

    static QuadComplex zeta(Zeta z);
    // zeta + k as an element of the matching field.
    static QuadComplex zeta_plus(Zeta z, long k);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int d() const { return d_; }

    bool is_zero() const { return is_zero_rational(a_) && is_zero_rational(b_); }
    // a^2 + d b^2, exact.
    Rational norm() const;

    QuadComplex operator+(const QuadComplex& o) const;
    QuadComplex operator-(const QuadComplex& o) const;
    QuadComplex operator*(const QuadComplex& o) const;
    QuadComplex operator/(const QuadComplex& o) const;
    QuadComplex negate() const;
    QuadComplex inverse() const;
    QuadComplex pow(unsigned e) const;

    bool operator==(const QuadComplex& o) const;

    // Rectangle enclosure; zero-width for d = 1, sqrt(3)-tight for d = 3.
    ComplexEnclosure enclosure(unsigned bits) const;

    std::string to_string() const;

private:
    static bool is_zero_rational(const Rational& r) { return sgn(r) == 0; }
    void check_same_field(const QuadComplex& o) const;

    Rational a_;
    Rational b_;
    int d_;
};

// Exact coordinates of the point: tau = zeta or -1/(zeta + k).
QuadComplex point_value(const AlgebraicPoint& p);

// Sound enclosure of tau; exact (zero-width) for zeta = i.
ComplexEnclosure point_enclosure(const AlgebraicPoint& p, unsigned bits);

// "i", "rho", "-1/(i+2)", "-1/(rho-1)", ...
std::string describe(const AlgebraicPoint& p);

}  // namespace enz
