#include "enzeros/algebraic_point.hpp"

#include "enzeros/errors.hpp"

#include <utility>

namespace enz {

QuadComplex::QuadComplex(Rational a, Rational b, int d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ != 1 && d_ != 3) throw Error("QuadComplex: d must be 1 or 3");
    a_.canonicalize();
    b_.canonicalize();
}

QuadComplex QuadComplex::zeta(Zeta z) {
    if (z == Zeta::I) return {Rational(0), Rational(1), 1};
    // rho = -1/2 + (sqrt(3)/2) i
    return {Rational(-1, 2), Rational(1, 2), 3};
}

QuadComplex QuadComplex::zeta_plus(Zeta z, long k) {
    QuadComplex v = zeta(z);
    return {v.a_ + k, v.b_, v.d_};
}

void QuadComplex::check_same_field(const QuadComplex& o) const {
    if (d_ != o.d_) throw Error("QuadComplex: mixed fields");
}

Rational QuadComplex::norm() const {
    return a_ * a_ + Rational(d_) * b_ * b_;
}

QuadComplex QuadComplex::operator+(const QuadComplex& o) const {
    check_same_field(o);
    return {a_ + o.a_, b_ + o.b_, d_};
}

QuadComplex QuadComplex::operator-(const QuadComplex& o) const {
    check_same_field(o);
    return {a_ - o.a_, b_ - o.b_, d_};
}

QuadComplex QuadComplex::operator*(const QuadComplex& o) const {
    // (a + b s i)(c + e s i) = (ac - d be) + (ae + bc) s i,  s = sqrt(d)
    check_same_field(o);
    return {a_ * o.a_ - Rational(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_};
}

QuadComplex QuadComplex::negate() const { return {-a_, -b_, d_}; }

QuadComplex QuadComplex::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw DivisorContainsZero("QuadComplex: inverse of zero");
    return {a_ / n, -b_ / n, d_};
}

QuadComplex QuadComplex::operator/(const QuadComplex& o) const {
    return *this * o.inverse();
}

QuadComplex QuadComplex::pow(unsigned e) const {
    QuadComplex acc{Rational(1), Rational(0), d_};
    QuadComplex base = *this;
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool QuadComplex::operator==(const QuadComplex& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

ComplexEnclosure QuadComplex::enclosure(unsigned bits) const {
    RealEnclosure re(a_, a_);
    if (d_ == 1 || is_zero_rational(b_)) {
        return {re, RealEnclosure(b_, b_)};
    }
    return {re, scale(b_, enclose_sqrt3(bits))};
}

std::string QuadComplex::to_string() const {
    std::string s = to_fraction_string(a_);
    s += " + ";
    s += to_fraction_string(b_);
    s += (d_ == 1) ? "*i" : "*sqrt(3)*i";
    return s;
}

QuadComplex point_value(const AlgebraicPoint& p) {
    if (p.form == PointForm::Base) return QuadComplex::zeta(p.base);
    return QuadComplex::zeta_plus(p.base, p.shift).inverse().negate();
}

ComplexEnclosure point_enclosure(const AlgebraicPoint& p, unsigned bits) {
    return point_value(p).enclosure(bits);
}

std::string describe(const AlgebraicPoint& p) {
    std::string z = (p.base == Zeta::I) ? "i" : "rho";
    if (p.form == PointForm::Base) return z;
    if (p.shift == 0) return "-1/(" + z + ")";
    std::string k = std::to_string(p.shift < 0 ? -p.shift : p.shift);
    return "-1/(" + z + (p.shift > 0 ? "+" : "-") + k + ")";
}

}  // namespace enz
