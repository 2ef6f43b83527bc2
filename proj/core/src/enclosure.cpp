#include "enzeros/enclosure.hpp"

#include "enzeros/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace enz {

RealEnclosure::RealEnclosure(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw Error("RealEnclosure: lo > hi");
}

Rational RealEnclosure::sup_abs() const {
    return std::max(rational_abs(lo), rational_abs(hi));
}

Rational RealEnclosure::inf_abs() const {
    if (contains_zero()) return Rational(0);
    return std::min(rational_abs(lo), rational_abs(hi));
}

RealEnclosure RealEnclosure::inflate(const Rational& radius) const {
    if (sgn(radius) < 0) throw Error("inflate: negative radius");
    return RealEnclosure(lo - radius, hi + radius);
}

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
    return RealEnclosure(a.lo + b.lo, a.hi + b.hi);
}

RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
    return RealEnclosure(a.lo - b.hi, a.hi - b.lo);
}

RealEnclosure operator-(const RealEnclosure& a) {
    return RealEnclosure(-a.hi, -a.lo);
}

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
    Rational p1 = a.lo * b.lo;
    Rational p2 = a.lo * b.hi;
    Rational p3 = a.hi * b.lo;
    Rational p4 = a.hi * b.hi;
    return RealEnclosure(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)));
}

RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
    if (b.contains_zero())
        throw DivisorContainsZero("real interval division by an interval containing 0");
    Rational q1 = a.lo / b.lo;
    Rational q2 = a.lo / b.hi;
    Rational q3 = a.hi / b.lo;
    Rational q4 = a.hi / b.hi;
    return RealEnclosure(std::min(std::min(q1, q2), std::min(q3, q4)),
                         std::max(std::max(q1, q2), std::max(q3, q4)));
}

RealEnclosure scale(const Rational& c, const RealEnclosure& a) {
    if (sgn(c) >= 0) return RealEnclosure(c * a.lo, c * a.hi);
    return RealEnclosure(c * a.hi, c * a.lo);
}

RealEnclosure integer_pow(const RealEnclosure& a, unsigned long e) {
    if (e == 0) return RealEnclosure(Rational(1));
    if (e % 2 == 1) {
        // Odd powers are monotone.
        return RealEnclosure(rational_pow(a.lo, e), rational_pow(a.hi, e));
    }
    Rational m = a.sup_abs();
    if (a.contains_zero()) return RealEnclosure(Rational(0), rational_pow(m, e));
    return RealEnclosure(rational_pow(a.inf_abs(), e), rational_pow(m, e));
}

RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b) {
    return RealEnclosure(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Rational ComplexEnclosure::max_width() const {
    return std::max(re.width(), im.width());
}

Rational ComplexEnclosure::abs_upper(unsigned bits) const {
    Rational m2 = rational_pow(re.sup_abs(), 2) + rational_pow(im.sup_abs(), 2);
    return sqrt_upper(m2, bits);
}

Rational ComplexEnclosure::abs_lower(unsigned bits) const {
    Rational m2 = rational_pow(re.inf_abs(), 2) + rational_pow(im.inf_abs(), 2);
    return sqrt_lower(m2, bits);
}

ComplexEnclosure operator+(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    return {a.re + b.re, a.im + b.im};
}

ComplexEnclosure operator-(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    return {a.re - b.re, a.im - b.im};
}

ComplexEnclosure operator-(const ComplexEnclosure& a) {
    return {-a.re, -a.im};
}

ComplexEnclosure operator*(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexEnclosure operator/(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    RealEnclosure den = norm_squared(b);
    if (den.contains_zero())
        throw DivisorContainsZero("complex division: |denominator|^2 contains 0");
    ComplexEnclosure num = a * b.conj();
    return {num.re / den, num.im / den};
}

ComplexEnclosure scale(const Rational& c, const ComplexEnclosure& a) {
    return {scale(c, a.re), scale(c, a.im)};
}

ComplexEnclosure scale(const RealEnclosure& c, const ComplexEnclosure& a) {
    return {c * a.re, c * a.im};
}

ComplexEnclosure integer_pow(const ComplexEnclosure& a, unsigned long e) {
    ComplexEnclosure result = ComplexEnclosure::exact(1, 0);
    ComplexEnclosure base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

RealEnclosure norm_squared(const ComplexEnclosure& z) {
    return integer_pow(z.re, 2) + integer_pow(z.im, 2);
}

std::string to_string(const RealEnclosure& a, unsigned digits) {
    return "[" + decimal_lower(a.lo, digits) + ", " + decimal_upper(a.hi, digits) + "]";
}

std::string to_string(const ComplexEnclosure& a, unsigned digits) {
    return to_string(a.re, digits) + " + " + to_string(a.im, digits) + "*i";
}

}  // namespace enz
