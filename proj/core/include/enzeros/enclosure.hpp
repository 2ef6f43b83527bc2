#pragma once

/*
 * Rectangle enclosures with exact rational endpoints.
 *
 * Soundness contract: every operation returns an enclosure containing all
 * pointwise results of the operation over its input enclosures.  Endpoint
 * arithmetic is exact, so there is no rounding step anywhere unless a
 * caller explicitly asks for outward rounding to dyadic endpoints (used to
 * keep denominators bounded in long computations).
 */

#include "enzeros/rational.hpp"

#include <string>

namespace enz {

struct RealEnclosure {
    Rational lo;
    Rational hi;

    RealEnclosure() : lo(0), hi(0) {}
    explicit RealEnclosure(const Rational& exact) : lo(exact), hi(exact) {}
    RealEnclosure(Rational lo_, Rational hi_);

    static RealEnclosure exact(const Rational& v) { return RealEnclosure(v); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool excludes_zero() const { return !contains_zero(); }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    // max |x| over the interval.
    Rational sup_abs() const;
    // min |x| over the interval (0 if the interval straddles 0).
    Rational inf_abs() const;

    bool intersects(const RealEnclosure& other) const {
        return lo <= other.hi && other.lo <= hi;
    }
    bool contains_interval(const RealEnclosure& inner) const {
        return lo <= inner.lo && inner.hi <= hi;
    }

    RealEnclosure round_outward(unsigned bits) const {
        return RealEnclosure(floor_to_dyadic(lo, bits), ceil_to_dyadic(hi, bits));
    }

    // Interval widened by [-radius, radius].
    RealEnclosure inflate(const Rational& radius) const;
};

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator-(const RealEnclosure& a);
RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b);
// Throws DivisorContainsZero if 0 is in b.
RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b);

RealEnclosure scale(const Rational& c, const RealEnclosure& a);
// x^e with dependency-aware tightening for even e ([-1,1]^2 = [0,1]).
RealEnclosure integer_pow(const RealEnclosure& a, unsigned long e);
RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b);

struct ComplexEnclosure {
    RealEnclosure re;
    RealEnclosure im;

    ComplexEnclosure() = default;
    ComplexEnclosure(RealEnclosure re_, RealEnclosure im_)
        : re(std::move(re_)), im(std::move(im_)) {}

    static ComplexEnclosure exact(const Rational& x, const Rational& y) {
        return {RealEnclosure(x), RealEnclosure(y)};
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool excludes_zero() const { return !contains_zero(); }
    Rational max_width() const;

    // |Re z| + |Im z| upper bound over the rectangle; exact rational.
    Rational sup_abs_components() const { return re.sup_abs() + im.sup_abs(); }
    // Upper bound on |z| over the rectangle (dyadic, outward by 2^-bits).
    Rational abs_upper(unsigned bits) const;
    // Lower bound on |z| over the rectangle: sqrt(inf|Re|^2 + inf|Im|^2)
    // rounded down.  Zero when the rectangle contains 0.
    Rational abs_lower(unsigned bits) const;

    bool intersects(const ComplexEnclosure& other) const {
        return re.intersects(other.re) && im.intersects(other.im);
    }
    bool contains_rectangle(const ComplexEnclosure& inner) const {
        return re.contains_interval(inner.re) && im.contains_interval(inner.im);
    }

    ComplexEnclosure round_outward(unsigned bits) const {
        return {re.round_outward(bits), im.round_outward(bits)};
    }
    // Both components widened by [-radius, radius].
    ComplexEnclosure inflate(const Rational& radius) const {
        return {re.inflate(radius), im.inflate(radius)};
    }
    ComplexEnclosure conj() const { return {re, -im}; }
};

ComplexEnclosure operator+(const ComplexEnclosure& a, const ComplexEnclosure& b);
ComplexEnclosure operator-(const ComplexEnclosure& a, const ComplexEnclosure& b);
ComplexEnclosure operator-(const ComplexEnclosure& a);
ComplexEnclosure operator*(const ComplexEnclosure& a, const ComplexEnclosure& b);
// Throws DivisorContainsZero if |b|^2 cannot be bounded away from 0.
ComplexEnclosure operator/(const ComplexEnclosure& a, const ComplexEnclosure& b);

ComplexEnclosure scale(const Rational& c, const ComplexEnclosure& a);
ComplexEnclosure scale(const RealEnclosure& c, const ComplexEnclosure& a);
ComplexEnclosure integer_pow(const ComplexEnclosure& a, unsigned long e);

// |z|^2 = Re^2 + Im^2 as a real interval (even-power tightened).
RealEnclosure norm_squared(const ComplexEnclosure& z);

std::string to_string(const RealEnclosure& a, unsigned digits = 12);
std::string to_string(const ComplexEnclosure& a, unsigned digits = 12);

}  // namespace enz
