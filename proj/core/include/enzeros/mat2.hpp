#pragma once

#include "enzeros/algebraic_point.hpp"
#include "enzeros/enclosure.hpp"

namespace enz {

// Integer 2x2 matrix acting on the upper half plane by Mobius maps.
struct Mat2 {
    long a = 1, b = 0;
    long c = 0, d = 1;

    long det() const { return a * d - b * c; }

    static Mat2 identity() { return {}; }
    // S T^k = [[0, -1], [1, k]]: tau -> -1/(tau + k).
    static Mat2 s_tk(long k) { return {0, -1, 1, k}; }

    Mat2 compose(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    // (a*tau + b) / (c*tau + d), exactly in the field of tau.
    QuadComplex apply(const QuadComplex& tau) const {
        auto lift = [&](long v) {
            return QuadComplex(Rational(v), Rational(0), tau.d());
        };
        return (lift(a) * tau + lift(b)) / (lift(c) * tau + lift(d));
    }

    // c*tau + d, the automorphy factor base.
    ComplexEnclosure cocycle(const ComplexEnclosure& tau) const {
        return scale(Rational(c), tau) + ComplexEnclosure::exact(Rational(d), Rational(0));
    }

    bool operator==(const Mat2&) const = default;
};

}  // namespace enz
