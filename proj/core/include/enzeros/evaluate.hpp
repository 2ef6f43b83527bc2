#pragma once

/*
 * Rigorous series evaluation: q = e^{2 pi i tau} as a rectangle, exact
 * partial sums of the q-expansion in rectangle arithmetic, and a proven
 * majorant for everything beyond the partial sum.  Values of the
 * weight-4/6 generators move between points by the exact automorphy
 * factor (c tau + d)^k, so they only ever need to be evaluated where
 * the series converges comfortably.
 */

#include "enzeros/algebraic_point.hpp"
#include "enzeros/enclosure.hpp"
#include "enzeros/mat2.hpp"
#include "enzeros/qseries.hpp"

namespace enz {

// Asserts |a_n| <= C * n^p for every coefficient a_n, n >= 1.
struct CoefficientBound {
    Rational C;
    unsigned p = 0;
};

struct EvalParams {
    unsigned m = 64;          // retained q-powers
    unsigned bits = 128;      // enclosure rounding precision
    unsigned exp_terms = 64;  // Taylor length for the nome
    Rational r_max = make_rational(9, 10);

    EvalParams() = default;
};

CoefficientBound coefficient_bound(const SeriesId& id);

// Upper bound on sum_{n > m} C n^p r^n for 0 <= r < 1.  Equals the
// geometric majorant C (m+1)^p r^{m+1} / (1 - theta) with
// theta = r ((m+2)/(m+1))^p whenever theta < 1; for larger theta the
// leading terms are summed exactly until the ratio test bites.
Rational tail_bound(const CoefficientBound& bound, unsigned m, const Rational& r);

// q = e^{2 pi i tau} as a rectangle enclosure.
ComplexEnclosure nome_enclosure(const ComplexEnclosure& tau,
                                const EvalParams& params);

// sup(|Re q| + |Im q|): the convergence radius actually used.
Rational nome_radius(const ComplexEnclosure& q);

ComplexEnclosure evaluate_at(const SeriesId& id, const ComplexEnclosure& tau,
                             const EvalParams& params = {});
ComplexEnclosure evaluate_at(const SeriesId& id, const AlgebraicPoint& p,
                             const EvalParams& params = {});

// (c tau + d)^k * base_value: transports a weight-k (k = 4 for E4,
// 6 for E6) level-one value from tau to gamma tau.
ComplexEnclosure transport_level1(const SeriesId& id, const Mat2& gamma,
                                  const ComplexEnclosure& base_value,
                                  const ComplexEnclosure& tau);

}  // namespace enz
