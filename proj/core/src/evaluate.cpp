#include "enzeros/evaluate.hpp"

#include "enzeros/constants.hpp"
#include "enzeros/errors.hpp"

namespace enz {

CoefficientBound coefficient_bound(const SeriesId& id) {
    switch (id.kind) {
        case SeriesKind::E2: return {Rational(24), 2};
        case SeriesKind::E4: return {Rational(240), 4};  // 240 sigma3(n) <= 240 n^4
        case SeriesKind::E6: return {Rational(504), 6};  // 504 sigma5(n) <= 504 n^6
        case SeriesKind::Etilde:
            // |a_n| <= (24/(N-1)) (N+1) sigma1(n) <= (24(N+1)/(N-1)) n^2
            return {make_rational(24 * (id.level + 1), Int(id.level - 1)), 2};
    }
    throw Error("coefficient_bound: bad SeriesId kind");
}

Rational tail_bound(const CoefficientBound& bound, unsigned m, const Rational& r) {
    if (sgn(r) < 0 || r >= 1)
        throw TailDiverges("tail bound needs 0 <= r < 1, got r = " +
                           to_fraction_string(r));
    if (sgn(r) == 0) return Rational(0);

    auto theta = [&](unsigned long k) -> Rational {
        return r * rational_pow(make_rational(Int(k) + 2, Int(k) + 1), bound.p);
    };
    auto majorant_term = [&](unsigned long k) -> Rational {
        return bound.C * rational_pow(Rational(Int(k)), bound.p) * rational_pow(r, k);
    };

    // theta(k) bounds every term ratio t_{n+1}/t_n for n > k, so the
    // tail from `first` is geometric once theta(first-1) < 1.  When the
    // stated ratio theta(m) is already < 1 this reduces to the plain
    // majorant C (m+1)^p r^{m+1} / (1 - theta(m)); otherwise leading
    // terms are summed exactly until the ratio drops to (1+r)/2.
    Rational safe_ratio = (Rational(1) + r) / 2;
    unsigned long first = m + 1;
    Rational exact_head(0);
    while (theta(first - 1) >= 1) {
        exact_head += majorant_term(first);
        ++first;
    }
    if (first > static_cast<unsigned long>(m) + 1) {
        while (theta(first - 1) > safe_ratio) {
            exact_head += majorant_term(first);
            ++first;
        }
    }
    return exact_head + majorant_term(first) / (Rational(1) - theta(first - 1));
}

ComplexEnclosure nome_enclosure(const ComplexEnclosure& tau,
                                const EvalParams& params) {
    RealEnclosure two_pi = scale(Rational(2), enclose_pi(params.bits));
    ComplexEnclosure i_tau(-tau.im, tau.re);
    return exp_enclosure(scale(two_pi, i_tau), params.exp_terms, params.bits);
}

Rational nome_radius(const ComplexEnclosure& q) {
    return q.sup_abs_components();
}

ComplexEnclosure evaluate_at(const SeriesId& id, const ComplexEnclosure& tau,
                             const EvalParams& params) {
    ComplexEnclosure q = nome_enclosure(tau, params);
    Rational r = nome_radius(q);
    if (r > params.r_max)
        throw RegionViolation("sup(|Re q| + |Im q|) = " + to_fraction_string(r) +
                              " exceeds r_max = " + to_fraction_string(params.r_max) +
                              "; transform the point first");

    const QSeries& s = series_for(id, params.m);
    ComplexEnclosure sum = ComplexEnclosure::exact(s.coeff(0), Rational(0));
    ComplexEnclosure pw = ComplexEnclosure::exact(Rational(1), Rational(0));
    for (unsigned n = 1; n <= params.m; ++n) {
        pw = (pw * q).round_outward(params.bits);
        if (sgn(s.coeff(n)) == 0) continue;
        sum = (sum + scale(s.coeff(n), pw)).round_outward(params.bits);
    }
    // The outward rounding keeps the endpoints dyadic; the raw tail
    // bound would otherwise leak its denominator into every consumer.
    return sum.inflate(tail_bound(coefficient_bound(id), params.m, r))
        .round_outward(params.bits);
}

ComplexEnclosure evaluate_at(const SeriesId& id, const AlgebraicPoint& p,
                             const EvalParams& params) {
    return evaluate_at(id, point_enclosure(p, params.bits), params);
}

ComplexEnclosure transport_level1(const SeriesId& id, const Mat2& gamma,
                                  const ComplexEnclosure& base_value,
                                  const ComplexEnclosure& tau) {
    unsigned k = 0;
    if (id == SeriesId::e4()) k = 4;
    else if (id == SeriesId::e6()) k = 6;
    else throw Error("transport_level1: only the weight-4/6 generators transport");
    if (gamma.det() != 1)
        throw Error("transport_level1: matrix must have determinant 1");
    return integer_pow(gamma.cocycle(tau), k) * base_value;
}

}  // namespace enz
