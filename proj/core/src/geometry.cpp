#include "enzeros/geometry.hpp"

#include "enzeros/errors.hpp"

namespace enz {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<CosetRep> coset_reps(int level) {
    if (!is_prime(level)) throw Error("coset_reps: level must be prime");
    std::vector<CosetRep> out;
    out.push_back({Mat2::identity()});
    for (int k = 0; k < level; ++k) out.push_back({Mat2::s_tk(k)});
    return out;
}

RegionStatus in_F_Gamma(const ComplexEnclosure& tau) {
    if (sgn(tau.im.lo) <= 0)
        throw NotUpperHalfPlane("in_F_Gamma needs Im > 0, got im >= " +
                                to_fraction_string(tau.im.lo));
    Rational half = make_rational(1, 2);
    RealEnclosure norm2 = norm_squared(tau);

    // Every point violates a condition: strictly left of -1/2, at or
    // right of 1/2, or strictly inside the unit circle.
    if (tau.re.hi < -half || tau.re.lo >= half || norm2.hi < Rational(1))
        return RegionStatus::Outside;
    // Every point satisfies all conditions.
    if (tau.re.lo >= -half && tau.re.hi < half && norm2.lo >= Rational(1))
        return RegionStatus::Inside;
    return RegionStatus::BoundaryUndecided;
}

CandidateSet candidate_zeros(int level) {
    SeriesId::etilde(level);  // validates
    CandidateSet set;
    set.level = level;
    bool i_type = (level == 2 || level == 5);
    set.control = i_type ? SeriesId::e6() : SeriesId::e4();
    Zeta z = i_type ? Zeta::I : Zeta::Rho;
    set.points.push_back(AlgebraicPoint::at_base(z));
    for (int k = 1; k < level; ++k)
        set.points.push_back(AlgebraicPoint::inverted(z, k));
    return set;
}

PointRelocation relocate(const AlgebraicPoint& p, int level) {
    SeriesId::etilde(level);
    if (p.form != PointForm::Inverted || p.shift < 0 || p.shift >= level)
        throw Error("relocate expects -1/(zeta+k) with 0 <= k < level");
    AlgebraicPoint target = AlgebraicPoint::inverted(p.base, p.shift - level);
    QuadComplex num = QuadComplex::zeta_plus(p.base, p.shift - level);
    QuadComplex den = QuadComplex::zeta_plus(p.base, p.shift);
    return {p, target, (num * num) / (den * den)};
}

ComplexEnclosure fricke_residual(int level, const ComplexEnclosure& tau,
                                 const EvalParams& params) {
    SeriesId id = SeriesId::etilde(level);
    // Evaluate at tau first so a shallow input reports its own region
    // violation rather than a failure at the flipped point.
    ComplexEnclosure right =
        scale(Rational(level), integer_pow(tau, 2) * evaluate_at(id, tau, params));
    ComplexEnclosure flipped =
        ComplexEnclosure::exact(Rational(-1), Rational(0)) /
        scale(Rational(level), tau);
    ComplexEnclosure left = evaluate_at(id, flipped, params);
    return left + right;
}

}  // namespace enz
