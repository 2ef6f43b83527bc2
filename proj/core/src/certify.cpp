#include "enzeros/certify.hpp"

#include "enzeros/errors.hpp"

#include <algorithm>
#include <utility>

namespace enz {

namespace {

SeriesKind vanishing_control(int level) {
    switch (level) {
        case 2:
        case 5:
            return SeriesKind::E6;
        case 3:
        case 7:
            return SeriesKind::E4;
        default:
            throw UnsupportedLevel("certify: level " + std::to_string(level) +
                                   " is not one of 2, 3, 5, 7");
    }
}

unsigned control_exponent(SeriesKind control, const GradedMonomial& m) {
    return control == SeriesKind::E4 ? m.a : m.b;
}

AlgebraicPoint base_point(int level) {
    return AlgebraicPoint::at_base(
        vanishing_control(level) == SeriesKind::E6 ? Zeta::I : Zeta::Rho);
}

struct EtildeEvaluation {
    ComplexEnclosure value;
    std::optional<PointRelocation> relocation;
};

// Enclosure of the level series at the point: directly when its q lies
// in region, otherwise through the translation identity, dividing by
// the exact multiplier.
EtildeEvaluation etilde_at(int level, const AlgebraicPoint& p,
                           const EvalParams& params) {
    SeriesId id = SeriesId::etilde(level);
    try {
        return {evaluate_at(id, p, params), std::nullopt};
    } catch (const RegionViolation&) {
        PointRelocation rel = relocate(p, level);
        ComplexEnclosure at_target = evaluate_at(id, rel.target, params);
        ComplexEnclosure inverse = rel.multiplier.inverse().enclosure(params.bits);
        return {inverse * at_target, std::move(rel)};
    }
}

// Enclosure of the non-control generator at the point, always obtained
// by transporting a base-point evaluation with the exact automorphy
// factor; the base point's q is tiny, so the series there is sharp.
ComplexEnclosure noncontrol_at(int level, const AlgebraicPoint& p,
                               const EvalParams& params) {
    SeriesId id = vanishing_control(level) == SeriesKind::E6 ? SeriesId::e4()
                                                             : SeriesId::e6();
    ComplexEnclosure base_tau = point_enclosure(base_point(level), params.bits);
    ComplexEnclosure base_value = evaluate_at(id, base_tau, params);
    if (p.form == PointForm::Base) return base_value;
    return transport_level1(id, Mat2::s_tk(p.shift), base_value, base_tau);
}

EvalParams doubled(EvalParams params) {
    params.m *= 2;
    params.bits *= 2;
    params.exp_terms *= 2;
    return params;
}

constexpr int kEscalationRounds = 4;

}  // namespace

FactoredEquation build_factored(const RelationPoly& rel, SeriesKind control) {
    if (control != vanishing_control(rel.level)) {
        throw ControlMismatch(
            "build_factored: the level-" + std::to_string(rel.level) +
            " candidates sit on the vanishing locus of " +
            to_string(SeriesId{vanishing_control(rel.level), 0}) + ", not " +
            to_string(SeriesId{control, 0}));
    }
    std::vector<RelationTerm> surviving;
    surviving.push_back(RelationTerm{static_cast<unsigned>(rel.level) + 1,
                                     GradedMonomial{}, Rational(1)});
    for (const RelationTerm& t : rel.terms) {
        if (control_exponent(control, t.monomial) == 0)
            surviving.push_back(RelationTerm{t.etilde_power, t.monomial, -t.coeff});
    }
    unsigned factored_out = surviving.front().etilde_power;
    for (const RelationTerm& t : surviving)
        factored_out = std::min(factored_out, t.etilde_power);
    for (RelationTerm& t : surviving) t.etilde_power -= factored_out;
    std::sort(surviving.begin(), surviving.end(),
              [](const RelationTerm& x, const RelationTerm& y) {
                  return x.etilde_power > y.etilde_power;
              });
    return {rel.level, control, factored_out, std::move(surviving)};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero:
            return "ZERO";
        case Verdict::NonZero:
            return "NONZERO";
        case Verdict::Undecided:
            return "UNDECIDED";
    }
    throw Error("to_string: bad verdict value");
}

ComplexEnclosure evaluate_cofactor(const FactoredEquation& eq,
                                   const ComplexEnclosure& etilde,
                                   const ComplexEnclosure& noncontrol,
                                   unsigned bits) {
    ComplexEnclosure sum = ComplexEnclosure::exact(Rational(0), Rational(0));
    for (const RelationTerm& t : eq.cofactor) {
        if (control_exponent(eq.control, t.monomial) != 0)
            throw Error("evaluate_cofactor: cofactor term still contains the "
                        "control generator");
        // One of the exponents is zero, so this is the surviving one.
        unsigned generator_power = t.monomial.a + t.monomial.b;
        ComplexEnclosure term = integer_pow(etilde, t.etilde_power);
        if (generator_power != 0)
            term = term * integer_pow(noncontrol, generator_power);
        sum = (sum + scale(t.coeff, term)).round_outward(bits);
    }
    return sum;
}

Certificate certify_point(const FactoredEquation& eq, const AlgebraicPoint& p,
                          const EvalParams& params) {
    int level = eq.level;
    EvalParams round = params;
    std::optional<Certificate> undecided;
    for (int attempt = 0; attempt < kEscalationRounds; ++attempt) {
        if (attempt > 0) round = doubled(round);
        EtildeEvaluation ev = etilde_at(level, p, round);
        ComplexEnclosure noncontrol = noncontrol_at(level, p, round);
        ComplexEnclosure cofactor =
            evaluate_cofactor(eq, ev.value, noncontrol, round.bits);

        bool etilde_excludes = ev.value.excludes_zero();
        bool cofactor_excludes = cofactor.excludes_zero();
        if (etilde_excludes && cofactor_excludes) {
            // The collapsed relation makes the product exactly zero, so
            // sound enclosures can never exclude zero from both factors.
            throw Error("certify_point: both factors exclude zero at " +
                        describe(p) + "; an enclosure is unsound");
        }

        Certificate cert{p,        level, Verdict::Undecided, ev.value,
                         cofactor, round, ev.relocation,      ""};
        if (cofactor_excludes) {
            cert.verdict = Verdict::Zero;
            cert.narrative =
                "cofactor enclosure excludes zero, so the collapsed relation "
                "forces the series to vanish exactly";
            return cert;
        }
        if (etilde_excludes) {
            cert.verdict = Verdict::NonZero;
            cert.narrative = "series enclosure excludes zero";
            return cert;
        }
        undecided = std::move(cert);
    }
    undecided->narrative = "neither factor excluded zero after " +
                           std::to_string(kEscalationRounds) +
                           " escalation rounds";
    return *undecided;
}

Certificate certify_point(int level, const AlgebraicPoint& p,
                          const EvalParams& params) {
    CandidateSet candidates = candidate_zeros(level);
    if (std::find(candidates.points.begin(), candidates.points.end(), p) ==
        candidates.points.end()) {
        throw Error("certify_point: " + describe(p) + " is not a level-" +
                    std::to_string(level) + " candidate");
    }
    FactoredEquation eq =
        build_factored(discover_relation(level), candidates.control.kind);
    return certify_point(eq, p, params);
}

Report certify_all(int level, const EvalParams& params) {
    CandidateSet candidates = candidate_zeros(level);
    RelationPoly relation = discover_relation(level);
    VerifyResult verification =
        verify_relation(relation, sturm_order(level) + 20);
    if (!verification.ok) {
        throw Error("certify_all: rediscovered level-" + std::to_string(level) +
                    " relation failed re-verification");
    }
    Report report;
    report.level = level;
    report.verification = verification;
    report.discrepancies = relation_discrepancies(printed_relation(level), relation);
    report.factored = build_factored(relation, candidates.control.kind);
    report.relation = std::move(relation);
    for (const AlgebraicPoint& p : candidates.points) {
        report.certificates.push_back(certify_point(report.factored, p, params));
        if (report.certificates.back().verdict == Verdict::Zero)
            report.zeros.push_back(p);
    }
    return report;
}

bool constant_term_is_one(const QSeries& s) { return s.coeff(0) == 1; }

CuspCheck cusp_check(int level) {
    CuspCheck out;
    out.level = level;
    out.constant_term_is_one =
        constant_term_is_one(series_for(SeriesId::etilde(level), 0));
    const ComplexEnclosure samples[] = {
        ComplexEnclosure::exact(Rational(0), Rational(1)),
        ComplexEnclosure::exact(make_rational(1, 4), Rational(1)),
        ComplexEnclosure::exact(make_rational(-1, 3), make_rational(3, 2)),
    };
    bool all_contain_zero = true;
    for (const ComplexEnclosure& tau : samples)
        all_contain_zero =
            all_contain_zero && fricke_residual(level, tau).contains_zero();
    out.fricke_residuals_vanish = all_contain_zero;
    return out;
}

Rational second_factor_separation(const Report& report) {
    std::optional<Rational> least;
    for (const Certificate& cert : report.certificates) {
        if (cert.verdict != Verdict::Zero) continue;
        Rational low = cert.cofactor.abs_lower(cert.params.bits);
        if (!least || low < *least) least = low;
    }
    if (!least) {
        throw Error("second_factor_separation: level-" +
                    std::to_string(report.level) +
                    " report holds no ZERO verdict");
    }
    return *least;
}

Rational second_factor_separation(int level, const EvalParams& params) {
    return second_factor_separation(certify_all(level, params));
}

}  // namespace enz
