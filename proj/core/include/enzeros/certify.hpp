#pragma once

/*
 * The decision step.  Every candidate point is a place where the
 * controlling level-one generator (E6 for N = 2, 5; E4 for N = 3, 7)
 * vanishes exactly, so there the level relation collapses to
 *
 *     Etilde_N^leading_power * cofactor = 0      (exactly),
 *
 * with the cofactor a polynomial in Etilde_N whose coefficients involve
 * only the surviving generator.  A rectangle enclosure that keeps 0 out
 * of the cofactor therefore proves Etilde_N vanishes exactly at the
 * point; one that keeps 0 out of Etilde_N proves it does not.  Each
 * verdict ships with the enclosures that justify it.
 */

#include "enzeros/algebraic_point.hpp"
#include "enzeros/enclosure.hpp"
#include "enzeros/evaluate.hpp"
#include "enzeros/geometry.hpp"
#include "enzeros/graded.hpp"
#include "enzeros/qseries.hpp"
#include "enzeros/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enz {

// The level relation restricted to the vanishing locus of `control`,
// with the maximal Etilde power factored out.  Unlike RelationPoly the
// cofactor carries its unit-coefficient leading term explicitly, and
// everything sits on one side of the equation: at each candidate,
// Etilde^leading_power * sum(cofactor) = 0.
struct FactoredEquation {
    int level = 0;
    SeriesKind control = SeriesKind::E6;
    unsigned leading_power = 0;
    std::vector<RelationTerm> cofactor;  // descending etilde_power
};

// Drops every relation term containing the control generator, factors
// out the smallest surviving Etilde power.  Throws ControlMismatch when
// the control form is not the one vanishing at this level's candidates.
FactoredEquation build_factored(const RelationPoly& rel, SeriesKind control);

enum class Verdict { Zero, NonZero, Undecided };

// "ZERO", "NONZERO", "UNDECIDED".
std::string to_string(Verdict v);

struct Certificate {
    AlgebraicPoint point;
    int level = 0;
    Verdict verdict = Verdict::Undecided;
    ComplexEnclosure etilde;
    ComplexEnclosure cofactor;
    EvalParams params;  // the escalation round that settled the verdict
    std::optional<PointRelocation> relocation;
    std::string narrative;  // which exclusion fired, in words
};

// Cofactor polynomial as a rectangle, from enclosures of Etilde and of
// the non-control generator at the same point.  Throws Error if a
// cofactor term still contains the control form.
ComplexEnclosure evaluate_cofactor(const FactoredEquation& eq,
                                   const ComplexEnclosure& etilde,
                                   const ComplexEnclosure& noncontrol,
                                   unsigned bits);

// Decides one candidate.  Starts from `params` and doubles m, bits and
// exp_terms on each indecisive round, four rounds in all.  Relocation
// is applied automatically when the point's own q lies out of region.
// Throws Error if both factors exclude zero, which no sound enclosure
// can produce.
Certificate certify_point(int level, const AlgebraicPoint& p,
                          const EvalParams& params = {});
Certificate certify_point(const FactoredEquation& eq, const AlgebraicPoint& p,
                          const EvalParams& params = {});

struct Report {
    int level = 0;
    RelationPoly relation;  // discovered here, the coefficients trusted
    VerifyResult verification;
    std::vector<RelationDiscrepancy> discrepancies;  // vs printed_relation
    FactoredEquation factored;
    std::vector<Certificate> certificates;  // one per candidate, in order
    std::vector<AlgebraicPoint> zeros;      // the ZERO verdicts
};

// The full pipeline for one level: rediscover the relation, verify it
// beyond the determining order, factor it, certify every candidate.
Report certify_all(int level, const EvalParams& params = {});

struct CuspCheck {
    int level = 0;
    bool constant_term_is_one = false;
    bool fricke_residuals_vanish = false;

    bool ok() const { return constant_term_is_one && fricke_residuals_vanish; }
};

bool constant_term_is_one(const QSeries& s);

// Exact constant-term check (the value at the infinite cusp) plus the
// Fricke antisymmetry residual at three interior sample points, which
// carries the value at the other cusp back to a computable region.
CuspCheck cusp_check(int level);

// Smallest certified lower bound on |cofactor| over the report's ZERO
// verdicts: the margin by which the exclusions held.  Strictly positive
// whenever a ZERO verdict exists; throws Error when none does.
Rational second_factor_separation(const Report& report);
Rational second_factor_separation(int level, const EvalParams& params = {});

}  // namespace enz
