#include "enzeros/certify.hpp"
#include "enzeros/errors.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

using namespace enz;

namespace {

Rational q(long n, long d) { return make_rational(Int(n), Int(d)); }

RelationTerm term(unsigned p, unsigned a, unsigned b, const Rational& c) {
    return RelationTerm{p, GradedMonomial{a, b}, c};
}

// 700-bit floating value of the series at an exact rational point,
// independent of all enclosure machinery.
oracle::Complex oracle_series(const SeriesId& id, const Rational& x,
                              const Rational& y, unsigned terms = 2500) {
    oracle::Complex nome = oracle::nome(oracle::Real(x), oracle::Real(y));
    const QSeries& s = series_for(id, terms);
    oracle::Complex sum{oracle::Real(1), oracle::Real(0)};
    oracle::Complex pw{oracle::Real(1), oracle::Real(0)};
    for (unsigned n = 1; n <= terms; ++n) {
        pw = pw * nome;
        if (sgn(s.coeff(n)) == 0) continue;
        oracle::Real c(s.coeff(n));
        sum = sum + oracle::Complex{pw.re * c, pw.im * c};
    }
    return sum;
}

std::vector<AlgebraicPoint> expected_zeros(int level) {
    switch (level) {
        case 2:
            return {AlgebraicPoint::inverted(Zeta::I, 1)};
        case 3:
            return {AlgebraicPoint::inverted(Zeta::Rho, 2)};
        case 5:
            return {AlgebraicPoint::inverted(Zeta::I, 2),
                    AlgebraicPoint::inverted(Zeta::I, 3)};
        default:
            return {AlgebraicPoint::inverted(Zeta::Rho, 3),
                    AlgebraicPoint::inverted(Zeta::Rho, 5)};
    }
}

}  // namespace

TEST_SUITE_BEGIN("certify");

TEST_CASE("factored equations have the published shape") {
    FactoredEquation f2 = build_factored(discover_relation(2), SeriesKind::E6);
    CHECK(f2.leading_power == 1);
    REQUIRE(f2.cofactor.size() == 2);
    CHECK(f2.cofactor[0] == term(2, 0, 0, Rational(1)));
    CHECK(f2.cofactor[1] == term(0, 1, 0, q(-3, 4)));

    FactoredEquation f3 = build_factored(discover_relation(3), SeriesKind::E4);
    CHECK(f3.leading_power == 1);
    REQUIRE(f3.cofactor.size() == 2);
    CHECK(f3.cofactor[0] == term(3, 0, 0, Rational(1)));
    CHECK(f3.cofactor[1] == term(0, 0, 1, q(-8, 27)));

    FactoredEquation f5 = build_factored(discover_relation(5), SeriesKind::E6);
    CHECK(f5.leading_power == 2);
    REQUIRE(f5.cofactor.size() == 3);
    CHECK(f5.cofactor[0] == term(4, 0, 0, Rational(1)));
    CHECK(f5.cofactor[1] == term(2, 1, 0, q(-3, 5)));
    CHECK(f5.cofactor[2] == term(0, 2, 0, q(-9, 125)));

    FactoredEquation f7 = build_factored(discover_relation(7), SeriesKind::E4);
    CHECK(f7.leading_power == 2);
    REQUIRE(f7.cofactor.size() == 3);
    CHECK(f7.cofactor[0] == term(6, 0, 0, Rational(1)));
    CHECK(f7.cofactor[1] == term(3, 0, 1, q(-16, 49)));
    CHECK(f7.cofactor[2] == term(0, 0, 2, q(-64, 64827)));
}

TEST_CASE("factoring rejects the wrong control form") {
    CHECK_THROWS_AS(build_factored(discover_relation(2), SeriesKind::E4),
                    ControlMismatch);
    CHECK_THROWS_AS(build_factored(discover_relation(3), SeriesKind::E6),
                    ControlMismatch);
    CHECK_THROWS_AS(build_factored(discover_relation(5), SeriesKind::E2),
                    ControlMismatch);
}

TEST_CASE("factoring is degree-exact and reconstructs the relation") {
    for (int n : {2, 3, 5, 7}) {
        RelationPoly rel = discover_relation(n);
        SeriesKind control = (n == 2 || n == 5) ? SeriesKind::E6 : SeriesKind::E4;
        FactoredEquation eq = build_factored(rel, control);

        unsigned degree = 0;
        for (const RelationTerm& t : eq.cofactor)
            degree = std::max(degree, t.etilde_power);
        CHECK(eq.leading_power + degree == static_cast<unsigned>(n) + 1);

        // Undo the factoring: shift powers back up, move terms across the
        // equals sign, re-add the terms the control form killed.
        std::vector<RelationTerm> rebuilt;
        for (const RelationTerm& t : eq.cofactor) {
            unsigned full_power = t.etilde_power + eq.leading_power;
            if (full_power == static_cast<unsigned>(n) + 1) {
                CHECK(t.monomial == GradedMonomial{});
                CHECK(t.coeff == 1);
                continue;
            }
            rebuilt.push_back(RelationTerm{full_power, t.monomial, -t.coeff});
        }
        for (const RelationTerm& t : rel.terms) {
            unsigned ctrl =
                control == SeriesKind::E4 ? t.monomial.a : t.monomial.b;
            if (ctrl > 0) rebuilt.push_back(t);
        }
        auto key = [](const RelationTerm& t) {
            return std::tuple(t.etilde_power, t.monomial.a, t.monomial.b);
        };
        auto by_key = [&](const RelationTerm& x, const RelationTerm& y) {
            return key(x) < key(y);
        };
        std::sort(rebuilt.begin(), rebuilt.end(), by_key);
        std::vector<RelationTerm> original = rel.terms;
        std::sort(original.begin(), original.end(), by_key);
        CHECK(rebuilt == original);
    }
}

TEST_CASE("cofactor enclosure matches a floating reference at the base point") {
    // At i the level-2 equation collapses to Etilde * cofactor = 0 with
    // Etilde_2(i) nonzero, so the cofactor must be a tight zero; the
    // floating reference confirms both ingredient values.
    FactoredEquation eq = build_factored(discover_relation(2), SeriesKind::E6);
    EvalParams params;
    ComplexEnclosure etilde =
        evaluate_at(SeriesId::etilde(2), ComplexEnclosure::exact(Rational(0), Rational(1)), params);
    ComplexEnclosure e4 =
        evaluate_at(SeriesId::e4(), ComplexEnclosure::exact(Rational(0), Rational(1)), params);
    ComplexEnclosure cof = evaluate_cofactor(eq, etilde, e4, params.bits);
    CHECK(cof.contains_zero());
    CHECK(cof.max_width() < q(1, 1000000000));

    oracle::Complex t = oracle_series(SeriesId::etilde(2), Rational(0), Rational(1));
    oracle::Complex f = oracle_series(SeriesId::e4(), Rational(0), Rational(1));
    oracle::Complex ref = t * t - oracle::Complex{f.re * oracle::Real(q(3, 4)),
                                                  f.im * oracle::Real(q(3, 4))};
    CHECK(oracle::inside(cof, ref));
}

TEST_CASE("cofactor evaluation rejects control-bearing terms") {
    FactoredEquation eq = build_factored(discover_relation(2), SeriesKind::E6);
    eq.cofactor.push_back(term(1, 0, 1, Rational(1)));
    ComplexEnclosure one = ComplexEnclosure::exact(Rational(1), Rational(0));
    CHECK_THROWS_AS(evaluate_cofactor(eq, one, one, 64), Error);
}

TEST_CASE("verdict table") {
    std::map<int, std::vector<AlgebraicPoint>> zeros;
    for (int n : {2, 3, 5, 7}) {
        Report report = certify_all(n);
        CHECK(report.level == n);
        CHECK(report.verification.ok);
        CHECK(report.certificates.size() == static_cast<size_t>(n));
        zeros[n] = report.zeros;

        for (const Certificate& cert : report.certificates) {
            INFO("level ", n, " at ", describe(cert.point));
            CHECK(cert.verdict != Verdict::Undecided);
            if (cert.verdict == Verdict::Zero) {
                CHECK(cert.cofactor.excludes_zero());
                CHECK(cert.etilde.contains_zero());
            } else {
                CHECK(cert.etilde.excludes_zero());
                CHECK(cert.cofactor.contains_zero());
            }
        }
    }
    for (int n : {2, 3, 5, 7}) CHECK(zeros[n] == expected_zeros(n));
}

TEST_CASE("relocation engages exactly where the nome leaves the region") {
    Report report = certify_all(7);
    for (const Certificate& cert : report.certificates) {
        bool needs_relocation =
            cert.point == AlgebraicPoint::inverted(Zeta::Rho, 5) ||
            cert.point == AlgebraicPoint::inverted(Zeta::Rho, 6);
        CHECK(cert.relocation.has_value() == needs_relocation);
    }
    for (int n : {2, 3, 5}) {
        for (const Certificate& cert : certify_all(n).certificates)
            CHECK(!cert.relocation.has_value());
    }
}

TEST_CASE("level-7 report surfaces the printed-coefficient discrepancy") {
    Report report = certify_all(7);
    REQUIRE(report.discrepancies.size() == 1);
    const RelationDiscrepancy& d = report.discrepancies.front();
    CHECK(d.printed.etilde_power == 4);
    CHECK(d.printed.monomial == GradedMonomial{2, 0});
    CHECK(d.printed.coeff == q(30, 2401));
    CHECK(d.discovered_coeff == q(30, 343));

    for (int n : {2, 3, 5}) CHECK(certify_all(n).discrepancies.empty());
}

TEST_CASE("single-point certification matches the batch and checks candidacy") {
    Certificate at_i = certify_point(2, AlgebraicPoint::at_base(Zeta::I));
    CHECK(at_i.verdict == Verdict::NonZero);
    Certificate at_zero = certify_point(2, AlgebraicPoint::inverted(Zeta::I, 1));
    CHECK(at_zero.verdict == Verdict::Zero);
    Certificate deep7 = certify_point(7, AlgebraicPoint::inverted(Zeta::Rho, 5));
    CHECK(deep7.verdict == Verdict::Zero);
    CHECK(deep7.relocation.has_value());

    CHECK_THROWS_AS(certify_point(2, AlgebraicPoint::inverted(Zeta::I, 4)), Error);
    CHECK_THROWS_AS(certify_point(2, AlgebraicPoint::at_base(Zeta::Rho)), Error);
    CHECK_THROWS_AS(certify_point(9, AlgebraicPoint::at_base(Zeta::I)),
                    UnsupportedLevel);
}

TEST_CASE("ZERO verdicts are stable under refinement and shrink toward zero") {
    EvalParams coarse;
    EvalParams fine;
    fine.m = 160;
    fine.bits = 320;
    fine.exp_terms = 96;
    for (int n : {2, 3, 5, 7}) {
        for (const AlgebraicPoint& p : expected_zeros(n)) {
            Certificate a = certify_point(n, p, coarse);
            Certificate b = certify_point(n, p, fine);
            CHECK(a.verdict == Verdict::Zero);
            CHECK(b.verdict == Verdict::Zero);
            CHECK(b.etilde.max_width() <= a.etilde.max_width());
            CHECK(b.etilde.sup_abs_components() <= a.etilde.sup_abs_components());
            CHECK(b.etilde.contains_zero());
        }
    }
}

TEST_CASE("escalation recovers from a hopeless starting precision") {
    // The relocated level-7 point keeps |q| near 0.65, where a four-term
    // partial sum leaves a tail in the hundreds; doubling must kick in.
    EvalParams tiny;
    tiny.m = 4;
    tiny.bits = 64;
    tiny.exp_terms = 32;
    Certificate cert = certify_point(7, AlgebraicPoint::inverted(Zeta::Rho, 5), tiny);
    CHECK(cert.verdict == Verdict::Zero);
    CHECK(cert.relocation.has_value());
    CHECK(cert.params.m > 4);  // at least one doubling was needed
}

TEST_CASE("an identically zero cofactor exhausts escalation as UNDECIDED") {
    FactoredEquation eq = build_factored(discover_relation(2), SeriesKind::E6);
    eq.cofactor = {term(0, 0, 0, Rational(0))};
    Certificate cert = certify_point(eq, AlgebraicPoint::inverted(Zeta::I, 1));
    CHECK(cert.verdict == Verdict::Undecided);
    CHECK(cert.params.m == 64 * 8);  // four rounds, three doublings
    CHECK(!cert.narrative.empty());
}

TEST_CASE("base values of the surviving generators clear 1") {
    EvalParams params;
    ComplexEnclosure e4_i = evaluate_at(
        SeriesId::e4(), ComplexEnclosure::exact(Rational(0), Rational(1)), params);
    CHECK(e4_i.re.lo > 1);
    CHECK(e4_i.im.contains_zero());

    ComplexEnclosure rho = point_enclosure(AlgebraicPoint::at_base(Zeta::Rho),
                                           params.bits);
    ComplexEnclosure e6_rho = evaluate_at(SeriesId::e6(), rho, params);
    CHECK(e6_rho.re.lo > 1);
    CHECK(e6_rho.im.contains_zero());
}

TEST_CASE("transported control enclosures keep containing zero") {
    // Consistency only: the certifier never uses these numerically.
    EvalParams params;
    ComplexEnclosure tau_i = ComplexEnclosure::exact(Rational(0), Rational(1));
    ComplexEnclosure e6_i = evaluate_at(SeriesId::e6(), tau_i, params);
    CHECK(e6_i.contains_zero());
    ComplexEnclosure moved =
        transport_level1(SeriesId::e6(), Mat2::s_tk(1), e6_i, tau_i);
    CHECK(moved.contains_zero());

    ComplexEnclosure rho = point_enclosure(AlgebraicPoint::at_base(Zeta::Rho),
                                           params.bits);
    ComplexEnclosure e4_rho = evaluate_at(SeriesId::e4(), rho, params);
    CHECK(e4_rho.contains_zero());
    ComplexEnclosure moved4 =
        transport_level1(SeriesId::e4(), Mat2::s_tk(2), e4_rho, rho);
    CHECK(moved4.contains_zero());
}

TEST_CASE("cusp checks") {
    for (int n : {2, 3, 5, 7}) {
        CuspCheck check = cusp_check(n);
        CHECK(check.level == n);
        CHECK(check.constant_term_is_one);
        CHECK(check.fricke_residuals_vanish);
        CHECK(check.ok());
    }

    QSeries mutated({Rational(2), Rational(5)});
    CHECK(!constant_term_is_one(mutated));
    CHECK(constant_term_is_one(series_for(SeriesId::etilde(2), 3)));
}

TEST_CASE("separation margins exceed the hundredth threshold") {
    for (int n : {2, 3, 5, 7}) {
        Report report = certify_all(n);
        Rational margin = second_factor_separation(report);
        CHECK(margin > q(1, 100));

        // The margin is the least certified |cofactor| infimum over the
        // ZERO verdicts.
        std::optional<Rational> least;
        for (const Certificate& cert : report.certificates) {
            if (cert.verdict != Verdict::Zero) continue;
            Rational low = cert.cofactor.abs_lower(cert.params.bits);
            CHECK(low > 0);
            if (!least || low < *least) least = low;
        }
        REQUIRE(least.has_value());
        CHECK(margin == *least);

        CHECK(second_factor_separation(n) == margin);
    }

    Report empty;
    empty.level = 2;
    CHECK_THROWS_AS(second_factor_separation(empty), Error);
}

TEST_SUITE_END();
