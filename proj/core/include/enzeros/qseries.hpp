#pragma once

/*
 * Truncated q-expansions with exact rational coefficients.
 *
 * A QSeries holds coefficients for q^0 .. q^order.  Ring operations
 * truncate to the minimum operand order, never silently beyond it.
 * The constructors build the weight-2/4/6 Eisenstein expansions and the
 * level-N combination (N*E2(N*tau) - E2(tau))/(N-1), whose coefficients
 * are 24/(N-1) * (sigma_1(n) - N*sigma_1(n/N)).
 */

#include "enzeros/rational.hpp"

#include <string>
#include <vector>

namespace enz {

enum class SeriesKind { E2, E4, E6, Etilde };

struct SeriesId {
    SeriesKind kind = SeriesKind::E2;
    int level = 0;  // meaningful only for Etilde

    static SeriesId e2() { return {SeriesKind::E2, 0}; }
    static SeriesId e4() { return {SeriesKind::E4, 0}; }
    static SeriesId e6() { return {SeriesKind::E6, 0}; }
    static SeriesId etilde(int n);  // throws UnsupportedLevel off {2,3,5,7}

    bool operator==(const SeriesId&) const = default;
    auto operator<=>(const SeriesId&) const = default;
};

std::string to_string(const SeriesId& id);
// Accepts "E2", "E4", "E6", "Etilde2", "Etilde3", "Etilde5", "Etilde7".
SeriesId parse_series_id(const std::string& name);

struct QSeries {
    std::vector<Rational> coeffs;  // coeffs[n] multiplies q^n

    QSeries() : coeffs(1, Rational(0)) {}
    explicit QSeries(std::vector<Rational> c);

    unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    const Rational& coeff(unsigned n) const { return coeffs.at(n); }

    bool operator==(const QSeries&) const = default;
};

// Sum of d^k over the divisors d of n.
Int sigma(unsigned k, unsigned long n);

QSeries series_E2(unsigned order);
QSeries series_E4(unsigned order);
QSeries series_E6(unsigned order);
QSeries series_Etilde(int level, unsigned order);

// Memoized dispatcher; cache is thread-safe.
const QSeries& series_for(const SeriesId& id, unsigned order);

QSeries add(const QSeries& a, const QSeries& b);
QSeries scale(const Rational& c, const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, unsigned e);
// q^n -> q^{N n}, truncated at the original order.
QSeries substitute_qN(const QSeries& a, unsigned n);

}  // namespace enz
