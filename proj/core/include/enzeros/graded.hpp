#pragma once

/*
 * The weight-graded polynomial algebra generated by E4 and E6, and the
 * integral relation satisfied by each level series over it:
 *
 *   Etilde_N^{N+1} = sum_i a_i * Etilde_N^i * (E4^a E6^b monomial),
 *
 * every term of total weight 2(N+1).  Relations are both verified
 * coefficientwise to any order and rediscovered from scratch by exact
 * rational linear algebra; the discovered coefficients are the ones the
 * rest of the pipeline trusts.
 */

#include "enzeros/qseries.hpp"

#include <optional>
#include <vector>

namespace enz {

struct GradedMonomial {
    unsigned a = 0;  // exponent of E4
    unsigned b = 0;  // exponent of E6

    unsigned weight() const { return 4 * a + 6 * b; }
    bool operator==(const GradedMonomial&) const = default;
};

struct RelationTerm {
    unsigned etilde_power = 0;
    GradedMonomial monomial;
    Rational coeff;

    bool operator==(const RelationTerm&) const = default;
};

// Right-hand side of the integral relation; the leading Etilde^{N+1}
// on the left is implicit with coefficient 1.
struct RelationPoly {
    int level = 0;
    std::vector<RelationTerm> terms;

    bool operator==(const RelationPoly&) const = default;
};

// All (a, b) with 4a + 6b = weight, in descending a.
std::vector<GradedMonomial> monomial_basis(unsigned weight);

// Number of initial q-coefficients that pin down a weight-2(N+1) form
// on the level-N group: ceil(2(N+1) * (N+1) / 12).
unsigned sturm_order(int level);

// All relation coefficients summed; 1 for a valid relation since every
// constituent series has constant term 1.
Rational coefficient_sum(const RelationPoly& rel);

// Expands the E4^a E6^b part of a term to `order`.
QSeries monomial_series(const GradedMonomial& m, unsigned order);

struct VerifyResult {
    bool ok = false;
    bool order_below_sturm = false;
    // Set when ok is false: first differing exponent and the two values.
    unsigned mismatch_exponent = 0;
    Rational lhs_coeff;
    Rational rhs_coeff;
};

VerifyResult verify_relation(const RelationPoly& rel, unsigned order);

struct LinearSolveResult {
    enum class Status { Unique, Inconsistent, Underdetermined };
    Status status = Status::Unique;
    std::vector<Rational> solution;  // populated only for Unique
};

// Gaussian elimination with exact rational pivoting.
LinearSolveResult exact_linear_solve(std::vector<std::vector<Rational>> matrix,
                                     std::vector<Rational> rhs);

// Sets up and solves the coefficient-matching system for the level
// relation, matching q^0..q^order.  Zero terms are dropped from the
// result.  Throws NoRelation / NotUnique on a failed solve.
RelationPoly discover_relation(int level, unsigned order);
RelationPoly discover_relation(int level);  // order = sturm_order + 20

// The relation coefficients exactly as published, as reference data.
// The level-7 entry does not pass verification; discover_relation is
// authoritative and the difference is surfaced by relation_discrepancies.
RelationPoly printed_relation(int level);

// Where the discovered relation differs from the printed one: list of
// (printed term, discovered coefficient) pairs.
struct RelationDiscrepancy {
    RelationTerm printed;
    Rational discovered_coeff;
};
std::vector<RelationDiscrepancy> relation_discrepancies(const RelationPoly& printed,
                                                        const RelationPoly& discovered);

}  // namespace enz
