#include "enzeros/graded.hpp"

#include "enzeros/errors.hpp"

#include <algorithm>
#include <utility>

namespace enz {

std::vector<GradedMonomial> monomial_basis(unsigned weight) {
    if (weight % 2 != 0) throw Error("monomial_basis: weight must be even");
    std::vector<GradedMonomial> out;
    // descending a: start from the largest multiple of 4 not exceeding weight
    for (unsigned a = weight / 4 + 1; a-- > 0;) {
        unsigned rest = weight - 4 * a;
        if (rest % 6 == 0) out.push_back({a, rest / 6});
    }
    return out;
}

unsigned sturm_order(int level) {
    SeriesId::etilde(level);  // validates
    unsigned k = 2 * static_cast<unsigned>(level + 1);
    unsigned index = static_cast<unsigned>(level + 1);
    return (k * index + 11) / 12;
}

Rational coefficient_sum(const RelationPoly& rel) {
    Rational s(0);
    for (const auto& t : rel.terms) s += t.coeff;
    return s;
}

QSeries monomial_series(const GradedMonomial& m, unsigned order) {
    QSeries out = pow(series_for(SeriesId::e4(), order), m.a);
    if (m.b > 0) out = mul(out, pow(series_for(SeriesId::e6(), order), m.b));
    return out;
}

namespace {

// All (etilde power, monomial) pairs of total weight 2(level+1) with
// etilde power <= level - 1, in ascending power then descending a.
std::vector<std::pair<unsigned, GradedMonomial>> relation_unknowns(int level) {
    unsigned total = 2 * static_cast<unsigned>(level + 1);
    std::vector<std::pair<unsigned, GradedMonomial>> out;
    for (unsigned i = 0; i + 2 <= total && i <= static_cast<unsigned>(level) - 1; ++i)
        for (const GradedMonomial& m : monomial_basis(total - 2 * i))
            out.emplace_back(i, m);
    return out;
}

QSeries term_series(int level, unsigned power, const GradedMonomial& m,
                    unsigned order) {
    QSeries s = monomial_series(m, order);
    if (power > 0)
        s = mul(s, pow(series_for(SeriesId::etilde(level), order), power));
    return s;
}

}  // namespace

VerifyResult verify_relation(const RelationPoly& rel, unsigned order) {
    VerifyResult res;
    res.order_below_sturm = order < sturm_order(rel.level);
    unsigned lead = static_cast<unsigned>(rel.level) + 1;
    QSeries lhs = pow(series_for(SeriesId::etilde(rel.level), order), lead);
    QSeries rhs;
    rhs.coeffs.assign(order + 1, Rational(0));
    for (const auto& t : rel.terms)
        rhs = add(rhs, scale(t.coeff, term_series(rel.level, t.etilde_power,
                                                  t.monomial, order)));
    for (unsigned n = 0; n <= order; ++n) {
        if (lhs.coeff(n) != rhs.coeff(n)) {
            res.ok = false;
            res.mismatch_exponent = n;
            res.lhs_coeff = lhs.coeff(n);
            res.rhs_coeff = rhs.coeff(n);
            return res;
        }
    }
    res.ok = true;
    return res;
}

LinearSolveResult exact_linear_solve(std::vector<std::vector<Rational>> matrix,
                                     std::vector<Rational> rhs) {
    const size_t rows = matrix.size();
    if (rhs.size() != rows) throw Error("exact_linear_solve: shape mismatch");
    const size_t cols = rows == 0 ? 0 : matrix[0].size();
    for (const auto& r : matrix)
        if (r.size() != cols) throw Error("exact_linear_solve: ragged matrix");

    std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r)
            if (sgn(matrix[r][c]) != 0) { p = r; break; }
        if (p == SIZE_MAX) continue;
        std::swap(matrix[rank], matrix[p]);
        std::swap(rhs[rank], rhs[p]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(matrix[r][c]) == 0) continue;
            Rational f = matrix[r][c] / matrix[rank][c];
            for (size_t cc = c; cc < cols; ++cc)
                matrix[r][cc] -= f * matrix[rank][cc];
            rhs[r] -= f * rhs[rank];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }

    LinearSolveResult res;
    for (size_t r = rank; r < rows; ++r) {
        if (sgn(rhs[r]) != 0) {
            res.status = LinearSolveResult::Status::Inconsistent;
            return res;
        }
    }
    if (rank < cols) {
        res.status = LinearSolveResult::Status::Underdetermined;
        return res;
    }
    res.status = LinearSolveResult::Status::Unique;
    res.solution.assign(cols, Rational(0));
    for (size_t c = 0; c < cols; ++c) {
        size_t r = pivot_of_col[c];
        res.solution[c] = rhs[r] / matrix[r][c];
    }
    return res;
}

RelationPoly discover_relation(int level, unsigned order) {
    auto unknowns = relation_unknowns(level);
    unsigned lead = static_cast<unsigned>(level) + 1;
    QSeries target = pow(series_for(SeriesId::etilde(level), order), lead);

    std::vector<std::vector<Rational>> matrix(order + 1);
    std::vector<Rational> rhs(order + 1);
    std::vector<QSeries> columns;
    columns.reserve(unknowns.size());
    for (const auto& [power, m] : unknowns)
        columns.push_back(term_series(level, power, m, order));
    for (unsigned n = 0; n <= order; ++n) {
        matrix[n].resize(unknowns.size());
        for (size_t u = 0; u < unknowns.size(); ++u)
            matrix[n][u] = columns[u].coeff(n);
        rhs[n] = target.coeff(n);
    }

    LinearSolveResult sol = exact_linear_solve(std::move(matrix), std::move(rhs));
    if (sol.status == LinearSolveResult::Status::Inconsistent)
        throw NoRelation("no relation at level " + std::to_string(level) +
                         ", order " + std::to_string(order));
    if (sol.status == LinearSolveResult::Status::Underdetermined)
        throw NotUnique("relation underdetermined at level " +
                        std::to_string(level) + ", order " +
                        std::to_string(order));

    RelationPoly rel;
    rel.level = level;
    for (size_t u = 0; u < unknowns.size(); ++u) {
        if (sgn(sol.solution[u]) == 0) continue;
        rel.terms.push_back({unknowns[u].first, unknowns[u].second, sol.solution[u]});
    }
    return rel;
}

RelationPoly discover_relation(int level) {
    return discover_relation(level, sturm_order(level) + 20);
}

RelationPoly printed_relation(int level) {
    auto q = [](long n, long d) { return make_rational(Int(n), Int(d)); };
    switch (level) {
        case 2:
            return {2,
                    {{0, {0, 1}, q(1, 4)},
                     {1, {1, 0}, q(3, 4)}}};
        case 3:
            return {3,
                    {{0, {2, 0}, q(1, 27)},
                     {1, {0, 1}, q(8, 27)},
                     {2, {1, 0}, q(2, 3)}}};
        case 5:
            return {5,
                    {{0, {0, 2}, q(1, 3125)},
                     {1, {1, 1}, q(24, 3125)},
                     {2, {2, 0}, q(9, 125)},
                     {3, {0, 1}, q(8, 25)},
                     {4, {1, 0}, q(3, 5)}}};
        case 7:
            return {7,
                    {{0, {4, 0}, q(1, 823543)},
                     {1, {2, 1}, q(48, 823543)},
                     {2, {0, 2}, q(64, 64827)},
                     {2, {3, 0}, q(92, 453789)},
                     {3, {1, 1}, q(32, 2401)},
                     {4, {2, 0}, q(30, 2401)},
                     {5, {0, 1}, q(16, 49)},
                     {6, {1, 0}, q(4, 7)}}};
        default:
            throw UnsupportedLevel("no published relation for level " +
                                   std::to_string(level));
    }
}

std::vector<RelationDiscrepancy> relation_discrepancies(
    const RelationPoly& printed, const RelationPoly& discovered) {
    auto coeff_in = [](const RelationPoly& rel, unsigned power,
                       const GradedMonomial& m) {
        for (const auto& t : rel.terms)
            if (t.etilde_power == power && t.monomial == m) return t.coeff;
        return Rational(0);
    };
    std::vector<RelationDiscrepancy> out;
    for (const auto& t : printed.terms) {
        Rational d = coeff_in(discovered, t.etilde_power, t.monomial);
        if (d != t.coeff) out.push_back({t, d});
    }
    for (const auto& t : discovered.terms) {
        bool in_printed = false;
        for (const auto& p : printed.terms)
            if (p.etilde_power == t.etilde_power && p.monomial == t.monomial)
                in_printed = true;
        if (!in_printed) out.push_back({{t.etilde_power, t.monomial, Rational(0)}, t.coeff});
    }
    return out;
}

}  // namespace enz
