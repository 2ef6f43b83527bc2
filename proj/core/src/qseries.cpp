#include "enzeros/qseries.hpp"

#include "enzeros/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace enz {

SeriesId SeriesId::etilde(int n) {
    if (n != 2 && n != 3 && n != 5 && n != 7)
        throw UnsupportedLevel("level must be one of 2, 3, 5, 7; got " +
                               std::to_string(n));
    return {SeriesKind::Etilde, n};
}

std::string to_string(const SeriesId& id) {
    switch (id.kind) {
        case SeriesKind::E2: return "E2";
        case SeriesKind::E4: return "E4";
        case SeriesKind::E6: return "E6";
        case SeriesKind::Etilde: return "Etilde" + std::to_string(id.level);
    }
    throw Error("to_string: bad SeriesId kind");
}

SeriesId parse_series_id(const std::string& name) {
    if (name == "E2") return SeriesId::e2();
    if (name == "E4") return SeriesId::e4();
    if (name == "E6") return SeriesId::e6();
    if (name.rfind("Etilde", 0) == 0 && name.size() == 7)
        return SeriesId::etilde(name[6] - '0');
    throw Error("unknown series '" + name + "'");
}

QSeries::QSeries(std::vector<Rational> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw Error("QSeries: empty coefficient list");
}

Int sigma(unsigned k, unsigned long n) {
    if (n == 0) throw Error("sigma: n must be positive");
    Int total = 0;
    Int dk;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        total += dk;
        unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dk.get_mpz_t(), e, k);
            total += dk;
        }
    }
    return total;
}

namespace {

// 1 + c * sum_{n>=1} sigma_k(n) q^n
QSeries eisenstein(long c, unsigned k, unsigned order) {
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = 1;
    for (unsigned n = 1; n <= order; ++n) coeffs[n] = Rational(Int(c) * sigma(k, n));
    return QSeries(std::move(coeffs));
}

}  // namespace

QSeries series_E2(unsigned order) { return eisenstein(-24, 1, order); }
QSeries series_E4(unsigned order) { return eisenstein(240, 3, order); }
QSeries series_E6(unsigned order) { return eisenstein(-504, 5, order); }

QSeries series_Etilde(int level, unsigned order) {
    SeriesId::etilde(level);  // validates the level
    unsigned long n_ul = static_cast<unsigned long>(level);
    Rational factor = make_rational(24, Int(level - 1));
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = 1;
    for (unsigned n = 1; n <= order; ++n) {
        Int s = sigma(1, n);
        if (n % n_ul == 0) s -= Int(level) * sigma(1, n / n_ul);
        coeffs[n] = factor * Rational(s);
    }
    return QSeries(std::move(coeffs));
}

const QSeries& series_for(const SeriesId& id, unsigned order) {
    static std::mutex mu;
    static std::map<std::pair<SeriesId, unsigned>, QSeries> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(id, order);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    QSeries s = [&] {
        switch (id.kind) {
            case SeriesKind::E2: return series_E2(order);
            case SeriesKind::E4: return series_E4(order);
            case SeriesKind::E6: return series_E6(order);
            case SeriesKind::Etilde: return series_Etilde(id.level, order);
        }
        throw Error("series_for: bad SeriesId kind");
    }();
    return cache.emplace(key, std::move(s)).first->second;
}

QSeries add(const QSeries& a, const QSeries& b) {
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> coeffs(order + 1);
    for (unsigned n = 0; n <= order; ++n) coeffs[n] = a.coeffs[n] + b.coeffs[n];
    return QSeries(std::move(coeffs));
}

QSeries scale(const Rational& c, const QSeries& a) {
    std::vector<Rational> coeffs(a.coeffs.size());
    for (size_t n = 0; n < coeffs.size(); ++n) coeffs[n] = c * a.coeffs[n];
    return QSeries(std::move(coeffs));
}

QSeries mul(const QSeries& a, const QSeries& b) {
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> coeffs(order + 1, Rational(0));
    for (unsigned i = 0; i <= order; ++i) {
        if (sgn(a.coeffs[i]) == 0) continue;
        for (unsigned j = 0; i + j <= order; ++j)
            coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return QSeries(std::move(coeffs));
}

QSeries pow(const QSeries& a, unsigned e) {
    std::vector<Rational> one(a.coeffs.size(), Rational(0));
    one[0] = 1;
    QSeries acc(std::move(one));
    QSeries base = a;
    while (e != 0) {
        if (e & 1u) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1u;
    }
    return acc;
}

QSeries substitute_qN(const QSeries& a, unsigned n) {
    if (n < 1) throw Error("substitute_qN: n must be >= 1");
    std::vector<Rational> coeffs(a.coeffs.size(), Rational(0));
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        unsigned long target = static_cast<unsigned long>(k) * n;
        if (target >= coeffs.size()) break;
        coeffs[target] = a.coeffs[k];
    }
    return QSeries(std::move(coeffs));
}

}  // namespace enz
