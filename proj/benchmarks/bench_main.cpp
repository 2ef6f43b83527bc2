#include "enzeros/certify.hpp"
#include "enzeros/evaluate.hpp"
#include "enzeros/geometry.hpp"
#include "enzeros/graded.hpp"
#include "enzeros/qseries.hpp"

#include <benchmark/benchmark.h>

using namespace enz;

namespace {

void BM_SeriesEtilde7(benchmark::State& state) {
    unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        QSeries s = series_Etilde(7, order);
        benchmark::DoNotOptimize(s.coeffs.data());
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesEtilde7)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_SeriesMul(benchmark::State& state) {
    unsigned order = static_cast<unsigned>(state.range(0));
    QSeries a = series_E4(order);
    QSeries b = series_E6(order);
    for (auto _ : state) {
        QSeries p = mul(a, b);
        benchmark::DoNotOptimize(p.coeffs.data());
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_DiscoverRelation(benchmark::State& state) {
    int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        RelationPoly rel = discover_relation(level);
        benchmark::DoNotOptimize(rel.terms.data());
    }
}
BENCHMARK(BM_DiscoverRelation)->Arg(2)->Arg(3)->Arg(5)->Arg(7)
    ->Unit(benchmark::kMillisecond);

void BM_VerifyRelation(benchmark::State& state) {
    int level = static_cast<int>(state.range(0));
    RelationPoly rel = discover_relation(level);
    unsigned order = sturm_order(level) + 20;
    for (auto _ : state) {
        VerifyResult v = verify_relation(rel, order);
        benchmark::DoNotOptimize(v.ok);
    }
}
BENCHMARK(BM_VerifyRelation)->Arg(2)->Arg(3)->Arg(5)->Arg(7)
    ->Unit(benchmark::kMillisecond);

void BM_EvaluateAt(benchmark::State& state) {
    EvalParams params;
    params.m = static_cast<unsigned>(state.range(0));
    AlgebraicPoint p = AlgebraicPoint::inverted(Zeta::I, 2);
    series_for(SeriesId::etilde(5), params.m);  // warm the coefficient cache
    for (auto _ : state) {
        ComplexEnclosure v = evaluate_at(SeriesId::etilde(5), p, params);
        benchmark::DoNotOptimize(v.re.lo);
    }
}
BENCHMARK(BM_EvaluateAt)->Arg(32)->Arg(64)->Arg(128)->Arg(256)
    ->Unit(benchmark::kMicrosecond);

void BM_CertifyPoint(benchmark::State& state) {
    AlgebraicPoint p = AlgebraicPoint::inverted(Zeta::I, 2);
    for (auto _ : state) {
        Certificate cert = certify_point(5, p);
        benchmark::DoNotOptimize(cert.verdict);
    }
}
BENCHMARK(BM_CertifyPoint)->Unit(benchmark::kMillisecond);

void BM_CertifyAll(benchmark::State& state) {
    int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Report report = certify_all(level);
        benchmark::DoNotOptimize(report.zeros.data());
    }
}
BENCHMARK(BM_CertifyAll)->Arg(2)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FrickeResidual(benchmark::State& state) {
    ComplexEnclosure tau =
        ComplexEnclosure::exact(make_rational(Int(1), Int(4)), Rational(1));
    for (auto _ : state) {
        ComplexEnclosure r = fricke_residual(5, tau);
        benchmark::DoNotOptimize(r.re.lo);
    }
}
BENCHMARK(BM_FrickeResidual)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
