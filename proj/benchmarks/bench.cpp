#include "fxf/sampler.hpp"
#include "fxf/series.hpp"
#include "fxf/verify.hpp"
#include "fxf/xform.hpp"

#include <benchmark/benchmark.h>

using namespace fxf;

namespace {

void BM_ratfunc_mul(benchmark::State& state)
{
    RatSampler s(1);
    std::vector<Rat> a, b;
    for (long i = 0; i <= state.range(0); i++) {
        a.push_back(s.rat());
        b.push_back(s.nonzero_rat());
    }
    RatFunc f{Poly(a), Poly(b)};
    RatFunc g{Poly(b), Poly(a).is_zero() ? Poly{Rat(1)} : Poly(a)};
    for (auto _ : state) {
        RatFunc h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_ratfunc_mul)->Arg(4)->Arg(8)->Arg(16);

void BM_heun_companion_match(benchmark::State& state)
{
    RatSampler s(2);
    HeunParams p = sample_heun(s, HeunSample::QOverAbD);
    for (auto _ : state) {
        HeunCompanion hc = heun_companion(p);
        benchmark::DoNotOptimize(hc.matched);
    }
}
BENCHMARK(BM_heun_companion_match);

void BM_frobenius(benchmark::State& state)
{
    LinearODE2 e = from_hypergeometric(
        {rat_from_string("1/2"), rat_from_string("1/3"), rat_from_string("5/4")});
    FrobeniusOptions opts;
    opts.order = static_cast<int>(state.range(0));
    opts.tail_target = Float(0);
    for (auto _ : state) {
        SeriesSolution sol = frobenius(e, Rat(0), ExponentChoice::Larger, opts);
        benchmark::DoNotOptimize(sol.order());
    }
}
BENCHMARK(BM_frobenius)->Arg(64)->Arg(128)->Arg(256);

void BM_reduce(benchmark::State& state)
{
    for (auto _ : state) {
        auto sols = reduce_to_hypergeometric(Rat(1), Rat(5), Rat(3), Rat(2), Rat(1));
        benchmark::DoNotOptimize(sols.front().R);
    }
}
BENCHMARK(BM_reduce);

void BM_product_identity(benchmark::State& state)
{
    RatSampler s(3);
    LinearODE2 e = from_heun(sample_heun(s));
    CompanionPair pair = companion(-e.P, -e.Q);
    for (auto _ : state) {
        VerificationReport rep = verify_product_identity(pair);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_product_identity);

} // namespace

BENCHMARK_MAIN();
