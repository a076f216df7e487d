#include <benchmark/benchmark.h>

#include "mhforge/ids.hpp"
#include "mhforge/registry.hpp"

using namespace mhf;

namespace {

void BM_ScalarAccumulate(benchmark::State& state) {
    const Scalar third(Rational(1, 3)), seventh(Rational(-2, 7));
    for (auto _ : state) {
        Scalar acc;
        for (int i = 0; i < 1000; ++i) acc = acc + third * seventh;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ScalarAccumulate);

void BM_Associativity(benchmark::State& state) {
    auto prod = build_twisted_product(translation_twist(Group::symmetric(static_cast<int>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(check_associative(prod.alg, ids::assoc));
    state.counters["dim"] = static_cast<double>(prod.alg.dim());
}
BENCHMARK(BM_Associativity)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TwistAxioms(benchmark::State& state) {
    TwistPair tp = translation_twist(Group::symmetric(3));
    for (auto _ : state) benchmark::DoNotOptimize(check_twist_axioms(tp));
}
BENCHMARK(BM_TwistAxioms)->Unit(benchmark::kMillisecond);

void BM_CertifyHopf(benchmark::State& state) {
    Hopf h = hopf_by_name(state.range(0) == 0 ? "kS3" : "D(S3)");
    for (auto _ : state) benchmark::DoNotOptimize(certify_hopf(h));
}
BENCHMARK(BM_CertifyHopf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_WindowedKz(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certify_hopf(windowed_kz(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_WindowedKz)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CenterDimension(benchmark::State& state) {
    Algebra a = build_drinfeld_double(group_pairing(Group::symmetric(3))).twisted.alg;
    for (auto _ : state) benchmark::DoNotOptimize(center_dimension(a));
}
BENCHMARK(BM_CenterDimension)->Unit(benchmark::kMillisecond);

void BM_MixedAssociativity(benchmark::State& state) {
    Group s3 = Group::symmetric(3);
    ActionPack a = translation_pack(s3), c = crossed_module_pack(s3), b = regular_coaction_pack(s3);
    for (auto _ : state) benchmark::DoNotOptimize(iso_mixed_assoc(a, c, b));
}
BENCHMARK(BM_MixedAssociativity)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace
BENCHMARK_MAIN();
