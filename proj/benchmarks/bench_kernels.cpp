#include "flagcalc/binary_form.hpp"
#include "flagcalc/flag_geometry.hpp"
#include "flagcalc/fp_census.hpp"
#include "flagcalc/linear_systems.hpp"
#include "flagcalc/random.hpp"
#include "flagcalc/ruled.hpp"

#include <benchmark/benchmark.h>

using namespace flagcalc;

namespace {

BinaryForm random_form(Rng& rng, unsigned degree) {
    std::vector<GaussianRational> c;
    for (unsigned k = 0; k <= degree; ++k) c.push_back(rng.gaussian_integer(20));
    return BinaryForm(c);
}

}  // namespace

static void BM_Resultant(benchmark::State& state) {
    Rng rng(1);
    const auto d = static_cast<unsigned>(state.range(0));
    const BinaryForm f = random_form(rng, d), g = random_form(rng, d);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant)->Arg(2)->Arg(4)->Arg(8);

static void BM_Gcd(benchmark::State& state) {
    Rng rng(2);
    const BinaryForm h = random_form(rng, 2);
    const BinaryForm f = h * random_form(rng, 4), g = h * random_form(rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(gcd(f, g));
}
BENCHMARK(BM_Gcd);

static void BM_SystemDimension(benchmark::State& state) {
    Rng rng(3);
    const auto a = static_cast<unsigned>(state.range(0)), b = static_cast<unsigned>(state.range(1));
    const auto conics = random_disjoint_conics(rng, a * (a - 1) / 2);
    for (auto _ : state) benchmark::DoNotOptimize(system_dimension(a, b, conics));
}
BENCHMARK(BM_SystemDimension)->Args({2, 2})->Args({3, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_RuledSurface(benchmark::State& state) {
    const BinaryFormTriple f2{BinaryForm{1, 0, 0}, BinaryForm{0, 1, 0}, BinaryForm{0, 0, 1}};
    const BinaryFormTriple f3{BinaryForm{1, 0, 0, 0}, BinaryForm{0, 1, 1, 0}, BinaryForm{0, 0, 0, 1}};
    const auto& f = state.range(0) == 2 ? f2 : f3;
    for (auto _ : state) benchmark::DoNotOptimize(twistor_ruled_surface(f));
}
BENCHMARK(BM_RuledSurface)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ConicContainment(benchmark::State& state) {
    const BinaryFormTriple f3{BinaryForm{1, 0, 0, 0}, BinaryForm{0, 1, 1, 0}, BinaryForm{0, 0, 0, 1}};
    const auto spec = twistor_ruled_surface(f3);
    const auto fibers = twistor_circle_samples(spec, 32);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(contains_conic(spec.surface, fibers[k++ % fibers.size()]));
}
BENCHMARK(BM_ConicContainment);

static void BM_Census(benchmark::State& state) {
    const BinaryFormTriple f2{BinaryForm{1, 0, 0}, BinaryForm{0, 1, 0}, BinaryForm{0, 0, 1}};
    const auto surface = reduce_mod_p(twistor_ruled_surface(f2).surface, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(conic_census(surface));
}
BENCHMARK(BM_Census)->Arg(5)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
