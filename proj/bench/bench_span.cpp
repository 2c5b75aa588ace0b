#include <benchmark/benchmark.h>

#include "liepm/algebra_io.hpp"
#include "liepm/constructors.hpp"
#include "liepm/span.hpp"

using namespace liepm;

namespace {

void run(benchmark::State& state, Execution ex) {
    const LieAlgebra L = sl3_chevalley();
    const FactorizationScheme scheme = parse_scheme(L, sl3_root_grading(), "gminus, g0, gplus");
    const auto products = enumerate_products(scheme, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize_products(L, scheme, products, ex));
    }
    state.counters["products"] = static_cast<double>(products.size());
}

void BM_normalize_serial(benchmark::State& state) { run(state, Execution::serial); }
void BM_normalize_parallel(benchmark::State& state) { run(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_normalize_serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_normalize_parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
