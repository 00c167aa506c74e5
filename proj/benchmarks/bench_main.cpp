// Throughput probes for the enumeration and algebra kernels.

#include <benchmark/benchmark.h>

#include "minorhopf/coalgebra.hpp"
#include "minorhopf/expr.hpp"
#include "minorhopf/hopf.hpp"
#include "minorhopf/weak_order.hpp"

namespace {

using namespace minorhopf;

GroundSet ground_of(int n) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return GroundSet(std::move(labels));
}

void BM_EnumerateStratum(benchmark::State& state) {
  const GroundSet g = ground_of(static_cast<int>(state.range(0)));
  const int rank = g.size() / 2;
  for (auto _ : state) {
    auto matroids = enumerate_matroids(g, rank);
    benchmark::DoNotOptimize(matroids.data());
    state.counters["matroids"] = static_cast<double>(matroids.size());
  }
}
BENCHMARK(BM_EnumerateStratum)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FreeProduct(benchmark::State& state) {
  const Matroid m = Matroid::uniform(2, ground_of(4));
  const Matroid n = Matroid::uniform(2, GroundSet({"e", "f", "g", "h"}));
  for (auto _ : state) benchmark::DoNotOptimize(free_product(m, n));
}
BENCHMARK(BM_FreeProduct);

void BM_OrderFilterMobius(benchmark::State& state) {
  const Matroid m = parse_matroid_expr("U(2,3;a,b,c)+U(1,2;d,e)");
  for (auto _ : state) {
    FilterTriple ft = order_filter(m);
    long long acc = 0;
    for (size_t i = 0; i < ft.wfilter.elements.size(); ++i)
      acc += ft.wfilter.order.mobius(0, static_cast<int>(i));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_OrderFilterMobius)->Unit(benchmark::kMillisecond);

void BM_PhiMatrix(benchmark::State& state) {
  const Matroid m = parse_matroid_expr("U(2,3;a,b,c)+U(1,2;d,e)");
  for (auto _ : state) {
    PhiResult pr = phi_matrix(m);
    benchmark::DoNotOptimize(pr.phi.at(0, 0));
  }
}
BENCHMARK(BM_PhiMatrix)->Unit(benchmark::kMillisecond);

void BM_WBasis(benchmark::State& state) {
  const Matroid m = parse_matroid_expr("I(a)*Z(b)*I(c)*Z(d)");
  for (auto _ : state) benchmark::DoNotOptimize(w_basis(m));
}
BENCHMARK(BM_WBasis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
