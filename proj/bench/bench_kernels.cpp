// Serial vs OpenMP kernels on the two heaviest reductions: metric axioms over
// sampled triples and the factorization residual of X^2.

#include <benchmark/benchmark.h>

#include "mgd/axioms.hpp"
#include "mgd/catalog.hpp"
#include "mgd/derivative.hpp"
#include "mgd/groups.hpp"

namespace {

mgd::CheckOptions options(mgd::Exec exec) {
  mgd::CheckOptions o;
  o.exec = exec;
  return o;
}

void metric_axioms(benchmark::State& state, mgd::Exec exec) {
  const auto g = mgd::make_group("matrix-add:4");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgd::check_metric_axioms(*g, 7, n, options(exec)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void factorization(benchmark::State& state, mgd::Exec exec) {
  const auto g = mgd::make_group("matrix-add:4");
  const auto f = mgd::cases::square_matrix(g);
  const auto a = g->sample(3, 1).front();
  const auto slope = mgd::cases::square_slope_right(f, a);
  const std::vector<double> radii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgd::check_differentiable(f, slope, radii, 11, n, options(exec)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 6);
}

}  // namespace

BENCHMARK_CAPTURE(metric_axioms, serial, mgd::Exec::serial)->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(metric_axioms, parallel, mgd::Exec::parallel)->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(factorization, serial, mgd::Exec::serial)->Arg(1000);
BENCHMARK_CAPTURE(factorization, parallel, mgd::Exec::parallel)->Arg(1000);

BENCHMARK_MAIN();
