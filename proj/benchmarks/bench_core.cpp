#include <benchmark/benchmark.h>

#include <random>

#include "qgzeta/polynomial.hpp"
#include "qgzeta/random_graphs.hpp"
#include "qgzeta/scattering.hpp"
#include "qgzeta/zeta.hpp"

namespace {

using namespace qgz;

MetricGraph sized_graph(int vertices, int edges) {
  std::mt19937_64 rng(12345);
  RandomGraphOptions opts;
  opts.min_vertices = vertices;
  opts.max_vertices = vertices;
  opts.max_edges = edges;
  return random_connected_graph(rng, opts);
}

MetricGraph triangle_with_sign_voltage(VoltageAssignment** va_out) {
  static MetricGraph g = build_graph({"v1", "v2", "v3"},
                                     {{"e1", "v1", "v2", 1.0, 0.2}, {"e2", "v2", "v3", 1.0, 0.2},
                                      {"e3", "v3", "v1", 1.0, 0.2}});
  static VoltageAssignment va = VoltageAssignment::from_edges(g, cyclic_group(2), {1, 0, 0});
  *va_out = &va;
  return g;
}

void bm_walk_operator(benchmark::State& state) {
  MetricGraph g = sized_graph(static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)));
  cplx k(1.3, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(u_gs(g, k));
  state.SetLabel(std::to_string(g.arc_count()) + " arcs");
}
BENCHMARK(bm_walk_operator)->Arg(8)->Arg(16)->Arg(32);

void bm_determinant(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(d(rng), d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(bm_determinant)->Arg(16)->Arg(64);

void bm_char_poly(benchmark::State& state) {
  MetricGraph g = sized_graph(8, 16);
  ComplexMatrix u = u_gs(g, cplx(1.3, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(u));
  state.SetLabel(std::to_string(u.rows()) + "x" + std::to_string(u.rows()));
}
BENCHMARK(bm_char_poly);

void bm_covering_charpoly(benchmark::State& state) {
  VoltageAssignment* va = nullptr;
  MetricGraph g = triangle_with_sign_voltage(&va);
  IrrepSet chars = characters_abelian(va->group());
  cplx k(1.3, 0.0), sigma(0.9, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(covering_charpoly(g, k, *va, chars, sigma));
}
BENCHMARK(bm_covering_charpoly);

void bm_prime_cycles(benchmark::State& state) {
  MetricGraph g = sized_graph(4, 6);
  cplx k(1.3, 0.0);
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prime_cycles(g, k, order));
}
BENCHMARK(bm_prime_cycles)->Arg(6)->Arg(8);

void bm_secular_scan(benchmark::State& state) {
  MetricGraph g = sized_graph(4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(find_secular_roots(g, 0.5, 4.0, 800));
}
BENCHMARK(bm_secular_scan);

}  // namespace

BENCHMARK_MAIN();
