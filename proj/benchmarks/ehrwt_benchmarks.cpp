#include <benchmark/benchmark.h>

#include "ehrwt/ehrhart.hpp"
#include "ehrwt/graph.hpp"
#include "ehrwt/interpolate.hpp"
#include "ehrwt/polytope.hpp"
#include "ehrwt/series.hpp"
#include "ehrwt/weight_poly.hpp"

namespace {

using namespace ehrwt;

LatticePolytope c4_c3() {
  return edge_polytope(Graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {4, 6}}));
}

void BM_FacetEnumeration(benchmark::State& state) {
  std::vector<IntVector> cube;
  const auto d = static_cast<std::size_t>(state.range(0));
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    IntVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
    cube.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(compute_h_representation(cube));
}
BENCHMARK(BM_FacetEnumeration)->DenseRange(2, 5);

void BM_EdgePolytopeEnumeration(benchmark::State& state) {
  const LatticePolytope p = c4_c3();
  const auto n = static_cast<unsigned long>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_lattice_point(p, n, [&](std::span<const Integer>) { ++count; });
  }
  state.counters["points"] = static_cast<double>(count);
}
BENCHMARK(BM_EdgePolytopeEnumeration)->Arg(4)->Arg(8)->Arg(13);

void BM_WeightedPolynomialEdgePolytope(benchmark::State& state) {
  const LatticePolytope p = c4_c3();
  const WeightPoly w = parse_weight("t1*t2*t3*t4*t5*t6*t7", 7);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_ehrhart_polynomial(p, w));
}
BENCHMARK(BM_WeightedPolynomialEdgePolytope)->Unit(benchmark::kMillisecond);

void BM_WeightedPolynomialSquare(benchmark::State& state) {
  const LatticePolytope p = LatticePolytope::from({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto k = state.range(0);
  const WeightPoly w = parse_weight(
      "t1^" + std::to_string(k) + "*t2^" + std::to_string(k), 2);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_ehrhart_polynomial(p, w));
}
BENCHMARK(BM_WeightedPolynomialSquare)->DenseRange(1, 4);

void BM_Lagrange(benchmark::State& state) {
  std::vector<Sample> samples;
  for (long x = 1; x <= state.range(0); ++x) samples.push_back({x, x * x * x - 7 * x});
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_interpolate(samples));
}
BENCHMARK(BM_Lagrange)->RangeMultiplier(2)->Range(4, 32);

void BM_GfOfPolynomial(benchmark::State& state) {
  std::vector<Rational> c;
  for (long i = 0; i <= state.range(0); ++i) c.emplace_back(i + 1, i + 2);
  const UniPoly g(c);
  for (auto _ : state) benchmark::DoNotOptimize(gf_of_polynomial(g));
}
BENCHMARK(BM_GfOfPolynomial)->DenseRange(2, 12, 5);

}  // namespace

BENCHMARK_MAIN();
