#include "hvf/fields.hpp"
#include "hvf/polyreduce.hpp"
#include "hvf/solvers.hpp"
#include "hvf/tension.hpp"

#include <benchmark/benchmark.h>

using namespace hvf;

namespace {

FieldFamily killing_s4() { return representative_field(killing_classification(4, 2, 1)); }

void BM_TensionPoint(benchmark::State& state) {
  const FieldFamily f = killing_s4();
  const MetricParams mp = killing_classification(4, 2, 1).metric_params.front().numeric();
  const auto pts = sample_points(space_of(f), 64, 1);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tension(f, pts[k++ % pts.size()], mp));
}
BENCHMARK(BM_TensionPoint);

void BM_Verify(benchmark::State& state) {
  const FieldFamily f = representative_field(quadratic_classification(7));
  const MetricParams mp = quadratic_classification(7).metric_params.front().numeric();
  VerifyOptions opts;
  opts.count = static_cast<int>(state.range(0));
  opts.path = state.range(1) ? DerivativePath::FiniteDifference : DerivativePath::ClosedForm;
  for (auto _ : state) benchmark::DoNotOptimize(verify(f, mp, opts).max_rel_residual);
  state.SetItemsProcessed(state.iterations() * opts.count);
}
BENCHMARK(BM_Verify)->Args({200, 0})->Args({200, 1})->Args({2000, 0});

void BM_RoughLaplacianOracle(benchmark::State& state) {
  const FieldFamily f = killing_s4();
  const VectorFieldFn sigma = as_function(f);
  const auto pts = sample_points(space_of(f), 64, 2);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rough_laplacian_fd(sigma, pts[k++ % pts.size()]).vec());
}
BENCHMARK(BM_RoughLaplacianOracle);

void BM_ModQuadricExact(benchmark::State& state) {
  ExactConformalParams x;
  x.omega = QuadraticSurd(Rational(3, 5));
  x.h = QuadraticSurd(Rational(4, 5));
  x.rr = QuadraticSurd(Rational(1, 2));
  x.s = QuadraticSurd(Rational(3, 5));
  x.t = QuadraticSurd(Rational(4, 5));
  for (auto _ : state) {
    const ExactPoly P = build_harmonicity_poly(-1, x, QuadraticSurd(3), QuadraticSurd(Rational(-1, 2)));
    benchmark::DoNotOptimize(vanishes_mod_quadric(P, -1).failing_grade);
  }
}
BENCHMARK(BM_ModQuadricExact);

void BM_ModQuadricNumeric(benchmark::State& state) {
  const Conformal2DField f = Conformal2DField::standard(SpaceForm::hyperbolic(2), {0.6, 0.0, 0.8, 0.5, 0.6, 0.8});
  for (auto _ : state) {
    benchmark::DoNotOptimize(vanishes_mod_quadric(build_harmonicity_poly(f, 3.0, -0.5), -1).failing_grade);
  }
}
BENCHMARK(BM_ModQuadricNumeric);

void BM_TwistRoots(benchmark::State& state) {
  int n = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(twist_roots(n, 2, 1));
    n = n == 40 ? 4 : n + 1;
  }
}
BENCHMARK(BM_TwistRoots);

}  // namespace
BENCHMARK_MAIN();
