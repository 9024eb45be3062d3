#include <benchmark/benchmark.h>

#include <random>

#include "mutkit/geometry.hpp"
#include "mutkit/mutation.hpp"

namespace {

using namespace mutkit;

LaurentPolynomial random_potential(unsigned seed, int terms) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> exp(-5, 5);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const std::vector<std::string> vars{"x1", "x2", "x3", "y1"};
    LaurentPolynomial w(vars);
    for (int t = 0; t < terms; ++t) {
        ExponentVector e(vars.size());
        for (auto& v : e) v = exp(rng);
        w.add_term(e, GaussianRational(Rational(coeff(rng)), Rational(coeff(rng))));
    }
    return w;
}

void bm_laurent_multiply(benchmark::State& state) {
    const auto a = random_potential(1, int(state.range(0)));
    const auto b = random_potential(2, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_laurent_multiply)->Arg(8)->Arg(32);

void bm_mutation_roundtrip(benchmark::State& state) {
    const auto w = random_potential(3, 12);
    MutationRule rule;
    rule.n = 3;
    rule.mutated_index = 2;
    rule.fiber_indices = {0, 1};
    rule.passive_indices = {3};
    for (auto _ : state) benchmark::DoNotOptimize(verify_invariance(w, rule));
}
BENCHMARK(bm_mutation_roundtrip);

void bm_quadrature_circle(benchmark::State& state) {
    const PlanarPath circle({ArcSegment{{0, 0}, 1.0, 0.0, 6.283185307179586}}, true);
    const GeometryContext ctx(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(integrate_lambda_n(circle, ctx));
}
BENCHMARK(bm_quadrature_circle)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
