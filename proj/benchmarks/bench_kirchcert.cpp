#include <benchmark/benchmark.h>

#include "kirchcert/graph.hpp"
#include "kirchcert/hessian.hpp"
#include "kirchcert/polynomial.hpp"
#include "kirchcert/polynomial_matrix.hpp"
#include "kirchcert/rational_matrix.hpp"
#include "kirchcert/rng.hpp"

namespace {

using namespace kirchcert;

void BM_PolynomialMultiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Polynomial e2 = elementary_symmetric(n, 2);
    const Polynomial e3 = elementary_symmetric(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(e2 * e3);
    }
}
BENCHMARK(BM_PolynomialMultiply)->Arg(6)->Arg(10)->Arg(14);

void BM_TreeEnumeration(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kirchhoff_polynomial(g, KirchhoffRoute::Enumeration));
    }
}
BENCHMARK(BM_TreeEnumeration)->Arg(5)->Arg(6)->Arg(7);

void BM_MatrixTreeDeterminant(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree));
    }
}
BENCHMARK(BM_MatrixTreeDeterminant)->Arg(4)->Arg(5)->Arg(6);

void BM_SymbolicHessianDeterminant(benchmark::State& state) {
    const Graph g = Graph::complete(4);
    const Polynomial f = kirchhoff_polynomial(g, KirchhoffRoute::Enumeration);
    const PolynomialMatrix h = symbolic_hessian(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fraction_free_determinant(h));
    }
}
BENCHMARK(BM_SymbolicHessianDeterminant);

void BM_CongruenceInertia(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    const Polynomial f = kirchhoff_polynomial(g, KirchhoffRoute::Enumeration);
    SeededRng rng(7);
    std::vector<Rational> coords;
    for (int i = 0; i < g.num_edges(); ++i) coords.push_back(rng.positive_rational(64));
    const RationalPoint a{coords};
    const HessianData data = hessian_and_gradient_at(f, a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize_congruence(data.hessian));
    }
}
BENCHMARK(BM_CongruenceInertia)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
