#include <benchmark/benchmark.h>

#include <random>

#include "ringlab/inverse_system.hpp"
#include "ringlab/series.hpp"

using namespace ringlab;
using Gf = GfField;
using A32 = LocalAlgebra<Gf>;

namespace {

DenseMatrix<Gf> random_matrix(const Gf& k, std::size_t r, std::size_t c,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseMatrix<Gf> m(r, c, k.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = k.from_rational(Rational(rng() % 32003));
  return m;
}

Presentation square_zero(std::size_t n) {
  Presentation p;
  for (std::size_t i = 0; i < n; ++i) p.vars.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Monomial m(n);
      m.e[i] += 1;
      m.e[j] += 1;
      p.relations.push_back(Poly::monomial(m));
    }
  return p;
}

void BM_rref(benchmark::State& state) {
  Gf k(32003);
  auto m = random_matrix(k, state.range(0), state.range(0), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(k, m).rank);
}
BENCHMARK(BM_rref)->Arg(32)->Arg(128)->Arg(256);

void BM_resolution_k(benchmark::State& state) {
  Gf k(32003);
  Presentation p;
  p.vars = {"x", "y"};
  Monomial x2(2), y2(2);
  x2.e = {2, 0};
  y2.e = {0, 2};
  p.relations = {Poly::monomial(x2), Poly::monomial(y2)};
  auto A = A32::build(k, p);
  auto M = PresentedModule<Gf>::residue_field(A);
  for (auto _ : state)
    benchmark::DoNotOptimize(betti_sequence(A, M, state.range(0)).back());
}
BENCHMARK(BM_resolution_k)->Arg(6)->Arg(10);

void BM_resolution_square_zero(benchmark::State& state) {
  Gf k(32003);
  auto A = A32::build(k, square_zero(3));
  auto M = PresentedModule<Gf>::residue_field(A);
  for (auto _ : state)
    benchmark::DoNotOptimize(betti_sequence(A, M, state.range(0)).back());
}
BENCHMARK(BM_resolution_square_zero)->Arg(10);

void BM_koszul_homology(benchmark::State& state) {
  Gf k(32003);
  std::mt19937_64 rng(7);
  std::size_t n = state.range(0);
  Poly f;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Monomial m(n);
      m.e[i] += 1;
      m.e[j] += 1;
      f += Poly::monomial(m, Rational(1 + rng() % 9));
    }
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  auto A = from_inverse_system(k, vars, f);
  for (auto _ : state)
    benchmark::DoNotOptimize(koszul_homology(A).kappa.back());
}
BENCHMARK(BM_koszul_homology)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
