#include <benchmark/benchmark.h>

#include <random>

#include "invform/construction.hpp"
#include "invform/corpus.hpp"
#include "invform/decision.hpp"
#include "invform/factor.hpp"
#include "invform/oracle.hpp"

namespace {

using namespace invform;

Matrix sample(const Field& field, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_invertible_matrix(field, n, rng);
}

// J_k(1) (+) J_k(1) (+) companion(x^2 - 3x + 1), conjugated: a YES instance for both symmetries.
Matrix structured(const Field& field, std::size_t k, std::uint64_t seed) {
  Matrix j = Matrix::identity(field, k);
  for (std::size_t i = 0; i + 1 < k; ++i) j(i, i + 1) = Scalar::one(field);
  const Matrix t = block_diagonal(field, {j, j, companion(Poly::from_ints(field, {1, -3, 1}))});
  const Matrix g = sample(field, t.rows(), seed);
  return g * t * inverse(g);
}

Field field_for(int which) { return which == 0 ? Field::rationals() : Field::prime(101); }

void BM_Factor(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const auto polys = random_monic_corpus(f, 1, 16, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& p : polys) benchmark::DoNotOptimize(factor(p));
  }
}
BENCHMARK(BM_Factor)->ArgsProduct({{4, 8, 12}, {0, 1}});

void BM_Det(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Matrix m = sample(f, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->ArgsProduct({{4, 8, 16}, {0, 1}});

void BM_CharPoly(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Matrix m = sample(f, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->ArgsProduct({{4, 8, 16}, {0, 1}});

void BM_Decide(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Matrix t = structured(f, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(decide_invariant_form(t, Symmetry::Symmetric));
}
BENCHMARK(BM_Decide)->ArgsProduct({{1, 2, 3, 4}, {0, 1}});

void BM_Construct(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Matrix t = structured(f, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(construct_invariant_form(t, Symmetry::Symmetric));
}
BENCHMARK(BM_Construct)->ArgsProduct({{1, 2, 3, 4}, {0, 1}});

void BM_Oracle(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Matrix t = structured(f, static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    const auto space = solve_form_space(t, Symmetry::Symmetric, Setting::Invariant);
    benchmark::DoNotOptimize(find_nondegenerate(space));
  }
}
BENCHMARK(BM_Oracle)->ArgsProduct({{1, 2, 3, 4}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
