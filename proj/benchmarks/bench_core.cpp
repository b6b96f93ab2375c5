#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "hopfcyclic/approximation.hpp"
#include "hopfcyclic/homology.hpp"

using namespace hopfcyclic;

namespace {

const Rationals QQ;

Matrix<Rationals> banded_matrix(std::size_t n) {
    Matrix<Rationals> m(QQ, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, QQ.from_long(2));
        if (i + 1 < n) m.set(i, i + 1, QQ.from_long(-1));
        if (i >= 1) m.set(i, i - 1, QQ.from_long(-1));
        m.set(i, (i * 7 + 3) % n, QQ.from_long(static_cast<long>(i % 5) - 2));
    }
    return m;
}

ParaCyclicModule<Rationals> classical_z2(std::size_t N) {
    auto Bk = fixtures::bialgebra_k(QQ);
    auto Z2 = fixtures::group_algebra_z2(QQ);
    auto X = fixtures::trivial_action_ma(Bk, Z2.mult, Z2.unit);
    auto M = fixtures::trivial_comodule(Bk);
    auto w = build_transposition(X.kind, Bk, M, X);
    return build_T_algebra(X, M, w, N);
}

void BM_SparseRank(benchmark::State& state) {
    auto m = banded_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_SparseRank)->Arg(64)->Arg(128)->Arg(256);

void BM_BuildFamily(benchmark::State& state) {
    auto Z2 = fixtures::group_algebra_z2(QQ);
    auto X = fixtures::regular_mc(Z2);
    auto M = fixtures::trivial_comodule(Z2);
    auto w = build_transposition(X.kind, Z2, M, X);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            build_T_coalgebra(X, M, w, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildFamily)->Arg(3)->Arg(4)->Arg(5);

void BM_CertifyRelations(benchmark::State& state) {
    auto T = classical_z2(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(certify_relations(T));
}
BENCHMARK(BM_CertifyRelations)->Arg(3)->Arg(4);

void BM_CyclicHomology(benchmark::State& state) {
    auto T = classical_z2(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cyclic_homology(T, T.truncation));
}
BENCHMARK(BM_CyclicHomology)->Arg(4)->Arg(5);

void BM_ComonadApproximation(benchmark::State& state) {
    auto H4 = fixtures::sweedler_h4(QQ);
    auto X = fixtures::regular_mc(H4);
    auto M = fixtures::grouplike_comodule(H4, 1);
    auto w = build_transposition(X.kind, H4, M, X);
    auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto E = equip_diagonal(build_T_coalgebra(X, M, w, N), H4, X, M);
        benchmark::DoNotOptimize(comonad_approximation(E));
    }
}
BENCHMARK(BM_ComonadApproximation)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
