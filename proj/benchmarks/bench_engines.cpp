#include "neutrix/associative.hpp"
#include "neutrix/cognitive.hpp"
#include "neutrix/fre.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace neutrix;

namespace {

ModelMatrix random_fuzzy(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> d(0, 20);
    ModelMatrix m(rows, cols, ValueDomain::fuzzy_unit());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = NeutroScalar(Rational(d(gen), 20));
    return m;
}

ModelMatrix random_synaptic(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> d(-5, 5);
    ModelMatrix m(rows, cols, ValueDomain::bounded(Rational(5)));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = NeutroScalar(Rational(d(gen)));
    return m;
}

void BM_MaxMinCompose(benchmark::State& state) {
    ModelMatrix P = random_fuzzy(7, 10, 1);
    ModelMatrix Q = random_fuzzy(10, 7, 2);
    for (auto _ : state) benchmark::DoNotOptimize(compose(P, Q, CompositionRule::MaxMin));
}
BENCHMARK(BM_MaxMinCompose);

void BM_SumProductCompose(benchmark::State& state) {
    ModelMatrix P = random_fuzzy(7, 10, 3);
    ModelMatrix Q = random_fuzzy(10, 7, 4);
    for (auto _ : state) benchmark::DoNotOptimize(compose(P, Q, CompositionRule::SumProduct));
}
BENCHMARK(BM_SumProductCompose);

void BM_HiddenPattern(benchmark::State& state) {
    ModelMatrix E = random_fuzzy(7, 7, 5);
    for (std::size_t i = 0; i < 7; ++i) E.at(i, i) = NeutroScalar(0);
    Dynamics dyn;
    dyn.kind = Dynamics::Kind::WeightedMaxMin;
    dyn.clamp_on = {0};
    ConceptState x0(7, NeutroScalar(0));
    x0[0] = NeutroScalar(1);
    for (auto _ : state) benchmark::DoNotOptimize(hidden_pattern(E, x0, dyn));
}
BENCHMARK(BM_HiddenPattern);

void BM_BamConverge(benchmark::State& state) {
    ModelMatrix M = random_synaptic(6, 4, 6);
    BamSeed seed;
    seed.side = BamSeed::Side::Row;
    seed.activation = parse_state("3,4,-1,-3,-2,1");
    for (auto _ : state) benchmark::DoNotOptimize(bam_converge(M, seed));
}
BENCHMARK(BM_BamConverge);

void BM_MaxSolution(benchmark::State& state) {
    ModelMatrix Q = random_fuzzy(3, 3, 7);
    std::vector<Rational> r{Rational(3, 20), Rational(7, 20), Rational(1, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(max_solution(Q, r, CompositionRule::MaxMin));
}
BENCHMARK(BM_MaxSolution);

void BM_IntervalBuild(benchmark::State& state) {
    ExpertPanel p;
    for (unsigned i = 0; i < 4; ++i) p.members.push_back(random_fuzzy(7, 10, 10 + i));
    for (auto _ : state) {
        ExpertPanel copy = p;
        benchmark::DoNotOptimize(build_interval(std::move(copy), OrderMode::Usual));
    }
}
BENCHMARK(BM_IntervalBuild);

} // namespace

BENCHMARK_MAIN();
