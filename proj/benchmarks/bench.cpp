#include <benchmark/benchmark.h>

#include <random>

#include "glncomb/characters.hpp"
#include "glncomb/families.hpp"
#include "glncomb/linalg.hpp"
#include "glncomb/schubert.hpp"
#include "glncomb/weyl.hpp"

namespace {

using namespace glncomb;

void BM_SchubertDescending(benchmark::State& state) {
    Permutation w(5, {2, 4, 1, 5, 3});
    for (auto _ : state) benchmark::DoNotOptimize(schubert_descending(w));
}
BENCHMARK(BM_SchubertDescending);

void BM_SchubertAscending(benchmark::State& state) {
    Permutation w(5, {2, 4, 1, 5, 3});
    for (auto _ : state) benchmark::DoNotOptimize(schubert_ascending(w));
}
BENCHMARK(BM_SchubertAscending);

void BM_VerifyKpS4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_kp(4));
}
BENCHMARK(BM_VerifyKpS4);

void BM_ChamberFamily(benchmark::State& state) {
    Word word{4, {3, 1, 2, 1, 3, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(full_chamber_family(word));
}
BENCHMARK(BM_ChamberFamily);

void BM_FindEmbeddingWord(benchmark::State& state) {
    SubsetFamily d = parse_family("24,34,4");
    for (auto _ : state) benchmark::DoNotOptimize(find_embedding_word(d));
}
BENCHMARK(BM_FindEmbeddingWord);

void BM_DemazureChar(benchmark::State& state) {
    MultFamily d = inversion_family(Permutation(5, {2, 4, 1, 5, 3}));
    Word word{5, {1, 3, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(demazure_char(d, word));
}
BENCHMARK(BM_DemazureChar);

void BM_CharOracleColumn(benchmark::State& state) {
    MultFamily d = parse_mult_family("123:1", 4);
    for (auto _ : state) benchmark::DoNotOptimize(weyl_char_oracle(d, true));
}
BENCHMARK(BM_CharOracleColumn);

void BM_RankBareiss(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-50, 50);
    IntMatrix m(8, 8);
    for (Int& x : m.data) x = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankBareiss);

}  // namespace

BENCHMARK_MAIN();
