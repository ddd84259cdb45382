#include <benchmark/benchmark.h>

#include "bmocz/cfo.hpp"
#include "bmocz/channel.hpp"
#include "bmocz/codec.hpp"
#include "bmocz/fec/bch.hpp"
#include "bmocz/rng.hpp"

using namespace bmocz;

namespace {

std::vector<uint8_t> message(TrialRng& rng, int k) {
    std::vector<uint8_t> bits(static_cast<size_t>(k));
    for (auto& b : bits) b = rng.next_bit();
    return bits;
}

void bm_encode(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const ConstellationSpec spec(k, default_radius(k), 1.15);
    TrialRng rng(1);
    const auto msg = message(rng, k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode(spec, msg));
    }
}
BENCHMARK(bm_encode)->Arg(16)->Arg(32);

void bm_dizet_decode(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const ConstellationSpec spec(k, default_radius(k), 1.15);
    TrialRng rng(2);
    const Codeword cw = encode(spec, message(rng, k));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dizet_decode(spec, cw.coeffs));
    }
}
BENCHMARK(bm_dizet_decode)->Arg(16)->Arg(32);

void bm_estimate_cfo(benchmark::State& state) {
    const ConstellationSpec spec(32, default_radius(32), 1.15);
    const TemplateVector tmpl = make_template(spec, 64);
    TrialRng rng(3);
    const Codeword cw = encode(spec, message(rng, 32));
    const ComplexSeq rx = apply_cfo(cw.coeffs, 2.345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_cfo(rx, tmpl, {64, 0.2, 2}));
    }
}
BENCHMARK(bm_estimate_cfo);

void bm_fractional_dizet(benchmark::State& state) {
    const ConstellationSpec spec(31, default_radius(31), 1.0);
    const FractionalDizet decoder(spec, 200);
    TrialRng rng(4);
    const Codeword cw = encode(spec, message(rng, 31));
    const ComplexSeq rx = apply_cfo(cw.coeffs, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decoder(rx));
    }
}
BENCHMARK(bm_fractional_dizet);

void bm_bch_decode(benchmark::State& state) {
    const fec::BchCode& code = fec::BchCode::bch_31_16();
    TrialRng rng(5);
    auto word = fec::bch_encode(code, message(rng, 16));
    word[3] ^= 1u;
    word[17] ^= 1u;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fec::bch_decode(code, word));
    }
}
BENCHMARK(bm_bch_decode);

}  // namespace

BENCHMARK_MAIN();
