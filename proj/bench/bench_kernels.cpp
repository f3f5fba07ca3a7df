// Serial reference kernels against the OpenMP kernels on one 256x256 image.

#include "probfrac/descriptor.hpp"
#include "probfrac/histogram.hpp"
#include "probfrac/synth.hpp"

#include <benchmark/benchmark.h>

using namespace probfrac;

namespace {

const GrayImage& texture() {
    static const GrayImage img = synthesize(SynthKind::blur_noise, 256, 1, 0);
    return img;
}

template <bool Reference>
void histogram(benchmark::State& state) {
    const auto variant = static_cast<Variant>(state.range(0));
    const int delta = static_cast<int>(state.range(1));
    for (auto _ : state) {
        if constexpr (Reference) {
            benchmark::DoNotOptimize(reference::cell_histogram(texture(), delta, variant));
        } else {
            benchmark::DoNotOptimize(cell_histogram(texture(), delta, variant));
        }
    }
    state.SetLabel(std::string(to_string(variant)));
}

void extraction(benchmark::State& state) {
    DescriptorConfig cfg;
    cfg.variant = static_cast<Variant>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(extract_descriptors(texture(), cfg));
    state.SetLabel(std::string(to_string(cfg.variant)));
}

void histogram_args(benchmark::internal::Benchmark* b) {
    for (auto v : {Variant::grid, Variant::gliding}) {
        for (int d : {2, 5, 11}) b->Args({static_cast<long>(v), d});
    }
}

}  // namespace

BENCHMARK(histogram<true>)->Name("reference_histogram")->Apply(histogram_args)->Unit(benchmark::kMillisecond);
BENCHMARK(histogram<false>)->Name("parallel_histogram")->Apply(histogram_args)->Unit(benchmark::kMillisecond);
BENCHMARK(extraction)->Arg(static_cast<long>(Variant::grid))->Arg(static_cast<long>(Variant::gliding))
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
