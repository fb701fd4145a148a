// hbf - Tensor-based hybrid beamforming design and simulation library
// Copyright (C) 2026 The hbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Serial reference maps vs. the OpenMP kernels, at desk and full scale.
//
//   hbf_bench --benchmark_filter=Precoder
//   OMP_NUM_THREADS=8 hbf_bench

#include <benchmark/benchmark.h>

#include "hbf/channel.hpp"
#include "hbf/kernels.hpp"
#include "hbf/tucker.hpp"

namespace
{
    struct Fixture
    {
        hbf::ComplexTensor3 h;
        hbf::ComplexVector w, f;
        hbf::ComplexMatrix wm, fm;
    };

    Fixture make(const benchmark::State &state)
    {
        const auto n = static_cast<hbf::Index>(state.range(0));
        const auto m = static_cast<hbf::Index>(state.range(1));
        hbf::ChannelParams p{n, n, m, 5, 10, 10.0, 0.5};
        hbf::Rng rng(1);
        Fixture x;
        x.h = hbf::generate_channel(p, rng);
        x.w = hbf::random_constant_modulus(n, rng);
        x.f = hbf::random_constant_modulus(n, rng);
        x.wm.resize(n, 4);
        x.fm.resize(n, 4);
        for (int k = 0; k < 4; ++k)
        {
            x.wm.col(k) = hbf::random_constant_modulus(n, rng);
            x.fm.col(k) = hbf::random_constant_modulus(n, rng);
        }
        return x;
    }

    void sizes(benchmark::internal::Benchmark *b)
    {
        b->Args({16, 64})->Args({64, 256})->Args({64, 1024})->Unit(benchmark::kMillisecond);
    }

    template <auto Fn>
    void power_step(benchmark::State &state)
    {
        const Fixture x = make(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(Fn(x.h, x.w, x.f));
    }

    void deflate_kernel(benchmark::State &state)
    {
        const Fixture x = make(state);
        for (auto _ : state)
        {
            state.PauseTiming();
            hbf::ComplexTensor3 h = x.h;
            state.ResumeTiming();
            hbf::kernels::deflate(h, x.w, x.f);
            benchmark::DoNotOptimize(h.data().data());
        }
    }

    void deflate_reference(benchmark::State &state)
    {
        const Fixture x = make(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(hbf::reference::deflate(x.h, x.w, x.f));
    }

    template <auto Fn>
    void effective(benchmark::State &state)
    {
        const Fixture x = make(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(Fn(x.h, x.wm, x.fm));
    }

    template <auto Fn>
    void covariance(benchmark::State &state)
    {
        const Fixture x = make(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(Fn(x.h));
    }
}

BENCHMARK(power_step<hbf::reference::combiner_power_step>)->Name("CombinerStep/reference")->Apply(sizes);
BENCHMARK(power_step<hbf::kernels::combiner_power_step>)->Name("CombinerStep/omp")->Apply(sizes);
BENCHMARK(power_step<hbf::reference::precoder_power_step>)->Name("PrecoderStep/reference")->Apply(sizes);
BENCHMARK(power_step<hbf::kernels::precoder_power_step>)->Name("PrecoderStep/omp")->Apply(sizes);
BENCHMARK(power_step<hbf::reference::stream_gain>)->Name("StreamGain/reference")->Apply(sizes);
BENCHMARK(power_step<hbf::kernels::stream_gain>)->Name("StreamGain/omp")->Apply(sizes);
BENCHMARK(deflate_reference)->Name("Deflate/reference")->Apply(sizes);
BENCHMARK(deflate_kernel)->Name("Deflate/omp")->Apply(sizes);
BENCHMARK(effective<hbf::reference::effective_channels>)->Name("EffectiveChannels/reference")->Apply(sizes);
BENCHMARK(effective<hbf::kernels::effective_channels>)->Name("EffectiveChannels/omp")->Apply(sizes);
BENCHMARK(covariance<hbf::reference::mean_transmit_covariance>)->Name("TxCovariance/reference")->Apply(sizes);
BENCHMARK(covariance<hbf::kernels::mean_transmit_covariance>)->Name("TxCovariance/omp")->Apply(sizes);

BENCHMARK_MAIN();
