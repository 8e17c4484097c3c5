// cpass - center-fed pinching-antenna system simulator
// Copyright (C) 2026 the cpass authors
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

#include <benchmark/benchmark.h>

#include "cpass/analysis.hpp"
#include "cpass/rng.hpp"
#include "cpass/wmmse.hpp"

using namespace cpass;

static void BM_SolveQuartic(benchmark::State& state) {
    Rng rng(1);
    std::vector<QuarticCoeffs> coeffs(512);
    for (auto& c : coeffs) {
        c = {rng.uniform(0.5, 10.0), rng.uniform(-10, 10), rng.uniform(-10, 10),
             rng.uniform(-10, 10), rng.uniform(-10, 10)};
    }
    size_t i = 0;
    for (auto _ : state) {
        RootSet rs = solve_quartic(coeffs[i++ & 511]);
        benchmark::DoNotOptimize(rs);
    }
}
BENCHMARK(BM_SolveQuartic);

static void BM_BrentMinimize(benchmark::State& state) {
    auto f = [](double x) { return std::sin(3.0 * x) + 0.3 * (x - 0.7) * (x - 0.7); };
    for (auto _ : state) {
        BrentResult r = brent_minimize(f, {0.0, kPi / 2.0, 1e-4, 100});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BrentMinimize);

static void BM_BuildChannels(benchmark::State& state) {
    SystemConfig cfg;
    cfg.M = static_cast<int>(state.range(0));
    Layout lay = build_layout(cfg, Architecture::CenterFed, 7);
    PinchingState st = PinchingState::even_split(cfg.M);
    for (auto _ : state) {
        ChannelSet ch = build_channels(lay, st, cfg);
        benchmark::DoNotOptimize(ch);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildChannels)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void BM_PrecoderUpdate(benchmark::State& state) {
    SystemConfig cfg;
    cfg.M = static_cast<int>(state.range(0));
    Layout lay = build_layout(cfg, Architecture::CenterFed, 7);
    WmmseOptimizer opt(cfg, lay);
    BeamformerState st = opt.initial_state();
    ChannelSet ch = opt.channels(st);
    AuxState aux = update_aux(ch.H_eff, st.W, cfg.N0);
    for (auto _ : state) {
        PrecoderUpdate pu = update_precoder(ch.H_eff, aux, cfg.P_T);
        benchmark::DoNotOptimize(pu);
    }
}
BENCHMARK(BM_PrecoderUpdate)->RangeMultiplier(2)->Range(2, 16);

static void BM_OptimizeIteration(benchmark::State& state) {
    SystemConfig cfg;
    cfg.M = static_cast<int>(state.range(0));
    Layout lay = build_layout(cfg, Architecture::CenterFed, 7);
    OptimizerOptions opts;
    opts.max_iter = 1;
    opts.eps = 0.0;
    WmmseOptimizer opt(cfg, lay, opts);
    BeamformerState init = opt.initial_state();
    for (auto _ : state) {
        auto out = opt.optimize(init);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_OptimizeIteration)->RangeMultiplier(2)->Range(2, 8)->Unit(benchmark::kMillisecond);

static void BM_PhaseAlign(benchmark::State& state) {
    SystemConfig cfg;
    cfg.M = static_cast<int>(state.range(0));
    cfg.K = 1;
    Layout lay = build_layout(cfg, Architecture::CenterFed, 7);
    PhaseAlignOptions opts;
    opts.n_grid = 401;
    opts.restarts = 0;
    for (auto _ : state) {
        PhaseAlignResult r = phase_align_positions(lay, cfg, opts);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PhaseAlign)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
