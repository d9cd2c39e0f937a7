// Copyright 2026 The duality_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>

#include "dlab/controls.hpp"
#include "dlab/duality.hpp"
#include "dlab/explore.hpp"
#include "dlab/verify.hpp"

namespace {

constexpr double pi = std::numbers::pi;

dlab::ScenarioParams scenario(dlab::ChannelKind k) {
    dlab::ScenarioParams s;
    s.channel = {k, 0.3};
    s.quanton.p1 = 0.2;
    s.detector = {1.1, 2.3};
    s.u1 = {0.1, 0.7, 1.9, 2.2};
    s.u2 = {0.4, 3.1, 0.2, 0.5};
    return s;
}

void BM_Complementarity(benchmark::State &st) {
    const auto s = scenario(static_cast<dlab::ChannelKind>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(dlab::complementarity(s));
}
BENCHMARK(BM_Complementarity)->Arg(0)->Arg(1)->Arg(2);

void BM_JointState(benchmark::State &st) {
    const auto s = scenario(dlab::ChannelKind::adc);
    for (auto _ : st) benchmark::DoNotOptimize(dlab::joint_state(s));
}
BENCHMARK(BM_JointState);

void BM_Sweep(benchmark::State &st) {
    dlab::SweepSpec spec;
    spec.base.channel.kind = dlab::ChannelKind::pdc;
    spec.bindings = {{dlab::Param::eta2, 1.0}};
    const auto n = static_cast<std::size_t>(st.range(0));
    spec.axes = {{dlab::Param::theta, 0, pi, n}, {dlab::Param::gamma, 0, 1, n}};
    for (auto _ : st) benchmark::DoNotOptimize(dlab::run_sweep(spec, 1));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(0) * st.range(0));
}
BENCHMARK(BM_Sweep)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State &st) {
    dlab::VerifyOptions o;
    o.samples = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(dlab::verify_closed_forms(o));
}
BENCHMARK(BM_Verify)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_RobustMinimum(benchmark::State &st) {
    dlab::ControlSearchSpec s;
    s.channel = {dlab::ChannelKind::dc, 0.5};
    for (auto _ : st) {
        benchmark::DoNotOptimize(dlab::robust_min_f(s, {{dlab::Param::deta, 0.5}, {dlab::Param::dbeta, 0.2}}));
    }
}
BENCHMARK(BM_RobustMinimum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
