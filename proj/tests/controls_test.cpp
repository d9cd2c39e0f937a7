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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dlab/closedform.hpp"
#include "dlab/controls.hpp"
#include "dlab/errors.hpp"

namespace {

using dlab::ChannelKind;
using dlab::Param;
constexpr double pi = std::numbers::pi;

dlab::ControlSearchSpec dc_spec() {
    dlab::ControlSearchSpec s;
    s.channel = {ChannelKind::dc, 0.5};
    s.controls = {Param::deta, Param::dbeta};
    s.fixed = {{Param::ddelta, 0.0}};
    s.theta_count = s.phi_count = 16;
    return s;
}

// Worst case over the grid recomputed point by point.
double brute_min(const dlab::ControlSearchSpec &s, const dlab::Bindings &a) {
    double lo = 2;
    for (std::size_t i = 0; i < s.theta_count; ++i) {
        for (std::size_t j = 0; j < s.phi_count; ++j) {
            dlab::ScenarioParams sc;
            sc.channel = s.channel;
            sc.quanton = s.quanton;
            auto b = s.fixed;
            b.insert(b.end(), a.begin(), a.end());
            dlab::apply_bindings(sc, b);
            sc.detector = {pi * static_cast<double>(i) / static_cast<double>(s.theta_count - 1),
                           2 * pi * static_cast<double>(j) / static_cast<double>(s.phi_count - 1)};
            lo = std::min(lo, dlab::complementarity(sc).f_exact);
        }
    }
    return lo;
}

TEST(NelderMead, FindsQuadraticMinimum) {
    const auto r = dlab::nelder_mead(
        [](std::span<const double> x) { return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2) + 0.5; },
        {0.0, 0.0}, 0.5);
    EXPECT_NEAR(r.x[0], 1.0, 1e-5);
    EXPECT_NEAR(r.x[1], -2.0, 1e-5);
    EXPECT_NEAR(r.value, 0.5, 1e-10);
    EXPECT_LT(r.iterations, 500u);
}

TEST(NelderMead, RosenbrockValley) {
    const auto r = dlab::nelder_mead(
        [](std::span<const double> x) {
            return 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]);
        },
        {-1.2, 1.0}, 0.5, 1e-10, 5000);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}

TEST(NelderMead, StopsAtIterationCap) {
    const auto r = dlab::nelder_mead([](std::span<const double> x) { return x[0]; }, {0.0}, 1.0, 1e-6, 25);
    EXPECT_EQ(r.iterations, 25u);
}

TEST(Controls, ValidationRejectsBadSpecs) {
    auto s = dc_spec();
    s.threshold = 0;
    EXPECT_THROW(dlab::validate(s), dlab::DomainError);
    s = dc_spec();
    s.threshold = 1.01;
    EXPECT_THROW(dlab::validate(s), dlab::DomainError);
    s = dc_spec();
    s.theta_count = 7;
    EXPECT_THROW(dlab::validate(s), dlab::DomainError);
    s = dc_spec();
    s.controls = {Param::theta};
    EXPECT_THROW(dlab::validate(s), dlab::DomainError);
    s = dc_spec();
    s.controls = {Param::deta, Param::deta};
    EXPECT_THROW(dlab::validate(s), dlab::DomainError);
}

TEST(Controls, RobustMinimumMatchesBruteForce) {
    const auto s = dc_spec();
    const dlab::Bindings a{{Param::deta, 0.5}, {Param::dbeta, 0.2}};
    EXPECT_NEAR(dlab::robust_min_f(s, a).min_f, brute_min(s, a), 1e-15);
    auto adc = s;
    adc.channel = {ChannelKind::adc, 0.07};
    EXPECT_NEAR(dlab::robust_min_f(adc, {{Param::deta, pi}, {Param::dbeta, 0}}).min_f,
                brute_min(adc, {{Param::deta, pi}, {Param::dbeta, 0}}), 1e-15);
}

TEST(Controls, DepolarizingTableRowMeetsThreshold) {
    auto s = dc_spec();
    s.theta_count = s.phi_count = 64;
    const auto r = dlab::evaluate_controls(s, {{Param::deta, 0.5}, {Param::dbeta, 0.2}});
    EXPECT_TRUE(r.met);
    const double closed = dlab::eval_case(dlab::CaseId::DC_CASE3, {{Param::deta, 0.5}, {Param::dbeta, 0.2}});
    EXPECT_NEAR(r.worst.min_f, closed, 1e-12);
    EXPECT_NEAR(closed, 0.947, 5e-4);
}

TEST(Controls, SearchResultIsFreshlyEvaluated) {
    for (auto kind : {ChannelKind::dc, ChannelKind::adc, ChannelKind::pdc}) {
        auto s = dc_spec();
        s.channel = {kind, 0.3};
        s.controls = {Param::dbeta, Param::ddelta};
        s.fixed = {{Param::eta1, 0.0}, {Param::eta2, 1.0}};
        s.theta_count = s.phi_count = 8;
        const auto r = dlab::find_controls(s);
        EXPECT_NEAR(r.worst.min_f, brute_min(s, r.assignment), 1e-12);
        EXPECT_EQ(r.met, r.worst.min_f >= s.threshold);
        EXPECT_GT(r.evaluations, 1u);
    }
}

TEST(Controls, SearchIsDeterministic) {
    auto s = dc_spec();
    s.controls = {Param::eta1, Param::eta2};
    s.fixed = {{Param::dbeta, 1.0}, {Param::ddelta, 0.5}};
    s.seed = 3;
    const auto a = dlab::find_controls(s);
    const auto b = dlab::find_controls(s);
    ASSERT_EQ(a.assignment.size(), 2u);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.worst.min_f, b.worst.min_f);
    EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Controls, NoiselessDetectorIsAlwaysSaturated) {
    for (auto kind : {ChannelKind::dc, ChannelKind::adc, ChannelKind::pdc}) {
        auto s = dc_spec();
        s.channel = {kind, 0.0};
        s.theta_count = s.phi_count = 8;
        EXPECT_NEAR(dlab::evaluate_controls(s, {{Param::deta, 1.3}, {Param::dbeta, 4.0}}).worst.min_f, 1.0, 1e-12);
        EXPECT_NEAR(dlab::find_controls(s).worst.min_f, 1.0, 1e-12);
    }
}

TEST(Controls, SearchNeverWorseThanCoarseOptimum) {
    auto s = dc_spec();
    s.channel = {ChannelKind::adc, 0.4};
    s.controls = {Param::dbeta};
    s.fixed = {{Param::eta1, 0.0}, {Param::eta2, 2.0}, {Param::ddelta, 1.0}};
    s.theta_count = s.phi_count = 8;
    s.coarse_count = 8;
    const auto r = dlab::find_controls(s);
    for (int k = 0; k < 8; ++k) {
        EXPECT_GE(r.worst.min_f + 1e-15, dlab::robust_min_f(s, {{Param::dbeta, 2 * pi * k / 8}}).min_f);
    }
}

TEST(Controls, TableOneAuditReportsComputedMinima) {
    const auto rows = dlab::audit_table_one(dlab::FMeasure::exact, 64);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_TRUE(rows[0].agrees);
    EXPECT_NEAR(rows[0].computed.worst.min_f, 0.947, 5e-4);
    EXPECT_FALSE(rows[1].agrees);
    EXPECT_NEAR(rows[1].computed.worst.min_f, 0.7396, 1e-4);
    EXPECT_NEAR(rows[1].computed.worst.theta, pi, 1e-12);
    EXPECT_FALSE(rows[2].agrees);
    EXPECT_NEAR(rows[2].computed.worst.min_f, 0.865, 2e-3);
}

}  // namespace
