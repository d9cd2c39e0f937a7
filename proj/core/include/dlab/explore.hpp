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

#ifndef DLAB_EXPLORE_HPP
#define DLAB_EXPLORE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dlab/duality.hpp"
#include "dlab/params.hpp"
#include "dlab/table.hpp"

namespace dlab {

/// Worker count for grid evaluation: hardware concurrency, capped by the
/// DUALITY_LAB_THREADS environment variable when it holds a positive integer.
std::size_t default_threads();

/// Runs fn(i) for i in [0, n) on up to `threads` workers. fn must only write
/// to slot i of its output.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)> &fn);

/// One sweep axis: `count` evenly spaced values from min to max inclusive.
struct Axis {
    Param param = Param::theta;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 2;

    double value(std::size_t i) const;
};

enum class ReportField { C, D_exact, D_bound, P, F_exact, F_bound };

std::span<const ReportField> all_report_fields();
std::string_view to_string(ReportField f);
std::optional<ReportField> parse_report_field(std::string_view s);
double field_value(const DualityReport &r, ReportField f);

using Bindings = std::vector<std::pair<Param, double>>;

/// Applies bindings to a scenario, raw parameters before differences.
void apply_bindings(ScenarioParams &s, const Bindings &b);

struct SweepSpec {
    ScenarioParams base;
    Bindings bindings;
    std::vector<Axis> axes;  // 1 or 2; the first axis is the outer loop
    std::vector<ReportField> outputs;
};

/// Throws InvalidAxis if the axes are not 1-2 distinct holes of the
/// template with count >= 2 and finite bounds.
void validate(const SweepSpec &s);

struct SweepPoint {
    ScenarioParams scenario;
    DualityReport report;
};

/// Row-major grid evaluation; the result is ordered by grid index and does not
/// depend on `threads`.
std::vector<SweepPoint> evaluate_grid(const SweepSpec &s, std::size_t threads = 1);

/// Table with the scenario columns (p1 ... delta2), one column per
/// difference-valued axis, then the requested outputs (all fields if empty).
Table run_sweep(const SweepSpec &s, std::size_t threads = 1);

}  // namespace dlab

#endif
