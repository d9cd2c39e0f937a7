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

#ifndef DLAB_REPORT_IO_HPP
#define DLAB_REPORT_IO_HPP

#include <array>
#include <string>
#include <string_view>

#include "dlab/duality.hpp"

namespace dlab {

/// Fixed column order of a serialized evaluation.
inline constexpr std::array<std::string_view, 17> kReportColumns{
    "p1",     "theta",  "phi", "channel", "gamma",   "eta1",    "eta2",    "beta1",   "beta2",
    "delta1", "delta2", "C",   "D_exact", "D_bound", "P",       "F_exact", "F_bound",
};

/// %.17g, i.e. enough digits to round-trip a double.
std::string format_double(double x);

std::string csv_header();
std::string csv_row(const ScenarioParams &s, const DualityReport &r);

/// Flat JSON object with the keys of kReportColumns in that order.
std::string to_json(const ScenarioParams &s, const DualityReport &r, int indent = 2);

}  // namespace dlab

#endif
