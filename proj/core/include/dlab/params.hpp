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

#ifndef DLAB_PARAMS_HPP
#define DLAB_PARAMS_HPP

#include <optional>
#include <span>
#include <string_view>

#include "dlab/duality.hpp"

namespace dlab {

/// Named scalar knobs of a scenario. The d* entries are differences
/// (subscript 1 minus subscript 2).
enum class Param {
    p1,
    theta,
    phi,
    gamma,
    alpha1,
    alpha2,
    beta1,
    beta2,
    delta1,
    delta2,
    eta1,
    eta2,
    dbeta,
    ddelta,
    deta,
};

std::span<const Param> all_params();
std::string_view to_string(Param p);
std::optional<Param> parse_param(std::string_view s);

bool is_angle(Param p);
bool is_difference(Param p);

double get_param(const ScenarioParams &s, Param p);

/// Writes one knob. A difference keeps the subscript-1 value and moves
/// subscript 2, e.g. deta = v sets eta2 = eta1 - v.
void set_param(ScenarioParams &s, Param p, double value);

}  // namespace dlab

#endif
