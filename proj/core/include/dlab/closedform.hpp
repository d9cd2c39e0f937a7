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

#ifndef DLAB_CLOSEDFORM_HPP
#define DLAB_CLOSEDFORM_HPP

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dlab/channels.hpp"
#include "dlab/params.hpp"

namespace dlab {

/// Analytic complementarity expressions for the symmetric quanton (and the
/// two asymmetric distinguishability fits), keyed by regime.
enum class CaseId {
    DC_GENERAL,
    DC_CASE1,
    DC_CASE2,
    DC_CASE3,
    ADC_GENERAL,
    ADC_CASE1,
    ADC_CASE2,
    ADC_CASE3,
    ADC_CASE4,
    ADC_CASE5,
    PDC_GENERAL,
    PDC_CASE1,
    PDC_CASE2,
    PDC_CASE2B,
    PDC_CASE3,
    PDC_CASE4,
    ASYM_D_THETA,
    ASYM_D_PHI,
};

std::span<const CaseId> all_cases();
std::string_view to_string(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view s);

/// What an expression evaluates to.
enum class CaseQuantity {
    complementarity,          // F = C^2 + D^2
    distinguishability_sq,    // D^2
};

/// The regime a closed form was derived in.
struct CaseConstraint {
    ChannelKind channel = ChannelKind::dc;
    CaseQuantity quantity = CaseQuantity::complementarity;
    /// Applied in order; raw parameters precede differences.
    std::vector<std::pair<Param, double>> fixed;
    /// Arguments of eval_case.
    std::vector<Param> free;
    /// Parameters the expression claims not to depend on. The verification
    /// harness randomizes them.
    std::vector<Param> nuisance;
    /// Comparison tolerance floor; nonzero only for fits printed with rounded
    /// coefficients.
    double rounding_tolerance = 0.0;
};

using CaseArgs = std::map<Param, double>;

/// Throws UnknownCase for an id outside the registry.
CaseConstraint case_constraint(CaseId id);

/// Evaluates the expression as printed, with no clamping: unphysical gamma
/// (e.g. 2) is accepted. `args` must hold exactly the free parameters of the
/// case; throws MissingArgument or UnexpectedArgument otherwise.
double eval_case(CaseId id, const CaseArgs &args);

/// The scenario a case describes for the given free-variable values, with
/// every unmentioned parameter zero.
ScenarioParams case_scenario(CaseId id, const CaseArgs &args);

}  // namespace dlab

#endif
