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

#ifndef DLAB_DUALITY_HPP
#define DLAB_DUALITY_HPP

#include <optional>
#include <string_view>

#include "dlab/channels.hpp"
#include "dlab/qmat.hpp"
#include "dlab/states.hpp"

namespace dlab {

/// Parameters of one path-conditioned detector unitary
///
///   U = [ e^{i(a - b/2 - d/2)} cos(e/2)   -e^{i(a - b/2 + d/2)} sin(e/2) ]
///       [ e^{i(a + b/2 - d/2)} sin(e/2)    e^{i(a + b/2 + d/2)} cos(e/2) ]
///
/// with a = alpha, b = beta, d = delta, e = eta. alpha is a global phase and
/// never affects an observable.
struct UnitaryParams {
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double eta = 0.0;
};

/// Everything the complementarity function depends on.
struct ScenarioParams {
    QuantonSpec quanton;
    DetectorSpec detector;
    ChannelSpec channel;
    UnitaryParams u1;
    UnitaryParams u2;
};

void validate(const ScenarioParams &s);

struct DualityReport {
    double coherence = 0.0;
    double d_exact = 0.0;  // Helstrom trace norm ||p1 rho1 - p2 rho2||
    double d_bound = 0.0;  // spectral upper bound on d_exact
    double predictability = 0.0;
    double f_exact = 0.0;  // C^2 + d_exact^2
    double f_bound = 0.0;  // C^2 + d_bound^2
};

/// Which distinguishability figure a complementarity value is built from.
enum class FMeasure { exact, bound };

std::string_view to_string(FMeasure m);
std::optional<FMeasure> parse_f_measure(std::string_view s);

double f_value(const DualityReport &r, FMeasure m);
double d_value(const DualityReport &r, FMeasure m);

ComplexMat2 build_unitary(const UnitaryParams &u);

/// Detector state after the channel, before the interaction.
ComplexMat2 noisy_detector_state(const ScenarioParams &s);

/// U_i^dagger rho~ U_i for path i in {1, 2}.
ComplexMat2 conditional_detector_state(const ScenarioParams &s, int path);

/// sum_ij sqrt(p_i p_j) |psi_i><psi_j| (x) U_i^dagger rho~ U_j.
ComplexMat4 joint_state(const ScenarioParams &s);

/// Quanton marginal built entrywise from Tr(U_i^dagger rho~ U_j), without
/// forming the joint state.
ComplexMat2 reduced_quanton_state(const ScenarioParams &s);

/// l1 coherence in the path basis: |rho_12| + |rho_21|.
double l1_coherence(const ComplexMat2 &rho);

/// 2 sqrt(p1 p2) |sum_k D_k <d_k| U2 U1^dagger |d_k>|.
double coherence(const ScenarioParams &s);

double distinguishability_exact(const ScenarioParams &s);

/// sum_k D_k sqrt(1 - 4 p1 p2 |<d_k| U2 U1^dagger |d_k>|^2). When the noisy
/// detector state is maximally mixed the eigenbasis {|d0>, |d0_perp>} is used.
double distinguishability_bound(const ScenarioParams &s);

DualityReport complementarity(const ScenarioParams &s);

}  // namespace dlab

#endif
