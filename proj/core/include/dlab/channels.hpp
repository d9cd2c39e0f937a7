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

#ifndef DLAB_CHANNELS_HPP
#define DLAB_CHANNELS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "dlab/qmat.hpp"

namespace dlab {

enum class ChannelKind { dc, adc, pdc };

/// Serialized as "dc", "adc", "pdc".
std::string_view to_string(ChannelKind k);
std::optional<ChannelKind> parse_channel_kind(std::string_view s);

/// A detector noise channel: depolarizing, amplitude damping or phase damping
/// with strength gamma in [0, 1].
struct ChannelSpec {
    ChannelKind kind = ChannelKind::dc;
    double gamma = 0.0;
};

struct KrausSet {
    std::vector<ComplexMat2> ops;

    /// Sum_i K_i^dagger K_i.
    ComplexMat2 completeness() const;
};

void validate(const ChannelSpec &c);

/// DC:  {sqrt(1-3g/4) I, sqrt(g)/2 X, sqrt(g)/2 Y, sqrt(g)/2 Z}
/// ADC: {diag(1, sqrt(1-g)), sqrt(g)|0><1|}
/// PDC: {sqrt(1-g) I, sqrt(g) diag(1,0), sqrt(g) diag(0,1)}
KrausSet kraus_ops(const ChannelSpec &c);

/// Throws InvalidDensity unless rho is Hermitian, unit trace and positive
/// semidefinite within `tol`.
void check_density(const ComplexMat2 &rho, double tol = kCheckTol);

/// Sum_i K_i rho K_i^dagger.
ComplexMat2 apply(const ChannelSpec &c, const ComplexMat2 &rho);

}  // namespace dlab

#endif
