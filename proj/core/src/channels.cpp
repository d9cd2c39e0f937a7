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

#include "dlab/channels.hpp"

#include <cmath>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

std::string_view to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::dc:
            return "dc";
        case ChannelKind::adc:
            return "adc";
        case ChannelKind::pdc:
            return "pdc";
    }
    return "?";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view s) {
    if (s == "dc") return ChannelKind::dc;
    if (s == "adc") return ChannelKind::adc;
    if (s == "pdc") return ChannelKind::pdc;
    return std::nullopt;
}

ComplexMat2 KrausSet::completeness() const {
    ComplexMat2 sum;
    for (const auto &k : ops) {
        sum += k.adjoint() * k;
    }
    return sum;
}

void validate(const ChannelSpec &c) {
    if (!std::isfinite(c.gamma) || c.gamma < 0.0 || c.gamma > 1.0) {
        throw DomainError("gamma must lie in [0, 1], got " + std::to_string(c.gamma));
    }
}

KrausSet kraus_ops(const ChannelSpec &c) {
    validate(c);
    const double g = c.gamma;
    const Complex i(0, 1);
    switch (c.kind) {
        case ChannelKind::dc: {
            const double s = std::sqrt(g) / 2;
            return {{
                std::sqrt(1 - 3 * g / 4) * ComplexMat2::identity(),
                s * mat2(0, 1, 1, 0),
                s * mat2(0, -i, i, 0),
                s * mat2(1, 0, 0, -1),
            }};
        }
        case ChannelKind::adc:
            return {{
                mat2(1, 0, 0, std::sqrt(1 - g)),
                mat2(0, std::sqrt(g), 0, 0),
            }};
        case ChannelKind::pdc:
            return {{
                std::sqrt(1 - g) * ComplexMat2::identity(),
                std::sqrt(g) * mat2(1, 0, 0, 0),
                std::sqrt(g) * mat2(0, 0, 0, 1),
            }};
    }
    throw DomainError("unknown channel kind");
}

void check_density(const ComplexMat2 &rho, double tol) {
    if (!is_hermitian(rho, tol)) {
        throw InvalidDensity("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > tol) {
        throw InvalidDensity("density matrix trace is not 1");
    }
    if (herm_eigenvalues(rho, tol)[1] < -tol) {
        throw InvalidDensity("density matrix is not positive semidefinite");
    }
}

ComplexMat2 apply(const ChannelSpec &c, const ComplexMat2 &rho) {
    check_density(rho);
    ComplexMat2 out;
    for (const auto &k : kraus_ops(c).ops) {
        out += k * rho * k.adjoint();
    }
    return out;
}

}  // namespace dlab
