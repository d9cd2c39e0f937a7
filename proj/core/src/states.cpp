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

#include "dlab/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

constexpr double kAngleSlack = 1e-12;

bool in_range(double x, double lo, double hi) {
    return std::isfinite(x) && x >= lo - kAngleSlack && x <= hi + kAngleSlack;
}

}  // namespace

Ket2::Ket2(const Vec2 &amps, double tol) : amps_(amps) {
    const double n = norm(amps_);
    if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
        throw NormError("ket norm " + std::to_string(n) + " is not 1");
    }
}

void validate(const QuantonSpec &q) {
    if (!std::isfinite(q.p1) || q.p1 < 0.0 || q.p1 > 1.0) {
        throw DomainError("p1 must lie in [0, 1], got " + std::to_string(q.p1));
    }
}

void validate(const DetectorSpec &d) {
    if (!in_range(d.theta, 0.0, std::numbers::pi)) {
        throw DomainError("theta must lie in [0, pi], got " + std::to_string(d.theta));
    }
    if (!in_range(d.phi, 0.0, 2 * std::numbers::pi)) {
        throw DomainError("phi must lie in [0, 2pi], got " + std::to_string(d.phi));
    }
}

Ket2 quanton_ket(const QuantonSpec &q) {
    validate(q);
    return Ket2({std::sqrt(q.p1), std::sqrt(1.0 - q.p1)});
}

Ket2 detector_ket(const DetectorSpec &d) {
    validate(d);
    return Ket2({std::cos(d.theta / 2), std::polar(std::sin(d.theta / 2), d.phi)});
}

Ket2 detector_perp_ket(const DetectorSpec &d) {
    validate(d);
    return Ket2({-std::polar(std::sin(d.theta / 2), -d.phi), std::cos(d.theta / 2)});
}

ComplexMat2 density(const Ket2 &k) {
    return outer(k.amps(), k.amps());
}

ComplexMat2 density(const Vec2 &amps) {
    return density(Ket2(amps, kCheckTol));
}

}  // namespace dlab
