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

#include "dlab/duality.hpp"

#include <algorithm>
#include <cmath>

#include "dlab/errors.hpp"

namespace dlab {

std::string_view to_string(FMeasure m) {
    return m == FMeasure::exact ? "exact" : "bound";
}

std::optional<FMeasure> parse_f_measure(std::string_view s) {
    if (s == "exact") return FMeasure::exact;
    if (s == "bound") return FMeasure::bound;
    return std::nullopt;
}

double f_value(const DualityReport &r, FMeasure m) {
    return m == FMeasure::exact ? r.f_exact : r.f_bound;
}

double d_value(const DualityReport &r, FMeasure m) {
    return m == FMeasure::exact ? r.d_exact : r.d_bound;
}

void validate(const ScenarioParams &s) {
    validate(s.quanton);
    validate(s.detector);
    validate(s.channel);
    for (const auto *u : {&s.u1, &s.u2}) {
        if (!std::isfinite(u->alpha) || !std::isfinite(u->beta) || !std::isfinite(u->delta) ||
            !std::isfinite(u->eta)) {
            throw DomainError("unitary parameters must be finite");
        }
    }
}

ComplexMat2 build_unitary(const UnitaryParams &u) {
    const double c = std::cos(u.eta / 2);
    const double s = std::sin(u.eta / 2);
    const double a = u.alpha;
    const double hb = u.beta / 2;
    const double hd = u.delta / 2;
    return mat2(std::polar(c, a - hb - hd), -std::polar(s, a - hb + hd),
                std::polar(s, a + hb - hd), std::polar(c, a + hb + hd));
}

namespace {

// Quantities shared by every observable of one scenario.
struct Prepared {
    double p1;
    double p2;
    ComplexMat2 noisy;  // rho~
    ComplexMat2 u1;
    ComplexMat2 u2;
    EigenPair2 eig;     // of rho~
    ComplexMat2 w;      // U2 U1^dagger
};

Prepared prepare(const ScenarioParams &s) {
    validate(s);
    Prepared p;
    p.p1 = s.quanton.p1;
    p.p2 = 1.0 - s.quanton.p1;
    p.noisy = apply(s.channel, density(detector_ket(s.detector)));
    p.u1 = build_unitary(s.u1);
    p.u2 = build_unitary(s.u2);
    p.eig = herm_eigen(p.noisy, {detector_ket(s.detector).amps(), detector_perp_ket(s.detector).amps()});
    p.w = p.u2 * p.u1.adjoint();
    return p;
}

double coherence_of(const Prepared &p) {
    Complex sum = 0;
    for (std::size_t k = 0; k < 2; ++k) {
        const auto &v = p.eig.vectors[k];
        sum += p.eig.values[k] * inner(v, p.w * v);
    }
    return 2 * std::sqrt(p.p1 * p.p2) * std::abs(sum);
}

double d_exact_of(const Prepared &p) {
    const ComplexMat2 rho1 = p.u1.adjoint() * p.noisy * p.u1;
    const ComplexMat2 rho2 = p.u2.adjoint() * p.noisy * p.u2;
    return trace_norm(p.p1 * rho1 - p.p2 * rho2);
}

double d_bound_of(const Prepared &p) {
    double sum = 0;
    for (std::size_t k = 0; k < 2; ++k) {
        const auto &v = p.eig.vectors[k];
        const double overlap = std::norm(inner(v, p.w * v));
        // Eigenvalues of a density matrix can dip below zero by round-off.
        const double weight = std::max(p.eig.values[k], 0.0);
        sum += weight * std::sqrt(std::max(0.0, 1.0 - 4 * p.p1 * p.p2 * overlap));
    }
    return sum;
}

}  // namespace

ComplexMat2 noisy_detector_state(const ScenarioParams &s) {
    validate(s);
    return apply(s.channel, density(detector_ket(s.detector)));
}

ComplexMat2 conditional_detector_state(const ScenarioParams &s, int path) {
    if (path != 1 && path != 2) {
        throw DomainError("path index must be 1 or 2");
    }
    const ComplexMat2 u = build_unitary(path == 1 ? s.u1 : s.u2);
    return u.adjoint() * noisy_detector_state(s) * u;
}

ComplexMat4 joint_state(const ScenarioParams &s) {
    const ComplexMat2 noisy = noisy_detector_state(s);
    const std::array<ComplexMat2, 2> u{build_unitary(s.u1), build_unitary(s.u2)};
    const std::array<double, 2> amp{std::sqrt(s.quanton.p1), std::sqrt(1.0 - s.quanton.p1)};
    ComplexMat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            ComplexMat2 path;
            path(i, j) = amp[i] * amp[j];
            out += kron(path, u[i].adjoint() * noisy * u[j]);
        }
    }
    return out;
}

ComplexMat2 reduced_quanton_state(const ScenarioParams &s) {
    const ComplexMat2 noisy = noisy_detector_state(s);
    const std::array<ComplexMat2, 2> u{build_unitary(s.u1), build_unitary(s.u2)};
    const std::array<double, 2> amp{std::sqrt(s.quanton.p1), std::sqrt(1.0 - s.quanton.p1)};
    ComplexMat2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = amp[i] * amp[j] * (u[i].adjoint() * noisy * u[j]).trace();
        }
    }
    return out;
}

double l1_coherence(const ComplexMat2 &rho) {
    return std::abs(rho(0, 1)) + std::abs(rho(1, 0));
}

double coherence(const ScenarioParams &s) {
    return coherence_of(prepare(s));
}

double distinguishability_exact(const ScenarioParams &s) {
    return d_exact_of(prepare(s));
}

double distinguishability_bound(const ScenarioParams &s) {
    return d_bound_of(prepare(s));
}

DualityReport complementarity(const ScenarioParams &s) {
    const Prepared p = prepare(s);
    DualityReport r;
    r.coherence = coherence_of(p);
    r.d_exact = d_exact_of(p);
    r.d_bound = d_bound_of(p);
    r.predictability = std::abs(p.p1 - p.p2);
    r.f_exact = r.coherence * r.coherence + r.d_exact * r.d_exact;
    r.f_bound = r.coherence * r.coherence + r.d_bound * r.d_bound;
    return r;
}

}  // namespace dlab
