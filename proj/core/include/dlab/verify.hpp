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

#ifndef DLAB_VERIFY_HPP
#define DLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlab/closedform.hpp"
#include "dlab/duality.hpp"

namespace dlab {

/// Identifier of the sampler recorded in every report.
inline constexpr const char *kSamplerId = "mt19937_64/53bit";

struct VerifyOptions {
    double tolerance = 1e-9;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    /// Distinguishability measure that decides pass/fail. Deviations against
    /// both measures are always reported.
    FMeasure reference = FMeasure::exact;
    /// Replaces gamma in every case where gamma is a free variable.
    std::optional<double> gamma_override;
    /// Empty means every registered case.
    std::vector<CaseId> cases;
};

struct CaseVerification {
    CaseId id = CaseId::DC_GENERAL;
    std::size_t samples = 0;
    double tolerance = 0.0;  // max(requested, rounding floor of the case)
    double max_dev_exact = 0.0;
    double max_dev_bound = 0.0;
    CaseArgs worst_exact;  // free and nuisance values at the worst point
    CaseArgs worst_bound;
    bool pass_exact = false;
    bool pass_bound = false;
    bool pass = false;  // against the reference measure

    /// "exact", "bound", "both" or "none".
    std::string matches() const;
};

struct VerifyReport {
    std::string sampler = kSamplerId;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tolerance = 0.0;
    FMeasure reference = FMeasure::exact;
    std::vector<CaseVerification> cases;

    std::size_t failures() const;
    const CaseVerification &at(CaseId id) const;
};

/// Compares every closed form with the engine on random draws of its free
/// (and nuisance) variables: gamma in [0, 1], theta in [0, pi], every other
/// angle in [0, 2 pi]. Deterministic in (options, seed). Throws DomainError if
/// samples < 100.
VerifyReport verify_closed_forms(const VerifyOptions &opts);

std::string to_json(const VerifyReport &r, int indent = 2);

}  // namespace dlab

#endif
