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

#include "dlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dlab/errors.hpp"
#include "dlab/report_io.hpp"
#include "json.hpp"

namespace dlab {

namespace {

constexpr double pi = std::numbers::pi;

// Uniform in [0, 1) from the top 53 bits, identical on every platform.
double unit_draw(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw(std::mt19937_64 &rng, Param p) {
    const double u = unit_draw(rng);
    switch (p) {
        case Param::gamma:
        case Param::p1:
            return u;
        case Param::theta:
            return pi * u;
        default:
            return 2 * pi * u;
    }
}

double engine_value(const CaseConstraint &c, const DualityReport &r, FMeasure m) {
    if (c.quantity == CaseQuantity::distinguishability_sq) {
        const double d = d_value(r, m);
        return d * d;
    }
    return f_value(r, m);
}

nlohmann::ordered_json args_json(const CaseArgs &a) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto &[p, v] : a) j[std::string(to_string(p))] = v;
    return j;
}

}  // namespace

std::string CaseVerification::matches() const {
    if (pass_exact && pass_bound) return "both";
    if (pass_exact) return "exact";
    if (pass_bound) return "bound";
    return "none";
}

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const auto &c) { return !c.pass; }));
}

const CaseVerification &VerifyReport::at(CaseId id) const {
    for (const auto &c : cases) {
        if (c.id == id) return c;
    }
    throw std::out_of_range("case " + std::string(to_string(id)) + " not in report");
}

VerifyReport verify_closed_forms(const VerifyOptions &opts) {
    if (opts.samples < 100) {
        throw DomainError("verification needs at least 100 samples");
    }
    VerifyReport report;
    report.seed = opts.seed;
    report.samples = opts.samples;
    report.tolerance = opts.tolerance;
    report.reference = opts.reference;

    std::vector<CaseId> ids = opts.cases;
    if (ids.empty()) ids.assign(all_cases().begin(), all_cases().end());

    for (CaseId id : ids) {
        const CaseConstraint c = case_constraint(id);
        // One stream per case so that filtering cases does not change results.
        std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(id) + 1)));

        CaseVerification v;
        v.id = id;
        v.samples = opts.samples;
        v.tolerance = std::max(opts.tolerance, c.rounding_tolerance);
        for (std::size_t n = 0; n < opts.samples; ++n) {
            CaseArgs free_args;
            for (Param p : c.free) {
                free_args[p] = (p == Param::gamma && opts.gamma_override) ? *opts.gamma_override
                                                                          : draw(rng, p);
            }
            CaseArgs all_args = free_args;
            for (Param p : c.nuisance) all_args[p] = draw(rng, p);

            const double closed = eval_case(id, free_args);
            const DualityReport r = complementarity(case_scenario(id, all_args));
            const double dev_exact = std::abs(closed - engine_value(c, r, FMeasure::exact));
            const double dev_bound = std::abs(closed - engine_value(c, r, FMeasure::bound));
            if (n == 0 || dev_exact > v.max_dev_exact) {
                v.max_dev_exact = dev_exact;
                v.worst_exact = all_args;
            }
            if (n == 0 || dev_bound > v.max_dev_bound) {
                v.max_dev_bound = dev_bound;
                v.worst_bound = all_args;
            }
        }
        v.pass_exact = v.max_dev_exact <= v.tolerance;
        v.pass_bound = v.max_dev_bound <= v.tolerance;
        v.pass = opts.reference == FMeasure::exact ? v.pass_exact : v.pass_bound;
        report.cases.push_back(std::move(v));
    }
    return report;
}

std::string to_json(const VerifyReport &r, int indent) {
    nlohmann::ordered_json j;
    j["sampler"] = r.sampler;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["tolerance"] = r.tolerance;
    j["reference"] = std::string(to_string(r.reference));
    j["cases_total"] = r.cases.size();
    j["cases_failed"] = r.failures();
    auto cases = nlohmann::ordered_json::array();
    for (const auto &c : r.cases) {
        nlohmann::ordered_json e;
        e["case"] = std::string(to_string(c.id));
        e["samples"] = c.samples;
        e["tolerance"] = c.tolerance;
        e["max_dev_exact"] = c.max_dev_exact;
        e["max_dev_bound"] = c.max_dev_bound;
        e["worst_exact"] = args_json(c.worst_exact);
        e["worst_bound"] = args_json(c.worst_bound);
        e["pass_exact"] = c.pass_exact;
        e["pass_bound"] = c.pass_bound;
        e["matches"] = c.matches();
        e["pass"] = c.pass;
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    return j.dump(indent);
}

}  // namespace dlab
