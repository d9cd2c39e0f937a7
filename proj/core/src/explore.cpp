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

#include "dlab/explore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "dlab/errors.hpp"

namespace dlab {

std::size_t default_threads() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("DUALITY_LAB_THREADS")) {
        char *end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            n = std::min(n, static_cast<std::size_t>(cap));
        }
    }
    return n;
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)> &fn) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += threads) fn(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

double Axis::value(std::size_t i) const {
    if (i + 1 == count) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

namespace {

constexpr std::array<ReportField, 6> kFields{ReportField::C,       ReportField::D_exact,
                                             ReportField::D_bound, ReportField::P,
                                             ReportField::F_exact, ReportField::F_bound};
constexpr std::array<std::string_view, 6> kFieldNames{"C", "D_exact", "D_bound",
                                                      "P", "F_exact", "F_bound"};

// The scenario slot a knob writes to; differences move subscript 2.
Param storage_of(Param p) {
    switch (p) {
        case Param::dbeta: return Param::beta2;
        case Param::ddelta: return Param::delta2;
        case Param::deta: return Param::eta2;
        default: return p;
    }
}

}  // namespace

std::span<const ReportField> all_report_fields() {
    return kFields;
}

std::string_view to_string(ReportField f) {
    return kFieldNames[static_cast<std::size_t>(f)];
}

std::optional<ReportField> parse_report_field(std::string_view s) {
    for (std::size_t i = 0; i < kFieldNames.size(); ++i) {
        if (kFieldNames[i] == s) return kFields[i];
    }
    return std::nullopt;
}

double field_value(const DualityReport &r, ReportField f) {
    switch (f) {
        case ReportField::C: return r.coherence;
        case ReportField::D_exact: return r.d_exact;
        case ReportField::D_bound: return r.d_bound;
        case ReportField::P: return r.predictability;
        case ReportField::F_exact: return r.f_exact;
        case ReportField::F_bound: return r.f_bound;
    }
    return 0.0;
}

void apply_bindings(ScenarioParams &s, const Bindings &b) {
    for (const auto &[p, v] : b) {
        if (!is_difference(p)) set_param(s, p, v);
    }
    for (const auto &[p, v] : b) {
        if (is_difference(p)) set_param(s, p, v);
    }
}

void validate(const SweepSpec &s) {
    if (s.axes.empty() || s.axes.size() > 2) {
        throw InvalidAxis("a sweep needs one or two axes, got " + std::to_string(s.axes.size()));
    }
    for (const auto &a : s.axes) {
        const std::string name(to_string(a.param));
        if (a.count < 2) {
            throw InvalidAxis("axis " + name + " needs count >= 2");
        }
        if (!std::isfinite(a.min) || !std::isfinite(a.max)) {
            throw InvalidAxis("axis " + name + " has non-finite bounds");
        }
        for (const auto &[p, v] : s.bindings) {
            if (storage_of(p) == storage_of(a.param)) {
                throw InvalidAxis("axis " + name + " is already bound by " +
                                  std::string(to_string(p)));
            }
        }
    }
    if (s.axes.size() == 2 && storage_of(s.axes[0].param) == storage_of(s.axes[1].param)) {
        throw InvalidAxis("axes " + std::string(to_string(s.axes[0].param)) + " and " +
                          std::string(to_string(s.axes[1].param)) + " address the same parameter");
    }
}

std::vector<SweepPoint> evaluate_grid(const SweepSpec &s, std::size_t threads) {
    validate(s);
    const std::size_t inner = s.axes.size() == 2 ? s.axes[1].count : 1;
    const std::size_t n = s.axes[0].count * inner;

    std::vector<SweepPoint> out(n);
    parallel_for(n, threads, [&](std::size_t k) {
        Bindings b = s.bindings;
        b.emplace_back(s.axes[0].param, s.axes[0].value(k / inner));
        if (s.axes.size() == 2) {
            b.emplace_back(s.axes[1].param, s.axes[1].value(k % inner));
        }
        ScenarioParams sc = s.base;
        apply_bindings(sc, b);
        out[k] = {sc, complementarity(sc)};
    });
    return out;
}

Table run_sweep(const SweepSpec &s, std::size_t threads) {
    const auto points = evaluate_grid(s, threads);
    std::vector<ReportField> outputs = s.outputs;
    if (outputs.empty()) outputs.assign(kFields.begin(), kFields.end());

    Table t;
    t.columns = {"p1", "theta", "phi", "channel", "gamma", "eta1",
                 "eta2", "beta1", "beta2", "delta1", "delta2"};
    std::vector<Param> diff_axes;
    for (const auto &a : s.axes) {
        if (is_difference(a.param)) {
            diff_axes.push_back(a.param);
            t.columns.emplace_back(to_string(a.param));
        }
    }
    for (ReportField f : outputs) t.columns.emplace_back(to_string(f));

    t.rows.reserve(points.size());
    for (const auto &pt : points) {
        const auto &sc = pt.scenario;
        std::vector<Cell> row{sc.quanton.p1, sc.detector.theta, sc.detector.phi,
                              std::string(to_string(sc.channel.kind)),
                              sc.channel.gamma, sc.u1.eta, sc.u2.eta, sc.u1.beta, sc.u2.beta,
                              sc.u1.delta, sc.u2.delta};
        for (Param p : diff_axes) row.emplace_back(get_param(sc, p));
        for (ReportField f : outputs) row.emplace_back(field_value(pt.report, f));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace dlab
