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

#include "dlab/controls.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

constexpr double pi = std::numbers::pi;

bool is_control(Param p) {
    return p == Param::deta || p == Param::dbeta || p == Param::ddelta || p == Param::eta1 ||
           p == Param::eta2;
}

ScenarioParams scenario_for(const ControlSearchSpec &s, const Bindings &assignment) {
    ScenarioParams sc;
    sc.channel = s.channel;
    sc.quanton = s.quanton;
    Bindings b = s.fixed;
    b.insert(b.end(), assignment.begin(), assignment.end());
    apply_bindings(sc, b);
    return sc;
}

Bindings to_assignment(const ControlSearchSpec &s, std::span<const double> x) {
    Bindings a;
    for (std::size_t i = 0; i < s.controls.size(); ++i) a.emplace_back(s.controls[i], x[i]);
    return a;
}

double diameter(const std::vector<std::vector<double>> &pts) {
    double d = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double sq = 0;
            for (std::size_t k = 0; k < pts[i].size(); ++k) {
                sq += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
            }
            d = std::max(d, std::sqrt(sq));
        }
    }
    return d;
}

}  // namespace

void validate(const ControlSearchSpec &s) {
    validate(s.channel);
    validate(s.quanton);
    if (!(s.threshold > 0.0 && s.threshold <= 1.0)) {
        throw DomainError("threshold must lie in (0, 1]");
    }
    if (s.theta_count < 8 || s.phi_count < 8) {
        throw DomainError("robustness grid needs at least 8 points per axis");
    }
    if (s.controls.empty()) {
        throw DomainError("at least one control variable is required");
    }
    for (std::size_t i = 0; i < s.controls.size(); ++i) {
        if (!is_control(s.controls[i])) {
            throw DomainError(std::string(to_string(s.controls[i])) + " is not a control variable");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (s.controls[j] == s.controls[i]) {
                throw DomainError("duplicate control " + std::string(to_string(s.controls[i])));
            }
        }
    }
}

RobustValue robust_min_f(const ControlSearchSpec &s, const Bindings &assignment) {
    const ScenarioParams base = scenario_for(s, assignment);
    const Axis theta{Param::theta, 0.0, pi, s.theta_count};
    const Axis phi{Param::phi, 0.0, 2 * pi, s.phi_count};
    const std::size_t n = s.theta_count * s.phi_count;

    std::vector<double> values(n);
    parallel_for(n, s.threads, [&](std::size_t k) {
        ScenarioParams sc = base;
        sc.detector = {theta.value(k / s.phi_count), phi.value(k % s.phi_count)};
        values[k] = f_value(complementarity(sc), s.measure);
    });
    // First minimum in grid order, so ties resolve the same way every run.
    const auto it = std::min_element(values.begin(), values.end());
    const std::size_t k = static_cast<std::size_t>(it - values.begin());
    return {*it, theta.value(k / s.phi_count), phi.value(k % s.phi_count)};
}

ControlResult evaluate_controls(const ControlSearchSpec &s, const Bindings &assignment) {
    validate(s);
    ControlResult r;
    r.assignment = assignment;
    r.worst = robust_min_f(s, assignment);
    r.met = r.worst.min_f >= s.threshold;
    r.evaluations = 1;
    return r;
}

SimplexResult nelder_mead(const std::function<double(std::span<const double>)> &f,
                          std::vector<double> start, double step, double diameter_tol,
                          std::size_t max_iterations) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> pts(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    auto point = [&](const std::vector<double> &c, const std::vector<double> &w, double t) {
        std::vector<double> p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = c[k] + t * (w[k] - c[k]);
        return p;
    };

    std::size_t it = 0;
    std::vector<std::size_t> order(n + 1);
    for (; it < max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> sp(n + 1);
        std::vector<double> sv(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            sp[i] = pts[order[i]];
            sv[i] = vals[order[i]];
        }
        pts = std::move(sp);
        vals = std::move(sv);
        if (diameter(pts) < diameter_tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);
        }
        const auto &worst = pts[n];
        const auto reflected = point(centroid, worst, -1.0);
        const double fr = f(reflected);
        if (fr < vals[0]) {
            const auto expanded = point(centroid, worst, -2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                pts[n] = expanded;
                vals[n] = fe;
            } else {
                pts[n] = reflected;
                vals[n] = fr;
            }
            continue;
        }
        if (fr < vals[n - 1]) {
            pts[n] = reflected;
            vals[n] = fr;
            continue;
        }
        const bool outside = fr < vals[n];
        const auto contracted = outside ? point(centroid, reflected, 0.5) : point(centroid, worst, 0.5);
        const double fc = f(contracted);
        if (fc < std::min(fr, vals[n])) {
            pts[n] = contracted;
            vals[n] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            pts[i] = point(pts[0], pts[i], 0.5);
            vals[i] = f(pts[i]);
        }
    }
    const auto best = std::min_element(vals.begin(), vals.end()) - vals.begin();
    return {pts[static_cast<std::size_t>(best)], vals[static_cast<std::size_t>(best)], it};
}

ControlResult find_controls(const ControlSearchSpec &s) {
    validate(s);
    const std::size_t dims = s.controls.size();
    std::size_t per_dim = s.coarse_count;
    if (per_dim == 0) per_dim = dims <= 2 ? 16 : dims == 3 ? 10 : 6;
    const double spacing = 2 * pi / static_cast<double>(per_dim);

    std::size_t evaluations = 0;
    auto objective = [&](std::span<const double> x) {
        ++evaluations;
        return -robust_min_f(s, to_assignment(s, x)).min_f;
    };

    std::size_t total = 1;
    for (std::size_t d = 0; d < dims; ++d) total *= per_dim;
    std::vector<double> best_x(dims, 0.0);
    double best_v = 0.0;
    std::vector<double> x(dims);
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t rem = k;
        for (std::size_t d = dims; d-- > 0;) {
            x[d] = spacing * static_cast<double>(rem % per_dim);
            rem /= per_dim;
        }
        const double v = objective(x);
        if (k == 0 || v < best_v) {
            best_v = v;
            best_x = x;
        }
    }

    std::vector<std::vector<double>> starts{best_x};
    std::mt19937_64 rng(s.seed);
    for (std::size_t r = 0; r < s.restarts; ++r) {
        std::vector<double> p(dims);
        for (auto &v : p) v = 2 * pi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        starts.push_back(std::move(p));
    }

    std::size_t iterations = 0;
    for (const auto &start : starts) {
        const SimplexResult sr = nelder_mead(objective, start, spacing / 2);
        iterations += sr.iterations;
        if (sr.value < best_v) {
            best_v = sr.value;
            best_x = sr.x;
        }
    }

    ControlResult r;
    r.assignment = to_assignment(s, best_x);
    // Re-evaluated so the reported value is exactly that of the assignment.
    r.worst = robust_min_f(s, r.assignment);
    r.met = r.worst.min_f >= s.threshold;
    r.evaluations = evaluations + 1;
    r.iterations = iterations;
    return r;
}

std::span<const TableOneRow> table_one_rows() {
    static constexpr std::array<TableOneRow, 3> kRows{{
        {ChannelKind::dc, 0.5, 0.5, 0.2, 0.0},
        {ChannelKind::adc, 0.07, pi, 0.0, 0.0},
        {ChannelKind::pdc, 0.07, pi, 0.0, 0.0},
    }};
    return kRows;
}

std::vector<TableOneAudit> audit_table_one(FMeasure measure, std::size_t grid, std::size_t threads) {
    std::vector<TableOneAudit> out;
    for (const auto &row : table_one_rows()) {
        ControlSearchSpec s;
        s.channel = {row.channel, row.gamma};
        s.quanton = {0.5};
        s.threshold = 0.9;
        s.theta_count = grid;
        s.phi_count = grid;
        s.measure = measure;
        s.threads = threads;
        TableOneAudit a;
        a.row = row;
        a.computed = evaluate_controls(
            s, {{Param::deta, row.deta}, {Param::dbeta, row.dbeta}, {Param::ddelta, row.ddelta}});
        a.agrees = a.computed.met;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace dlab
