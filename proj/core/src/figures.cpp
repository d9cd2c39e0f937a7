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

#include "dlab/figures.hpp"

#include <array>
#include <cctype>
#include <numbers>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array<FigureId, 17> kAll{
    FigureId::Fig2a, FigureId::Fig2b, FigureId::Fig3a, FigureId::Fig3b, FigureId::Fig3c,
    FigureId::Fig4a, FigureId::Fig4b, FigureId::Fig5a, FigureId::Fig5b, FigureId::Fig5c,
    FigureId::Fig5d, FigureId::Fig6a, FigureId::Fig6b, FigureId::Fig7a, FigureId::Fig7b,
    FigureId::Fig7c, FigureId::Fig7d,
};
constexpr std::array<std::string_view, 17> kNames{
    "fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig5a", "fig5b",
    "fig5c", "fig5d", "fig6a", "fig6b", "fig7a", "fig7b", "fig7c", "fig7d",
};

using P = Param;

Axis full_turn(Param p, std::size_t n) { return {p, 0.0, 2 * pi, n}; }
Axis unit(Param p, std::size_t n) { return {p, 0.0, 1.0, n}; }
Axis half_turn(Param p, std::size_t n) { return {p, 0.0, pi, n}; }

struct CurveFigure {
    ChannelKind channel;
    double gamma;
    Axis axis;
    double fixed_angle;  // phi for theta curves, theta for phi curves
};

// All curve figures share eta1 = pi, eta2 = pi/2, dbeta = 2 pi, ddelta = pi.
std::optional<CurveFigure> curve_figure(FigureId id, std::size_t n) {
    switch (id) {
        case FigureId::Fig2a: return CurveFigure{ChannelKind::dc, 1.0 / 8, half_turn(P::theta, n), pi / 8};
        case FigureId::Fig2b: return CurveFigure{ChannelKind::dc, 1.0 / 8, full_turn(P::phi, n), pi / 4};
        case FigureId::Fig4a: return CurveFigure{ChannelKind::adc, 1.0 / 4, half_turn(P::theta, n), 0.0};
        case FigureId::Fig4b: return CurveFigure{ChannelKind::adc, 1.0 / 4, full_turn(P::phi, n), pi / 3};
        case FigureId::Fig6a: return CurveFigure{ChannelKind::pdc, 1.0 / 4, half_turn(P::theta, n), 0.0};
        case FigureId::Fig6b: return CurveFigure{ChannelKind::pdc, 1.0 / 4, full_turn(P::phi, n), pi / 3};
        default: return std::nullopt;
    }
}

SweepSpec curve_sweep(const CurveFigure &f, double p1) {
    SweepSpec s;
    s.base.channel.kind = f.channel;
    s.bindings = {{P::p1, p1},     {P::gamma, f.gamma},    {P::eta1, pi},
                  {P::eta2, pi / 2}, {P::dbeta, 2 * pi},   {P::ddelta, pi},
                  {f.axis.param == P::theta ? P::phi : P::theta, f.fixed_angle}};
    s.axes = {f.axis};
    return s;
}

Table curve_table(const CurveFigure &f, std::size_t threads) {
    const auto sym = evaluate_grid(curve_sweep(f, 0.5), threads);
    const auto asym = evaluate_grid(curve_sweep(f, kAsymmetricP1), threads);
    Table t;
    t.columns = {std::string(to_string(f.axis.param)), "C_s2", "D_s2", "F_s", "C_a2", "D_a2",
                 "F_a", "D_s2_bound", "F_s_bound", "D_a2_bound", "F_a_bound"};
    for (std::size_t i = 0; i < sym.size(); ++i) {
        const auto &s = sym[i].report;
        const auto &a = asym[i].report;
        t.rows.push_back({f.axis.value(i), s.coherence * s.coherence, s.d_exact * s.d_exact,
                          s.f_exact, a.coherence * a.coherence, a.d_exact * a.d_exact, a.f_exact,
                          s.d_bound * s.d_bound, s.f_bound, a.d_bound * a.d_bound, a.f_bound});
    }
    return t;
}

}  // namespace

std::span<const FigureId> all_figures() {
    return kAll;
}

std::string_view to_string(FigureId id) {
    return kNames[static_cast<std::size_t>(id)];
}

std::optional<FigureId> parse_figure_id(std::string_view s) {
    std::string lower(s);
    for (auto &c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == lower) return kAll[i];
    }
    return std::nullopt;
}

SweepSpec contour_sweep(FigureId id, std::size_t n) {
    SweepSpec s;
    s.bindings = {{P::p1, 0.5}};
    auto with = [&](ChannelKind ch, Bindings extra, std::vector<Axis> axes) {
        s.base.channel.kind = ch;
        s.bindings.insert(s.bindings.end(), extra.begin(), extra.end());
        s.axes = std::move(axes);
        s.outputs = {ReportField::F_exact, ReportField::F_bound};
        return s;
    };
    const auto dc = ChannelKind::dc;
    const auto adc = ChannelKind::adc;
    const auto pdc = ChannelKind::pdc;
    switch (id) {
        case FigureId::Fig3a:
            return with(dc, {{P::dbeta, 0}, {P::ddelta, 0}}, {full_turn(P::deta, n), unit(P::gamma, n)});
        case FigureId::Fig3b:
            return with(dc, {{P::eta1, 0}, {P::eta2, pi / 3}, {P::ddelta, 0}},
                        {full_turn(P::dbeta, n), unit(P::gamma, n)});
        case FigureId::Fig3c:
            return with(dc, {{P::ddelta, 0}, {P::gamma, 0.5}},
                        {full_turn(P::deta, n), full_turn(P::dbeta, n)});
        case FigureId::Fig5a:
            return with(adc, {{P::dbeta, 0}, {P::ddelta, 0}, {P::eta1, 0}, {P::eta2, pi}},
                        {unit(P::gamma, n), half_turn(P::theta, n)});
        case FigureId::Fig5b:
            return with(adc, {{P::dbeta, 0}, {P::ddelta, 0}, {P::theta, pi}},
                        {unit(P::gamma, n), full_turn(P::deta, n)});
        case FigureId::Fig5c:
            return with(adc, {{P::ddelta, 2 * pi}, {P::eta1, 0}, {P::eta2, pi / 2}, {P::theta, pi}},
                        {unit(P::gamma, n), full_turn(P::dbeta, n)});
        case FigureId::Fig5d:
            return with(adc, {{P::ddelta, 0}, {P::gamma, 0.5}, {P::theta, pi}},
                        {full_turn(P::deta, n), full_turn(P::dbeta, n)});
        case FigureId::Fig7a:
            return with(pdc, {{P::dbeta, 0}, {P::ddelta, 0}, {P::eta1, 0}, {P::eta2, pi}},
                        {unit(P::gamma, n), half_turn(P::theta, n)});
        case FigureId::Fig7b:
            return with(pdc, {{P::dbeta, 0}, {P::ddelta, 0}, {P::theta, pi / 2}},
                        {unit(P::gamma, n), full_turn(P::deta, n)});
        case FigureId::Fig7c:
            return with(pdc,
                        {{P::ddelta, 2 * pi}, {P::eta1, 0}, {P::eta2, pi / 2}, {P::theta, pi / 2}},
                        {unit(P::gamma, n), full_turn(P::dbeta, n)});
        case FigureId::Fig7d:
            return with(pdc, {{P::ddelta, 0}, {P::gamma, 0.5}, {P::theta, pi / 2}},
                        {full_turn(P::deta, n), full_turn(P::dbeta, n)});
        default:
            throw UnknownFigure(std::string(to_string(id)) + " is not a contour figure");
    }
}

Table figure_dataset(FigureId id, const FigureOptions &opts) {
    if (static_cast<std::size_t>(id) >= kAll.size()) {
        throw UnknownFigure("unknown figure id");
    }
    if (const auto curve = curve_figure(id, opts.curve_points)) {
        return curve_table(*curve, opts.threads);
    }
    const SweepSpec s = contour_sweep(id, opts.grid_points);
    const auto points = evaluate_grid(s, opts.threads);
    const std::size_t inner = s.axes[1].count;
    Table t;
    t.columns = {std::string(to_string(s.axes[0].param)), std::string(to_string(s.axes[1].param)),
                 "F", "F_bound"};
    for (std::size_t k = 0; k < points.size(); ++k) {
        t.rows.push_back({s.axes[0].value(k / inner), s.axes[1].value(k % inner),
                          points[k].report.f_exact, points[k].report.f_bound});
    }
    return t;
}

}  // namespace dlab
