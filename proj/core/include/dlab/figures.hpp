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

#ifndef DLAB_FIGURES_HPP
#define DLAB_FIGURES_HPP

#include <optional>
#include <span>
#include <string_view>

#include "dlab/explore.hpp"

namespace dlab {

/// Datasets behind the published plots. 2/4/6 are theta or phi curves for a
/// symmetric and an asymmetric quanton (DC/ADC/PDC); 3/5/7 are contour grids.
enum class FigureId {
    Fig2a, Fig2b,
    Fig3a, Fig3b, Fig3c,
    Fig4a, Fig4b,
    Fig5a, Fig5b, Fig5c, Fig5d,
    Fig6a, Fig6b,
    Fig7a, Fig7b, Fig7c, Fig7d,
};

std::span<const FigureId> all_figures();
/// Lowercase ids, e.g. "fig3a".
std::string_view to_string(FigureId id);
/// Case-insensitive.
std::optional<FigureId> parse_figure_id(std::string_view s);

struct FigureOptions {
    std::size_t curve_points = 201;  // per curve
    std::size_t grid_points = 101;   // per contour axis
    std::size_t threads = 1;
};

/// Asymmetric series use p1 = 1/8.
inline constexpr double kAsymmetricP1 = 1.0 / 8;

/// The sweep behind one contour figure. Throws UnknownFigure for curve figures.
SweepSpec contour_sweep(FigureId id, std::size_t grid_points);

/// Curve figures have columns
///   <axis>, C_s2, D_s2, F_s, C_a2, D_a2, F_a, D_s2_bound, F_s_bound, D_a2_bound, F_a_bound
/// where s/a are the symmetric and p1 = 1/8 quantons, D is the Helstrom value
/// and the *_bound columns use the spectral bound. Contour figures have
/// columns <axis1>, <axis2>, F, F_bound.
Table figure_dataset(FigureId id, const FigureOptions &opts = {});

}  // namespace dlab

#endif
