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

#include "dlab/params.hpp"

#include <array>

namespace dlab {

namespace {

constexpr std::array<Param, 15> kAll{
    Param::p1,     Param::theta,  Param::phi,    Param::gamma,  Param::alpha1,
    Param::alpha2, Param::beta1,  Param::beta2,  Param::delta1, Param::delta2,
    Param::eta1,   Param::eta2,   Param::dbeta,  Param::ddelta, Param::deta,
};

constexpr std::array<std::string_view, 15> kNames{
    "p1",     "theta", "phi",   "gamma", "alpha1", "alpha2", "beta1", "beta2",
    "delta1", "delta2", "eta1", "eta2",  "dbeta",  "ddelta", "deta",
};

}  // namespace

std::span<const Param> all_params() {
    return kAll;
}

std::string_view to_string(Param p) {
    return kNames[static_cast<std::size_t>(p)];
}

std::optional<Param> parse_param(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == s) {
            return kAll[i];
        }
    }
    return std::nullopt;
}

bool is_angle(Param p) {
    return p != Param::p1 && p != Param::gamma;
}

bool is_difference(Param p) {
    return p == Param::dbeta || p == Param::ddelta || p == Param::deta;
}

double get_param(const ScenarioParams &s, Param p) {
    switch (p) {
        case Param::p1: return s.quanton.p1;
        case Param::theta: return s.detector.theta;
        case Param::phi: return s.detector.phi;
        case Param::gamma: return s.channel.gamma;
        case Param::alpha1: return s.u1.alpha;
        case Param::alpha2: return s.u2.alpha;
        case Param::beta1: return s.u1.beta;
        case Param::beta2: return s.u2.beta;
        case Param::delta1: return s.u1.delta;
        case Param::delta2: return s.u2.delta;
        case Param::eta1: return s.u1.eta;
        case Param::eta2: return s.u2.eta;
        case Param::dbeta: return s.u1.beta - s.u2.beta;
        case Param::ddelta: return s.u1.delta - s.u2.delta;
        case Param::deta: return s.u1.eta - s.u2.eta;
    }
    return 0.0;
}

void set_param(ScenarioParams &s, Param p, double value) {
    switch (p) {
        case Param::p1: s.quanton.p1 = value; break;
        case Param::theta: s.detector.theta = value; break;
        case Param::phi: s.detector.phi = value; break;
        case Param::gamma: s.channel.gamma = value; break;
        case Param::alpha1: s.u1.alpha = value; break;
        case Param::alpha2: s.u2.alpha = value; break;
        case Param::beta1: s.u1.beta = value; break;
        case Param::beta2: s.u2.beta = value; break;
        case Param::delta1: s.u1.delta = value; break;
        case Param::delta2: s.u2.delta = value; break;
        case Param::eta1: s.u1.eta = value; break;
        case Param::eta2: s.u2.eta = value; break;
        case Param::dbeta: s.u2.beta = s.u1.beta - value; break;
        case Param::ddelta: s.u2.delta = s.u1.delta - value; break;
        case Param::deta: s.u2.eta = s.u1.eta - value; break;
    }
}

}  // namespace dlab
