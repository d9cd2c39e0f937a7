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

#include "dlab/closedform.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array<CaseId, 18> kAllCases{
    CaseId::DC_GENERAL,  CaseId::DC_CASE1,   CaseId::DC_CASE2,     CaseId::DC_CASE3,
    CaseId::ADC_GENERAL, CaseId::ADC_CASE1,  CaseId::ADC_CASE2,    CaseId::ADC_CASE3,
    CaseId::ADC_CASE4,   CaseId::ADC_CASE5,  CaseId::PDC_GENERAL,  CaseId::PDC_CASE1,
    CaseId::PDC_CASE2,   CaseId::PDC_CASE2B, CaseId::PDC_CASE3,    CaseId::PDC_CASE4,
    CaseId::ASYM_D_THETA, CaseId::ASYM_D_PHI,
};

constexpr std::array<std::string_view, 18> kCaseNames{
    "DC_GENERAL",  "DC_CASE1",   "DC_CASE2",     "DC_CASE3",
    "ADC_GENERAL", "ADC_CASE1",  "ADC_CASE2",    "ADC_CASE3",
    "ADC_CASE4",   "ADC_CASE5",  "PDC_GENERAL",  "PDC_CASE1",
    "PDC_CASE2",   "PDC_CASE2B", "PDC_CASE3",    "PDC_CASE4",
    "ASYM_D_THETA", "ASYM_D_PHI",
};

std::size_t index_of(CaseId id) {
    const auto i = static_cast<std::size_t>(id);
    if (i >= kAllCases.size()) {
        throw UnknownCase("unknown case id " + std::to_string(i));
    }
    return i;
}

// Rounded coefficients of the asymmetric fits are printed to about three
// significant digits.
constexpr double kAsymRounding = 5e-3;

CaseConstraint make(ChannelKind ch, std::vector<std::pair<Param, double>> fixed,
                    std::vector<Param> free, std::vector<Param> nuisance) {
    CaseConstraint c;
    c.channel = ch;
    c.fixed = std::move(fixed);
    c.free = std::move(free);
    c.nuisance = std::move(nuisance);
    return c;
}

CaseConstraint asym(std::vector<std::pair<Param, double>> fixed, Param free) {
    CaseConstraint c;
    c.channel = ChannelKind::dc;
    c.quantity = CaseQuantity::distinguishability_sq;
    c.fixed = {{Param::p1, 1.0 / 8}, {Param::gamma, 1.0 / 8}, {Param::eta1, pi},
               {Param::eta2, pi / 2}, {Param::dbeta, 2 * pi}, {Param::ddelta, pi}};
    c.fixed.insert(c.fixed.end(), fixed.begin(), fixed.end());
    c.free = {free};
    c.rounding_tolerance = kAsymRounding;
    return c;
}

using P = Param;
using CK = ChannelKind;

double arg(const CaseArgs &args, Param p, CaseId id) {
    const auto it = args.find(p);
    if (it == args.end()) {
        throw MissingArgument(std::string(to_string(id)) + " requires argument " +
                              std::string(to_string(p)));
    }
    return it->second;
}

double dc_general(double g, double db, double dd, double e1, double e2) {
    using std::cos, std::sin;
    const double c1 = cos(e1 / 2), c2 = cos(e2 / 2), s1 = sin(e1 / 2), s2 = sin(e2 / 2);
    return 0.5 * ((2 + (1 - cos(db + dd)) * (g - 2) * g) * c1 * c1 * c2 * c2 +
                  (2 + (1 - cos(db - dd)) * (g - 2) * g) * s1 * s1 * s2 * s2) +
           0.5 * (g - 1) * (g - 1) * (1 - cos(e1) * cos(e2)) -
           0.25 * (g - 2) * g * ((cos(db) + cos(dd)) * sin(e1) * sin(e2));
}

double adc_general(double g, double th, double db, double dd, double e1, double e2) {
    using std::cos, std::sin, std::pow;
    return 1 + 9.0 / 8 * g * (g - 1) +
           g * (g - 1) / 8 *
               (3 * cos(2 * th) - 12 * cos(th) -
                8 * (cos(e1) * cos(e2) - (cos(e1) + cos(e2)) * sin(db) * sin(dd) +
                     cos(dd) * sin(e1) * sin(e2) +
                     cos(db) * (cos(dd) + cos(dd) * cos(e1) * cos(e2) + sin(e1) * sin(e2)) *
                         pow(sin(th / 2), 4)));
}

double pdc_general(double g, double th, double db, double dd, double e1, double e2) {
    using std::cos, std::sin;
    const double s = sin(th);
    return 1 + 3.0 / 8 * g * (g - 2) -
           g * (g - 2) / 8 *
               (3 * cos(2 * th) +
                cos(db) * cos(dd) *
                    (1 - cos(2 * th) -
                     2 * s * s *
                         ((cos(e1) + cos(e2)) * sin(db) * sin(dd) -
                          cos(e1) * cos(e2) * (1 + cos(db) * cos(dd)) -
                          sin(e1) * sin(e2) * (cos(db) + cos(dd)))));
}

}  // namespace

std::span<const CaseId> all_cases() {
    return kAllCases;
}

std::string_view to_string(CaseId id) {
    return kCaseNames[index_of(id)];
}

std::optional<CaseId> parse_case_id(std::string_view s) {
    for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
        if (kCaseNames[i] == s) {
            return kAllCases[i];
        }
    }
    return std::nullopt;
}

CaseConstraint case_constraint(CaseId id) {
    const std::pair<Param, double> sym{P::p1, 0.5};
    switch (id) {
        case CaseId::DC_GENERAL:
            return make(CK::dc, {sym}, {P::gamma, P::dbeta, P::ddelta, P::eta1, P::eta2},
                        {P::theta, P::phi});
        case CaseId::DC_CASE1:
            return make(CK::dc, {sym, {P::dbeta, 0}, {P::ddelta, 0}}, {P::gamma, P::deta},
                        {P::theta, P::phi, P::eta1});
        case CaseId::DC_CASE2:
            return make(CK::dc, {sym, {P::eta1, 0}, {P::eta2, pi / 3}, {P::ddelta, 0}},
                        {P::dbeta, P::gamma}, {P::theta, P::phi});
        case CaseId::DC_CASE3:
            return make(CK::dc, {sym, {P::ddelta, 0}, {P::gamma, 0.5}}, {P::deta, P::dbeta},
                        {P::theta, P::phi, P::eta1});
        case CaseId::ADC_GENERAL:
            return make(CK::adc, {sym},
                        {P::gamma, P::theta, P::dbeta, P::ddelta, P::eta1, P::eta2}, {P::phi});
        case CaseId::ADC_CASE1:
            return make(CK::adc,
                        {sym, {P::eta1, 0}, {P::eta2, pi}, {P::dbeta, 0}, {P::ddelta, 0}},
                        {P::gamma, P::theta}, {P::phi});
        case CaseId::ADC_CASE2:
            return make(CK::adc, {sym, {P::theta, pi}, {P::dbeta, 0}, {P::ddelta, 0}},
                        {P::gamma, P::deta}, {P::phi, P::eta1});
        case CaseId::ADC_CASE3:
            return make(CK::adc,
                        {sym, {P::theta, pi}, {P::eta1, 0}, {P::eta2, pi / 2}, {P::ddelta, 2 * pi}},
                        {P::gamma, P::dbeta}, {P::phi});
        case CaseId::ADC_CASE4:
            return make(CK::adc, {sym, {P::theta, pi}, {P::gamma, 0.5}, {P::ddelta, 0}},
                        {P::deta, P::dbeta}, {P::phi});
        case CaseId::ADC_CASE5:
            return make(CK::adc, {sym, {P::theta, pi / 2}, {P::gamma, 0.5}, {P::ddelta, 0}},
                        {P::deta, P::dbeta}, {P::phi});
        case CaseId::PDC_GENERAL:
            return make(CK::pdc, {sym},
                        {P::gamma, P::theta, P::dbeta, P::ddelta, P::eta1, P::eta2}, {P::phi});
        case CaseId::PDC_CASE1:
            return make(CK::pdc,
                        {sym, {P::eta1, 0}, {P::eta2, pi}, {P::dbeta, 0}, {P::ddelta, 0}},
                        {P::theta, P::gamma}, {P::phi});
        case CaseId::PDC_CASE2:
            return make(CK::pdc, {sym, {P::theta, pi / 2}, {P::dbeta, 0}, {P::ddelta, 0}},
                        {P::gamma, P::deta}, {P::phi});
        case CaseId::PDC_CASE2B:
            return make(CK::pdc, {sym, {P::theta, pi / 3}, {P::dbeta, 0}, {P::ddelta, 0}},
                        {P::gamma, P::deta}, {P::phi});
        case CaseId::PDC_CASE3:
            return make(CK::pdc,
                        {sym, {P::theta, pi / 2}, {P::eta1, 0}, {P::eta2, pi / 2},
                         {P::ddelta, 2 * pi}},
                        {P::gamma, P::dbeta}, {P::phi});
        case CaseId::PDC_CASE4:
            return make(CK::pdc, {sym, {P::theta, pi / 2}, {P::gamma, 0.5}, {P::ddelta, 0}},
                        {P::deta, P::dbeta}, {P::phi});
        case CaseId::ASYM_D_THETA:
            return asym({{P::phi, pi / 8}}, P::theta);
        case CaseId::ASYM_D_PHI:
            return asym({{P::theta, pi / 4}}, P::phi);
    }
    throw UnknownCase("unknown case id " + std::to_string(static_cast<int>(id)));
}

double eval_case(CaseId id, const CaseArgs &args) {
    const CaseConstraint c = case_constraint(id);
    for (const auto &[p, v] : args) {
        bool known = false;
        for (Param f : c.free) known = known || f == p;
        if (!known) {
            throw UnexpectedArgument(std::string(to_string(id)) + " does not take argument " +
                                     std::string(to_string(p)));
        }
    }
    using std::cos, std::sin;
    auto a = [&](Param p) { return arg(args, p, id); };

    switch (id) {
        case CaseId::DC_GENERAL:
            return dc_general(a(P::gamma), a(P::dbeta), a(P::ddelta), a(P::eta1), a(P::eta2));
        case CaseId::DC_CASE1: {
            const double g = a(P::gamma);
            return 1 - (2 * g - g * g) / 2 * (1 - cos(a(P::deta)));
        }
        case CaseId::DC_CASE2: {
            const double g = a(P::gamma);
            return 1 - (2 * g - g * g) / 8 * (5 - 3 * cos(a(P::dbeta)));
        }
        case CaseId::DC_CASE3: {
            const double de = a(P::deta), db = a(P::dbeta);
            return (7 + 3 * cos(db) * (1 + cos(de)) + 3 * cos(de)) / 16;
        }
        case CaseId::ADC_GENERAL:
            return adc_general(a(P::gamma), a(P::theta), a(P::dbeta), a(P::ddelta), a(P::eta1),
                               a(P::eta2));
        case CaseId::ADC_CASE1: {
            const double g = a(P::gamma), th = a(P::theta);
            return 0.5 * (2 - (g - g * g) * (3 - 4 * cos(th) + cos(2 * th)));
        }
        case CaseId::ADC_CASE2: {
            const double g = a(P::gamma);
            return 1 - 2 * (g - g * g) * (1 - cos(a(P::deta)));
        }
        case CaseId::ADC_CASE3: {
            const double g = a(P::gamma);
            return 1 - (g - g * g) * (3 - cos(a(P::dbeta)));
        }
        case CaseId::ADC_CASE4: {
            const double cb = cos(a(P::dbeta) / 2), ce = cos(a(P::deta) / 2);
            return cb * cb * ce * ce;
        }
        case CaseId::ADC_CASE5: {
            const double de = a(P::deta), db = a(P::dbeta);
            return (13 + cos(de) + cos(db) * (1 + cos(de))) / 16;
        }
        case CaseId::PDC_GENERAL:
            return pdc_general(a(P::gamma), a(P::theta), a(P::dbeta), a(P::ddelta), a(P::eta1),
                               a(P::eta2));
        case CaseId::PDC_CASE1: {
            const double g = a(P::gamma), th = a(P::theta);
            return 0.5 * (2 - (2 * g - g * g) * (1 - cos(2 * th)));
        }
        case CaseId::PDC_CASE2: {
            const double g = a(P::gamma);
            return 1 - (2 * g - g * g) / 2 * (1 - cos(a(P::deta)));
        }
        case CaseId::PDC_CASE2B: {
            const double g = a(P::gamma);
            return 1 - 3 * (2 * g - g * g) / 8 * (1 - cos(a(P::deta)));
        }
        case CaseId::PDC_CASE3: {
            const double g = a(P::gamma);
            return 1 - (2 * g - g * g) / 4 * (3 - cos(a(P::dbeta)));
        }
        case CaseId::PDC_CASE4: {
            const double de = a(P::deta), db = a(P::dbeta);
            return (7 + 3 * cos(de) + 3 * (1 + cos(de)) * cos(db)) / 16;
        }
        case CaseId::ASYM_D_THETA: {
            const double th = a(P::theta);
            if (th >= 0.12 && th <= 1.37) return 0.5625;
            return 0.003 * (204.1 - 4.1 * cos(2 * th) - 51.73 * sin(2 * th));
        }
        case CaseId::ASYM_D_PHI: {
            const double ph = a(P::phi);
            if (ph >= 0.98 && ph <= 5.3) return 0.006 * (107 - 28 * cos(ph) - 7 * cos(2 * ph));
            return 0.5625;
        }
    }
    throw UnknownCase("unknown case id " + std::to_string(static_cast<int>(id)));
}

ScenarioParams case_scenario(CaseId id, const CaseArgs &args) {
    const CaseConstraint c = case_constraint(id);
    ScenarioParams s;
    s.channel.kind = c.channel;
    // Raw parameters first so that differences are taken relative to them.
    auto assign = [&](bool differences) {
        for (const auto &[p, v] : c.fixed) {
            if (is_difference(p) == differences) set_param(s, p, v);
        }
        for (Param p : c.free) {
            if (is_difference(p) == differences) set_param(s, p, arg(args, p, id));
        }
        for (Param p : c.nuisance) {
            const auto it = args.find(p);
            if (it != args.end() && is_difference(p) == differences) set_param(s, p, it->second);
        }
    };
    assign(false);
    assign(true);
    return s;
}

}  // namespace dlab
