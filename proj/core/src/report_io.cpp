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

#include "dlab/report_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace dlab {

namespace {

std::array<double, 16> numeric_fields(const ScenarioParams &s, const DualityReport &r) {
    return {s.quanton.p1,   s.detector.theta, s.detector.phi, s.channel.gamma,
            s.u1.eta,       s.u2.eta,         s.u1.beta,      s.u2.beta,
            s.u1.delta,     s.u2.delta,       r.coherence,    r.d_exact,
            r.d_bound,      r.predictability, r.f_exact,      r.f_bound};
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_header() {
    std::string out;
    for (std::size_t i = 0; i < kReportColumns.size(); ++i) {
        if (i) out += ',';
        out += kReportColumns[i];
    }
    return out;
}

std::string csv_row(const ScenarioParams &s, const DualityReport &r) {
    const auto v = numeric_fields(s, r);
    std::string out;
    for (std::size_t i = 0, k = 0; i < kReportColumns.size(); ++i) {
        if (i) out += ',';
        if (kReportColumns[i] == "channel") {
            out += to_string(s.channel.kind);
        } else {
            out += format_double(v[k++]);
        }
    }
    return out;
}

std::string to_json(const ScenarioParams &s, const DualityReport &r, int indent) {
    const auto v = numeric_fields(s, r);
    nlohmann::ordered_json j;
    for (std::size_t i = 0, k = 0; i < kReportColumns.size(); ++i) {
        const std::string key(kReportColumns[i]);
        if (key == "channel") {
            j[key] = std::string(to_string(s.channel.kind));
        } else {
            j[key] = v[k++];
        }
    }
    return j.dump(indent);
}

}  // namespace dlab
