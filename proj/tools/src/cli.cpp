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

#include "dlab_cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dlab/closedform.hpp"
#include "dlab/controls.hpp"
#include "dlab/errors.hpp"
#include "dlab/explore.hpp"
#include "dlab/figures.hpp"
#include "dlab/report_io.hpp"
#include "dlab/verify.hpp"
#include "json.hpp"

namespace dlab::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::set<std::string> kSubcommands{"eval", "sweep", "figure", "verify", "find-controls"};
const std::set<std::string> kValuedGlobals{"--config", "--format", "--out"};
const std::set<std::string> kSwitches{"degrees", "gamma-zero", "table1"};

// A shorthand and its raw pair: an explicit flag from one side hides config
// values from the other.
const std::map<std::string, std::vector<std::string>> kShadows{
    {"dbeta", {"beta1", "beta2"}},   {"beta1", {"dbeta"}},  {"beta2", {"dbeta"}},
    {"ddelta", {"delta1", "delta2"}}, {"delta1", {"ddelta"}}, {"delta2", {"ddelta"}},
    {"deta", {"eta1", "eta2"}},       {"eta1", {"deta"}},    {"eta2", {"deta"}},
};

std::string trim(std::string s) {
    const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_number(const std::string &text, const std::string &flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception &) {
        throw UsageError(flag + ": '" + text + "' is not a finite number");
    }
}

bool truthy(std::string v) {
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    return v == "1" || v == "true" || v == "yes" || v == "on";
}

std::string flag_name(const std::string &token) {
    const auto eq = token.find('=');
    return token.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
}

// Inserts config values directly after the subcommand so that CLI11 sees
// them as ordinary flags. Keys given explicitly on the command line win.
std::vector<std::string> merge_config(const std::vector<std::string> &args) {
    std::optional<std::string> config_path;
    std::optional<std::size_t> sub_at;
    std::set<std::string> explicit_keys;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string &a = args[i];
        if (a.rfind("--", 0) == 0 && a.size() > 2) {
            const std::string key = flag_name(a);
            explicit_keys.insert(key);
            if (key == "config") {
                if (a.find('=') != std::string::npos) {
                    config_path = a.substr(a.find('=') + 1);
                } else if (i + 1 < args.size()) {
                    config_path = args[i + 1];
                }
            }
            if (kValuedGlobals.contains(a)) ++i;
            continue;
        }
        if (!sub_at && kSubcommands.contains(a)) sub_at = i;
    }
    if (!config_path) return args;
    if (!sub_at) return args;

    std::set<std::string> hidden = explicit_keys;
    for (const auto &k : explicit_keys) {
        if (const auto it = kShadows.find(k); it != kShadows.end()) {
            hidden.insert(it->second.begin(), it->second.end());
        }
    }

    std::vector<std::string> injected;
    for (const auto &[key, value] : read_config(*config_path)) {
        if (key == "config" || hidden.contains(key)) continue;
        if (kSwitches.contains(key)) {
            if (truthy(value)) injected.push_back("--" + key);
            continue;
        }
        if (key == "axis") {
            std::istringstream in(value);
            std::string spec;
            while (in >> spec) {
                injected.push_back("--axis");
                injected.push_back(spec);
            }
            continue;
        }
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(*sub_at) + 1);
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(*sub_at) + 1, args.end());
    return out;
}

// Scenario flags shared by eval, sweep and find-controls.
struct ScenarioFlags {
    std::string channel;
    std::map<Param, std::optional<double>> values;
    bool degrees = false;

    void attach(CLI::App *app, bool require_core) {
        auto *c = app->add_option("--channel", channel, "Detector channel: dc, adc or pdc")
                      ->check(CLI::IsMember({"dc", "adc", "pdc"}));
        if (require_core) c->required();
        for (Param p : all_params()) {
            const std::string name(to_string(p));
            std::string help;
            switch (p) {
                case Param::dbeta:
                case Param::ddelta:
                case Param::deta: {
                    const std::string base = name.substr(1);
                    help = "Shorthand for " + base + "1 - " + base + "2: sets " + base + "1 = 0 and " +
                           base + "2 = -value; an explicit " + base + "2 takes precedence";
                    break;
                }
                case Param::gamma: help = "Noise strength in [0, 1]"; break;
                case Param::p1: help = "Path-1 probability in [0, 1]"; break;
                default: help = "Angle " + name + " (radians unless --degrees)"; break;
            }
            auto *o = app->add_option("--" + name, values[p], help);
            if (require_core && (p == Param::gamma || p == Param::p1)) o->required();
        }
        app->add_flag("--degrees", degrees, "Read every angle flag in degrees");
    }

    double convert(Param p, double v) const {
        return degrees && is_angle(p) ? v * std::numbers::pi / 180.0 : v;
    }

    // Explicitly given parameters, with angles in radians. A shorthand is
    // dropped when the raw value it would overwrite is given.
    Bindings bindings() const {
        Bindings b;
        for (const auto &[p, v] : values) {
            if (!v) continue;
            if (p == Param::dbeta && values.at(Param::beta2)) continue;
            if (p == Param::ddelta && values.at(Param::delta2)) continue;
            if (p == Param::deta && values.at(Param::eta2)) continue;
            b.emplace_back(p, convert(p, *v));
        }
        return b;
    }

    ChannelKind kind() const { return *parse_channel_kind(channel); }
};

// Re-runs the core validation per field so the message names the flag.
void check_scenario(const ScenarioParams &s) {
    const auto named = [](const std::string &flag, auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            throw UsageError(flag + ": " + e.what());
        }
    };
    named("--gamma", [&] { validate(s.channel); });
    named("--p1", [&] { validate(s.quanton); });
    named("--theta", [&] { validate(DetectorSpec{s.detector.theta, 0.0}); });
    named("--phi", [&] { validate(DetectorSpec{0.0, s.detector.phi}); });
    validate(s);
}

Axis parse_axis(const std::string &text, bool degrees) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) {
        throw UsageError("--axis: expected name:min:max:count, got '" + text + "'");
    }
    const auto p = parse_param(parts[0]);
    if (!p) throw UsageError("--axis: unknown parameter '" + parts[0] + "'");
    Axis a;
    a.param = *p;
    a.min = parse_number(parts[1], "--axis");
    a.max = parse_number(parts[2], "--axis");
    const double count = parse_number(parts[3], "--axis");
    if (count < 0 || count != std::floor(count)) {
        throw UsageError("--axis: count must be a whole number, got '" + parts[3] + "'");
    }
    a.count = static_cast<std::size_t>(count);
    if (degrees && is_angle(a.param)) {
        a.min *= std::numbers::pi / 180.0;
        a.max *= std::numbers::pi / 180.0;
    }
    return a;
}

std::optional<FMeasure> measure_or_throw(const std::string &s) {
    const auto m = parse_f_measure(s);
    if (!m) throw UsageError("--measure: expected exact or bound, got '" + s + "'");
    return m;
}

struct Output {
    std::string format;  // empty selects the subcommand default
    std::string path;

    std::string resolve(const std::string &fallback) const { return format.empty() ? fallback : format; }

    // Writes the payload and returns the stream that should receive the
    // summary line: stdout when the payload went to a file, stderr otherwise.
    std::ostream &emit(const std::string &payload, std::ostream &out, std::ostream &err) const {
        if (path.empty()) {
            out << payload;
            return err;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("--out: cannot open '" + path + "' for writing");
        f << payload;
        if (!f) throw UsageError("--out: failed writing '" + path + "'");
        return out;
    }
};

std::string table_payload(const Table &t, const std::string &format) {
    if (format == "json") return to_json_records(t) + "\n";
    std::ostringstream s;
    write_csv(t, s);
    return s.str();
}

std::string range_summary(const Table &t, const std::string &column) {
    std::size_t idx = 0;
    try {
        idx = t.column(column);
    } catch (const std::out_of_range &) {
        return "";
    }
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto &row : t.rows) {
        if (const auto *v = std::get_if<double>(&row[idx])) {
            lo = first ? *v : std::min(lo, *v);
            hi = first ? *v : std::max(hi, *v);
            first = false;
        }
    }
    if (first) return "";
    return ", " + column + " in [" + format_double(lo) + ", " + format_double(hi) + "]";
}

std::string short_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

int cmd_eval(const ScenarioFlags &sf, const Output &o, std::ostream &out, std::ostream &err) {
    ScenarioParams s;
    s.channel.kind = sf.kind();
    apply_bindings(s, sf.bindings());
    check_scenario(s);
    const DualityReport r = complementarity(s);
    const std::string format = o.resolve("json");
    const std::string payload =
        format == "csv" ? csv_header() + "\n" + csv_row(s, r) + "\n" : to_json(s, r) + "\n";
    std::ostream &summary = o.emit(payload, out, err);
    if (!o.path.empty()) {
        summary << "eval: F_exact=" << format_double(r.f_exact) << " F_bound=" << format_double(r.f_bound)
                << "\n";
    }
    return kExitOk;
}

struct SweepFlags {
    std::vector<std::string> axes;
    std::string outputs;
};

int cmd_sweep(const ScenarioFlags &sf, const SweepFlags &w, const Output &o, std::ostream &out,
              std::ostream &err) {
    SweepSpec spec;
    spec.base.channel.kind = sf.kind();
    spec.bindings = sf.bindings();
    for (const auto &a : w.axes) spec.axes.push_back(parse_axis(a, sf.degrees));
    for (const auto &name : split(w.outputs, ',')) {
        const auto f = parse_report_field(name);
        if (!f) throw UsageError("--outputs: unknown field '" + name + "'");
        spec.outputs.push_back(*f);
    }
    try {
        validate(spec);
        for (const auto &a : spec.axes) {
            ScenarioParams lo = spec.base, hi = spec.base;
            apply_bindings(lo, spec.bindings);
            apply_bindings(hi, spec.bindings);
            set_param(lo, a.param, a.min);
            set_param(hi, a.param, a.max);
            validate(lo);
            validate(hi);
        }
    } catch (const Error &e) {
        throw UsageError(std::string("--axis: ") + e.what());
    }
    const Table t = run_sweep(spec, default_threads());
    std::ostream &summary = o.emit(table_payload(t, o.resolve("csv")), out, err);
    summary << "sweep: " << t.rows.size() << " rows" << range_summary(t, "F_exact")
            << range_summary(t, "F_bound") << "\n";
    return kExitOk;
}

int cmd_figure(const std::string &id_text, std::optional<std::size_t> count, const Output &o,
               std::ostream &out, std::ostream &err) {
    const auto id = parse_figure_id(id_text);
    if (!id) throw UsageError("--id: unknown figure '" + id_text + "'");
    FigureOptions fo;
    if (count) {
        if (*count < 2) throw UsageError("--count: must be at least 2");
        fo.curve_points = *count;
        fo.grid_points = *count;
    }
    fo.threads = default_threads();
    const Table t = figure_dataset(*id, fo);
    std::ostream &summary = o.emit(table_payload(t, o.resolve("csv")), out, err);
    summary << to_string(*id) << ": " << t.rows.size() << " rows" << range_summary(t, "F")
            << range_summary(t, "F_s") << range_summary(t, "F_a") << "\n";
    return kExitOk;
}

struct VerifyFlags {
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string measure = "exact";
    bool gamma_zero = false;
    std::string cases;
};

int cmd_verify(const VerifyFlags &v, const Output &o, std::ostream &out, std::ostream &err) {
    VerifyOptions opts;
    if (v.samples < 100) throw UsageError("--samples: at least 100 samples are required");
    if (!(v.tol > 0)) throw UsageError("--tol: must be positive");
    opts.samples = v.samples;
    opts.seed = v.seed;
    opts.tolerance = v.tol;
    opts.reference = *measure_or_throw(v.measure);
    if (v.gamma_zero) opts.gamma_override = 0.0;
    for (const auto &name : split(v.cases, ',')) {
        const auto id = parse_case_id(name);
        if (!id) throw UsageError("--cases: unknown case '" + name + "'");
        opts.cases.push_back(*id);
    }
    const VerifyReport r = verify_closed_forms(opts);

    std::string payload;
    if (o.resolve("json") == "csv") {
        Table t;
        t.columns = {"case",          "samples", "tolerance", "max_dev_exact",
                     "max_dev_bound", "matches", "pass"};
        for (const auto &c : r.cases) {
            t.rows.push_back({std::string(to_string(c.id)), static_cast<double>(c.samples), c.tolerance,
                              c.max_dev_exact, c.max_dev_bound, c.matches(),
                              std::string(c.pass ? "true" : "false")});
        }
        payload = table_payload(t, "csv");
    } else {
        payload = to_json(r) + "\n";
    }
    std::ostream &summary = o.emit(payload, out, err);
    const std::size_t failed = r.failures();
    summary << "verify: " << r.cases.size() - failed << "/" << r.cases.size() << " cases pass against "
            << to_string(r.reference) << " (tol " << short_double(r.tolerance) << ", seed " << r.seed
            << ")";
    if (failed > 0) {
        summary << "; failing:";
        for (const auto &c : r.cases) {
            if (!c.pass) summary << " " << to_string(c.id);
        }
    }
    summary << "\n";
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

struct ControlFlags {
    double threshold = 0.9;
    std::string controls = "deta,dbeta,ddelta";
    std::size_t grid = 64;
    std::string measure = "exact";
    std::uint64_t seed = 0;
    std::size_t restarts = 2;
    std::size_t coarse = 0;
    std::string evaluate;
    bool table1 = false;
};

// Storage slot touched by a parameter; differences write subscript 2.
Param slot(Param p) {
    switch (p) {
        case Param::dbeta: return Param::beta2;
        case Param::ddelta: return Param::delta2;
        case Param::deta: return Param::eta2;
        default: return p;
    }
}

json control_json(const ControlSearchSpec &s, const ControlResult &r) {
    json j;
    j["channel"] = std::string(to_string(s.channel.kind));
    j["gamma"] = s.channel.gamma;
    j["p1"] = s.quanton.p1;
    j["measure"] = std::string(to_string(s.measure));
    j["threshold"] = s.threshold;
    j["grid"] = {s.theta_count, s.phi_count};
    json a = json::object();
    for (const auto &[p, v] : r.assignment) a[std::string(to_string(p))] = v;
    j["assignment"] = a;
    j["min_f"] = r.worst.min_f;
    j["theta"] = r.worst.theta;
    j["phi"] = r.worst.phi;
    j["met"] = r.met;
    j["evaluations"] = r.evaluations;
    j["iterations"] = r.iterations;
    return j;
}

int cmd_table_one(const ControlFlags &c, const Output &o, std::ostream &out, std::ostream &err) {
    const FMeasure m = *measure_or_throw(c.measure);
    if (c.grid < 8) throw UsageError("--grid: at least 8 points per axis are required");
    json rows = json::array();
    std::ostringstream lines;
    for (const auto &a : audit_table_one(m, c.grid, default_threads())) {
        json j;
        j["channel"] = std::string(to_string(a.row.channel));
        j["gamma"] = a.row.gamma;
        j["deta"] = a.row.deta;
        j["dbeta"] = a.row.dbeta;
        j["ddelta"] = a.row.ddelta;
        j["claimed_min"] = a.claimed_min;
        j["computed_min"] = a.computed.worst.min_f;
        j["theta"] = a.computed.worst.theta;
        j["phi"] = a.computed.worst.phi;
        j["agrees"] = a.agrees;
        rows.push_back(j);
        lines << "table1 " << to_string(a.row.channel) << " gamma=" << short_double(a.row.gamma)
              << ": min F=" << short_double(a.computed.worst.min_f) << " at theta="
              << short_double(a.computed.worst.theta) << " phi=" << short_double(a.computed.worst.phi)
              << " (claim >= " << short_double(a.claimed_min) << ") "
              << (a.agrees ? "agrees" : "DISCREPANCY") << "\n";
    }
    std::ostream &summary = o.emit(rows.dump(2) + "\n", out, err);
    summary << lines.str();
    return kExitOk;
}

int cmd_find_controls(const ScenarioFlags &sf, const ControlFlags &c, const Output &o,
                      std::ostream &out, std::ostream &err) {
    if (c.table1) return cmd_table_one(c, o, out, err);
    if (sf.channel.empty()) throw UsageError("--channel is required");
    if (!sf.values.at(Param::gamma)) throw UsageError("--gamma is required");

    ControlSearchSpec s;
    s.channel = {sf.kind(), *sf.values.at(Param::gamma)};
    if (const auto &p1 = sf.values.at(Param::p1)) s.quanton.p1 = *p1;
    s.threshold = c.threshold;
    s.theta_count = s.phi_count = c.grid;
    s.measure = *measure_or_throw(c.measure);
    s.seed = c.seed;
    s.restarts = c.restarts;
    s.coarse_count = c.coarse;
    s.threads = default_threads();
    s.controls.clear();
    for (const auto &name : split(c.controls, ',')) {
        const auto p = parse_param(name);
        if (!p) throw UsageError("--controls: unknown parameter '" + name + "'");
        s.controls.push_back(*p);
    }
    for (const auto &[p, v] : sf.bindings()) {
        if (p == Param::p1 || p == Param::gamma) continue;
        if (p == Param::theta || p == Param::phi) {
            throw UsageError("--" + std::string(to_string(p)) +
                             ": detector angles are swept by the robustness grid");
        }
        for (Param ctl : s.controls) {
            if (slot(ctl) == slot(p)) {
                throw UsageError("--" + std::string(to_string(p)) + ": conflicts with control " +
                                 std::string(to_string(ctl)));
            }
        }
        s.fixed.emplace_back(p, v);
    }
    const auto named = [](const std::string &flag, auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            throw UsageError(flag + ": " + e.what());
        }
    };
    named("--gamma", [&] { validate(s.channel); });
    named("--p1", [&] { validate(s.quanton); });
    named("--threshold", [&] {
        if (!(s.threshold > 0.0 && s.threshold <= 1.0)) throw DomainError("must lie in (0, 1]");
    });
    named("--grid", [&] {
        if (c.grid < 8) throw DomainError("at least 8 points per axis are required");
    });
    named("--controls", [&] { validate(s); });

    ControlResult r;
    if (!c.evaluate.empty()) {
        Bindings assignment;
        for (const auto &item : split(c.evaluate, ',')) {
            const auto eq = item.find('=');
            const auto p = eq == std::string::npos ? std::nullopt : parse_param(trim(item.substr(0, eq)));
            if (!p || std::find(s.controls.begin(), s.controls.end(), *p) == s.controls.end()) {
                throw UsageError("--evaluate: expected control=value pairs over --controls, got '" + item +
                                 "'");
            }
            assignment.emplace_back(*p, sf.convert(*p, parse_number(trim(item.substr(eq + 1)), "--evaluate")));
        }
        r = evaluate_controls(s, assignment);
    } else {
        r = find_controls(s);
    }

    std::ostream &summary = o.emit(control_json(s, r).dump(2) + "\n", out, err);
    summary << "find-controls:";
    for (const auto &[p, v] : r.assignment) summary << " " << to_string(p) << "=" << short_double(v);
    summary << " min F=" << short_double(r.worst.min_f) << " at theta=" << short_double(r.worst.theta)
            << " phi=" << short_double(r.worst.phi) << " threshold " << short_double(s.threshold) << " "
            << (r.met ? "met" : "NOT met") << "\n";
    return kExitOk;
}

}  // namespace

std::map<std::string, std::string> read_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("--config: cannot read '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("--config: " + path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (key.empty()) {
            throw std::runtime_error("--config: " + path + ":" + std::to_string(lineno) + ": empty key");
        }
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    try {
        args = merge_config(raw_args);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"Wave-particle duality with a noisy which-path detector", "duality_lab"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Output output;
    std::string config_path;
    app.add_option("--config", config_path, "Flat key = value file; explicit flags take precedence");
    app.add_option("--format", output.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", output.path, "Write the table or report to this file");

    ScenarioFlags eval_flags, sweep_flags, control_scenario;
    auto *eval = app.add_subcommand("eval", "Evaluate C, D, P and F for one scenario");
    eval_flags.attach(eval, true);

    SweepFlags sweep;
    auto *sw = app.add_subcommand("sweep", "Evaluate a one- or two-axis parameter grid");
    sweep_flags.attach(sw, false);
    sw->get_option("--channel")->required();
    sw->add_option("--axis", sweep.axes, "Axis as name:min:max:count; give once or twice")->required();
    sw->add_option("--outputs", sweep.outputs, "Comma list of C, D_exact, D_bound, P, F_exact, F_bound");

    std::string figure_id;
    std::optional<std::size_t> figure_count;
    auto *fig = app.add_subcommand("figure", "Emit the dataset behind one figure panel");
    fig->add_option("--id", figure_id, "Figure panel, e.g. fig2a or fig5c")->required();
    fig->add_option("--count", figure_count, "Points per curve or per contour axis");

    VerifyFlags vf;
    auto *ver = app.add_subcommand("verify", "Check every closed-form case against the engine");
    ver->add_option("--samples", vf.samples, "Random samples per case")->capture_default_str();
    ver->add_option("--seed", vf.seed, "PRNG seed")->capture_default_str();
    ver->add_option("--tol", vf.tol, "Absolute tolerance")->capture_default_str();
    ver->add_option("--measure", vf.measure, "Reference distinguishability: exact or bound")
        ->capture_default_str();
    ver->add_flag("--gamma-zero", vf.gamma_zero, "Fix gamma = 0 wherever it is sampled");
    ver->add_option("--cases", vf.cases, "Comma list of case ids; default all");

    ControlFlags cf;
    auto *fc = app.add_subcommand("find-controls", "Search controls that keep F high for all detectors");
    control_scenario.attach(fc, false);
    fc->add_option("--threshold", cf.threshold, "Required worst-case F")->capture_default_str();
    fc->add_option("--controls", cf.controls, "Comma list over deta, dbeta, ddelta, eta1, eta2")
        ->capture_default_str();
    fc->add_option("--grid", cf.grid, "Robustness grid points per detector angle")->capture_default_str();
    fc->add_option("--measure", cf.measure, "Distinguishability: exact or bound")->capture_default_str();
    fc->add_option("--seed", cf.seed, "Seed for the simplex restarts")->capture_default_str();
    fc->add_option("--restarts", cf.restarts, "Random simplex restarts")->capture_default_str();
    fc->add_option("--coarse", cf.coarse, "Coarse grid points per control; 0 picks automatically");
    fc->add_option("--evaluate", cf.evaluate, "Score this assignment instead of searching, e.g. deta=0.5");
    fc->add_flag("--table1", cf.table1, "Audit the published control table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_flags, output, out, err);
        if (sw->parsed()) return cmd_sweep(sweep_flags, sweep, output, out, err);
        if (fig->parsed()) return cmd_figure(figure_id, figure_count, output, out, err);
        if (ver->parsed()) return cmd_verify(vf, output, out, err);
        if (fc->parsed()) return cmd_find_controls(control_scenario, cf, output, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace dlab::cli
