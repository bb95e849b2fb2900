// Copyright 2026 The qfluct Authors
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

#include "qfluct/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>

#include "qfluct/error.h"
#include "qfluct/statevector.h"

namespace qfluct {

namespace {

[[noreturn]] void bad(const std::string &msg) {
    throw Error(ErrorKind::InvalidConfig, msg);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view s) {
    s = trim(s);
    std::string tmp(s);
    char *end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || *end != '\0' || !std::isfinite(v)) {
        bad("not a number: '" + tmp + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); i++) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Tdoped:
            return "tdoped";
        case ExperimentKind::Mipt:
            return "mipt";
        case ExperimentKind::Kurtosis:
            return "kurtosis";
        case ExperimentKind::Renyi4:
            return "renyi4";
        case ExperimentKind::Oracle:
            return "oracle";
    }
    return "?";
}

ExperimentKind parse_experiment(std::string_view name) {
    for (auto k : {ExperimentKind::Tdoped, ExperimentKind::Mipt, ExperimentKind::Kurtosis, ExperimentKind::Renyi4,
                   ExperimentKind::Oracle}) {
        if (experiment_name(k) == name) {
            return k;
        }
    }
    bad("unknown experiment '" + std::string(name) + "'");
}

BackendChoice parse_backend(std::string_view name) {
    if (name == "auto") {
        return BackendChoice::Auto;
    }
    if (name == "tableau") {
        return BackendChoice::Tableau;
    }
    if (name == "statevector") {
        return BackendChoice::Statevector;
    }
    bad("backend must be auto, tableau or statevector, got '" + std::string(name) + "'");
}

std::string_view backend_name(BackendChoice b) {
    switch (b) {
        case BackendChoice::Auto:
            return "auto";
        case BackendChoice::Tableau:
            return "tableau";
        case BackendChoice::Statevector:
            return "statevector";
    }
    return "?";
}

std::vector<int> EnsembleConfig::nt_values() const {
    std::vector<int> out;
    for (int v = nt_min; v <= nt_max; v += nt_step) {
        out.push_back(v);
    }
    return out;
}

EnsembleConfig default_config(ExperimentKind kind) {
    EnsembleConfig c;
    c.kind = kind;
    c.thetas = {0.0};
    c.pm_grid = parse_grid("0.02:0.40:0.02");
    switch (kind) {
        case ExperimentKind::Tdoped:
            c.qubits = {8};
            break;
        case ExperimentKind::Renyi4:
            c.qubits = {12};
            break;
        case ExperimentKind::Kurtosis:
            c.qubits = {8};
            c.block = CliffordBlockKind::UniformGlobal;
            break;
        case ExperimentKind::Mipt:
            c.qubits = {8, 12, 16};
            break;
        case ExperimentKind::Oracle:
            c.qubits = {8, 12};
            c.nt_max = 6;
            c.nt_step = 2;
            c.samples = 2000;
            c.block = CliffordBlockKind::UniformGlobal;
            break;
    }
    return c;
}

void validate(const EnsembleConfig &c) {
    if (c.qubits.empty()) {
        bad("qubit list is empty");
    }
    if (!(c.subsystem_fraction > 0 && c.subsystem_fraction <= 0.25)) {
        bad("subsystem_fraction must lie in (0, 1/4]");
    }
    if (c.threads > 256) {
        bad("thread count above 256");
    }
    const bool tdoped_family =
        c.kind == ExperimentKind::Tdoped || c.kind == ExperimentKind::Kurtosis || c.kind == ExperimentKind::Renyi4;
    for (size_t n : c.qubits) {
        double part = c.subsystem_fraction * double(n);
        if (part < 1 || std::abs(part - std::round(part)) > 1e-9) {
            bad("subsystem_fraction * n must be a positive integer (n = " + std::to_string(n) + ")");
        }
        if ((tdoped_family || c.kind == ExperimentKind::Oracle) && (n < 4 || n % 4 != 0)) {
            bad("t-doped circuits need n divisible by 4, got " + std::to_string(n));
        }
        if (c.kind == ExperimentKind::Mipt && (n < 4 || n % 2 != 0)) {
            bad("MIPT needs even n >= 4, got " + std::to_string(n));
        }
    }
    if (tdoped_family || c.kind == ExperimentKind::Oracle) {
        if (c.nt_min < 0 || c.nt_max < c.nt_min || c.nt_step < 1) {
            bad("n_t range must satisfy 0 <= nt_min <= nt_max with step >= 1");
        }
        if (c.samples < (c.kind == ExperimentKind::Kurtosis ? 4u : 2u)) {
            bad("too few samples for the requested statistics");
        }
    }
    if (c.kind == ExperimentKind::Mipt) {
        if (c.thetas.empty() || c.pm_grid.empty()) {
            bad("MIPT needs at least one theta and one p_m");
        }
        for (double p : c.pm_grid) {
            if (!(p >= 0 && p <= 1)) {
                bad("p_m values must lie in [0, 1]");
            }
        }
        for (double th : c.thetas) {
            if (!std::isfinite(th)) {
                bad("theta must be finite");
            }
        }
        if (c.cycles < 1) {
            bad("cycles must be >= 1");
        }
        if (c.instances < 2) {
            bad("MIPT needs at least 2 instances");
        }
    }
    // Backend consistency.
    bool needs_dense = false;
    if (tdoped_family || c.kind == ExperimentKind::Oracle) {
        needs_dense = c.nt_max > 0;
    } else {
        for (double th : c.thetas) {
            needs_dense |= th != 0;
        }
    }
    if (c.backend == BackendChoice::Tableau && needs_dense) {
        bad("the tableau backend cannot run T gates or non-zero rotations");
    }
    if (needs_dense || c.backend == BackendChoice::Statevector) {
        size_t cap = std::min(c.statevector_cap, PureState::kDefaultMaxQubits);
        for (size_t n : c.qubits) {
            if (n > cap) {
                throw Error(ErrorKind::Resource,
                            "n = " + std::to_string(n) + " exceeds the statevector cap of " + std::to_string(cap));
            }
        }
    }
}

double parse_angle(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        bad("empty angle");
    }
    double sign = 1;
    if (s.front() == '-' || s.front() == '+') {
        sign = s.front() == '-' ? -1 : 1;
        s = trim(s.substr(1));
    }
    size_t pi = s.find("pi");
    if (pi == std::string_view::npos) {
        return sign * parse_real(s);
    }
    double value = std::numbers::pi;
    std::string_view before = trim(s.substr(0, pi));
    std::string_view after = trim(s.substr(pi + 2));
    if (!before.empty()) {
        if (before.back() != '*') {
            bad("bad angle '" + std::string(text) + "'");
        }
        value *= parse_real(before.substr(0, before.size() - 1));
    }
    if (!after.empty()) {
        if (after.front() != '/') {
            bad("bad angle '" + std::string(text) + "'");
        }
        double d = parse_real(after.substr(1));
        if (d == 0) {
            bad("division by zero in angle '" + std::string(text) + "'");
        }
        value /= d;
    }
    return sign * value;
}

std::vector<double> parse_grid(std::string_view text) {
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        auto parts = split(text, ':');
        if (parts.size() != 3) {
            bad("grid must be start:stop:step, got '" + std::string(text) + "'");
        }
        double start = parse_real(parts[0]), stop = parse_real(parts[1]), step = parse_real(parts[2]);
        if (!(step > 0) || stop < start) {
            bad("grid needs step > 0 and stop >= start");
        }
        long count = std::lround(std::floor((stop - start) / step + 0.5)) + 1;
        if (count > 100000) {
            bad("grid too large");
        }
        for (long i = 0; i < count; i++) {
            // Round away accumulated binary error so values print cleanly.
            double v = start + double(i) * step;
            out.push_back(std::round(v * 1e12) / 1e12);
        }
        return out;
    }
    for (auto part : split(text, ',')) {
        out.push_back(parse_angle(part));
    }
    return out;
}

std::vector<size_t> parse_size_list(std::string_view text) {
    std::vector<size_t> out;
    for (auto part : split(text, ',')) {
        part = trim(part);
        size_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            bad("not a non-negative integer: '" + std::string(part) + "'");
        }
        out.push_back(v);
    }
    return out;
}

EnsembleConfig apply_json(EnsembleConfig c, std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception &e) {
        bad(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        bad("config must be a JSON object");
    }
    auto real_list = [](const nlohmann::json &v) {
        std::vector<double> out;
        if (v.is_string()) {
            return parse_grid(v.get<std::string>());
        }
        if (v.is_number()) {
            return std::vector<double>{v.get<double>()};
        }
        if (!v.is_array()) {
            bad("expected a list of numbers");
        }
        for (const auto &x : v) {
            out.push_back(x.is_string() ? parse_angle(x.get<std::string>()) : x.get<double>());
        }
        return out;
    };
    try {
        for (const auto &[key, v] : j.items()) {
            if (key == "experiment") {
                c.kind = parse_experiment(v.get<std::string>());
            } else if (key == "qubits") {
                c.qubits = v.is_array() ? v.get<std::vector<size_t>>() : std::vector<size_t>{v.get<size_t>()};
            } else if (key == "nt_min") {
                c.nt_min = v.get<int>();
            } else if (key == "nt_max") {
                c.nt_max = v.get<int>();
            } else if (key == "nt_step") {
                c.nt_step = v.get<int>();
            } else if (key == "theta") {
                c.thetas = real_list(v);
            } else if (key == "pm_grid") {
                c.pm_grid = real_list(v);
            } else if (key == "cycles") {
                c.cycles = v.get<int>();
            } else if (key == "samples") {
                c.samples = v.get<size_t>();
            } else if (key == "instances") {
                c.instances = v.get<size_t>();
            } else if (key == "subsystem_fraction") {
                c.subsystem_fraction = v.is_string() ? parse_real(v.get<std::string>()) : v.get<double>();
            } else if (key == "seed") {
                c.master_seed = v.get<uint64_t>();
            } else if (key == "backend") {
                c.backend = parse_backend(v.get<std::string>());
            } else if (key == "cnot_pairing") {
                auto s = v.get<std::string>();
                if (s != "independent" && s != "fixed") {
                    bad("cnot_pairing must be independent or fixed");
                }
                c.pairing = s == "fixed" ? CnotPairing::FixedPair : CnotPairing::Independent;
            } else if (key == "clifford_block") {
                auto s = v.get<std::string>();
                if (s != "local" && s != "global") {
                    bad("clifford_block must be local or global");
                }
                c.block = s == "global" ? CliffordBlockKind::UniformGlobal : CliffordBlockKind::LocalComposite;
            } else if (key == "threads") {
                c.threads = v.get<size_t>();
            } else if (key == "statevector_cap") {
                c.statevector_cap = v.get<size_t>();
            } else if (key == "out") {
                c.out = v.get<std::string>();
            } else if (key == "format") {
                c.format = parse_format(v.get<std::string>());
            } else {
                bad("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        bad(std::string("config value has the wrong type: ") + e.what());
    }
    return c;
}

}  // namespace qfluct
