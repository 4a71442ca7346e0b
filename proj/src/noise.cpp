// Copyright 2026 The distq Authors
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


#include "distq/noise.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "distq/rng.hpp"

namespace distq {

MachineProfile MachineProfile::santiago() {
    return MachineProfile{"santiago", 2.2e-4, 6.2e-3, 133.0, 408.0};
}

void MachineProfile::validate() const {
    auto probability = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string(what) + " must be in [0, 1]");
        }
    };
    probability(single_qubit_error, "single_qubit_error");
    probability(two_qubit_error, "two_qubit_error");
    if (!(coherence_time_us > 0.0)) {
        throw std::invalid_argument("coherence_time_us must be positive");
    }
    if (!(gate_time_ns > 0.0)) {
        throw std::invalid_argument("gate_time_ns must be positive");
    }
}

MachineProfile profile_from_json(std::string_view json_text) {
    const auto j = nlohmann::json::parse(json_text);
    MachineProfile p;
    p.name = j.value("name", std::string{});
    p.single_qubit_error = j.at("single_qubit_error").get<double>();
    p.two_qubit_error = j.at("two_qubit_error").get<double>();
    p.coherence_time_us = j.at("coherence_time_us").get<double>();
    p.gate_time_ns = j.at("gate_time_ns").get<double>();
    p.validate();
    return p;
}

std::string to_json(const MachineProfile& profile) {
    nlohmann::ordered_json j;
    j["name"] = profile.name;
    j["single_qubit_error"] = profile.single_qubit_error;
    j["two_qubit_error"] = profile.two_qubit_error;
    j["coherence_time_us"] = profile.coherence_time_us;
    j["gate_time_ns"] = profile.gate_time_ns;
    return j.dump(2);
}

MachineProfile load_profile(std::string_view name) {
    std::vector<std::filesystem::path> dirs;
    if (const char* env = std::getenv("DISTQ_PROFILE_DIR"); env != nullptr && *env != '\0') {
        dirs.emplace_back(env);
    }
#ifdef DISTQ_BUNDLED_PROFILE_DIR
    dirs.emplace_back(DISTQ_BUNDLED_PROFILE_DIR);
#endif
    for (const auto& dir : dirs) {
        const auto path = dir / (std::string(name) + ".json");
        std::ifstream in(path);
        if (!in) {
            continue;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        MachineProfile p = profile_from_json(buf.str());
        if (p.name.empty()) {
            p.name = std::string(name);
        }
        return p;
    }
    if (name == "santiago") {
        return MachineProfile::santiago();
    }
    throw std::invalid_argument("unknown machine profile '" + std::string(name) + "'");
}

NoiseParams NoiseParams::from_p0(double p0) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
        throw std::invalid_argument("p0 must be in [0, 1]");
    }
    NoiseParams params;
    params.p0 = p0;
    params.p1 = 1.0 - p0;
    params.lambda = 1.0 - 2.0 * p0;
    return params;
}

NoiseParams derive_noise(const MachineProfile& profile, std::uint64_t time_steps, std::uint64_t two_qubit_gates) {
    if (!(profile.coherence_time_us > 0.0)) {
        throw std::invalid_argument("coherence time must be positive");
    }
    // R is in ns, T_c in µs.
    const double ratio = (profile.gate_time_ns * 1e-9) / (profile.coherence_time_us * 1e-6);
    NoiseParams params;
    params.mu_c = std::exp(-ratio);
    params.mu_g = 1.0 - profile.two_qubit_error;
    params.lambda = std::pow(params.mu_c, static_cast<double>(time_steps)) *
                    std::pow(params.mu_g, static_cast<double>(two_qubit_gates));
    params.p0 = (1.0 - params.lambda) / 2.0;
    params.p1 = 1.0 - params.p0;
    return params;
}

std::vector<double> binomial_error_profile(unsigned n, double p0) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
        throw std::invalid_argument("p0 must be in [0, 1]");
    }
    std::vector<double> out(n + 1);
    double choose = 1.0;  // C(n, m)
    for (unsigned m = 0; m <= n; ++m) {
        out[m] = choose * std::pow(p0, m) * std::pow(1.0 - p0, n - m);
        choose = choose * (n - m) / (m + 1);
    }
    return out;
}

ShotHistogram inject_bit_flips(const ShotHistogram& hist, double p0, std::uint64_t rng_seed) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
        throw std::invalid_argument("p0 must be in [0, 1]");
    }
    Rng rng(rng_seed);
    ShotHistogram out(hist.width());
    for (const auto& [outcome, count] : hist.counts()) {
        for (std::uint64_t s = 0; s < count; ++s) {
            Bits flips = 0;
            for (unsigned q = 0; q < hist.width(); ++q) {
                if (bernoulli(rng, p0)) {
                    flips |= Bits{1} << q;
                }
            }
            out.add(outcome ^ flips);
        }
    }
    return out;
}

std::vector<double> error_count_distribution(const ShotHistogram& hist, Bits target) {
    std::vector<double> out(hist.width() + 1, 0.0);
    if (hist.shots() == 0) {
        return out;
    }
    for (const auto& [outcome, count] : hist.counts()) {
        out[hamming_distance(outcome, target)] += static_cast<double>(count);
    }
    for (double& v : out) {
        v /= static_cast<double>(hist.shots());
    }
    return out;
}

double fit_bit_flip_rate(const ShotHistogram& hist, Bits target) {
    if (hist.shots() == 0) {
        throw std::invalid_argument("cannot fit a flip rate to an empty histogram");
    }
    if (target > low_mask(hist.width())) {
        throw std::invalid_argument("target wider than histogram");
    }
    double total = 0;
    for (const auto& [outcome, count] : hist.counts()) {
        total += static_cast<double>(hamming_distance(outcome, target)) * static_cast<double>(count);
    }
    return total / static_cast<double>(hist.shots()) / static_cast<double>(hist.width());
}

double fit_bit_flip_rate(const ShotHistogram& hist, std::string_view target) {
    if (target.size() != hist.width()) {
        throw std::invalid_argument("target has " + std::to_string(target.size()) + " bits, histogram width is " +
                                    std::to_string(hist.width()));
    }
    return fit_bit_flip_rate(hist, parse_bitstring(target));
}

}  // namespace distq
