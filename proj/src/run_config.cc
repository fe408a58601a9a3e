// Copyright 2026 The tcluster Authors
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

#include "tcluster/run_config.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <thread>

namespace tcluster {

namespace {

template <typename T>
void require_ascending(const std::vector<T> &v, const char *name) {
    if (v.empty()) {
        throw ConfigError(std::string(name) + " must not be empty");
    }
    for (size_t i = 1; i < v.size(); i++) {
        if (!(v[i - 1] < v[i])) {
            throw ConfigError(std::string(name) + " must be sorted strictly ascending");
        }
    }
}

template <typename T>
T read_field(const nlohmann::json &j, const char *name) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("config field ") + name + ": " + e.what());
    }
}

}  // namespace

void RunConfig::validate() const {
    if (!(delta > 0)) {
        throw ConfigError("delta must be positive");
    }
    require_ascending(temperature_grid, "temperature_grid");
    require_ascending(sizes, "sizes");
    require_ascending(p_grid, "p_grid");
    require_ascending(beta_list, "beta_list");
    if (m_list.empty()) {
        throw ConfigError("m_list must not be empty");
    }
    if (n_cor_list.empty()) {
        throw ConfigError("n_cor_list must not be empty");
    }
    if (trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    if (n_cor < 0) {
        throw ConfigError("n_cor must be non-negative");
    }
    if (bootstrap_samples < 2) {
        throw ConfigError("bootstrap_samples must be at least 2");
    }
    if (output_dir.empty()) {
        throw ConfigError("output_dir must not be empty");
    }
    thread_count();
}

int RunConfig::thread_count() const {
    if (threads == "auto") {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(threads, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != threads.size() || n < 1) {
        throw ConfigError("threads must be \"auto\" or a positive integer, got \"" + threads + "\"");
    }
    return n;
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["delta"] = delta;
    j["temperature_grid"] = temperature_grid;
    j["temperature"] = temperature;
    j["sizes"] = sizes;
    j["p_grid"] = p_grid;
    j["trials"] = trials;
    j["seed"] = seed;
    j["n_cor"] = n_cor;
    j["n_cor_list"] = n_cor_list;
    j["m_list"] = m_list;
    j["beta_list"] = beta_list;
    j["bootstrap_samples"] = bootstrap_samples;
    j["output_dir"] = output_dir;
    return j;
}

void RunConfig::merge_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        const char *k = key.c_str();
        if (key == "delta") {
            delta = read_field<double>(value, k);
        } else if (key == "temperature_grid") {
            temperature_grid = read_field<std::vector<double>>(value, k);
        } else if (key == "temperature") {
            temperature = read_field<double>(value, k);
        } else if (key == "sizes") {
            sizes = read_field<std::vector<int>>(value, k);
        } else if (key == "p_grid") {
            p_grid = read_field<std::vector<double>>(value, k);
        } else if (key == "trials") {
            trials = read_field<int64_t>(value, k);
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) {
                throw ConfigError("config field seed must be a non-negative integer");
            }
            seed = value.get<uint64_t>();
        } else if (key == "n_cor") {
            n_cor = read_field<int>(value, k);
        } else if (key == "n_cor_list") {
            n_cor_list = read_field<std::vector<int>>(value, k);
        } else if (key == "m_list") {
            m_list = read_field<std::vector<int>>(value, k);
        } else if (key == "beta_list") {
            beta_list = read_field<std::vector<double>>(value, k);
        } else if (key == "bootstrap_samples") {
            bootstrap_samples = read_field<int>(value, k);
        } else if (key == "output_dir") {
            output_dir = read_field<std::string>(value, k);
        } else if (key == "threads") {
            threads = value.is_string() ? value.get<std::string>() : std::to_string(read_field<int64_t>(value, k));
        } else {
            throw ConfigError("unknown config field \"" + key + "\"");
        }
    }
}

RunConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    RunConfig config;
    config.merge_json(j);
    return config;
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

}  // namespace tcluster
