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

#ifndef TCLUSTER_RUN_CONFIG_H
#define TCLUSTER_RUN_CONFIG_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tcluster {

/// Raised for malformed or inconsistent configuration (exit status 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Settings shared by all subcommands. Every output embeds to_json() so a run
/// can be repeated from its own files.
struct RunConfig {
    double delta = 1.0;
    std::vector<double> temperature_grid{0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50};
    /// T/delta for the `channel` subcommand.
    double temperature = 0.18;
    std::vector<int> sizes{3, 5, 7};
    std::vector<double> p_grid{0.022, 0.024, 0.026, 0.028, 0.030, 0.032, 0.034, 0.036};
    int64_t trials = 20000;
    uint64_t seed = 20260101;
    int n_cor = 2;
    /// n_cor values for the T* sensitivity table.
    std::vector<int> n_cor_list{0, 1, 2, 3, 4};
    std::vector<int> m_list{3, 4, 6, 10};
    /// Base delta*beta values for `mconnect`.
    std::vector<double> beta_list{8, 10};
    int bootstrap_samples = 2000;
    std::string output_dir = ".";
    /// "auto" or a positive integer.
    std::string threads = "auto";

    /// Checks the invariants; throws ConfigError.
    void validate() const;
    /// Resolved worker count ("auto" is the hardware concurrency).
    int thread_count() const;

    /// Every field except `threads`, which never affects results.
    nlohmann::ordered_json to_json() const;
    /// Overrides fields present in `j`; unknown keys are an error.
    void merge_json(const nlohmann::json &j);
};

/// Reads a JSON config file onto the defaults.
RunConfig load_config_file(const std::string &path);

/// Formats with 12 significant digits, as used in every CSV.
std::string format_number(double value);

}  // namespace tcluster

#endif
