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

#ifndef TCLUSTER_COMMANDS_H
#define TCLUSTER_COMMANDS_H

#include <stdexcept>
#include <string>
#include <vector>

#include "tcluster/channel.h"
#include "tcluster/run_config.h"
#include "tcluster/stabilizer_state.h"

namespace tcluster {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoCrossing = 2;

/// Output file could not be created or replaced.
struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::vector<std::string> files;
};

/// Writes `contents` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string &path, const std::string &contents);

/// q1, q2, q3 and residuals over config.temperature_grid -> curves.csv.
CommandResult cmd_curves(const RunConfig &config);

/// All 16 Z-string probabilities at config.temperature -> channel.csv.
CommandResult cmd_channel(const RunConfig &config);

/// Symbolic five-qubit GHZ derivation -> ghz5.json.
CommandResult cmd_ghz5(const RunConfig &config);

/// Shifted-temperature fidelity comparison over m_list x beta_list -> mconnect.csv.
CommandResult cmd_mconnect(const RunConfig &config);

/// Monte Carlo threshold, T* and the n_cor sensitivity table ->
/// threshold.csv and threshold.json. Wall time is recorded only with
/// `timing`, which keeps default outputs reproducible byte for byte.
CommandResult cmd_threshold(const RunConfig &config, bool timing = false);

/// Stabilizers expected after the e5 measurements, signs in m1, m2, m3.
std::vector<Generator> e5_expected_stabilizers();

/// Expected e5 channel on labels 1..8.
PauliChannel e5_expected_channel();

}  // namespace tcluster

#endif
