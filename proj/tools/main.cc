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

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "tcluster/commands.h"
#include "tcluster/run_config.h"

using namespace tcluster;

namespace {

/// Command-line values; unset options leave the config untouched.
struct Overrides {
    std::optional<double> delta;
    std::vector<double> temperature_grid;
    std::optional<double> temperature;
    std::vector<int> sizes;
    std::vector<double> p_grid;
    std::optional<int64_t> trials;
    std::optional<uint64_t> seed;
    std::optional<int> n_cor;
    std::vector<int> n_cor_list;
    std::vector<int> m_list;
    std::vector<double> beta_list;
    std::optional<int> bootstrap_samples;
    std::optional<std::string> output_dir;
    std::optional<std::string> threads;

    void apply(RunConfig &c) const {
        auto set = [](auto &field, const auto &value) {
            if (value) {
                field = *value;
            }
        };
        auto set_list = [](auto &field, const auto &value) {
            if (!value.empty()) {
                field = value;
            }
        };
        set(c.delta, delta);
        set_list(c.temperature_grid, temperature_grid);
        set(c.temperature, temperature);
        set_list(c.sizes, sizes);
        set_list(c.p_grid, p_grid);
        set(c.trials, trials);
        set(c.seed, seed);
        set(c.n_cor, n_cor);
        set_list(c.n_cor_list, n_cor_list);
        set_list(c.m_list, m_list);
        set_list(c.beta_list, beta_list);
        set(c.bootstrap_samples, bootstrap_samples);
        set(c.output_dir, output_dir);
        set(c.threads, threads);
    }
};

void add_config_options(CLI::App &app, Overrides &o, std::string &config_path) {
    app.add_option("--config", config_path, "JSON config file; flags override its fields");
    app.add_option("--delta", o.delta, "Energy gap unit");
    app.add_option("--temperature_grid,--temperature-grid", o.temperature_grid, "T/delta values for curves")
        ->delimiter(',');
    app.add_option("--temperature", o.temperature, "T/delta for the channel dump");
    app.add_option("--sizes", o.sizes, "Lattice sizes L")->delimiter(',');
    app.add_option("--p_grid,--p-grid", o.p_grid, "Physical error rates")->delimiter(',');
    app.add_option("--trials", o.trials, "Monte Carlo trials per (L, p)");
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--n_cor,--n-cor", o.n_cor, "Correlated-pair multiplicity");
    app.add_option("--n_cor_list,--n-cor-list", o.n_cor_list, "n_cor values for the sensitivity table")
        ->delimiter(',');
    app.add_option("--m_list,--m-list", o.m_list, "Connectivities for mconnect")->delimiter(',');
    app.add_option("--beta_list,--beta-list", o.beta_list, "Base delta*beta values for mconnect")->delimiter(',');
    app.add_option("--bootstrap_samples,--bootstrap-samples", o.bootstrap_samples, "Bootstrap replicates");
    app.add_option("--output_dir,--output-dir", o.output_dir, "Directory for output files");
    app.add_option("--threads", o.threads, "Worker threads or \"auto\"");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Thermal spin-3/2 cluster-state toolkit"};
    app.require_subcommand(1);
    Overrides overrides;
    std::string config_path;
    bool timing = false;
    add_config_options(app, overrides, config_path);

    CLI::App *curves = app.add_subcommand("curves", "q1, q2, q3 against temperature");
    CLI::App *channel = app.add_subcommand("channel", "All 16 Z-string probabilities at one temperature");
    CLI::App *ghz5 = app.add_subcommand("ghz5", "Symbolic five-qubit GHZ derivation");
    CLI::App *mconnect = app.add_subcommand("mconnect", "m-connected fidelity under the shifted temperature");
    CLI::App *threshold = app.add_subcommand("threshold", "Monte Carlo threshold and threshold temperature");
    threshold->add_flag("--timing", timing, "Record wall time in the JSON summary");
    for (CLI::App *sub : {curves, channel, ghz5, mconnect, threshold}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        RunConfig config = config_path.empty() ? RunConfig{} : load_config_file(config_path);
        if (const char *env = std::getenv("THERMAL_CLUSTER_THREADS"); env && *env) {
            config.threads = env;
        }
        overrides.apply(config);
        config.validate();

        CommandResult result;
        if (curves->parsed()) {
            result = cmd_curves(config);
        } else if (channel->parsed()) {
            result = cmd_channel(config);
        } else if (ghz5->parsed()) {
            result = cmd_ghz5(config);
        } else if (mconnect->parsed()) {
            result = cmd_mconnect(config);
        } else {
            result = cmd_threshold(config, timing);
        }
        for (const std::string &f : result.files) {
            std::cout << f << "\n";
        }
        if (result.exit_code == kExitNoCrossing) {
            std::cerr << "no crossing detected; diagnostics written to the JSON summary\n";
        }
        return result.exit_code;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
