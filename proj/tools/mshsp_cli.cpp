// SPDX-License-Identifier: Apache-2.0
//
// Batch front end: solve | validate-bounds | sweep | certify.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mshsp/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Multiple-squares dihedral StateHSP simulator and solver"};
    app.require_subcommand(1);

    std::string config_path;
    mshsp::cli::ExperimentConfig config;

    // Every config-file key has a CLI flag of the same name; flags override
    // file values.
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "flat key=value config file");
        cmd->add_option("--mode", config.mode, "doubled | regular-hsp");
        cmd->add_option("--n", config.n, "number of sites");
        cmd->add_option("--trials", config.trials, "trial count");
        cmd->add_option("--seed", config.seed, "root seed");
        cmd->add_option("--delta", config.delta, "target failure probability");
        cmd->add_option("--budget-c", config.budget_c, "nullspace sample-count constant");
        cmd->add_option("--generator", config.generator, "haar | hamiltonian");
        cmd->add_option("--time", config.time, "hamiltonian evolution time");
        cmd->add_option("--hidden", config.hidden,
                        "t:v:w | random-involution | random-admissible-involution");
        cmd->add_option("--epsilon-assumed", config.epsilon_assumed,
                        "budget epsilon (0: certified value)");
        cmd->add_option("--min-epsilon", config.min_epsilon, "resample instances below this");
        cmd->add_option("--samples", config.samples, "bound-validation sample count");
        cmd->add_option("--span-trials", config.span_trials, "spanning experiment count");
        cmd->add_option("--out", config.out, "output path stem");
        cmd->add_option("--trace", config.trace, "JSONL subroutine trace path (serializes run)");
        cmd->add_option("--threads", config.threads, "worker threads (0: hardware)");
    };

    auto* solve = app.add_subcommand("solve", "run solver trials");
    auto* bounds = app.add_subcommand("validate-bounds", "check the sampling bounds");
    auto* sweep = app.add_subcommand("sweep", "N grid with a sample-complexity fit");
    auto* certify = app.add_subcommand("certify", "generate an instance and print metadata");
    for (auto* cmd : {solve, bounds, sweep, certify}) {
        add_common(cmd);
    }

    // Parse twice: the first pass finds --config, whose values are then
    // overridden by the flags actually given on the command line.
    CLI11_PARSE(app, argc, argv);
    if (!config_path.empty()) {
        mshsp::cli::ExperimentConfig from_file;
        try {
            from_file = mshsp::cli::load_config_file(config_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        CLI::App* active = app.get_subcommands().front();
        // Keep file values wherever the command line did not set the flag.
        auto keep = [&](const std::string& flag, auto member) {
            if (active->count(flag) == 0) {
                config.*member = from_file.*member;
            }
        };
        keep("--mode", &mshsp::cli::ExperimentConfig::mode);
        keep("--n", &mshsp::cli::ExperimentConfig::n);
        keep("--trials", &mshsp::cli::ExperimentConfig::trials);
        keep("--seed", &mshsp::cli::ExperimentConfig::seed);
        keep("--delta", &mshsp::cli::ExperimentConfig::delta);
        keep("--budget-c", &mshsp::cli::ExperimentConfig::budget_c);
        keep("--generator", &mshsp::cli::ExperimentConfig::generator);
        keep("--time", &mshsp::cli::ExperimentConfig::time);
        keep("--hidden", &mshsp::cli::ExperimentConfig::hidden);
        keep("--epsilon-assumed", &mshsp::cli::ExperimentConfig::epsilon_assumed);
        keep("--min-epsilon", &mshsp::cli::ExperimentConfig::min_epsilon);
        keep("--samples", &mshsp::cli::ExperimentConfig::samples);
        keep("--span-trials", &mshsp::cli::ExperimentConfig::span_trials);
        keep("--out", &mshsp::cli::ExperimentConfig::out);
        keep("--trace", &mshsp::cli::ExperimentConfig::trace);
        keep("--threads", &mshsp::cli::ExperimentConfig::threads);
    }

    try {
        if (solve->parsed()) {
            return mshsp::cli::cmd_solve(config);
        }
        if (bounds->parsed()) {
            return mshsp::cli::cmd_validate_bounds(config);
        }
        if (sweep->parsed()) {
            return mshsp::cli::cmd_sweep(config);
        }
        if (certify->parsed()) {
            return mshsp::cli::cmd_certify(config);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
