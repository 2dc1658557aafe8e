// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mshsp/algorithm.hpp"
#include "mshsp/dihedral.hpp"

namespace mshsp::cli {

/// Batch-run configuration. Every key of the flat key=value config file is
/// overridable by a CLI flag of the same name.
struct ExperimentConfig {
    std::string mode = "doubled";  // doubled | regular-hsp
    size_t n = 2;
    std::string generator = "haar";  // haar | hamiltonian (doubled mode)
    double time = 1.0;               // hamiltonian generator parameter
    std::string hidden = "random-involution";  // or random-admissible-involution / "t:v:w"
    uint64_t trials = 1;
    uint64_t seed = 0;
    double delta = 0.05;
    double budget_c = 2.0;
    double epsilon_assumed = 0.0;  // 0: use the certified value
    double min_epsilon = 0.0;      // resample instances below this
    uint64_t samples = 10000;      // per-instance samples for bound validation
    uint64_t span_trials = 1000;   // spanning experiments for bound validation
    std::string out;               // output path stem ("" = stdout only)
    std::string trace;             // optional JSONL subroutine trace path
    unsigned threads = 0;          // 0: hardware concurrency

    void validate() const;
};

/// Load key=value lines (# comments allowed) into a config.
ExperimentConfig load_config_file(const std::string& path);
void apply_config_line(ExperimentConfig& config, const std::string& key,
                       const std::string& value);

struct TrialResult {
    uint64_t trial = 0;
    uint64_t seed = 0;
    dihedral::DihedralElement hidden;
    std::optional<dihedral::DihedralElement> recovered;
    bool success = false;
    std::string error;
    algo::SolveStats stats;
    double eps_certified = 0.0;
    double wall_ms = 0.0;

    std::string to_json(const std::string& mode, size_t n) const;
    std::string to_csv_row(const std::string& mode, size_t n) const;
};

inline const char* kCsvHeader =
    "mode,N,seed,success,copies_total,copies_step1,copies_step2,copies_step4,"
    "eps_certified,wall_ms";

/// Run the configured trials; write <out>.jsonl and <out>.csv when out is
/// set. Returns 0 on completion (individual trial failures are data, not
/// errors).
int cmd_solve(const ExperimentConfig& config);

/// Validate the sampling bounds on generated instances: subgroup parity
/// mass, spanning-sample complexity, and bad-nullspace concentration.
/// Returns 0 iff every bound check passes.
int cmd_validate_bounds(const ExperimentConfig& config);

/// Grid over N, recording copies-to-success and fitting copies to
/// a·N²/eps² (doubled) or a·N² (regular-hsp). Returns 0 on completion.
int cmd_sweep(const ExperimentConfig& config);

/// Generate one instance and print its metadata JSON.
int cmd_certify(const ExperimentConfig& config);

/// Shared by cmd_solve/cmd_sweep: run all trials of one configuration.
std::vector<TrialResult> run_trials(const ExperimentConfig& config);

}  // namespace mshsp::cli
