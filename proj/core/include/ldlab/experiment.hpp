#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ldlab/certify.hpp"
#include "ldlab/code.hpp"
#include "ldlab/oracle.hpp"

#include "json.hpp"

namespace ldlab {

/// One measurement from one Monte Carlo trial.  A trial that measures several
/// quantities emits several records sharing the trial index.
struct TrialRecord {
    std::string kind;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;  // derive_seed(master_seed, trial, stream)
    Symbol q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::uint64_t> L;
    std::optional<double> epsilon;
    std::optional<std::size_t> t;
    std::string measure_name;
    double measure_value = 0.0;
    bool pass = true;
};

struct SweepCell {
    nlohmann::json params;
    std::uint64_t n_trials = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
    std::map<std::string, double> quantiles;  // min, q25, median, q75, max
    double success_prob = 0.0;                // fraction of records with pass
};

struct SweepResult {
    nlohmann::json config_echo;
    std::vector<SweepCell> cells;
    std::vector<TrialRecord> records;
    nlohmann::json extra;  // kind-specific aggregates (fits, formula values, ...)
};

struct ExperimentConfig {
    std::string kind;  // expectation | rank | concentration | decodability_sweep | rm_puncture
    std::uint64_t master_seed = 0;
    std::uint64_t trials = 1;
    unsigned parallelism = 1;
    std::string output_csv;   // empty: do not persist
    std::string output_json;  // empty: do not persist
    nlohmann::json params;    // kind-specific parameters
};

/// Parses and validates the common fields; `seed` is mandatory.
ExperimentConfig parse_config(const nlohmann::json& j);

/// Records (certificate claim, oracle result) pairs and aborts on any
/// contradiction: a holding certificate refuted by the oracle is an
/// implementation bug, so a violation throws SoundnessViolation after
/// appending a diagnostic dump to the log.  Thread safe.
class SoundnessMonitor {
public:
    struct Claim {
        std::string source;        // e.g. "l1", "rip"
        std::size_t t = 0;         // certified radius
        std::uint64_t list_bound = 0;
    };

    void check(const Claim& claim, std::uint64_t oracle_max_list, const LinearCode& code);

    std::uint64_t checks() const;
    const std::vector<std::string>& log() const { return log_; }

private:
    mutable std::mutex mu_;
    std::uint64_t checks_ = 0;
    std::vector<std::string> log_;
};

SweepResult run_expectation_check(const ExperimentConfig& config);
SweepResult run_rank_check(const ExperimentConfig& config);
SweepResult run_concentration_probe(const ExperimentConfig& config);
SweepResult run_decodability_sweep(const ExperimentConfig& config);
SweepResult run_rm_puncture_experiment(const ExperimentConfig& config,
                                       SoundnessMonitor* monitor = nullptr);

/// Dispatch on config.kind.
SweepResult run_experiment(const ExperimentConfig& config);

/// CSV schema: kind,trial,seed,q,n,k,L,epsilon,t,measure_name,measure_value,pass
/// Header mandatory, LF endings, floats at up to 17 significant digits,
/// not-applicable fields empty.  Byte-identical for a given config and seed
/// regardless of parallelism.
void write_csv(const std::vector<TrialRecord>& records, std::ostream& os);
std::vector<TrialRecord> read_csv(std::istream& is);

nlohmann::json sweep_to_json(const SweepResult& result);

/// Aggregates records into a cell (mean/stderr/quantiles/success fraction).
SweepCell aggregate_records(const std::vector<const TrialRecord*>& records,
                            nlohmann::json params);

/// Runs fn(trial_index) for indices 0..trials-1 across `parallelism` threads
/// and returns results in index order, independent of scheduling.
std::vector<std::vector<TrialRecord>> run_trials(
    std::uint64_t trials, unsigned parallelism,
    const std::function<std::vector<TrialRecord>(std::uint64_t)>& fn);

}  // namespace ldlab
