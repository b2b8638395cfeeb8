#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqsearch/config.hpp"
#include "seqsearch/simulator.hpp"

namespace seqsearch {

// Checkpointed result of one (policy, run) episode.
struct RunSummary {
    PolicyKind policy = PolicyKind::CucbV;
    std::size_t run = 0;
    std::vector<Checkpoint> checkpoints;
    std::vector<double> regret;  // per checkpoint
    std::size_t tau_b = 0;
    std::uint64_t reward_counted = 0;
};

// Mean regret proxy per (policy, checkpoint) with its standard error
// (sample std / sqrt(replications); 0 for a single replication).
struct CurvePoint {
    std::string policy;
    double budget = 0.0;
    double mean_regret = 0.0;
    double std_error = 0.0;
    std::size_t replications = 0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct RegretCurve {
    std::vector<CurvePoint> points;  // grouped by policy in config order, budgets increasing

    std::vector<CurvePoint> for_policy(std::string_view policy) const;
    friend bool operator==(const RegretCurve&, const RegretCurve&) = default;
};

struct ExperimentResult {
    double j_star = 0.0;
    std::vector<RunSummary> runs;  // sorted by (policy position in config, run)
    RegretCurve curve;
};

// Runs replications x policies episodes on config.jobs worker threads. Run r of
// every policy shares the environment stream derived from (seed, r). Output is
// identical for any number of jobs.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Writes runs.csv, curve.csv, regret.svg and the resolved config.ini into dir.
void write_experiment_outputs(const ExperimentResult& result, const ExperimentConfig& config,
                              const std::filesystem::path& dir);

RegretCurve aggregate(const std::vector<RunSummary>& runs, const std::vector<PolicyKind>& order);

// CSV long format: policy,run,checkpoint_budget,cum_reward,regret_proxy,rounds_played
void write_runs_csv(std::ostream& out, const std::vector<RunSummary>& runs);
// policy,checkpoint_budget,mean_regret_proxy,stderr_regret_proxy,replications
void write_curve_csv(std::ostream& out, const RegretCurve& curve);
RegretCurve read_curve_csv(std::istream& in);

// Shortest decimal text that parses back to the same double.
std::string format_real(double x);

}  // namespace seqsearch
