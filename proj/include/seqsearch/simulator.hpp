#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqsearch/bandit_policies.hpp"
#include "seqsearch/objective.hpp"
#include "seqsearch/poset_graph.hpp"
#include "seqsearch/random_stream.hpp"
#include "seqsearch/scheduling.hpp"

namespace seqsearch {

enum class CostModel { Deterministic, Bernoulli };

CostModel parse_cost_model(std::string_view token);
std::string_view to_string(CostModel model);

// The hidden environment: DAG, true parameters and how costs are realised.
// `actions`, when non-empty, restricts every policy to that list of searches.
struct ProblemInstance {
    Dag dag;
    ParamVector truth;
    CostModel cost_model = CostModel::Deterministic;
    std::vector<Search> actions;

    // Checks that truth carries the true-parameter guarantees, that costs lie in
    // (0, 1], that sizes agree and that every listed action is a search.
    static ProblemInstance make(Dag dag, ParamVector truth, CostModel model, std::vector<Search> actions = {});
};

struct RoundSample {
    std::vector<double> costs;  // realised cost of every arm
    Arm hider = 1;
};

// Draws the hider from w* and every arm's cost from the cost model; hider and
// costs are independent.
RoundSample sample_round(const ProblemInstance& instance, RandomStream& rng);
void sample_round(const ProblemInstance& instance, RandomStream& rng, RoundSample& out);

struct RoundOutcome {
    std::size_t performed_len = 0;
    double cost_paid = 0.0;
    int reward = 0;
    std::optional<Arm> hider_arm;  // set iff the hider was found
};

// Walks `selected` in order, paying each realised cost, until the hider is
// examined or the search runs out.
RoundOutcome perform_search(std::span<const Arm> selected, Arm hider, std::span<const double> costs);

// Remaining budget after t rounds is B - (cost of rounds 1..t). Round t is played
// while the remaining budget before it is >= 0; the round that takes it below 0
// is played and paid, but its reward is not counted.
class BudgetLedger {
public:
    explicit BudgetLedger(double budget);

    double initial() const noexcept { return initial_; }
    double remaining() const noexcept { return initial_ - spent_; }
    double spent() const noexcept { return spent_; }
    std::size_t rounds_played() const noexcept { return rounds_; }
    std::uint64_t reward_counted() const noexcept { return reward_; }
    bool stopped() const noexcept { return remaining() < 0.0; }

    // Returns whether the reward counted.
    bool record(double cost_paid, int reward);

private:
    double initial_;
    double spent_ = 0.0;
    std::size_t rounds_ = 0;
    std::uint64_t reward_ = 0;
};

struct RoundLog {
    std::uint32_t selected_len = 0;
    std::uint32_t performed_len = 0;
    double cost_paid = 0.0;
    int reward = 0;
    double remaining = 0.0;
};

// State of the same trajectory as if the budget had been `budget`: rewards of
// the rounds that ended with spend <= budget, and the rounds started by then.
struct Checkpoint {
    double budget = 0.0;
    std::uint64_t cum_reward = 0;
    std::uint64_t rounds_played = 0;
};

struct EpisodeRecord {
    double budget = 0.0;
    std::vector<RoundLog> rounds;  // empty unless EpisodeOptions::keep_round_log
    std::vector<Checkpoint> checkpoints;
    std::size_t tau_b = 0;         // index of the overshooting round
    std::uint64_t reward_counted = 0;
    double remaining = 0.0;        // final remaining budget (< 0)
};

struct SeedMaterial {
    std::uint64_t master = 0;
    std::uint64_t run = 0;
};

struct EpisodeOptions {
    std::size_t checkpoints = 200;           // grid B/K, 2B/K, ..., B
    std::optional<std::size_t> max_rounds;   // default 10 * ceil(2B / min c*)
    bool keep_round_log = true;
    std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
};

// Streams used by an episode. Environment draws depend only on (master, run),
// so every policy faces the same hider and cost sequence for a given run.
RandomStream environment_stream(const SeedMaterial& seed);
RandomStream policy_stream(const SeedMaterial& seed);

EpisodeRecord run_episode(const ProblemInstance& instance, const PolicyConfig& policy, SchedulingStrategy strategy,
                          double budget, const SeedMaterial& seed, const EpisodeOptions& options = {});

// Plays `rounds` rounds of the policy with no budget and returns its statistics,
// which then describe round rounds + 1. Same streams as run_episode.
ArmStatistics learn_for_rounds(const ProblemInstance& instance, const PolicyConfig& policy,
                               SchedulingStrategy strategy, std::size_t rounds, const SeedMaterial& seed,
                               std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

// Same loop with a fixed search every round (no learning).
EpisodeRecord run_stationary(const ProblemInstance& instance, std::span<const Arm> search, double budget,
                             const SeedMaterial& seed, const EpisodeOptions& options = {});

// J* under the true parameters (restricted to instance.actions when present).
double j_star(const ProblemInstance& instance, std::size_t limit = kDefaultExhaustiveLimit);

// B / J* - counted reward.
double regret_proxy(const EpisodeRecord& record, double j_star, double budget);
// checkpoint.budget / J* - checkpoint.cum_reward for every checkpoint.
std::vector<double> checkpoint_regret(const EpisodeRecord& record, double j_star);

// Per arm, the smallest gap among non-optimal searches containing it (+inf if
// the arm only appears in optimal searches). Enumerates instance.actions when
// present, every search otherwise.
std::vector<ExtendedReal> min_gap_per_arm(const ProblemInstance& instance,
                                          std::size_t limit = kDefaultExhaustiveLimit);

struct RoundScale {
    double c_min = 0.0;
    std::uint64_t t_b = 0;  // ceil(2B / c_min)
};

// c_min defaults to min_i c*_i; pass an instance-specific bound to override.
RoundScale t_b_and_cmin(const ProblemInstance& instance, double budget,
                        std::optional<double> c_min_override = std::nullopt);

}  // namespace seqsearch
