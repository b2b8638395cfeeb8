#include "seqsearch/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seqsearch/oracle.hpp"

namespace seqsearch {

namespace {

constexpr std::uint64_t kEnvironmentKey = 0x656E76;  // "env"
constexpr std::uint64_t kPolicyKey = 0x706F6C;       // "pol"

std::size_t default_round_guard(const ProblemInstance& instance, double budget) {
    const double c_min = *std::min_element(instance.truth.c().begin(), instance.truth.c().end());
    return static_cast<std::size_t>(10.0 * std::ceil(2.0 * budget / c_min));
}

// Shared round loop; `choose` yields the search for the coming round.
template <class Choose, class Observe>
EpisodeRecord run_loop(const ProblemInstance& instance, double budget, const SeedMaterial& seed,
                       const EpisodeOptions& options, Choose&& choose, Observe&& observe) {
    if (!(budget > 0.0)) throw InvalidParameters("budget must be positive");
    if (options.checkpoints == 0) throw InvalidParameters("need at least one checkpoint");

    RandomStream env = environment_stream(seed);
    const std::size_t guard = options.max_rounds.value_or(default_round_guard(instance, budget));

    EpisodeRecord record;
    record.budget = budget;
    record.checkpoints.reserve(options.checkpoints);
    const std::size_t k_total = options.checkpoints;
    auto grid = [&](std::size_t k) {
        return k == k_total ? budget : budget * static_cast<double>(k) / static_cast<double>(k_total);
    };
    std::size_t next_k = 1;

    BudgetLedger ledger(budget);
    RoundSample sample;
    std::uint64_t cum_reward = 0;
    while (!ledger.stopped()) {
        if (ledger.rounds_played() >= guard) throw MaxRoundsExceeded(guard);
        const Search& selected = choose();
        sample_round(instance, env, sample);
        const RoundOutcome outcome = perform_search(selected, sample.hider, sample.costs);
        observe(selected, outcome, sample);
        ledger.record(outcome.cost_paid, outcome.reward);

        // Checkpoints strictly below the new spend are reached before this round's reward.
        const std::uint64_t round_index = ledger.rounds_played();
        while (next_k <= k_total && grid(next_k) < ledger.spent()) {
            record.checkpoints.push_back({grid(next_k), cum_reward, round_index});
            ++next_k;
        }
        cum_reward += static_cast<std::uint64_t>(outcome.reward);

        if (options.keep_round_log) {
            record.rounds.push_back({static_cast<std::uint32_t>(selected.size()),
                                     static_cast<std::uint32_t>(outcome.performed_len), outcome.cost_paid,
                                     outcome.reward, ledger.remaining()});
        }
    }
    record.tau_b = ledger.rounds_played();
    record.reward_counted = ledger.reward_counted();
    record.remaining = ledger.remaining();
    return record;
}

}  // namespace

CostModel parse_cost_model(std::string_view token) {
    if (token == "deterministic") return CostModel::Deterministic;
    if (token == "bernoulli") return CostModel::Bernoulli;
    throw InvalidParameters("unknown cost model '" + std::string(token) + "'");
}

std::string_view to_string(CostModel model) {
    return model == CostModel::Deterministic ? "deterministic" : "bernoulli";
}

ProblemInstance ProblemInstance::make(Dag dag, ParamVector truth, CostModel model, std::vector<Search> actions) {
    if (!truth.is_true()) throw NonTrueParameters("instance parameters must be built with true_parameters()");
    if (truth.size() != dag.size()) throw DimensionMismatch("DAG and parameter sizes differ");
    for (double c : truth.c()) {
        if (!(c > 0.0 && c <= 1.0)) throw InvalidParameters("true expected costs must lie in (0, 1]");
    }
    for (const Search& s : actions) {
        if (!is_search(dag, s)) throw InvalidParameters("restricted action is not a search of the DAG");
    }
    return ProblemInstance{std::move(dag), std::move(truth), model, std::move(actions)};
}

RoundSample sample_round(const ProblemInstance& instance, RandomStream& rng) {
    RoundSample out;
    sample_round(instance, rng, out);
    return out;
}

void sample_round(const ProblemInstance& instance, RandomStream& rng, RoundSample& out) {
    const auto& w = instance.truth.w();
    const auto& c = instance.truth.c();
    out.hider = static_cast<Arm>(rng.categorical(w) + 1);
    out.costs.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.costs[i] = instance.cost_model == CostModel::Deterministic ? c[i] : (rng.bernoulli(c[i]) ? 1.0 : 0.0);
    }
}

RoundOutcome perform_search(std::span<const Arm> selected, Arm hider, std::span<const double> costs) {
    RoundOutcome out;
    for (Arm a : selected) {
        out.cost_paid += costs[static_cast<std::size_t>(a - 1)];
        ++out.performed_len;
        if (a == hider) {
            out.reward = 1;
            out.hider_arm = a;
            break;
        }
    }
    return out;
}

BudgetLedger::BudgetLedger(double budget) : initial_(budget) {
    if (!(budget > 0.0)) throw InvalidParameters("budget must be positive");
}

bool BudgetLedger::record(double cost_paid, int reward) {
    if (stopped()) throw InvalidParameters("budget already exhausted");
    spent_ += cost_paid;
    ++rounds_;
    const bool counted = !stopped();
    if (counted) reward_ += static_cast<std::uint64_t>(reward);
    return counted;
}

RandomStream environment_stream(const SeedMaterial& seed) {
    return RandomStream(seed.master).derive(seed.run).derive(kEnvironmentKey);
}

RandomStream policy_stream(const SeedMaterial& seed) {
    return RandomStream(seed.master).derive(seed.run).derive(kPolicyKey);
}

namespace {

// Policy state for one run: statistics plus the oracle call on the bounds.
struct Learner {
    Learner(const ProblemInstance& inst, const PolicyConfig& pol, SchedulingStrategy strat, std::size_t lim,
            const SeedMaterial& seed)
        : instance(inst), policy(pol), strategy(strat), limit(lim), rng(policy_stream(seed)), stats(inst.dag.size()) {
        policy.validate();
    }

    const Search& choose() {
        ParamVector estimate(weight_upper_bound(stats, policy, rng), cost_lower_bound(stats, policy.zeta));
        current = instance.actions.empty() ? oracle(instance.dag, estimate, strategy, limit).search
                                           : restricted_oracle(instance.actions, estimate).search;
        return current;
    }

    void observe(const Search& selected, const RoundOutcome& outcome, const RoundSample& sample) {
        bits.assign(selected.size(), 0);
        observed_costs.resize(outcome.performed_len);
        for (std::size_t k = 0; k < selected.size(); ++k) bits[k] = selected[k] == sample.hider ? 1 : 0;
        for (std::size_t k = 0; k < outcome.performed_len; ++k)
            observed_costs[k] = sample.costs[static_cast<std::size_t>(selected[k] - 1)];
        stats.update(selected, outcome.performed_len, bits, observed_costs);
    }

    const ProblemInstance& instance;
    PolicyConfig policy;
    SchedulingStrategy strategy;
    std::size_t limit;
    RandomStream rng;
    ArmStatistics stats;
    Search current;
    std::vector<std::uint8_t> bits;
    std::vector<double> observed_costs;
};

}  // namespace

EpisodeRecord run_episode(const ProblemInstance& instance, const PolicyConfig& policy, SchedulingStrategy strategy,
                          double budget, const SeedMaterial& seed, const EpisodeOptions& options) {
    Learner learner(instance, policy, strategy, options.exhaustive_limit, seed);
    auto choose = [&]() -> const Search& { return learner.choose(); };
    auto observe = [&](const Search& selected, const RoundOutcome& outcome, const RoundSample& sample) {
        learner.observe(selected, outcome, sample);
    };
    return run_loop(instance, budget, seed, options, choose, observe);
}

ArmStatistics learn_for_rounds(const ProblemInstance& instance, const PolicyConfig& policy,
                               SchedulingStrategy strategy, std::size_t rounds, const SeedMaterial& seed,
                               std::size_t exhaustive_limit) {
    Learner learner(instance, policy, strategy, exhaustive_limit, seed);
    RandomStream env = environment_stream(seed);
    RoundSample sample;
    for (std::size_t t = 0; t < rounds; ++t) {
        const Search& selected = learner.choose();
        sample_round(instance, env, sample);
        learner.observe(selected, perform_search(selected, sample.hider, sample.costs), sample);
    }
    return std::move(learner.stats);
}

EpisodeRecord run_stationary(const ProblemInstance& instance, std::span<const Arm> search, double budget,
                             const SeedMaterial& seed, const EpisodeOptions& options) {
    if (!is_search(instance.dag, search)) throw InvalidParameters("stationary policy needs a valid search");
    const Search fixed(search.begin(), search.end());
    auto choose = [&]() -> const Search& { return fixed; };
    auto observe = [](const Search&, const RoundOutcome&, const RoundSample&) {};
    return run_loop(instance, budget, seed, options, choose, observe);
}

double j_star(const ProblemInstance& instance, std::size_t limit) {
    const OracleResult r = instance.actions.empty()
                               ? oracle(instance.dag, instance.truth, SchedulingStrategy::Auto, limit)
                               : restricted_oracle(instance.actions, instance.truth);
    if (!r.j_plus_value.is_finite()) throw InvalidParameters("J* is infinite for this instance");
    return r.j_plus_value.value();
}

double regret_proxy(const EpisodeRecord& record, double j_star, double budget) {
    if (!(j_star > 0.0)) throw InvalidParameters("regret proxy needs J* > 0");
    return budget / j_star - static_cast<double>(record.reward_counted);
}

std::vector<double> checkpoint_regret(const EpisodeRecord& record, double j_star) {
    if (!(j_star > 0.0)) throw InvalidParameters("regret proxy needs J* > 0");
    std::vector<double> out;
    out.reserve(record.checkpoints.size());
    for (const Checkpoint& cp : record.checkpoints)
        out.push_back(cp.budget / j_star - static_cast<double>(cp.cum_reward));
    return out;
}

std::vector<ExtendedReal> min_gap_per_arm(const ProblemInstance& instance, std::size_t limit) {
    const double js = j_star(instance, limit);
    std::vector<ExtendedReal> out(instance.dag.size(), ExtendedReal::infinity());
    auto visit = [&](const Search& s) {
        const double g = gap(s, instance.truth, js);
        if (g == 0.0) return;
        for (Arm a : s) {
            ExtendedReal& slot = out[static_cast<std::size_t>(a - 1)];
            if (ExtendedReal(g) < slot) slot = g;
        }
    };
    if (instance.actions.empty())
        for_each_search(instance.dag, visit, limit);
    else
        std::for_each(instance.actions.begin(), instance.actions.end(), visit);
    return out;
}

RoundScale t_b_and_cmin(const ProblemInstance& instance, double budget, std::optional<double> c_min_override) {
    if (!(budget > 0.0)) throw InvalidParameters("budget must be positive");
    RoundScale out;
    out.c_min = c_min_override.value_or(*std::min_element(instance.truth.c().begin(), instance.truth.c().end()));
    if (!(out.c_min > 0.0)) throw InvalidParameters("c_min must be positive");
    out.t_b = static_cast<std::uint64_t>(std::ceil(2.0 * budget / out.c_min));
    return out;
}

}  // namespace seqsearch
