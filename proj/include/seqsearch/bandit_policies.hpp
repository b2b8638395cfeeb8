#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "seqsearch/objective.hpp"
#include "seqsearch/oracle.hpp"
#include "seqsearch/poset_graph.hpp"
#include "seqsearch/random_stream.hpp"
#include "seqsearch/scheduling.hpp"

namespace seqsearch {

enum class PolicyKind { CucbV, Cucb, CucbKl, ThompsonSampling };

// CLI tokens: cucb-v | cucb | cucb-kl | ts.
PolicyKind parse_policy(std::string_view token);
std::string_view to_string(PolicyKind kind);

inline constexpr double kDefaultZeta = 1.2;

struct PolicyConfig {
    PolicyKind kind = PolicyKind::CucbV;
    double zeta = kDefaultZeta;  // exploration factor, must exceed 1

    void validate() const;
};

// Per-arm counters of the online learner.
//   n_w(i): rounds in which i belonged to the selected search (its hider bit is
//           known for the whole selected search, found or not);
//   n_c(i): rounds in which i was actually examined, i.e. belonged to the
//           performed prefix.
// Sums are kept exactly (integer hider hits, summed costs) and means derived on
// read with 0/0 = 0. round() is the index t of the next round, starting at 1.
class ArmStatistics {
public:
    explicit ArmStatistics(std::size_t n);

    std::size_t size() const noexcept { return n_w_.size(); }
    std::uint64_t round() const noexcept { return round_; }

    std::uint64_t n_w(Arm a) const { return n_w_[idx(a)]; }
    std::uint64_t n_c(Arm a) const { return n_c_[idx(a)]; }
    std::uint64_t hits(Arm a) const { return hits_[idx(a)]; }
    double mean_w(Arm a) const;
    double mean_c(Arm a) const;

    // Folds one round of feedback in. observed_w holds the hider bit for every
    // arm of `selected`; observed_c the realised cost of each arm of the
    // performed prefix selected[0, performed_len).
    void update(std::span<const Arm> selected, std::size_t performed_len, std::span<const std::uint8_t> observed_w,
                std::span<const double> observed_c);

    friend bool operator==(const ArmStatistics&, const ArmStatistics&) = default;

private:
    std::size_t idx(Arm a) const;

    std::vector<std::uint64_t> n_w_;
    std::vector<std::uint64_t> n_c_;
    std::vector<std::uint64_t> hits_;
    std::vector<double> cost_sum_;
    std::uint64_t round_ = 1;
};

ExtendedReal bernoulli_kl(double p, double q);

// Scalar confidence bounds for one arm at round t with counter n and mean m.
double cost_lower_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta);
double cucb_v_weight_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta);
double cucb_weight_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta);
double kl_ucb_weight_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta);
// Largest x in [mean, 1] with n * kl(mean, x) <= level (1 when kl(mean, 1) fits).
double kl_ucb_solve(double mean, std::uint64_t n, double level);
// Posterior-style draw Beta(hits, n - hits) with limits at the degenerate ends:
// n = 0 gives Uniform(0,1), hits = 0 gives 0, hits = n gives 1.
double thompson_weight_sample(std::uint64_t hits, std::uint64_t n, RandomStream& rng);

std::vector<double> cost_lower_bound(const ArmStatistics& stats, double zeta);
std::vector<double> weight_upper_bound(const ArmStatistics& stats, const PolicyConfig& policy, RandomStream& rng);

// The search handed to the agent for round stats.round(): the oracle applied to
// (weight bound, cost bound). A non-empty `actions` list restricts the choice
// to those searches.
Search select(const ArmStatistics& stats, const PolicyConfig& policy, const Dag& dag, SchedulingStrategy strategy,
              RandomStream& rng, std::span<const Search> actions = {});

}  // namespace seqsearch
