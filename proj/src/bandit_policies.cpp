#include "seqsearch/bandit_policies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace seqsearch {

PolicyKind parse_policy(std::string_view token) {
    if (token == "cucb-v") return PolicyKind::CucbV;
    if (token == "cucb") return PolicyKind::Cucb;
    if (token == "cucb-kl") return PolicyKind::CucbKl;
    if (token == "ts") return PolicyKind::ThompsonSampling;
    throw InvalidParameters("unknown policy '" + std::string(token) + "' (expected cucb-v, cucb, cucb-kl or ts)");
}

std::string_view to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::CucbV: return "cucb-v";
        case PolicyKind::Cucb: return "cucb";
        case PolicyKind::CucbKl: return "cucb-kl";
        case PolicyKind::ThompsonSampling: return "ts";
    }
    return "?";
}

void PolicyConfig::validate() const {
    if (!(zeta > 1.0)) throw InvalidParameters("zeta must be greater than 1");
}

ArmStatistics::ArmStatistics(std::size_t n) : n_w_(n, 0), n_c_(n, 0), hits_(n, 0), cost_sum_(n, 0.0) {}

std::size_t ArmStatistics::idx(Arm a) const {
    if (a < 1 || static_cast<std::size_t>(a) > size()) throw InvalidVertexLabel(a, size());
    return static_cast<std::size_t>(a - 1);
}

double ArmStatistics::mean_w(Arm a) const {
    const std::size_t i = idx(a);
    return n_w_[i] == 0 ? 0.0 : static_cast<double>(hits_[i]) / static_cast<double>(n_w_[i]);
}

double ArmStatistics::mean_c(Arm a) const {
    const std::size_t i = idx(a);
    return n_c_[i] == 0 ? 0.0 : cost_sum_[i] / static_cast<double>(n_c_[i]);
}

void ArmStatistics::update(std::span<const Arm> selected, std::size_t performed_len,
                           std::span<const std::uint8_t> observed_w, std::span<const double> observed_c) {
    if (performed_len > selected.size())
        throw LengthMismatch("performed prefix longer than the selected search");
    if (observed_w.size() != selected.size())
        throw LengthMismatch("need one hider bit per selected arm");
    if (observed_c.size() != performed_len) throw LengthMismatch("need one cost per performed arm");
    for (Arm a : selected) idx(a);

    for (std::size_t k = 0; k < selected.size(); ++k) {
        const std::size_t i = idx(selected[k]);
        ++n_w_[i];
        hits_[i] += observed_w[k] ? 1 : 0;
    }
    for (std::size_t k = 0; k < performed_len; ++k) {
        const std::size_t i = idx(selected[k]);
        ++n_c_[i];
        cost_sum_[i] += observed_c[k];
    }
    ++round_;
}

ExtendedReal bernoulli_kl(double p, double q) {
    p = std::clamp(p, 0.0, 1.0);
    q = std::clamp(q, 0.0, 1.0);
    double total = 0.0;
    if (p > 0.0) {
        if (q == 0.0) return ExtendedReal::infinity();
        total += p * std::log(p / q);
    }
    if (p < 1.0) {
        if (q == 1.0) return ExtendedReal::infinity();
        total += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
    }
    return std::max(0.0, total);
}

double cost_lower_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta) {
    if (n == 0) return 0.0;
    const double radius = std::sqrt(0.5 * zeta * std::log(static_cast<double>(t)) / static_cast<double>(n));
    return std::max(0.0, mean - radius);
}

double cucb_v_weight_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta) {
    if (n == 0) return 1.0;
    const double log_t = std::log(static_cast<double>(t));
    const double nn = static_cast<double>(n);
    const double bound = mean + std::sqrt(2.0 * zeta * mean * (1.0 - mean) * log_t / nn) + 3.0 * zeta * log_t / nn;
    return std::min(bound, 1.0);
}

double cucb_weight_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta) {
    if (n == 0) return 1.0;
    const double bound = mean + std::sqrt(0.5 * zeta * std::log(static_cast<double>(t)) / static_cast<double>(n));
    return std::min(bound, 1.0);
}

double kl_ucb_weight_bound(double mean, std::uint64_t n, std::uint64_t t, double zeta) {
    return kl_ucb_solve(mean, n, zeta * std::log(static_cast<double>(t)));
}

double kl_ucb_solve(double mean, std::uint64_t n, double target) {
    if (n == 0) return 1.0;
    const double nn = static_cast<double>(n);
    if (mean >= 1.0) return 1.0;
    if (target <= 0.0) return mean;
    const ExtendedReal at_one = bernoulli_kl(mean, 1.0);
    if (at_one.is_finite() && nn * at_one.value() <= target) return 1.0;

    // n*kl(mean, x) increases on [mean, 1); bisect until the residual is tiny
    // or the bracket cannot be split any further.
    double lo = mean;
    double hi = 1.0;
    double best = lo;
    double best_residual = target;
    for (int iter = 0; iter < 100; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const ExtendedReal kl = bernoulli_kl(mean, mid);
        const double value = kl.is_finite() ? nn * kl.value() : std::numeric_limits<double>::infinity();
        const double residual = std::abs(value - target);
        if (residual < best_residual) {
            best = mid;
            best_residual = residual;
        }
        if (residual <= 1e-11) break;
        if (value > target)
            hi = mid;
        else
            lo = mid;
    }
    return best;
}

double thompson_weight_sample(std::uint64_t hits, std::uint64_t n, RandomStream& rng) {
    if (n == 0) return rng.uniform();
    if (hits == 0) return 0.0;
    if (hits >= n) return 1.0;
    return rng.beta(static_cast<double>(hits), static_cast<double>(n - hits));
}

std::vector<double> cost_lower_bound(const ArmStatistics& stats, double zeta) {
    std::vector<double> out(stats.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Arm a = static_cast<Arm>(i + 1);
        out[i] = cost_lower_bound(stats.mean_c(a), stats.n_c(a), stats.round(), zeta);
    }
    return out;
}

std::vector<double> weight_upper_bound(const ArmStatistics& stats, const PolicyConfig& policy, RandomStream& rng) {
    std::vector<double> out(stats.size());
    const std::uint64_t t = stats.round();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Arm a = static_cast<Arm>(i + 1);
        switch (policy.kind) {
            case PolicyKind::CucbV: out[i] = cucb_v_weight_bound(stats.mean_w(a), stats.n_w(a), t, policy.zeta); break;
            case PolicyKind::Cucb: out[i] = cucb_weight_bound(stats.mean_w(a), stats.n_w(a), t, policy.zeta); break;
            case PolicyKind::CucbKl: out[i] = kl_ucb_weight_bound(stats.mean_w(a), stats.n_w(a), t, policy.zeta); break;
            case PolicyKind::ThompsonSampling: out[i] = thompson_weight_sample(stats.hits(a), stats.n_w(a), rng); break;
        }
    }
    return out;
}

Search select(const ArmStatistics& stats, const PolicyConfig& policy, const Dag& dag, SchedulingStrategy strategy,
              RandomStream& rng, std::span<const Search> actions) {
    ParamVector estimate(weight_upper_bound(stats, policy, rng), cost_lower_bound(stats, policy.zeta));
    if (!actions.empty()) return restricted_oracle(actions, estimate).search;
    return oracle(dag, estimate, strategy).search;
}

}  // namespace seqsearch
