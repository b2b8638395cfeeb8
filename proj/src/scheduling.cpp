#include "seqsearch/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace seqsearch {

SchedulingStrategy parse_strategy(std::string_view token) {
    if (token == "smith") return SchedulingStrategy::SmithRule;
    if (token == "exhaustive") return SchedulingStrategy::Exhaustive;
    if (token == "auto") return SchedulingStrategy::Auto;
    throw StrategyUnavailable("unknown scheduling strategy '" + std::string(token) + "'");
}

std::string_view to_string(SchedulingStrategy s) {
    switch (s) {
        case SchedulingStrategy::SmithRule: return "smith";
        case SchedulingStrategy::Exhaustive: return "exhaustive";
        case SchedulingStrategy::Auto: return "auto";
    }
    return "?";
}

Search smith_rule(const ParamVector& p) {
    struct Key {
        bool infinite;  // zero cost, positive weight
        double value;   // density, or the weight when infinite
        Arm arm;
    };
    std::vector<Key> keys;
    keys.reserve(p.size());
    for (Arm a = 1; static_cast<std::size_t>(a) <= p.size(); ++a) {
        if (p.c(a) > 0.0)
            keys.push_back({false, p.w(a) / p.c(a), a});
        else if (p.w(a) > 0.0)
            keys.push_back({true, p.w(a), a});
        else
            keys.push_back({false, 0.0, a});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
        if (x.infinite != y.infinite) return x.infinite;
        if (x.value != y.value) return x.value > y.value;
        return x.arm < y.arm;
    });
    Search order;
    order.reserve(keys.size());
    for (const Key& k : keys) order.push_back(k.arm);
    return order;
}

Search smith_rule(const Dag& dag, const ParamVector& p) {
    if (!dag.edgeless()) throw NotEdgeless();
    if (dag.size() != p.size()) throw DimensionMismatch("DAG and parameter sizes differ");
    return smith_rule(p);
}

namespace {

class ExhaustiveSolver {
public:
    ExhaustiveSolver(const Dag& dag, const ParamVector& p)
        : dag_(dag), p_(p), missing_(dag.size()), used_(dag.size(), 0) {
        for (std::size_t i = 0; i < dag.size(); ++i)
            missing_[i] = static_cast<int>(dag.predecessors(static_cast<Arm>(i + 1)).size());
        current_.reserve(dag.size());
    }

    Search solve() {
        recurse(0.0, 0.0);
        return best_;
    }

private:
    bool improves(double value) const {
        if (best_.empty()) return true;
        return value < best_value_ - 1e-12 * std::max(1.0, std::abs(best_value_));
    }

    void recurse(double elapsed, double partial) {
        // Partial d only grows along a branch.
        if (!best_.empty() && !improves(partial)) return;
        if (current_.size() == dag_.size()) {
            best_ = current_;
            best_value_ = partial;
            return;
        }
        const auto n = static_cast<Arm>(dag_.size());
        for (Arm a = 1; a <= n; ++a) {
            const auto i = static_cast<std::size_t>(a - 1);
            if (used_[i] || missing_[i] != 0) continue;
            used_[i] = 1;
            for (Arm s : dag_.successors(a)) --missing_[static_cast<std::size_t>(s - 1)];
            current_.push_back(a);
            const double t = elapsed + p_.c(a);
            recurse(t, partial + p_.w(a) * t);
            current_.pop_back();
            for (Arm s : dag_.successors(a)) ++missing_[static_cast<std::size_t>(s - 1)];
            used_[i] = 0;
        }
    }

    const Dag& dag_;
    const ParamVector& p_;
    std::vector<int> missing_;
    std::vector<char> used_;
    Search current_;
    Search best_;
    double best_value_ = std::numeric_limits<double>::infinity();
};

}  // namespace

Search exhaustive_scheduling(const Dag& dag, const ParamVector& p, std::size_t limit) {
    if (dag.size() != p.size()) throw DimensionMismatch("DAG and parameter sizes differ");
    if (dag.size() > limit) throw InstanceTooLarge(dag.size(), limit);
    return ExhaustiveSolver(dag, p).solve();
}

Search scheduling(const Dag& dag, const ParamVector& p, SchedulingStrategy strategy, std::size_t limit) {
    switch (strategy) {
        case SchedulingStrategy::SmithRule: return smith_rule(dag, p);
        case SchedulingStrategy::Exhaustive: return exhaustive_scheduling(dag, p, limit);
        case SchedulingStrategy::Auto:
            return dag.edgeless() ? smith_rule(dag, p) : exhaustive_scheduling(dag, p, limit);
    }
    throw StrategyUnavailable("unsupported scheduling strategy");
}

}  // namespace seqsearch
