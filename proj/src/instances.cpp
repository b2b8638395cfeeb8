#include "seqsearch/instances.hpp"

#include <cmath>
#include <string>

namespace seqsearch {

ProblemInstance instance_sec5(std::size_t n, std::size_t m, double eps, double cost_mean, bool bernoulli_costs) {
    if (m < 2 || m >= n) throw InvalidParameters("sec5 instance needs 2 <= m < n");
    if (!(eps > 0.0 && eps < 0.5)) throw InvalidParameters("sec5 instance needs eps in (0, 0.5)");
    if (!(cost_mean > 0.0 && cost_mean <= 1.0)) throw InvalidParameters("sec5 instance needs cost_mean in (0, 1]");

    std::vector<double> w(n);
    for (std::size_t i = 1; i < m; ++i) w[i - 1] = std::ldexp(1.0, -static_cast<int>(i));
    const double w_prev = w[m - 2];
    w[m - 1] = (0.5 + eps) * w_prev;
    const double tail = (0.5 - eps) * w_prev / static_cast<double>(n - m);
    for (std::size_t i = m + 1; i <= n; ++i) w[i - 1] = tail;

    return ProblemInstance::make(edgeless_dag(n), ParamVector::true_parameters(std::move(w), std::vector<double>(n, cost_mean)),
                                 bernoulli_costs ? CostModel::Bernoulli : CostModel::Deterministic);
}

ProblemInstance instance_two_path(std::size_t n, double eps, TwoPathVariant which, bool restrict_to_paths) {
    if (n < 4 || n % 2 != 0) throw InvalidParameters("two-path instance needs an even n >= 4");
    if (!(eps > 0.0 && eps < 0.25)) throw InvalidParameters("two-path instance needs eps in (0, 0.25)");

    const std::size_t half = n / 2;
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < half; ++k) {
        edges.emplace_back(static_cast<Arm>(k), static_cast<Arm>(k + 1));
        edges.emplace_back(static_cast<Arm>(half + k), static_cast<Arm>(half + k + 1));
    }
    std::vector<double> w(n, 0.0);
    const double heavy = 0.5 + eps;
    const double light = 0.5 - eps;
    w[half - 1] = which == TwoPathVariant::D1 ? heavy : light;
    w[n - 1] = which == TwoPathVariant::D1 ? light : heavy;

    std::vector<Search> actions;
    if (restrict_to_paths) {
        Search ab(n);
        Search ba(n);
        for (std::size_t k = 0; k < n; ++k) {
            ab[k] = static_cast<Arm>(k + 1);
            ba[k] = static_cast<Arm>((k + half) % n + 1);
        }
        actions = {ab, ba};
    }
    return ProblemInstance::make(validate_dag(n, edges),
                                 ParamVector::true_parameters(std::move(w), std::vector<double>(n, 1.0)),
                                 CostModel::Deterministic, std::move(actions));
}

TwoPathVariant parse_two_path_variant(std::string_view token) {
    if (token == "D1" || token == "d1") return TwoPathVariant::D1;
    if (token == "D2" || token == "d2") return TwoPathVariant::D2;
    throw InvalidParameters("two-path variant must be D1 or D2, got '" + std::string(token) + "'");
}

}  // namespace seqsearch
