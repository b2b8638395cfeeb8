#include "seqsearch/oracle.hpp"

#include <algorithm>

namespace seqsearch {

OracleResult oracle(const Dag& dag, const ParamVector& p, SchedulingStrategy strategy, std::size_t limit) {
    OracleResult out;
    out.full_extension = scheduling(dag, p, strategy, limit);

    // J+ of every prefix in one pass.
    double numerator = 0.0;
    double weight = 0.0;
    ExtendedReal best = ExtendedReal::infinity();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < out.full_extension.size(); ++i) {
        const Arm a = out.full_extension[i];
        numerator += p.c(a) * (1.0 - weight);
        weight += p.w(a);
        if (weight == 0.0) continue;
        const ExtendedReal value = std::max(0.0, numerator / weight);
        if (value < best) {
            best = value;
            best_len = i + 1;
        }
    }
    if (best_len == 0) {
        out.degenerate = true;
        best_len = 1;
    }
    out.cut_index = best_len;
    out.search.assign(out.full_extension.begin(), out.full_extension.begin() + static_cast<std::ptrdiff_t>(best_len));
    out.j_plus_value = best;
    return out;
}

OracleResult brute_force_oracle(const Dag& dag, const ParamVector& p, std::size_t limit) {
    if (dag.size() != p.size()) throw DimensionMismatch("DAG and parameter sizes differ");
    OracleResult out;
    out.j_plus_value = ExtendedReal::infinity();
    bool have = false;
    for_each_search(
        dag,
        [&](const Search& s) {
            const ExtendedReal value = cost_ratio_j_plus(s, p);
            bool better = !have || value < out.j_plus_value;
            if (!better && value == out.j_plus_value)
                better = s.size() < out.search.size() || (s.size() == out.search.size() && s < out.search);
            if (better) {
                out.search = s;
                out.j_plus_value = value;
                have = true;
            }
        },
        limit);
    out.full_extension = out.search;
    out.cut_index = out.search.size();
    out.degenerate = out.j_plus_value.is_infinite();
    return out;
}

OracleResult restricted_oracle(std::span<const Search> actions, const ParamVector& p) {
    if (actions.empty()) throw InvalidParameters("restricted oracle needs at least one action");
    OracleResult out;
    out.j_plus_value = ExtendedReal::infinity();
    bool have = false;
    for (const Search& s : actions) {
        const ExtendedReal value = cost_ratio_j_plus(s, p);
        if (!have || value < out.j_plus_value) {
            out.search = s;
            out.j_plus_value = value;
            have = true;
        }
    }
    out.full_extension = out.search;
    out.cut_index = out.search.size();
    out.degenerate = out.j_plus_value.is_infinite();
    return out;
}

}  // namespace seqsearch
