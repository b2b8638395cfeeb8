#pragma once

#include "seqsearch/simulator.hpp"

namespace seqsearch {

// Edgeless instance with geometrically decaying hider weights:
//   w_i = 2^-i (i < m), w_m = (1/2 + eps) w_{m-1}, w_i = (1/2 - eps) w_{m-1} / (n - m) (i > m),
// and every expected cost equal to cost_mean. The optimal search examines 1..m
// once n - m >= 3; with one or two tail arms the full search is cheaper.
ProblemInstance instance_sec5(std::size_t n, std::size_t m, double eps, double cost_mean, bool bernoulli_costs);

enum class TwoPathVariant { D1, D2 };

// Two disjoint chains a_1 -> ... -> a_{n/2} (arms 1..n/2) and b_1 -> ... -> b_{n/2}
// (arms n/2+1..n), unit deterministic costs, and the hider on one of the two
// leaves: D1 puts 1/2 + eps on a_{n/2}, D2 on b_{n/2}. With restrict_to_paths the
// action set is {ab, ba}.
ProblemInstance instance_two_path(std::size_t n, double eps, TwoPathVariant which, bool restrict_to_paths);

TwoPathVariant parse_two_path_variant(std::string_view token);

}  // namespace seqsearch
