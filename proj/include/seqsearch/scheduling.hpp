#pragma once

#include <string_view>

#include "seqsearch/objective.hpp"
#include "seqsearch/poset_graph.hpp"

namespace seqsearch {

// How the weighted-completion minimiser over G-linear extensions is computed.
// SmithRule applies to edgeless DAGs only; Exhaustive to DAGs up to the limit.
// Auto picks SmithRule for edgeless DAGs and Exhaustive otherwise.
enum class SchedulingStrategy { SmithRule, Exhaustive, Auto };

SchedulingStrategy parse_strategy(std::string_view token);
std::string_view to_string(SchedulingStrategy s);

// Permutation of all arms sorted by non-increasing w_i / c_i. Zero-cost arms with
// positive weight come first (ratio +inf, larger weight first); 0/0 counts as 0;
// remaining ties go to the smaller label.
Search smith_rule(const ParamVector& p);
Search smith_rule(const Dag& dag, const ParamVector& p);

// Minimum-d G-linear extension by depth-first enumeration with branch-and-bound.
// Among (numerically) tied optima the lexicographically smallest is returned.
Search exhaustive_scheduling(const Dag& dag, const ParamVector& p,
                             std::size_t limit = kDefaultExhaustiveLimit);

Search scheduling(const Dag& dag, const ParamVector& p, SchedulingStrategy strategy,
                  std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace seqsearch
