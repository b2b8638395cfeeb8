#pragma once

#include <span>
#include <vector>

#include "seqsearch/objective.hpp"
#include "seqsearch/poset_graph.hpp"
#include "seqsearch/scheduling.hpp"

namespace seqsearch {

struct OracleResult {
    Search search;                // the selected prefix
    ExtendedReal j_plus_value;    // J+(search | w, c)
    Search full_extension;        // the extension the prefix was cut from
    std::size_t cut_index = 0;    // search == full_extension[0, cut_index)
    // Set when every prefix has infinite J+ (no arm carries weight); the
    // length-one prefix is returned so a policy still makes progress.
    bool degenerate = false;
};

// Offline oracle: schedule by weighted completion time, then cut the extension
// at the prefix of smallest J+ (earliest prefix on ties). Accepts any
// non-negative (w, c), not only true parameters.
OracleResult oracle(const Dag& dag, const ParamVector& p, SchedulingStrategy strategy = SchedulingStrategy::Auto,
                    std::size_t limit = kDefaultExhaustiveLimit);

// Reference implementation: argmin of J+ over every search of the DAG. Ties go
// to the shorter search, then the lexicographically smaller one. For
// brute-force results full_extension equals search and cut_index its length.
OracleResult brute_force_oracle(const Dag& dag, const ParamVector& p, std::size_t limit = kDefaultExhaustiveLimit);

// argmin of J+ over an explicit action list (first listed wins ties). Used when
// a policy's action set is restricted, e.g. to whole paths.
OracleResult restricted_oracle(std::span<const Search> actions, const ParamVector& p);

}  // namespace seqsearch
