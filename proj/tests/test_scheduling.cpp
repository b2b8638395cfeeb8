#include <doctest.h>

#include "seqsearch/errors.hpp"
#include "seqsearch/scheduling.hpp"
#include "test_support.hpp"

using namespace seqsearch;

namespace {

// Minimum d over all linear extensions, by brute force.
double min_d(const Dag& d, const ParamVector& p) {
    double best = testing::kInf;
    for (const Search& s : testing::reference_searches(d))
        if (s.size() == d.size()) best = std::min(best, weighted_completion(s, p));
    return best;
}

bool is_permutation_of_arms(const Search& s, std::size_t n) {
    Search sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
        if (sorted.size() != n || sorted[i] != static_cast<Arm>(i + 1)) return false;
    return true;
}

}  // namespace

TEST_CASE("strategy tokens") {
    CHECK(parse_strategy("smith") == SchedulingStrategy::SmithRule);
    CHECK(parse_strategy("exhaustive") == SchedulingStrategy::Exhaustive);
    CHECK(parse_strategy("auto") == SchedulingStrategy::Auto);
    CHECK_THROWS_AS(parse_strategy("sidney"), StrategyUnavailable);
    CHECK(to_string(SchedulingStrategy::SmithRule) == "smith");
}

TEST_CASE("smith_rule examples") {
    CHECK(smith_rule(ParamVector({0.1, 0.6, 0.3}, {0.5, 0.5, 0.5})) == Search{2, 3, 1});
    CHECK(smith_rule(ParamVector({0.5, 0.5}, {0.0, 1.0})) == Search{1, 2});
    CHECK(smith_rule(ParamVector({0.25, 0.25, 0.5}, {0.5, 0.5, 1.0})) == Search{1, 2, 3});
}

TEST_CASE("smith_rule zero costs: larger weight first among infinite ratios, zero-zero arms last") {
    const ParamVector p({0.2, 0.7, 0.0, 0.1}, {0.0, 0.0, 0.0, 0.5});
    CHECK(smith_rule(p) == Search{2, 1, 4, 3});
}

TEST_CASE("smith_rule refuses a DAG with edges") {
    const std::vector<Edge> e{{1, 2}};
    const Dag d = validate_dag(2, e);
    CHECK_THROWS_AS(smith_rule(d, ParamVector({0.5, 0.5}, {1, 1})), NotEdgeless);
    CHECK_THROWS_AS(smith_rule(edgeless_dag(3), ParamVector({0.5, 0.5}, {1, 1})), DimensionMismatch);
    CHECK_THROWS_AS(scheduling(d, ParamVector({0.5, 0.5}, {1, 1}), SchedulingStrategy::SmithRule), NotEdgeless);
}

TEST_CASE("exhaustive_scheduling examples") {
    const std::vector<Edge> chain{{1, 2}, {2, 3}};
    const Dag c3 = validate_dag(3, chain);
    CHECK(exhaustive_scheduling(c3, ParamVector({0.1, 0.1, 0.8}, {1, 1, 0.1})) == Search{1, 2, 3});

    const std::vector<Edge> tp{{1, 2}, {3, 4}};
    const Dag two = validate_dag(4, tp);
    CHECK(exhaustive_scheduling(two, ParamVector({0, 0.5, 0, 0.5}, {1, 1, 1, 1})) == Search{1, 2, 3, 4});

    CHECK_THROWS_AS(exhaustive_scheduling(edgeless_dag(11), ParamVector(std::vector<double>(11, 0.1),
                                                                        std::vector<double>(11, 0.1))),
                    InstanceTooLarge);
}

TEST_CASE("scheduling dispatch") {
    const ParamVector p({0.1, 0.6, 0.3}, {0.5, 0.5, 0.5});
    CHECK(scheduling(edgeless_dag(3), p, SchedulingStrategy::Auto) == smith_rule(p));
    const std::vector<Edge> chain{{1, 2}, {2, 3}};
    CHECK(scheduling(validate_dag(3, chain), p, SchedulingStrategy::Auto) == Search{1, 2, 3});

    std::vector<double> w(100), c(100, 0.5);
    for (std::size_t i = 0; i < 100; ++i) w[i] = 1.0 / static_cast<double>(i + 2);
    const ParamVector big(w, c);
    const Search s = scheduling(edgeless_dag(100), big, SchedulingStrategy::Auto);
    CHECK(s == smith_rule(big));
    CHECK(s.front() == 1);
}

TEST_CASE("property: Smith equals exhaustive on edgeless instances") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const ParamVector p = testing::random_params(rng, n);
        const Dag d = edgeless_dag(n);
        const Search a = smith_rule(p);
        const Search b = exhaustive_scheduling(d, p);
        REQUIRE(is_permutation_of_arms(a, n));
        REQUIRE(is_permutation_of_arms(b, n));
        REQUIRE(testing::close(weighted_completion(a, p), weighted_completion(b, p), 1e-12));
    }
}

TEST_CASE("property: no adjacent swap improves the Smith order") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const ParamVector p = testing::random_params(rng, n);
        Search s = smith_rule(p);
        const double d0 = weighted_completion(s, p);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::swap(s[i], s[i + 1]);
            REQUIRE(weighted_completion(s, p) >= d0 - 1e-12 * std::max(1.0, d0));
            std::swap(s[i], s[i + 1]);
        }
    }
}

TEST_CASE("property: exhaustive output is an optimal linear extension") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const Dag d = testing::random_dag(rng, n, 0.35);
        const ParamVector p = testing::random_params(rng, n);
        const Search s = scheduling(d, p, SchedulingStrategy::Auto);
        REQUIRE(s.size() == n);
        REQUIRE(is_search(d, s));
        REQUIRE(is_permutation_of_arms(s, n));
        REQUIRE(testing::close(weighted_completion(s, p), min_d(d, p), 1e-12));
    }
}

TEST_CASE("exhaustive tie-break picks the lexicographically smallest optimum") {
    // all orders of three identical arms are optimal
    CHECK(exhaustive_scheduling(edgeless_dag(3), ParamVector({0.2, 0.2, 0.2}, {1, 1, 1})) == Search{1, 2, 3});
}
