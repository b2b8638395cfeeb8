#include <doctest.h>

#include <sstream>

#include "seqsearch/errors.hpp"
#include "seqsearch/objective.hpp"
#include "test_support.hpp"

using namespace seqsearch;
using testing::as_double;
using testing::close;

namespace {

const ParamVector kExample({0.5, 0.5}, {0.25, 1.0});

double jd(const Search& s, const ParamVector& p) { return as_double(cost_ratio_j(s, p)); }
double jp(const Search& s, const ParamVector& p) { return as_double(cost_ratio_j_plus(s, p)); }

}  // namespace

TEST_CASE("ExtendedReal ordering and printing") {
    const ExtendedReal inf = ExtendedReal::infinity();
    CHECK(inf.is_infinite());
    CHECK(ExtendedReal(3.0) < inf);
    CHECK(inf > ExtendedReal(1e300));
    CHECK(inf == ExtendedReal::infinity());
    CHECK(ExtendedReal(2.0) == ExtendedReal(2.0));
    CHECK(ExtendedReal(-1.0) < ExtendedReal(0.0));
    CHECK(positive_part(ExtendedReal(-1.0)) == ExtendedReal(0.0));
    CHECK(positive_part(inf).is_infinite());
    std::ostringstream os;
    os << inf << ' ' << ExtendedReal(0.5);
    CHECK(os.str() == "inf 0.5");
}

TEST_CASE("ParamVector validation") {
    CHECK_THROWS_AS(ParamVector({0.5}, {0.5, 0.5}), DimensionMismatch);
    CHECK_THROWS_AS(ParamVector({-0.1}, {0.5}), InvalidParameters);
    CHECK_THROWS_AS(ParamVector({0.1}, {std::nan("")}), InvalidParameters);
    CHECK_FALSE(ParamVector({2.0, 0.0}, {0.5, 0.5}).is_true());
    CHECK(ParamVector::true_parameters({0.5, 0.5}, {0.25, 1.0}).is_true());
    CHECK_THROWS_AS(ParamVector::true_parameters({0.5, 0.6}, {0.25, 1.0}), NonTrueParameters);
    CHECK_THROWS_AS(ParamVector::true_parameters({0.5, 0.5}, {0.0, 1.0}), NonTrueParameters);
}

TEST_CASE("weighted_completion examples") {
    CHECK(weighted_completion(Search{1, 2}, kExample) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(weighted_completion(Search{}, kExample) == 0.0);
    CHECK(weighted_completion(Search{2, 1}, kExample) == doctest::Approx(1.125).epsilon(1e-12));
    CHECK_THROWS_AS(weighted_completion(Search{3}, kExample), DimensionMismatch);
}

TEST_CASE("cost_ratio_j examples") {
    CHECK(jd({1}, kExample) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cost_ratio_j(Search{}, kExample).is_infinite());
    CHECK(jd({1, 2}, kExample) == doctest::Approx(0.75).epsilon(1e-12));
    const ParamVector zero_w({0.0, 1.0}, {0.5, 0.5});
    CHECK(cost_ratio_j(Search{1}, zero_w).is_infinite());
    CHECK_THROWS_AS(cost_ratio_j(Search{0}, kExample), DimensionMismatch);
}

TEST_CASE("cost_ratio_j_plus examples") {
    CHECK(jp({1}, ParamVector({2.0, 0.0}, {0.5, 0.5})) == doctest::Approx(0.25).epsilon(1e-12));
    const ParamVector mild({1.5, 1.5}, {0.5, 0.5});
    CHECK(jp({1, 2}, mild) == doctest::Approx(0.25 / 3.0).epsilon(1e-12));
    CHECK(jd({1, 2}, mild) == jp({1, 2}, mild));
    const ParamVector big({3.0, 3.0}, {0.5, 0.5});
    CHECK(jd({1, 2}, big) < 0.0);
    CHECK(jp({1, 2}, big) == 0.0);
    CHECK(cost_ratio_j_plus(Search{}, kExample).is_infinite());
}

TEST_CASE("density examples") {
    const ParamVector p({0.3, 0.3, 0.4}, {0.5, 0.1, 1.0});
    CHECK(as_double(density(Search{1, 2}, p)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(as_double(density(Search{}, p)) == 0.0);
    CHECK(as_double(density(Search{3}, p)) == doctest::Approx(0.4).epsilon(1e-12));
    const ParamVector free_arm({0.5, 0.0}, {0.0, 0.0});
    CHECK(density(Search{1}, free_arm).is_infinite());
    CHECK(as_double(density(Search{2}, free_arm)) == 0.0);
    CHECK_THROWS_AS(density(Search{4}, p), DimensionMismatch);
}

TEST_CASE("gap examples") {
    const ParamVector truth = ParamVector::true_parameters({0.5, 0.5}, {0.25, 1.0});
    CHECK(gap(Search{1, 2}, truth, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gap(Search{1}, truth, 0.5) == 0.0);
    CHECK_THROWS_AS(gap(Search{1}, kExample, 0.5), NonTrueParameters);
    CHECK_THROWS_AS(gap(Search{1}, truth, 0.0), InvalidParameters);

    // two chains of length 2, unit costs, hider 0.6 on a2 and 0.4 on b2
    const ParamVector tp = ParamVector::true_parameters({0.0, 0.6, 0.0, 0.4}, {1, 1, 1, 1});
    const double js = 3.0 - 0.1 * 4 / 2;  // optimal full search a1 a2 b1 b2
    CHECK(jd({1, 2, 3, 4}, tp) == doctest::Approx(js).epsilon(1e-12));
    CHECK(gap(Search{3, 4, 1, 2}, tp, js) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("property: J matches the reference formula and J+ <= J") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const ParamVector p = testing::random_params(rng, n);
        Search s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Arm>(i + 1);
        std::shuffle(s.begin(), s.end(), rng);
        s.resize(rng() % (n + 1));
        const double j = jd(s, p), j_plus = jp(s, p);
        REQUIRE(close(j, testing::reference_j(s, p.w(), p.c())));
        REQUIRE(j_plus <= j + (j >= 0 ? 0.0 : 1e300));
        if (j >= 0) REQUIRE(j_plus == j);
        else REQUIRE(j_plus == 0.0);
    }
}

TEST_CASE("property: joint cost scaling scales d") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const ParamVector p = testing::random_params(rng, n);
        const double lambda = u(rng);
        std::vector<double> c = p.c();
        for (double& x : c) x *= lambda;
        const ParamVector scaled(p.w(), c);
        Search s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Arm>(i + 1);
        std::shuffle(s.begin(), s.end(), rng);
        CHECK(close(weighted_completion(s, scaled), lambda * weighted_completion(s, p), 1e-12));
    }
}

TEST_CASE("property: optimistic parameters dominate the true J") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const ParamVector truth = testing::random_true_params(rng, n);
        std::vector<double> w = truth.w(), c = truth.c();
        for (double& x : w) x += u(rng) < 0.5 ? 0.0 : u(rng);
        for (double& x : c) x *= u(rng) < 0.3 ? 1.0 : u(rng);
        const ParamVector opt(w, c);
        for (const Search& s : enumerate_searches(edgeless_dag(n), 6)) {
            if (s.size() > 3 && trial % 4) continue;
            REQUIRE(jp(s, opt) <= jd(s, truth) * (1 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("property: support property of J+") {
    std::mt19937_64 rng(24);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const Dag d = testing::random_dag(rng, n, 0.3);
        const ParamVector p = testing::random_params(rng, n);
        const auto all = enumerate_searches(d, 6);
        const Search& full = all[rng() % all.size()];
        if (full.size() < 2) continue;
        const std::size_t i = rng() % full.size();
        const std::size_t j = i + 1 + rng() % (full.size() - i);
        const Search x(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(i));
        const Search xy(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(j));
        const Search y(xy.begin() + static_cast<std::ptrdiff_t>(i), xy.end());
        const Search z(full.begin() + static_cast<std::ptrdiff_t>(j), full.end());
        if (density(z, p) < density(y, p)) continue;
        const double lhs = jp(xy, p);
        const double rhs = std::min(jp(x, p), jp(full, p));
        if (std::isinf(rhs))
            REQUIRE(lhs == rhs);
        else
            REQUIRE(lhs >= rhs - 1e-12 * std::max(1.0, std::abs(rhs)));
        ++checked;
    }
    CHECK(checked > 500);
}

TEST_CASE("property: gap is zero exactly on minimisers") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const Dag d = testing::random_dag(rng, n, 0.4);
        const ParamVector truth = testing::random_true_params(rng, n);
        const auto all = enumerate_searches(d);
        double best = testing::kInf;
        for (const Search& s : all) best = std::min(best, testing::reference_j(s, truth.w(), truth.c()));
        for (const Search& s : all) {
            const double g = gap(s, truth, best);
            REQUIRE(g >= 0.0);
            const double j = testing::reference_j(s, truth.w(), truth.c());
            if (close(j, best, 1e-12))
                REQUIRE(g == 0.0);
            else if (!s.empty() && std::isfinite(j))
                REQUIRE(g > 0.0);
        }
    }
}
