#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace seqsearch {

// Seedable random source. derive() gives an independent child stream keyed by an
// integer, so per-run and per-purpose streams can be split off a master seed
// without sharing state between runs.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }
    RandomStream derive(std::uint64_t key) const;

    double uniform();  // [0, 1)
    bool bernoulli(double p);
    // Index in [0, weights.size()) drawn proportionally to weights.
    std::size_t categorical(std::span<const double> weights);
    double gamma(double shape);
    // Beta(a, b) for a, b > 0.
    double beta(double a, double b);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace seqsearch
