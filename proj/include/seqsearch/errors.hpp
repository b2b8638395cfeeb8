#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seqsearch {

// Base of every error raised by the library. Callers that only care about
// "something went wrong in seqsearch" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidVertexLabel : public Error {
public:
    InvalidVertexLabel(long long label, std::size_t n)
        : Error("vertex label " + std::to_string(label) + " outside 1.." + std::to_string(n)),
          label_(label) {}
    long long label() const noexcept { return label_; }

private:
    long long label_;
};

class CycleDetected : public Error {
public:
    explicit CycleDetected(std::vector<int> cycle);
    // Vertices of one offending cycle, in edge order; the first vertex is not repeated.
    const std::vector<int>& cycle() const noexcept { return cycle_; }

private:
    std::vector<int> cycle_;
};

class InstanceTooLarge : public Error {
public:
    InstanceTooLarge(std::size_t n, std::size_t limit)
        : Error("instance with " + std::to_string(n) + " arms exceeds the exhaustive limit of " +
                std::to_string(limit)) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonTrueParameters : public Error {
public:
    using Error::Error;
};

class NotEdgeless : public Error {
public:
    NotEdgeless() : Error("Smith's rule requires a DAG without edges") {}
};

class StrategyUnavailable : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class MaxRoundsExceeded : public Error {
public:
    explicit MaxRoundsExceeded(std::size_t rounds)
        : Error("episode exceeded the round guard of " + std::to_string(rounds) + " rounds") {}
};

// Configuration problems. key() names the offending entry (e.g. "run.budget").
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace seqsearch
