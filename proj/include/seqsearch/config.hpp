#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "seqsearch/bandit_policies.hpp"
#include "seqsearch/instances.hpp"
#include "seqsearch/scheduling.hpp"
#include "seqsearch/simulator.hpp"

namespace seqsearch {

// Experiment configuration, format version 1.
//
// The file is line oriented: "[section]" headers, "key = value" entries, '#'
// comments. Keys are addressed as "section.key" (e.g. "run.budget") by the CLI
// and by sweeps. See README.md for the full key list.
inline constexpr int kConfigFormatVersion = 1;

struct InstanceSpec {
    std::string kind = "sec5";  // sec5 | two-path | file
    std::size_t n = 20;
    std::size_t m = 8;
    double eps = 0.1;
    double cost_mean = 0.5;
    CostModel cost_model = CostModel::Bernoulli;
    TwoPathVariant variant = TwoPathVariant::D1;
    std::string restrict_paths = "auto";  // auto | true | false
    std::filesystem::path dag_file;
    std::filesystem::path params_file;
    std::vector<double> w;
    std::vector<double> c;
};

struct ExperimentConfig {
    InstanceSpec instance;
    std::vector<PolicyKind> policies{PolicyKind::CucbV, PolicyKind::Cucb, PolicyKind::CucbKl,
                                     PolicyKind::ThompsonSampling};
    double budget = 1e4;
    std::size_t replications = 50;
    std::uint64_t seed = 1;
    double zeta = kDefaultZeta;
    std::size_t checkpoints = 200;
    SchedulingStrategy strategy = SchedulingStrategy::Auto;
    std::size_t jobs = 1;
    std::filesystem::path out_dir = "results";
    bool log_x = true;

    // Throws ConfigError naming the first offending key.
    void validate() const;
};

// Sets one "section.key" entry from its textual value; relative paths are
// resolved against base_dir. Throws ConfigError for unknown keys or bad values.
void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value,
                      const std::filesystem::path& base_dir = {});

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);
void write_config(std::ostream& out, const ExperimentConfig& config);

// Named presets: sec5-full, sec5-desk, two-path.
ExperimentConfig preset_config(std::string_view name);
std::vector<std::string> preset_names();

ProblemInstance build_instance(const InstanceSpec& spec);

std::vector<double> parse_real_list(std::string_view text);

}  // namespace seqsearch
