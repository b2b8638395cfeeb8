#include "seqsearch/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "seqsearch/config.hpp"
#include "seqsearch/experiment.hpp"
#include "seqsearch/oracle.hpp"

namespace seqsearch {

namespace {

struct GlobalFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::optional<std::size_t> jobs;
    std::vector<std::string> overrides;  // key=value
};

void apply_globals(ExperimentConfig& cfg, const GlobalFlags& g) {
    // config < SEQSEARCH_OUT_DIR < --set < dedicated flags
    if (const char* env = std::getenv(kOutDirEnv); env && *env) cfg.out_dir = env;
    for (const std::string& kv : g.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError(kv, "--set expects key=value");
        set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (g.seed) cfg.seed = *g.seed;
    if (g.jobs) cfg.jobs = *g.jobs;
    if (!g.out_dir.empty()) cfg.out_dir = g.out_dir;
    cfg.validate();
}

void print_summary(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result) {
    out << "J* = " << format_real(result.j_star) << ", budget = " << format_real(cfg.budget) << ", "
        << cfg.replications << " replications\n";
    for (PolicyKind kind : cfg.policies) {
        const auto pts = result.curve.for_policy(to_string(kind));
        if (pts.empty()) continue;
        out << "  " << to_string(kind) << ": final regret proxy " << format_real(pts.back().mean_regret) << " +- "
            << format_real(pts.back().std_error) << '\n';
    }
    if (!cfg.out_dir.empty()) out << "wrote " << cfg.out_dir.string() << '\n';
}

nlohmann::json to_json(const ExtendedReal& x) {
    if (x.is_infinite()) return "inf";
    return x.value();
}

int run_oracle(std::ostream& out, const GlobalFlags& g, const std::string& dag_path, std::size_t edgeless_n,
               const std::string& w_text, const std::string& c_text, const std::string& strategy_text,
               const std::string& preset) {
    Dag dag = edgeless_dag(1);
    std::optional<ParamVector> params;
    if (!g.config_path.empty() || !preset.empty()) {
        ExperimentConfig cfg = !g.config_path.empty() ? load_config(g.config_path) : preset_config(preset);
        apply_globals(cfg, g);
        ProblemInstance inst = build_instance(cfg.instance);
        if (!inst.actions.empty()) {
            const OracleResult r = restricted_oracle(inst.actions, inst.truth);
            nlohmann::json j{{"search", r.search}, {"j_plus", to_json(r.j_plus_value)}, {"restricted", true}};
            out << "search:";
            for (Arm a : r.search) out << ' ' << a;
            out << "\nj_plus: " << r.j_plus_value << '\n' << j.dump() << '\n';
            return 0;
        }
        dag = inst.dag;
        params = inst.truth;
    } else {
        if (!dag_path.empty()) {
            try {
                dag = load_dag(dag_path);
            } catch (const Error& e) {
                throw ConfigError("--dag", e.what());
            }
        } else if (edgeless_n > 0) {
            dag = edgeless_dag(edgeless_n);
        } else {
            throw ConfigError("--dag", "give --dag or --n (or --config / --preset)");
        }
        try {
            params.emplace(parse_real_list(w_text), parse_real_list(c_text));
        } catch (const Error& e) {
            throw ConfigError("--w/--c", e.what());
        }
        if (params->size() != dag.size())
            throw ConfigError("--w/--c", "expected " + std::to_string(dag.size()) + " values");
    }
    SchedulingStrategy strategy;
    try {
        strategy = parse_strategy(strategy_text);
    } catch (const Error& e) {
        throw ConfigError("--strategy", e.what());
    }

    const OracleResult r = oracle(dag, *params, strategy);
    out << "search:";
    for (Arm a : r.search) out << ' ' << a;
    out << "\ncut_index: " << r.cut_index << "\nj_plus: " << r.j_plus_value << '\n';
    nlohmann::json j{{"search", r.search},
                     {"cut_index", r.cut_index},
                     {"j_plus", to_json(r.j_plus_value)},
                     {"full_extension", r.full_extension},
                     {"degenerate", r.degenerate}};
    out << j.dump() << '\n';
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sequential search-and-stop: offline oracle and online bandit simulations", "seqsearch"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--config", g.config_path, "experiment configuration file");
    app.add_option("--seed", g.seed, "master seed");
    app.add_option("--out", g.out_dir, "output directory");
    app.add_option("--jobs", g.jobs, "parallel replications")->check(CLI::PositiveNumber);
    app.add_option("--set", g.overrides, "override a configuration entry, e.g. --set run.budget=5000");

    auto* oracle_cmd = app.add_subcommand("oracle", "print the oracle search for an instance");
    std::string dag_path, w_text, c_text, strategy_text = "auto", oracle_preset;
    std::size_t edgeless_n = 0;
    oracle_cmd->add_option("--dag", dag_path, "DAG file");
    oracle_cmd->add_option("--n", edgeless_n, "use an edgeless DAG with n arms");
    oracle_cmd->add_option("--w", w_text, "comma-separated weights");
    oracle_cmd->add_option("--c", c_text, "comma-separated costs");
    oracle_cmd->add_option("--strategy", strategy_text, "auto | smith | exhaustive");
    oracle_cmd->add_option("--preset", oracle_preset, "take the instance of a preset");

    auto* simulate_cmd = app.add_subcommand("simulate", "run one configuration and write CSV/SVG");

    auto* sweep_cmd = app.add_subcommand("sweep", "run a configuration once per value of one key");
    std::string sweep_key;
    std::vector<std::string> sweep_values;
    sweep_cmd->add_option("--key", sweep_key, "configuration key, e.g. run.budget")->required();
    sweep_cmd->add_option("--values", sweep_values, "values to try")->required()->delimiter(',');

    auto* preset_cmd = app.add_subcommand("preset", "run a named preset");
    std::string preset_name;
    preset_cmd->add_option("name", preset_name, "sec5-full | sec5-desk | two-path")->required();

    app.fallthrough();
    for (auto* sub : {oracle_cmd, simulate_cmd, sweep_cmd, preset_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (oracle_cmd->parsed())
            return run_oracle(out, g, dag_path, edgeless_n, w_text, c_text, strategy_text, oracle_preset);

        if (simulate_cmd->parsed()) {
            if (g.config_path.empty()) throw ConfigError("--config", "simulate needs --config");
            ExperimentConfig cfg = load_config(g.config_path);
            apply_globals(cfg, g);
            print_summary(out, cfg, run_experiment(cfg));
            return 0;
        }
        if (preset_cmd->parsed()) {
            ExperimentConfig cfg = preset_config(preset_name);
            cfg.out_dir = std::filesystem::path("results") / preset_name;
            apply_globals(cfg, g);
            print_summary(out, cfg, run_experiment(cfg));
            return 0;
        }
        if (sweep_cmd->parsed()) {
            ExperimentConfig base = g.config_path.empty() ? ExperimentConfig{} : load_config(g.config_path);
            apply_globals(base, g);
            for (const std::string& value : sweep_values) {
                ExperimentConfig cfg = base;
                set_config_value(cfg, sweep_key, value);
                cfg.out_dir = base.out_dir / (sweep_key + "=" + value);
                cfg.validate();
                out << "[" << sweep_key << " = " << value << "]\n";
                print_summary(out, cfg, run_experiment(cfg));
            }
            return 0;
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace seqsearch
