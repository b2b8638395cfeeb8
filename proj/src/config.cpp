#include "seqsearch/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace seqsearch {

namespace {

struct Entry {
    std::string key;  // "section.key", or just "key" outside any section
    std::string value;
    std::size_t line = 0;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<Entry> read_entries(std::istream& in) {
    std::vector<Entry> out;
    std::string section;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw ConfigError("line " + std::to_string(lineno), "unterminated section header");
            section = trim(std::string_view(text).substr(1, text.size() - 2));
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        const std::string key = trim(std::string_view(text).substr(0, eq));
        out.push_back({section.empty() ? key : section + "." + key, trim(std::string_view(text).substr(eq + 1)),
                       lineno});
    }
    return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ConfigError(std::string(key), "cannot parse '" + std::string(text) + "' as a number");
    return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError(std::string(key), "expected true or false, got '" + std::string(text) + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view text) {
    std::filesystem::path p{std::string(text)};
    return p.is_relative() && !base.empty() ? base / p : p;
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            if (!piece.empty() || !out.empty()) out.push_back(piece);
            break;
        }
        out.push_back(piece);
        start = comma + 1;
    }
    return out;
}

std::string join_reals(const std::vector<double>& xs) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (const std::string& piece : split_list(text)) {
        if (piece.empty()) throw ParseError("empty entry in list '" + std::string(text) + "'");
        out.push_back(parse_number<double>("", piece));
    }
    return out;
}

void set_config_value(ExperimentConfig& cfg, std::string_view key, std::string_view value,
                      const std::filesystem::path& base_dir) {
    const std::string k(key);
    auto wrap = [&](auto&& fn) {
        try {
            fn();
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError(k, e.what());
        }
    };
    InstanceSpec& inst = cfg.instance;
    if (key == "format_version") {
        if (parse_number<int>(key, value) != kConfigFormatVersion)
            throw ConfigError(k, "unsupported format version " + std::string(value));
    } else if (key == "instance.kind") {
        if (value != "sec5" && value != "two-path" && value != "file")
            throw ConfigError(k, "expected sec5, two-path or file");
        inst.kind = std::string(value);
    } else if (key == "instance.n") {
        inst.n = parse_number<std::size_t>(key, value);
    } else if (key == "instance.m") {
        inst.m = parse_number<std::size_t>(key, value);
    } else if (key == "instance.eps") {
        inst.eps = parse_number<double>(key, value);
    } else if (key == "instance.cost_mean") {
        inst.cost_mean = parse_number<double>(key, value);
    } else if (key == "instance.cost_model") {
        wrap([&] { inst.cost_model = parse_cost_model(value); });
    } else if (key == "instance.variant") {
        wrap([&] { inst.variant = parse_two_path_variant(value); });
    } else if (key == "instance.restrict_paths") {
        if (value != "auto" && value != "true" && value != "false") throw ConfigError(k, "expected auto, true or false");
        inst.restrict_paths = std::string(value);
    } else if (key == "instance.dag_file") {
        inst.dag_file = resolve(base_dir, value);
    } else if (key == "instance.params_file") {
        inst.params_file = resolve(base_dir, value);
    } else if (key == "instance.w") {
        wrap([&] { inst.w = parse_real_list(value); });
    } else if (key == "instance.c") {
        wrap([&] { inst.c = parse_real_list(value); });
    } else if (key == "run.policies") {
        std::vector<PolicyKind> kinds;
        wrap([&] {
            for (const std::string& token : split_list(value)) kinds.push_back(parse_policy(token));
        });
        cfg.policies = std::move(kinds);
    } else if (key == "run.budget") {
        cfg.budget = parse_number<double>(key, value);
    } else if (key == "run.replications") {
        cfg.replications = parse_number<std::size_t>(key, value);
    } else if (key == "run.seed") {
        cfg.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "run.zeta") {
        cfg.zeta = parse_number<double>(key, value);
    } else if (key == "run.checkpoints") {
        cfg.checkpoints = parse_number<std::size_t>(key, value);
    } else if (key == "run.strategy") {
        wrap([&] { cfg.strategy = parse_strategy(value); });
    } else if (key == "run.jobs") {
        cfg.jobs = parse_number<std::size_t>(key, value);
    } else if (key == "output.dir") {
        cfg.out_dir = resolve(base_dir, value);
    } else if (key == "output.log_x") {
        cfg.log_x = parse_bool(key, value);
    } else {
        throw ConfigError(k, "unknown configuration key");
    }
}

void ExperimentConfig::validate() const {
    if (policies.empty()) throw ConfigError("run.policies", "at least one policy is required");
    if (!(budget > 0.0)) throw ConfigError("run.budget", "must be positive");
    if (replications < 1) throw ConfigError("run.replications", "must be at least 1");
    if (!(zeta > 1.0)) throw ConfigError("run.zeta", "must be greater than 1");
    if (checkpoints < 1) throw ConfigError("run.checkpoints", "must be at least 1");
    if (jobs < 1) throw ConfigError("run.jobs", "must be at least 1");
    if (instance.kind == "file") {
        if (instance.dag_file.empty()) throw ConfigError("instance.dag_file", "required when instance.kind = file");
        if (!std::filesystem::exists(instance.dag_file))
            throw ConfigError("instance.dag_file", "file not found: " + instance.dag_file.string());
        if (!instance.params_file.empty() && !std::filesystem::exists(instance.params_file))
            throw ConfigError("instance.params_file", "file not found: " + instance.params_file.string());
        if (instance.params_file.empty() && (instance.w.empty() || instance.c.empty()))
            throw ConfigError("instance.w", "either instance.params_file or both instance.w and instance.c are required");
    }
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
    ExperimentConfig cfg;
    for (const Entry& e : read_entries(in)) set_config_value(cfg, e.key, e.value, base_dir);
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", "cannot open " + path.string());
    return parse_config(in, path.parent_path());
}

void write_config(std::ostream& out, const ExperimentConfig& cfg) {
    const InstanceSpec& inst = cfg.instance;
    out.precision(17);
    out << "format_version = " << kConfigFormatVersion << "\n\n[instance]\n";
    out << "kind = " << inst.kind << '\n';
    if (inst.kind == "file") {
        out << "dag_file = " << std::filesystem::absolute(inst.dag_file).string() << '\n';
        if (!inst.params_file.empty()) out << "params_file = " << std::filesystem::absolute(inst.params_file).string() << '\n';
        if (!inst.w.empty()) out << "w = " << join_reals(inst.w) << '\n';
        if (!inst.c.empty()) out << "c = " << join_reals(inst.c) << '\n';
    } else {
        out << "n = " << inst.n << '\n' << "eps = " << inst.eps << '\n';
    }
    if (inst.kind == "sec5") out << "m = " << inst.m << '\n' << "cost_mean = " << inst.cost_mean << '\n';
    if (inst.kind == "two-path")
        out << "variant = " << (inst.variant == TwoPathVariant::D1 ? "D1" : "D2") << '\n'
            << "restrict_paths = " << inst.restrict_paths << '\n';
    else
        out << "cost_model = " << to_string(inst.cost_model) << '\n';

    out << "\n[run]\npolicies = ";
    for (std::size_t i = 0; i < cfg.policies.size(); ++i) out << (i ? "," : "") << to_string(cfg.policies[i]);
    out << "\nbudget = " << cfg.budget << "\nreplications = " << cfg.replications << "\nseed = " << cfg.seed
        << "\nzeta = " << cfg.zeta << "\ncheckpoints = " << cfg.checkpoints << "\nstrategy = " << to_string(cfg.strategy)
        << "\njobs = " << cfg.jobs << "\n\n[output]\ndir = " << cfg.out_dir.string()
        << "\nlog_x = " << (cfg.log_x ? "true" : "false") << '\n';
}

ExperimentConfig preset_config(std::string_view name) {
    ExperimentConfig cfg;
    if (name == "sec5-desk") {
        cfg.instance.kind = "sec5";
        cfg.instance.n = 20;
        cfg.instance.m = 8;
        cfg.budget = 1e4;
        cfg.replications = 50;
    } else if (name == "sec5-full") {
        cfg.instance.kind = "sec5";
        cfg.instance.n = 100;
        cfg.instance.m = 40;
        cfg.budget = 1e5;
        cfg.replications = 100;
    } else if (name == "two-path") {
        cfg.instance.kind = "two-path";
        cfg.instance.n = 20;
        cfg.instance.eps = 0.1;
        cfg.instance.cost_model = CostModel::Deterministic;
        cfg.budget = 2e4;
        cfg.replications = 50;
    } else {
        throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
    }
    cfg.instance.eps = 0.1;
    cfg.instance.cost_mean = 0.5;
    return cfg;
}

std::vector<std::string> preset_names() { return {"sec5-full", "sec5-desk", "two-path"}; }

ProblemInstance build_instance(const InstanceSpec& desc) {
    try {
        if (desc.kind == "sec5")
            return instance_sec5(desc.n, desc.m, desc.eps, desc.cost_mean, desc.cost_model == CostModel::Bernoulli);
        if (desc.kind == "two-path") {
            const bool restrict = desc.restrict_paths == "true" || (desc.restrict_paths == "auto" && desc.n > 10);
            return instance_two_path(desc.n, desc.eps, desc.variant, restrict);
        }
        Dag dag = load_dag(desc.dag_file);
        std::vector<double> w = desc.w;
        std::vector<double> c = desc.c;
        CostModel model = desc.cost_model;
        if (!desc.params_file.empty()) {
            std::ifstream in(desc.params_file);
            if (!in) throw ConfigError("instance.params_file", "cannot open " + desc.params_file.string());
            for (const Entry& e : read_entries(in)) {
                if (e.key == "w")
                    w = parse_real_list(e.value);
                else if (e.key == "c")
                    c = parse_real_list(e.value);
                else if (e.key == "cost_model")
                    model = parse_cost_model(e.value);
                else
                    throw ConfigError("instance.params_file", "unknown key '" + e.key + "'");
            }
        }
        return ProblemInstance::make(std::move(dag), ParamVector::true_parameters(std::move(w), std::move(c)), model);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("instance", e.what());
    }
}

}  // namespace seqsearch
