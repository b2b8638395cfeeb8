#include "seqsearch/experiment.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "seqsearch/svg_plot.hpp"

namespace seqsearch {

std::string format_real(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::vector<CurvePoint> RegretCurve::for_policy(std::string_view policy) const {
    std::vector<CurvePoint> out;
    for (const CurvePoint& p : points)
        if (p.policy == policy) out.push_back(p);
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const ProblemInstance instance = build_instance(config.instance);

    ExperimentResult result;
    result.j_star = j_star(instance);

    const std::size_t n_tasks = config.policies.size() * config.replications;
    result.runs.resize(n_tasks);
    EpisodeOptions options;
    options.checkpoints = config.checkpoints;
    options.keep_round_log = false;

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t task = next++; task < n_tasks; task = next++) {
            try {
                const std::size_t p = task / config.replications;
                const std::size_t r = task % config.replications;
                const PolicyConfig policy{config.policies[p], config.zeta};
                const EpisodeRecord rec =
                    run_episode(instance, policy, config.strategy, config.budget, SeedMaterial{config.seed, r}, options);
                RunSummary& out = result.runs[task];
                out.policy = policy.kind;
                out.run = r;
                out.checkpoints = rec.checkpoints;
                out.regret = checkpoint_regret(rec, result.j_star);
                out.tau_b = rec.tau_b;
                out.reward_counted = rec.reward_counted;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n_tasks;
            }
        }
    };
    const std::size_t n_threads = std::min(config.jobs, std::max<std::size_t>(n_tasks, 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    result.curve = aggregate(result.runs, config.policies);
    if (!config.out_dir.empty()) write_experiment_outputs(result, config, config.out_dir);
    return result;
}

RegretCurve aggregate(const std::vector<RunSummary>& runs, const std::vector<PolicyKind>& order) {
    RegretCurve curve;
    for (PolicyKind kind : order) {
        std::vector<const RunSummary*> group;
        for (const RunSummary& r : runs)
            if (r.policy == kind) group.push_back(&r);
        if (group.empty()) continue;
        const std::size_t k_count = group.front()->regret.size();
        for (std::size_t k = 0; k < k_count; ++k) {
            double sum = 0.0;
            for (const RunSummary* r : group) sum += r->regret[k];
            const double count = static_cast<double>(group.size());
            const double mean = sum / count;
            double se = 0.0;
            if (group.size() > 1) {
                double ss = 0.0;
                for (const RunSummary* r : group) ss += (r->regret[k] - mean) * (r->regret[k] - mean);
                se = std::sqrt(ss / (count - 1.0)) / std::sqrt(count);
            }
            curve.points.push_back(
                {std::string(to_string(kind)), group.front()->checkpoints[k].budget, mean, se, group.size()});
        }
    }
    return curve;
}

void write_runs_csv(std::ostream& out, const std::vector<RunSummary>& runs) {
    out << "policy,run,checkpoint_budget,cum_reward,regret_proxy,rounds_played\n";
    for (const RunSummary& r : runs) {
        for (std::size_t k = 0; k < r.checkpoints.size(); ++k) {
            const Checkpoint& cp = r.checkpoints[k];
            out << to_string(r.policy) << ',' << r.run << ',' << format_real(cp.budget) << ',' << cp.cum_reward << ','
                << format_real(r.regret[k]) << ',' << cp.rounds_played << '\n';
        }
    }
}

void write_curve_csv(std::ostream& out, const RegretCurve& curve) {
    out << "policy,checkpoint_budget,mean_regret_proxy,stderr_regret_proxy,replications\n";
    for (const CurvePoint& p : curve.points) {
        out << p.policy << ',' << format_real(p.budget) << ',' << format_real(p.mean_regret) << ','
            << format_real(p.std_error) << ',' << p.replications << '\n';
    }
}

RegretCurve read_curve_csv(std::istream& in) {
    RegretCurve curve;
    std::string line;
    if (!std::getline(in, line) || line.rfind("policy,checkpoint_budget", 0) != 0)
        throw ParseError("curve csv: missing header");
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5) throw ParseError("curve csv line " + std::to_string(lineno) + ": expected 5 fields");
        CurvePoint p;
        p.policy = fields[0];
        auto num = [&](const std::string& text, auto& value) {
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw ParseError("curve csv line " + std::to_string(lineno) + ": bad number '" + text + "'");
        };
        num(fields[1], p.budget);
        num(fields[2], p.mean_regret);
        num(fields[3], p.std_error);
        num(fields[4], p.replications);
        curve.points.push_back(std::move(p));
    }
    return curve;
}

void write_experiment_outputs(const ExperimentResult& result, const ExperimentConfig& config,
                              const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream f(dir / name);
        if (!f) throw Error("cannot write " + (dir / name).string());
        return f;
    };
    {
        auto f = open("runs.csv");
        write_runs_csv(f, result.runs);
    }
    {
        auto f = open("curve.csv");
        write_curve_csv(f, result.curve);
    }
    {
        auto f = open("config.ini");
        write_config(f, config);
    }
    std::vector<PlotSeries> series;
    for (PolicyKind kind : config.policies) {
        PlotSeries s;
        s.label = std::string(to_string(kind));
        for (const CurvePoint& p : result.curve.for_policy(s.label)) {
            s.x.push_back(p.budget);
            s.y.push_back(p.mean_regret);
            s.err.push_back(p.std_error);
        }
        series.push_back(std::move(s));
    }
    PlotOptions opts;
    opts.title = "regret proxy B/J* - reward (J* = " + format_real(result.j_star) + ", " +
                 std::to_string(config.replications) + " runs)";
    opts.log_x = config.log_x;
    auto f = open("regret.svg");
    write_svg_plot(f, series, opts);
}

}  // namespace seqsearch
