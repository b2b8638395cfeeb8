#include "seqsearch/poset_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace seqsearch {

namespace {

std::string describe_cycle(const std::vector<int>& cycle) {
    std::string out = "cycle detected:";
    for (int v : cycle) out += " " + std::to_string(v);
    if (!cycle.empty()) out += " " + std::to_string(cycle.front());
    return out;
}

}  // namespace

CycleDetected::CycleDetected(std::vector<int> cycle)
    : Error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

std::span<const Arm> Dag::predecessors(Arm a) const {
    check_label(a);
    return preds_[static_cast<std::size_t>(a - 1)];
}

std::span<const Arm> Dag::successors(Arm a) const {
    check_label(a);
    return succs_[static_cast<std::size_t>(a - 1)];
}

void Dag::check_label(Arm a) const {
    if (a < 1 || static_cast<std::size_t>(a) > size()) throw InvalidVertexLabel(a, size());
}

Dag validate_dag(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw InvalidParameters("a DAG needs at least one vertex");

    Dag dag;
    dag.preds_.resize(n);
    dag.succs_.resize(n);
    dag.edges_.assign(edges.begin(), edges.end());
    for (const auto& [u, v] : dag.edges_) {
        dag.check_label(u);
        dag.check_label(v);
        if (u == v) throw CycleDetected({u});
    }
    std::sort(dag.edges_.begin(), dag.edges_.end());
    dag.edges_.erase(std::unique(dag.edges_.begin(), dag.edges_.end()), dag.edges_.end());

    for (const auto& [u, v] : dag.edges_) {
        dag.succs_[static_cast<std::size_t>(u - 1)].push_back(v);
        dag.preds_[static_cast<std::size_t>(v - 1)].push_back(u);
    }

    // Kahn; whatever survives lies on or behind a cycle.
    std::vector<std::size_t> indeg(n);
    std::vector<Arm> stack;
    for (std::size_t i = 0; i < n; ++i) {
        indeg[i] = dag.preds_[i].size();
        if (indeg[i] == 0) stack.push_back(static_cast<Arm>(i + 1));
    }
    std::size_t removed = 0;
    while (!stack.empty()) {
        Arm a = stack.back();
        stack.pop_back();
        ++removed;
        for (Arm s : dag.succs_[static_cast<std::size_t>(a - 1)]) {
            if (--indeg[static_cast<std::size_t>(s - 1)] == 0) stack.push_back(s);
        }
    }
    if (removed == n) return dag;

    // Every leftover vertex keeps a leftover predecessor, so walking backwards
    // must revisit a vertex.
    Arm start = 1;
    while (indeg[static_cast<std::size_t>(start - 1)] == 0) ++start;
    std::vector<int> seen(n, -1);
    std::vector<Arm> walk;
    Arm cur = start;
    while (seen[static_cast<std::size_t>(cur - 1)] < 0) {
        seen[static_cast<std::size_t>(cur - 1)] = static_cast<int>(walk.size());
        walk.push_back(cur);
        for (Arm p : dag.preds_[static_cast<std::size_t>(cur - 1)]) {
            if (indeg[static_cast<std::size_t>(p - 1)] > 0) {
                cur = p;
                break;
            }
        }
    }
    std::vector<int> cycle(walk.begin() + seen[static_cast<std::size_t>(cur - 1)], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    throw CycleDetected(std::move(cycle));
}

Dag edgeless_dag(std::size_t n) { return validate_dag(n, {}); }

Dag read_dag(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string extra;
        if (n < 0) {
            if (!(fields >> n) || (fields >> extra) || n <= 0)
                throw ParseError("dag line " + std::to_string(lineno) + ": expected a positive vertex count");
            continue;
        }
        long long u = 0;
        long long v = 0;
        if (!(fields >> u >> v) || (fields >> extra))
            throw ParseError("dag line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 1 || u > n) throw InvalidVertexLabel(u, static_cast<std::size_t>(n));
        if (v < 1 || v > n) throw InvalidVertexLabel(v, static_cast<std::size_t>(n));
        edges.emplace_back(static_cast<Arm>(u), static_cast<Arm>(v));
    }
    if (n < 0) throw ParseError("dag input is empty");
    return validate_dag(static_cast<std::size_t>(n), edges);
}

Dag load_dag(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dag file " + path.string());
    return read_dag(in);
}

void write_dag(std::ostream& out, const Dag& dag) {
    out << dag.size() << '\n';
    for (const auto& [u, v] : dag.edges()) out << u << ' ' << v << '\n';
}

bool is_search(const Dag& dag, std::span<const Arm> seq) {
    std::vector<char> seen(dag.size(), 0);
    for (Arm a : seq) {
        dag.check_label(a);
        if (seen[static_cast<std::size_t>(a - 1)]) return false;
        for (Arm p : dag.predecessors(a)) {
            if (!seen[static_cast<std::size_t>(p - 1)]) return false;
        }
        seen[static_cast<std::size_t>(a - 1)] = 1;
    }
    return true;
}

bool is_initial_set(const Dag& dag, std::span<const Arm> arms) {
    std::vector<char> in_set(dag.size(), 0);
    for (Arm a : arms) {
        dag.check_label(a);
        in_set[static_cast<std::size_t>(a - 1)] = 1;
    }
    for (Arm a : arms) {
        for (Arm p : dag.predecessors(a)) {
            if (!in_set[static_cast<std::size_t>(p - 1)]) return false;
        }
    }
    return true;
}

SearchEnumerator::SearchEnumerator(const Dag& dag, std::size_t limit)
    : dag_(&dag), missing_preds_(dag.size()), used_(dag.size(), 0) {
    if (dag.size() > limit) throw InstanceTooLarge(dag.size(), limit);
    for (std::size_t i = 0; i < dag.size(); ++i)
        missing_preds_[i] = static_cast<int>(dag.predecessors(static_cast<Arm>(i + 1)).size());
    search_.reserve(dag.size());
    cursor_.reserve(dag.size() + 1);
}

bool SearchEnumerator::next() {
    const auto n = static_cast<Arm>(dag_->size());
    if (!started_) {
        started_ = true;
        cursor_.push_back(1);
        return true;
    }
    while (true) {
        Arm& cand = cursor_.back();
        while (cand <= n && (used_[static_cast<std::size_t>(cand - 1)] ||
                             missing_preds_[static_cast<std::size_t>(cand - 1)] != 0))
            ++cand;
        if (cand <= n) {
            const Arm a = cand++;
            used_[static_cast<std::size_t>(a - 1)] = 1;
            for (Arm s : dag_->successors(a)) --missing_preds_[static_cast<std::size_t>(s - 1)];
            search_.push_back(a);
            cursor_.push_back(1);
            return true;
        }
        if (search_.empty()) return false;
        const Arm a = search_.back();
        search_.pop_back();
        cursor_.pop_back();
        used_[static_cast<std::size_t>(a - 1)] = 0;
        for (Arm s : dag_->successors(a)) ++missing_preds_[static_cast<std::size_t>(s - 1)];
    }
}

std::vector<Search> enumerate_searches(const Dag& dag, std::size_t limit) {
    std::vector<Search> out;
    for_each_search(dag, [&](const Search& s) { out.push_back(s); }, limit);
    return out;
}

}  // namespace seqsearch
